#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace glhom {

// Exact rational scalar. mpq_class keeps gcd(|num|, den) = 1 and den >= 1
// after canonicalize(); every constructor path below canonicalizes.
using Rat = mpq_class;
using Int = mpz_class;

// Parses "p", "-p" or "p/q" (q > 0 after canonicalization).
Rat rat_from_string(const std::string& s);

// Inverse of rat_from_string; integers print without "/1".
std::string rat_to_string(const Rat& q);

std::string coords_to_string(const std::vector<Rat>& v);

}  // namespace glhom
