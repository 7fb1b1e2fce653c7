#pragma once

#include <map>
#include <string>
#include <vector>

#include "glhom/rational.hpp"
#include "glhom/sparse_matrix.hpp"

namespace glhom {

// Per-degree homology dimensions plus (optionally) cycle representatives.
// When representatives are filled in, representatives[n].size() == dims[n]
// and each vector is a cycle outside the image of the incoming boundary.
struct HomologyReport {
  std::string label;
  std::map<int, std::int64_t> dims;
  std::map<int, std::vector<std::vector<Rat>>> representatives;
  std::map<int, std::int64_t> prim_dims;  // filled by primitive_dims only
};

// A chain complex truncated at degree_cap: space_dims[n] for 0 <= n <=
// cap+1 and boundaries[n] : C_n -> C_{n-1} for 1 <= n <= cap+1 (index 0
// unused). One degree past the cap is kept so homology at the cap itself
// is exact.
struct ChainLevelComplex {
  int degree_cap = 0;
  std::vector<std::int64_t> space_dims;
  std::vector<RatMatrix> boundaries;

  // H_n dims for 0 <= n <= degree_cap; throws if d o d != 0.
  std::vector<std::int64_t> homology_dims() const;
};

}  // namespace glhom
