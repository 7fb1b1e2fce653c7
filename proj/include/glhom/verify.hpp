#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "glhom/budget.hpp"
#include "glhom/jacobi.hpp"

namespace glhom {

struct CheckResult {
  std::string name;
  bool pass = false;
  bool skipped = false;  // budget-skipped entries are marked distinctly
  std::string detail;
};

inline constexpr unsigned kDefaultSeed = 20240901;

// Runs every acceptance check; deterministic under a fixed seed. Entries
// come back sorted by name; on_result (optional) streams them as they
// finish.
std::vector<CheckResult> verify_all(
    unsigned seed = kDefaultSeed, std::uint64_t budget = kDefaultSizeBudget,
    const std::function<void(const CheckResult&)>& on_result = {});

bool all_passed(const std::vector<CheckResult>& results);

// Seeded random operator in the represented subalgebra: band width up to
// max_band, window inside [-4, 4], small integer coordinates.
JacobiOperator random_operator(std::mt19937_64& rng, const FinDimAlgebra& ring,
                               int max_band = 3);
// Variants with forced tail behaviour, for the ideal suites.
JacobiOperator random_operator_Iplus(std::mt19937_64& rng,
                                     const FinDimAlgebra& ring,
                                     int max_band = 3);
JacobiOperator random_operator_Iminus(std::mt19937_64& rng,
                                      const FinDimAlgebra& ring,
                                      int max_band = 3);
JacobiOperator random_operator_finite(std::mt19937_64& rng,
                                      const FinDimAlgebra& ring,
                                      int max_band = 3);

}  // namespace glhom
