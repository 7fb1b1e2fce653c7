#pragma once

#include <cstdint>
#include <vector>

#include "glhom/algebra.hpp"
#include "glhom/budget.hpp"
#include "glhom/report.hpp"

namespace glhom {

// Matrix of the Hochschild boundary b : A^{(n+1)} -> A^{(n)} of the
// standard (un-normalized) complex; the last face wraps, a_n a_0.
RatMatrix hochschild_boundary(const FinDimAlgebra& a, int n,
                              std::uint64_t budget = kDefaultSizeBudget);

// b' : same alternating sum without the wrapping face.
RatMatrix hochschild_b_prime(const FinDimAlgebra& a, int n,
                             std::uint64_t budget = kDefaultSizeBudget);

// Signed cyclic permutation t(a0 x ... x an) = (-1)^n an x a0 x ... as a
// matrix on A^{(n+1)}.
RatMatrix cyclic_permutation(const FinDimAlgebra& a, int n,
                             std::uint64_t budget = kDefaultSizeBudget);

HomologyReport hochschild_homology(const FinDimAlgebra& a, int cap,
                                   std::uint64_t budget = kDefaultSizeBudget,
                                   bool with_representatives = false);

// Connes' lambda-complex: coinvariants of the signed cyclic action, with
// the induced b. Valid as a model of HC in characteristic zero.
ChainLevelComplex connes_lambda_complex(
    const FinDimAlgebra& a, int cap,
    std::uint64_t budget = kDefaultSizeBudget);

// Total complex of the (b, b') cyclic bicomplex, truncated for degrees
// <= cap. Independent route to HC, kept as an oracle for the lambda model.
ChainLevelComplex cyclic_bicomplex_total(
    const FinDimAlgebra& a, int cap,
    std::uint64_t budget = kDefaultSizeBudget);

// HC via the lambda-complex, cross-checked degree-by-degree against the
// bicomplex total complex; disagreement throws std::logic_error.
HomologyReport cyclic_homology(const FinDimAlgebra& a, int cap,
                               std::uint64_t budget = kDefaultSizeBudget,
                               bool with_representatives = false);

// Basis bookkeeping for the lambda quotient in degree n, exposed for tests.
// Tensors are encoded base dim(A), first factor most significant. A basis
// tensor maps to (index of its orbit representative, sign), or to
// class_index -1 when the signed orbit forces the class to vanish.
struct LambdaBasis {
  std::vector<std::int64_t> reps;       // encodings of chosen representatives
  std::vector<std::int32_t> class_index;  // per tensor encoding; -1 = killed
  std::vector<std::int8_t> class_sign;
};

LambdaBasis lambda_basis(const FinDimAlgebra& a, int n,
                         std::uint64_t budget = kDefaultSizeBudget);

}  // namespace glhom
