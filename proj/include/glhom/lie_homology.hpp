#pragma once

#include <cstdint>
#include <vector>

#include "glhom/algebra.hpp"
#include "glhom/budget.hpp"
#include "glhom/report.hpp"

namespace glhom {

// Canonical lexicographic enumeration of the basis of Lambda^n g: strictly
// increasing index tuples into the Lie algebra basis.
class ExteriorBasis {
 public:
  ExteriorBasis(int dim, int degree, std::uint64_t budget = kDefaultSizeBudget);

  int degree() const { return degree_; }
  std::int64_t size() const { return size_; }
  std::vector<int> tuple(std::int64_t index) const;
  std::int64_t index(const std::vector<int>& tuple) const;

 private:
  int dim_;
  int degree_;
  std::int64_t size_;
};

std::int64_t binomial(int n, int k);

// Chevalley-Eilenberg differential Lambda^n g -> Lambda^{n-1} g:
// d(x_1 ^ ... ^ x_n) = sum_{i<j} (-1)^{i+j} [x_i, x_j] ^ x_1 ... ^x_i ...
// ^x_j ... ^ x_n (1-based sign convention).
RatMatrix ce_boundary(const FinDimLieAlgebra& g, int n,
                      std::uint64_t budget = kDefaultSizeBudget);

HomologyReport lie_homology(const FinDimLieAlgebra& g, int cap,
                            std::uint64_t budget = kDefaultSizeBudget,
                            bool with_representatives = true);

// Chain-level coproduct on Lambda^n g induced by the diagonal: the signed
// unshuffle sum over all subsets. Output is a coordinate vector in
// (+)_{p+q=n} Lambda^p g (x) Lambda^q g, blocks ordered by p, each block
// row-major in (index of Lambda^p, index of Lambda^q).
std::vector<Rat> shuffle_coproduct(const FinDimLieAlgebra& g, int n,
                                   const std::vector<Rat>& chain,
                                   std::uint64_t budget = kDefaultSizeBudget);

// Dimension of the primitive subspace of H_n for 1 <= n <= cap, computed
// from homology representatives plus boundary-membership in the tensor
// square of the CE complex. Also returns the homology report it was
// computed from (dims, representatives, prim_dims all filled).
HomologyReport primitive_dims(const FinDimLieAlgebra& g, int cap,
                              std::uint64_t budget = kDefaultSizeBudget);

std::int64_t primitive_dim(const FinDimLieAlgebra& g, int n, int cap,
                           std::uint64_t budget = kDefaultSizeBudget);

}  // namespace glhom
