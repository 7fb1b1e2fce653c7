#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "glhom/rational.hpp"

namespace glhom {

// e_i * e_j expanded in the basis: sparse list of (k, c_{ijk}).
using ProductRow = std::vector<std::pair<int, Rat>>;

// Finite-dimensional unital associative algebra over Q, given by structure
// constants. Associativity and the unit laws are checked on construction;
// a bad table throws immediately rather than poisoning later homology.
class FinDimAlgebra {
 public:
  FinDimAlgebra(int dim, std::vector<ProductRow> table, std::vector<Rat> unit,
                std::string label);

  int dim() const { return dim_; }
  const std::string& label() const { return label_; }
  const std::vector<Rat>& unit() const { return unit_; }
  const ProductRow& product(int i, int j) const {
    return table_[static_cast<std::size_t>(i) * dim_ + j];
  }

  std::vector<Rat> mul(const std::vector<Rat>& a,
                       const std::vector<Rat>& b) const;

  bool is_commutative() const;

  static FinDimAlgebra base_field();
  static FinDimAlgebra dual_numbers();
  static FinDimAlgebra truncated_poly(int n);       // Q[x]/(x^n)
  static FinDimAlgebra group_algebra_cyclic(int m);  // Q[Z/m]
  static FinDimAlgebra matrix_algebra(const FinDimAlgebra& a, int n);

 private:
  int dim_;
  std::vector<ProductRow> table_;  // index i*dim + j
  std::vector<Rat> unit_;
  std::string label_;

  void validate() const;
};

// Element of a FinDimAlgebra as a coordinate vector against its basis.
struct AlgebraElement {
  const FinDimAlgebra* parent = nullptr;
  std::vector<Rat> coords;

  AlgebraElement() = default;
  AlgebraElement(const FinDimAlgebra& a, std::vector<Rat> c);

  bool is_zero() const;
  bool operator==(const AlgebraElement& rhs) const = default;
};

AlgebraElement alg_zero(const FinDimAlgebra& a);
AlgebraElement alg_unit(const FinDimAlgebra& a);
AlgebraElement alg_basis(const FinDimAlgebra& a, int i);
AlgebraElement alg_mul(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement alg_add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement alg_sub(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement alg_scale(const Rat& c, const AlgebraElement& a);

// Lie algebra by bracket structure constants; antisymmetry and the Jacobi
// identity are checked on construction.
class FinDimLieAlgebra {
 public:
  FinDimLieAlgebra(int dim, std::vector<ProductRow> brackets,
                   std::string label);

  int dim() const { return dim_; }
  const std::string& label() const { return label_; }
  const ProductRow& bracket(int i, int j) const {
    return brackets_[static_cast<std::size_t>(i) * dim_ + j];
  }

  std::vector<Rat> apply_bracket(const std::vector<Rat>& a,
                                 const std::vector<Rat>& b) const;

 private:
  int dim_;
  std::vector<ProductRow> brackets_;
  std::string label_;

  void validate() const;
};

// [a, b] = ab - ba on the underlying vector space of A.
FinDimLieAlgebra lie_of(const FinDimAlgebra& a);

}  // namespace glhom
