#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "glhom/algebra.hpp"
#include "glhom/sparse_matrix.hpp"

namespace glhom {

// Bi-infinite, eventually-constant sequence of ring elements: one diagonal
// of a banded Z x Z matrix. Canonical form keeps the window minimal, so
// value-equality is representation-equality.
class TailSequence {
 public:
  TailSequence() = default;
  TailSequence(AlgebraElement left_tail, std::int64_t window_start,
               std::vector<AlgebraElement> window, AlgebraElement right_tail);

  static TailSequence constant(const AlgebraElement& value);

  const AlgebraElement& at(std::int64_t i) const;
  const AlgebraElement& left_tail() const { return left_; }
  const AlgebraElement& right_tail() const { return right_; }
  std::int64_t window_start() const { return start_; }
  std::int64_t window_end() const {  // first index of the right tail
    return start_ + static_cast<std::int64_t>(window_.size());
  }
  const std::vector<AlgebraElement>& window() const { return window_; }

  bool is_zero() const;
  const FinDimAlgebra& ring() const { return *left_.parent; }

  // index shift: result(i) = (*this)(i - offset)
  TailSequence shifted(std::int64_t offset) const;

  TailSequence pointwise_mul(const TailSequence& rhs) const;
  TailSequence pointwise_add(const TailSequence& rhs) const;
  TailSequence negated() const;

  // smallest i0 >= from with (*this)(i0) != 0, if any
  std::optional<std::int64_t> first_nonzero_at_or_after(
      std::int64_t from) const;
  // largest i0 < before with (*this)(i0) != 0, if any
  std::optional<std::int64_t> last_nonzero_before(std::int64_t before) const;

  bool operator==(const TailSequence& rhs) const = default;

 private:
  AlgebraElement left_, right_;
  std::int64_t start_ = 0;
  std::vector<AlgebraElement> window_;

  void canonicalize();
};

// Finite sum of (eventually-constant diagonal) x (shift power): a banded
// Z x Z matrix over the ring with entry convention a_{i,j} = d_{i-j}(i).
// This subalgebra of the generalized Jacobi matrices contains all shifts,
// projections and finite matrices and is closed under the ring operations.
class JacobiOperator {
 public:
  explicit JacobiOperator(const FinDimAlgebra& ring) : ring_(&ring) {}

  static JacobiOperator zero(const FinDimAlgebra& ring);
  static JacobiOperator identity(const FinDimAlgebra& ring);
  // T^k: multiplication by t^k on Laurent vectors (entries at (j+k, j)).
  static JacobiOperator shift_power(const FinDimAlgebra& ring,
                                    std::int64_t k);
  // Diagonal indicator of indices >= 0 (projection onto R[[t]]).
  static JacobiOperator projection_P(const FinDimAlgebra& ring);
  static JacobiOperator from_finite_matrix(
      const FinDimAlgebra& ring,
      const std::map<std::pair<std::int64_t, std::int64_t>, AlgebraElement>&
          entries);

  const FinDimAlgebra& ring() const { return *ring_; }
  const std::map<std::int64_t, TailSequence>& terms() const { return terms_; }
  void set_term(std::int64_t offset, TailSequence seq);

  AlgebraElement entry(std::int64_t i, std::int64_t j) const;
  bool is_zero() const { return terms_.empty(); }
  std::int64_t band_width() const;

  JacobiOperator operator+(const JacobiOperator& rhs) const;
  JacobiOperator operator-(const JacobiOperator& rhs) const;
  JacobiOperator operator*(const JacobiOperator& rhs) const;
  bool operator==(const JacobiOperator& rhs) const;

 private:
  const FinDimAlgebra* ring_;
  std::map<std::int64_t, TailSequence> terms_;  // offset m -> diagonal d_m
};

JacobiOperator op_commutator(const JacobiOperator& a, const JacobiOperator& b);

// Finite-support Laurent vector: exponent -> coefficient.
using LaurentVector = std::map<std::int64_t, AlgebraElement>;

// (a . f)_i = sum_m d_m(i) f_{i-m}
LaurentVector apply(const JacobiOperator& a, const LaurentVector& f);

// Ideal membership (rows bounded below / columns bounded above / both).
bool in_Iplus(const JacobiOperator& a);
bool in_Iminus(const JacobiOperator& a);
bool in_I0(const JacobiOperator& a);

// (P a, (1-P) a): components in I+ and I- summing to a.
std::pair<JacobiOperator, JacobiOperator> split(const JacobiOperator& a);

// Matrix trace, defined exactly on the trace-class ideal I0; throws
// std::domain_error otherwise.
AlgebraElement trace_I0(const JacobiOperator& a);

// Canonical reduction of ring elements modulo the commutator subspace
// [R, R]; value equality of reductions is equality in HC_0(R).
class CommutatorReducer {
 public:
  explicit CommutatorReducer(const FinDimAlgebra& ring);
  AlgebraElement reduce(const AlgebraElement& x) const;

 private:
  const FinDimAlgebra* ring_;
  SpanBuilder span_;
};

// Lie 2-cocycle valued in HC_0(R):
// c(a,b) = tr(P b (1-P) a P) - tr(P a (1-P) b P) mod [R, R].
AlgebraElement cocycle(const JacobiOperator& a, const JacobiOperator& b);

// c([a,b],z) + c([b,z],a) + c([z,a],b) == 0 in HC_0(R)?
bool cocycle_identity_check(const JacobiOperator& a, const JacobiOperator& b,
                            const JacobiOperator& z);

// Lattice-boundedness witnesses for E(R) membership. everything == true
// means every lattice index works (forward: the image of t^n R[[t]] is
// zero; backward: every t^{m'} R[[t]] already lands inside t^m R[[t]]).
struct LatticeWitness {
  bool everything = false;
  std::int64_t index = 0;
  bool operator==(const LatticeWitness&) const = default;
};

// Maximal n' with a(t^n R[[t]]) contained in t^{n'} R[[t]].
LatticeWitness lattice_witness_forward(const JacobiOperator& a,
                                       std::int64_t n);
// Minimal m' with a(t^{m'} R[[t]]) contained in t^m R[[t]].
LatticeWitness lattice_witness_backward(const JacobiOperator& a,
                                        std::int64_t m);

// (2N+1)^2 window of entries a_{i,j}, -N <= i,j <= N; the brute-force
// oracle every symbolic operation is checked against.
std::vector<std::vector<AlgebraElement>> truncate(const JacobiOperator& a,
                                                  std::int64_t n);

}  // namespace glhom
