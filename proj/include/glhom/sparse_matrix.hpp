#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "glhom/rational.hpp"

namespace glhom {

// Sparse row: (column, value) pairs sorted by column index, no zero values.
using SparseVec = std::vector<std::pair<std::int64_t, Rat>>;

// Sparse matrix over the rationals. Rows keep their entries column-sorted,
// so iteration order (and therefore every serialized output) is canonical.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::int64_t rows, std::int64_t cols);

  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }

  // Accumulates v into entry (r, c); drops the entry if the sum is zero.
  void add(std::int64_t r, std::int64_t c, const Rat& v);
  void set(std::int64_t r, std::int64_t c, const Rat& v);
  Rat get(std::int64_t r, std::int64_t c) const;

  const SparseVec& row(std::int64_t r) const { return row_data_[r]; }
  std::size_t nonzero_count() const;
  bool is_zero() const;

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& rhs) const;
  bool operator==(const RatMatrix& rhs) const;

  // Applies the matrix to a dense column vector.
  std::vector<Rat> apply(const std::vector<Rat>& v) const;

  // Exact rank over Q, by fraction-free (content-normalized integer)
  // elimination; pivot rows are chosen sparsest-first.
  std::int64_t rank() const;

  // Basis of the right null space, dense vectors of length cols().
  std::vector<std::vector<Rat>> kernel_basis() const;

 private:
  std::int64_t rows_ = 0;
  std::int64_t cols_ = 0;
  std::vector<SparseVec> row_data_;
};

// dim ker(d_out) - rank(d_in) for a composable pair with d_out * d_in = 0.
// Throws std::invalid_argument on shape mismatch or nonzero composite.
std::int64_t homology_dim(const RatMatrix& d_out, const RatMatrix& d_in);

// Incremental row echelon over Q for dense vectors; used for span
// membership, quotient-canonical reduction and representative selection.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t len) : len_(len) {}

  // Returns true iff v was independent of the current span (and was added).
  bool insert(std::vector<Rat> v);
  bool contains(const std::vector<Rat>& v) const;
  // Canonical residue of v modulo the span (echelon reduction).
  std::vector<Rat> reduce(std::vector<Rat> v) const;
  std::size_t rank() const { return pivots_.size(); }
  std::size_t length() const { return len_; }

 private:
  std::size_t len_;
  std::map<std::size_t, std::vector<Rat>> pivots_;  // pivot position -> row
};

bool in_span(const std::vector<Rat>& v,
             const std::vector<std::vector<Rat>>& basis);

}  // namespace glhom
