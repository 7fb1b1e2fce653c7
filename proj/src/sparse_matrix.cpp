#include "glhom/sparse_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace glhom {

RatMatrix::RatMatrix(std::int64_t rows, std::int64_t cols)
    : rows_(rows), cols_(cols), row_data_(static_cast<std::size_t>(rows)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative shape");
}

static SparseVec::iterator find_col(SparseVec& row, std::int64_t c) {
  return std::lower_bound(
      row.begin(), row.end(), c,
      [](const auto& e, std::int64_t col) { return e.first < col; });
}

void RatMatrix::add(std::int64_t r, std::int64_t c, const Rat& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("matrix index out of range");
  if (v == 0) return;
  auto& row = row_data_[r];
  auto it = find_col(row, c);
  if (it != row.end() && it->first == c) {
    it->second += v;
    if (it->second == 0) row.erase(it);
  } else {
    row.insert(it, {c, v});
  }
}

void RatMatrix::set(std::int64_t r, std::int64_t c, const Rat& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("matrix index out of range");
  auto& row = row_data_[r];
  auto it = find_col(row, c);
  if (it != row.end() && it->first == c) {
    if (v == 0)
      row.erase(it);
    else
      it->second = v;
  } else if (v != 0) {
    row.insert(it, {c, v});
  }
}

Rat RatMatrix::get(std::int64_t r, std::int64_t c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("matrix index out of range");
  const auto& row = row_data_[r];
  auto it = std::lower_bound(
      row.begin(), row.end(), c,
      [](const auto& e, std::int64_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return Rat(0);
}

std::size_t RatMatrix::nonzero_count() const {
  std::size_t n = 0;
  for (const auto& r : row_data_) n += r.size();
  return n;
}

bool RatMatrix::is_zero() const { return nonzero_count() == 0; }

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::int64_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : row_data_[r])
      t.row_data_[c].push_back({r, v});
  return t;  // rows come out column-sorted because r increases
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw std::invalid_argument("matrix product shape mismatch");
  RatMatrix out(rows_, rhs.cols_);
  for (std::int64_t r = 0; r < rows_; ++r) {
    std::map<std::int64_t, Rat> acc;
    for (const auto& [k, v] : row_data_[r])
      for (const auto& [c, w] : rhs.row_data_[k]) acc[c] += v * w;
    auto& row = out.row_data_[r];
    for (auto& [c, v] : acc)
      if (v != 0) row.push_back({c, std::move(v)});
  }
  return out;
}

bool RatMatrix::operator==(const RatMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ &&
         row_data_ == rhs.row_data_;
}

std::vector<Rat> RatMatrix::apply(const std::vector<Rat>& v) const {
  if (static_cast<std::int64_t>(v.size()) != cols_)
    throw std::invalid_argument("apply: vector length mismatch");
  std::vector<Rat> out(static_cast<std::size_t>(rows_), Rat(0));
  for (std::int64_t r = 0; r < rows_; ++r)
    for (const auto& [c, w] : row_data_[r]) out[r] += w * v[c];
  return out;
}

namespace {

// Integer sparse row for the fraction-free eliminator.
using IRow = std::vector<std::pair<std::int32_t, Int>>;

void normalize_content(IRow& row) {
  if (row.empty()) return;
  Int g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (g > 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(),
                                          g.get_mpz_t());
  if (row[0].second < 0)
    for (auto& [c, v] : row) v = -v;
}

// dst = a * dst - b * src, content-normalized; a is dst's and b is src's
// coefficient at the shared leading column, so the lead cancels exactly.
void eliminate(IRow& dst, const IRow& src, const Int& a, const Int& b) {
  IRow out;
  out.reserve(dst.size() + src.size());
  auto i = dst.begin();
  auto j = src.begin();
  while (i != dst.end() || j != src.end()) {
    if (j == src.end() || (i != dst.end() && i->first < j->first)) {
      out.push_back({i->first, a * i->second});
      ++i;
    } else if (i == dst.end() || j->first < i->first) {
      out.push_back({j->first, -b * j->second});
      ++j;
    } else {
      Int v = a * i->second - b * j->second;
      if (v != 0) out.push_back({i->first, std::move(v)});
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
  normalize_content(dst);
}

}  // namespace

std::int64_t RatMatrix::rank() const {
  // Scale each row to integers; rank is invariant under row scaling.
  std::vector<IRow> rows;
  rows.reserve(static_cast<std::size_t>(rows_));
  std::unordered_map<std::int64_t, std::int64_t> col_count;
  for (std::int64_t r = 0; r < rows_; ++r) {
    const auto& src = row_data_[r];
    if (src.empty()) continue;
    Int l = 1;
    for (const auto& [c, v] : src)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    IRow row;
    row.reserve(src.size());
    for (const auto& [c, v] : src) {
      row.push_back({static_cast<std::int32_t>(c),
                     Int(v.get_num() * (l / v.get_den()))});
      ++col_count[c];
    }
    normalize_content(row);
    rows.push_back(std::move(row));
  }

  // Relabel columns sparsest-first so early pivots sit in thin columns.
  std::vector<std::pair<std::int64_t, std::int64_t>> cols;
  cols.reserve(col_count.size());
  for (const auto& [c, n] : col_count) cols.push_back({n, c});
  std::sort(cols.begin(), cols.end());
  std::unordered_map<std::int32_t, std::int32_t> relabel;
  relabel.reserve(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i)
    relabel[static_cast<std::int32_t>(cols[i].second)] =
        static_cast<std::int32_t>(i);
  for (auto& row : rows) {
    for (auto& [c, v] : row) c = relabel[c];
    std::sort(row.begin(), row.end());
  }

  // Process rows sparsest-first; reduce each against registered pivots by
  // leading column, then register the survivor as a new pivot.
  std::sort(rows.begin(), rows.end(), [](const IRow& a, const IRow& b) {
    return a.size() < b.size();
  });
  std::unordered_map<std::int32_t, IRow> pivot_of;
  pivot_of.reserve(rows.size());
  for (auto& row : rows) {
    while (!row.empty()) {
      auto it = pivot_of.find(row[0].first);
      if (it == pivot_of.end()) break;
      eliminate(row, it->second, it->second[0].second, row[0].second);
    }
    if (!row.empty()) pivot_of.emplace(row[0].first, std::move(row));
  }
  return static_cast<std::int64_t>(pivot_of.size());
}

std::vector<std::vector<Rat>> RatMatrix::kernel_basis() const {
  // Reduced row echelon over Q; free columns parameterize the kernel.
  std::vector<SparseVec> rows;
  for (const auto& r : row_data_)
    if (!r.empty()) rows.push_back(r);

  std::map<std::int64_t, SparseVec> pivot_of;  // leading col -> echelon row
  for (auto row : rows) {
    while (!row.empty()) {
      auto it = pivot_of.find(row[0].first);
      if (it == pivot_of.end()) break;
      // row -= row.lead * pivot (pivot normalized to lead 1)
      Rat coef = row[0].second;
      SparseVec out;
      auto i = row.begin();
      auto j = it->second.begin();
      while (i != row.end() || j != it->second.end()) {
        if (j == it->second.end() ||
            (i != row.end() && i->first < j->first)) {
          out.push_back(*i++);
        } else if (i == row.end() || j->first < i->first) {
          out.push_back({j->first, -coef * j->second});
          ++j;
        } else {
          Rat v = i->second - coef * j->second;
          if (v != 0) out.push_back({i->first, std::move(v)});
          ++i;
          ++j;
        }
      }
      row = std::move(out);
    }
    if (row.empty()) continue;
    Rat lead = row[0].second;
    for (auto& [c, v] : row) v /= lead;
    pivot_of.emplace(row[0].first, std::move(row));
  }

  // Back-substitute so each pivot row is zero on every other pivot column.
  for (auto it = pivot_of.rbegin(); it != pivot_of.rend(); ++it) {
    SparseVec& row = it->second;
    for (std::size_t k = 1; k < row.size();) {
      auto p = pivot_of.find(row[k].first);
      if (p == pivot_of.end() || p->first == it->first) {
        ++k;
        continue;
      }
      Rat coef = row[k].second;
      SparseVec out;
      auto i = row.begin();
      auto j = p->second.begin();
      while (i != row.end() || j != p->second.end()) {
        if (j == p->second.end() || (i != row.end() && i->first < j->first)) {
          out.push_back(*i++);
        } else if (i == row.end() || j->first < i->first) {
          out.push_back({j->first, -coef * j->second});
          ++j;
        } else {
          Rat v = i->second - coef * j->second;
          if (v != 0) out.push_back({i->first, std::move(v)});
          ++i;
          ++j;
        }
      }
      row = std::move(out);
      k = 1;  // restart; positions shifted
    }
  }

  std::vector<std::vector<Rat>> basis;
  for (std::int64_t c = 0; c < cols_; ++c) {
    if (pivot_of.count(c)) continue;
    std::vector<Rat> v(static_cast<std::size_t>(cols_), Rat(0));
    v[c] = 1;
    for (const auto& [pc, row] : pivot_of) {
      auto it = std::lower_bound(
          row.begin(), row.end(), c,
          [](const auto& e, std::int64_t col) { return e.first < col; });
      if (it != row.end() && it->first == c) v[pc] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::int64_t homology_dim(const RatMatrix& d_out, const RatMatrix& d_in) {
  if (d_out.cols() != d_in.rows())
    throw std::invalid_argument("homology_dim: shapes not composable");
  if (!(d_out * d_in).is_zero())
    throw std::invalid_argument("homology_dim: d_out * d_in != 0");
  return (d_out.cols() - d_out.rank()) - d_in.rank();
}

bool SpanBuilder::insert(std::vector<Rat> v) {
  if (v.size() != len_) throw std::invalid_argument("SpanBuilder length");
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < len_ && v[p] == 0) ++p;
  if (p == len_) return false;
  Rat lead = v[p];
  for (auto& x : v) x /= lead;
  // keep echelon reduced: clear column p from existing pivot rows
  for (auto& [q, row] : pivots_) {
    if (row[p] == 0) continue;
    Rat c = row[p];
    for (std::size_t i = 0; i < len_; ++i) row[i] -= c * v[i];
  }
  pivots_.emplace(p, std::move(v));
  return true;
}

std::vector<Rat> SpanBuilder::reduce(std::vector<Rat> v) const {
  if (v.size() != len_) throw std::invalid_argument("SpanBuilder length");
  for (const auto& [p, row] : pivots_) {
    if (v[p] == 0) continue;
    Rat c = v[p];
    for (std::size_t i = p; i < len_; ++i) v[i] -= c * row[i];
  }
  return v;
}

bool SpanBuilder::contains(const std::vector<Rat>& v) const {
  auto r = reduce(v);
  for (const auto& x : r)
    if (x != 0) return false;
  return true;
}

bool in_span(const std::vector<Rat>& v,
             const std::vector<std::vector<Rat>>& basis) {
  for (const auto& b : basis)
    if (b.size() != v.size())
      throw std::invalid_argument("in_span: length mismatch");
  SpanBuilder span(v.size());
  for (const auto& b : basis) span.insert(b);
  return span.contains(v);
}

}  // namespace glhom
