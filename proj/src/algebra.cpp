#include "glhom/algebra.hpp"

#include <algorithm>
#include <map>

namespace glhom {

namespace {

ProductRow sparsify(std::map<int, Rat>&& acc) {
  ProductRow out;
  for (auto& [k, v] : acc)
    if (v != 0) out.push_back({k, std::move(v)});
  return out;
}

std::vector<Rat> dense_of(const ProductRow& row, int dim) {
  std::vector<Rat> v(static_cast<std::size_t>(dim), Rat(0));
  for (const auto& [k, c] : row) v[k] = c;
  return v;
}

}  // namespace

FinDimAlgebra::FinDimAlgebra(int dim, std::vector<ProductRow> table,
                             std::vector<Rat> unit, std::string label)
    : dim_(dim),
      table_(std::move(table)),
      unit_(std::move(unit)),
      label_(std::move(label)) {
  if (dim_ < 1) throw std::invalid_argument("algebra dimension must be >= 1");
  if (table_.size() != static_cast<std::size_t>(dim_) * dim_)
    throw std::invalid_argument("structure constant table has wrong size");
  if (unit_.size() != static_cast<std::size_t>(dim_))
    throw std::invalid_argument("unit vector has wrong length");
  for (auto& row : table_) {
    std::sort(row.begin(), row.end());
    for (const auto& [k, c] : row)
      if (k < 0 || k >= dim_)
        throw std::invalid_argument("structure constant index out of range");
  }
  validate();
}

std::vector<Rat> FinDimAlgebra::mul(const std::vector<Rat>& a,
                                    const std::vector<Rat>& b) const {
  if (a.size() != static_cast<std::size_t>(dim_) || b.size() != a.size())
    throw std::invalid_argument("mul: coordinate length mismatch");
  std::vector<Rat> out(static_cast<std::size_t>(dim_), Rat(0));
  for (int i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (b[j] == 0) continue;
      Rat c = a[i] * b[j];
      for (const auto& [k, w] : product(i, j)) out[k] += c * w;
    }
  }
  return out;
}

void FinDimAlgebra::validate() const {
  // unit laws on basis vectors
  for (int i = 0; i < dim_; ++i) {
    std::vector<Rat> e(static_cast<std::size_t>(dim_), Rat(0));
    e[i] = 1;
    if (mul(unit_, e) != e || mul(e, unit_) != e)
      throw std::invalid_argument("unit law fails on basis vector " +
                                  std::to_string(i) + " of " + label_);
  }
  // associativity on basis triples
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      std::vector<Rat> eij = dense_of(product(i, j), dim_);
      for (int k = 0; k < dim_; ++k) {
        std::vector<Rat> ek(static_cast<std::size_t>(dim_), Rat(0));
        ek[k] = 1;
        std::vector<Rat> ei(static_cast<std::size_t>(dim_), Rat(0));
        ei[i] = 1;
        if (mul(eij, ek) != mul(ei, dense_of(product(j, k), dim_)))
          throw std::invalid_argument(
              "associativity fails at basis triple (" + std::to_string(i) +
              "," + std::to_string(j) + "," + std::to_string(k) + ") of " +
              label_);
      }
    }
  }
}

bool FinDimAlgebra::is_commutative() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < i; ++j)
      if (product(i, j) != product(j, i)) return false;
  return true;
}

FinDimAlgebra FinDimAlgebra::base_field() {
  return FinDimAlgebra(1, {{{0, Rat(1)}}}, {Rat(1)}, "Q");
}

FinDimAlgebra FinDimAlgebra::dual_numbers() {
  // e0 = 1, e1 = eps, eps^2 = 0
  std::vector<ProductRow> t(4);
  t[0] = {{0, Rat(1)}};
  t[1] = {{1, Rat(1)}};
  t[2] = {{1, Rat(1)}};
  t[3] = {};
  return FinDimAlgebra(2, std::move(t), {Rat(1), Rat(0)}, "Q[eps]/(eps^2)");
}

FinDimAlgebra FinDimAlgebra::truncated_poly(int n) {
  if (n < 1) throw std::invalid_argument("truncated_poly: n >= 1 required");
  std::vector<ProductRow> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i + j < n) t[static_cast<std::size_t>(i) * n + j] = {{i + j, Rat(1)}};
  std::vector<Rat> unit(static_cast<std::size_t>(n), Rat(0));
  unit[0] = 1;
  return FinDimAlgebra(n, std::move(t), std::move(unit),
                       "Q[x]/(x^" + std::to_string(n) + ")");
}

FinDimAlgebra FinDimAlgebra::group_algebra_cyclic(int m) {
  if (m < 1)
    throw std::invalid_argument("group_algebra_cyclic: m >= 1 required");
  std::vector<ProductRow> t(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      t[static_cast<std::size_t>(i) * m + j] = {{(i + j) % m, Rat(1)}};
  std::vector<Rat> unit(static_cast<std::size_t>(m), Rat(0));
  unit[0] = 1;
  return FinDimAlgebra(m, std::move(t), std::move(unit),
                       "Q[Z/" + std::to_string(m) + "]");
}

FinDimAlgebra FinDimAlgebra::matrix_algebra(const FinDimAlgebra& a, int n) {
  if (n < 1) throw std::invalid_argument("matrix_algebra: n >= 1 required");
  const int d = a.dim();
  const int dim = n * n * d;
  auto idx = [&](int r, int c, int k) { return (r * n + c) * d + k; };
  std::vector<ProductRow> t(static_cast<std::size_t>(dim) * dim);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      for (int k = 0; k < d; ++k)
        for (int r2 = 0; r2 < n; ++r2)
          for (int c2 = 0; c2 < n; ++c2)
            for (int k2 = 0; k2 < d; ++k2) {
              if (c != r2) continue;
              ProductRow row;
              for (const auto& [k3, w] : a.product(k, k2))
                row.push_back({idx(r, c2, k3), w});
              t[static_cast<std::size_t>(idx(r, c, k)) * dim +
                idx(r2, c2, k2)] = std::move(row);
            }
  std::vector<Rat> unit(static_cast<std::size_t>(dim), Rat(0));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < d; ++k) unit[idx(r, r, k)] = a.unit()[k];
  return FinDimAlgebra(dim, std::move(t), std::move(unit),
                       "M_" + std::to_string(n) + "(" + a.label() + ")");
}

AlgebraElement::AlgebraElement(const FinDimAlgebra& a, std::vector<Rat> c)
    : parent(&a), coords(std::move(c)) {
  if (coords.size() != static_cast<std::size_t>(a.dim()))
    throw std::invalid_argument("element coordinate length mismatch");
}

bool AlgebraElement::is_zero() const {
  for (const auto& x : coords)
    if (x != 0) return false;
  return true;
}

AlgebraElement alg_zero(const FinDimAlgebra& a) {
  return AlgebraElement(
      a, std::vector<Rat>(static_cast<std::size_t>(a.dim()), Rat(0)));
}

AlgebraElement alg_unit(const FinDimAlgebra& a) {
  return AlgebraElement(a, a.unit());
}

AlgebraElement alg_basis(const FinDimAlgebra& a, int i) {
  auto e = alg_zero(a);
  e.coords.at(static_cast<std::size_t>(i)) = 1;
  return e;
}

static void require_same_parent(const AlgebraElement& a,
                                const AlgebraElement& b) {
  if (a.parent == nullptr || a.parent != b.parent)
    throw std::invalid_argument("elements of different algebras");
}

AlgebraElement alg_mul(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_parent(a, b);
  return AlgebraElement(*a.parent, a.parent->mul(a.coords, b.coords));
}

AlgebraElement alg_add(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_parent(a, b);
  auto c = a.coords;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords[i];
  return AlgebraElement(*a.parent, std::move(c));
}

AlgebraElement alg_sub(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_parent(a, b);
  auto c = a.coords;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords[i];
  return AlgebraElement(*a.parent, std::move(c));
}

AlgebraElement alg_scale(const Rat& c, const AlgebraElement& a) {
  auto v = a.coords;
  for (auto& x : v) x *= c;
  return AlgebraElement(*a.parent, std::move(v));
}

FinDimLieAlgebra::FinDimLieAlgebra(int dim, std::vector<ProductRow> brackets,
                                   std::string label)
    : dim_(dim), brackets_(std::move(brackets)), label_(std::move(label)) {
  if (dim_ < 1) throw std::invalid_argument("Lie dimension must be >= 1");
  if (brackets_.size() != static_cast<std::size_t>(dim_) * dim_)
    throw std::invalid_argument("bracket table has wrong size");
  for (auto& row : brackets_) std::sort(row.begin(), row.end());
  validate();
}

std::vector<Rat> FinDimLieAlgebra::apply_bracket(
    const std::vector<Rat>& a, const std::vector<Rat>& b) const {
  std::vector<Rat> out(static_cast<std::size_t>(dim_), Rat(0));
  for (int i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (b[j] == 0) continue;
      Rat c = a[i] * b[j];
      for (const auto& [k, w] : bracket(i, j)) out[k] += c * w;
    }
  }
  return out;
}

void FinDimLieAlgebra::validate() const {
  auto dense = [&](int i, int j) { return dense_of(bracket(i, j), dim_); };
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j <= i; ++j) {
      auto ij = dense(i, j);
      auto ji = dense(j, i);
      for (int k = 0; k < dim_; ++k)
        if (ij[k] + ji[k] != 0)
          throw std::invalid_argument("antisymmetry fails in " + label_);
    }
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) {
        // [[i,j],k] + [[j,k],i] + [[k,i],j] = 0
        std::vector<Rat> acc(static_cast<std::size_t>(dim_), Rat(0));
        auto accum = [&](const ProductRow& inner, int outer) {
          for (const auto& [m, c] : inner)
            for (const auto& [l, w] : bracket(m, outer)) acc[l] += c * w;
        };
        accum(bracket(i, j), k);
        accum(bracket(j, k), i);
        accum(bracket(k, i), j);
        for (const auto& x : acc)
          if (x != 0)
            throw std::invalid_argument("Jacobi identity fails in " + label_);
      }
}

FinDimLieAlgebra lie_of(const FinDimAlgebra& a) {
  const int d = a.dim();
  std::vector<ProductRow> br(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      std::map<int, Rat> acc;
      for (const auto& [k, c] : a.product(i, j)) acc[k] += c;
      for (const auto& [k, c] : a.product(j, i)) acc[k] -= c;
      br[static_cast<std::size_t>(i) * d + j] = sparsify(std::move(acc));
    }
  return FinDimLieAlgebra(d, std::move(br), "Lie(" + a.label() + ")");
}

}  // namespace glhom
