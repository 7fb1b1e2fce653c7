#include "glhom/hochschild.hpp"

#include <algorithm>
#include <stdexcept>

namespace glhom {

namespace {

// dim^(n+1) with budget guard attributed to degree n.
std::uint64_t tensor_dim(int dim, int n, std::uint64_t budget) {
  std::uint64_t size = 1;
  for (int i = 0; i <= n; ++i) {
    size *= static_cast<std::uint64_t>(dim);
    check_budget(n, size, budget);
  }
  return size;
}

std::vector<int> decode(std::int64_t code, int dim, int n) {
  std::vector<int> t(static_cast<std::size_t>(n + 1));
  for (int i = n; i >= 0; --i) {
    t[i] = static_cast<int>(code % dim);
    code /= dim;
  }
  return t;
}

std::int64_t encode(const std::vector<int>& t, int dim) {
  std::int64_t code = 0;
  for (int x : t) code = code * dim + x;
  return code;
}

// Common face-map loop for b and b'. Emits, for each column tensor, the
// expansions of the i-th face with sign (-1)^i.
template <typename Emit>
void for_each_face(const FinDimAlgebra& a, const std::vector<int>& tup,
                   bool wrap, Emit&& emit) {
  const int n = static_cast<int>(tup.size()) - 1;
  std::vector<int> face(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < i; ++k) face[k] = tup[k];
    for (int k = i + 1; k < n; ++k) face[k] = tup[k + 1];
    for (const auto& [k, c] : a.product(tup[i], tup[i + 1])) {
      face[i] = k;
      emit(face, i % 2 == 0 ? c : -c);
    }
  }
  if (wrap) {
    for (int k = 1; k < n; ++k) face[k] = tup[k];
    for (const auto& [k, c] : a.product(tup[n], tup[0])) {
      face[0] = k;
      emit(face, n % 2 == 0 ? c : -c);
    }
  }
}

RatMatrix boundary_impl(const FinDimAlgebra& a, int n, bool wrap,
                        std::uint64_t budget) {
  if (n < 1) throw std::invalid_argument("boundary needs degree >= 1");
  const int d = a.dim();
  const auto cols = static_cast<std::int64_t>(tensor_dim(d, n, budget));
  const auto rows = static_cast<std::int64_t>(tensor_dim(d, n - 1, budget));
  RatMatrix m(rows, cols);
  for (std::int64_t col = 0; col < cols; ++col) {
    auto tup = decode(col, d, n);
    for_each_face(a, tup, wrap, [&](const std::vector<int>& face, Rat c) {
      m.add(encode(face, d), col, c);
    });
  }
  return m;
}

}  // namespace

RatMatrix hochschild_boundary(const FinDimAlgebra& a, int n,
                              std::uint64_t budget) {
  return boundary_impl(a, n, /*wrap=*/true, budget);
}

RatMatrix hochschild_b_prime(const FinDimAlgebra& a, int n,
                             std::uint64_t budget) {
  return boundary_impl(a, n, /*wrap=*/false, budget);
}

RatMatrix cyclic_permutation(const FinDimAlgebra& a, int n,
                             std::uint64_t budget) {
  const int d = a.dim();
  const auto size = static_cast<std::int64_t>(tensor_dim(d, n, budget));
  RatMatrix m(size, size);
  const Rat sign = (n % 2 == 0) ? Rat(1) : Rat(-1);
  for (std::int64_t col = 0; col < size; ++col) {
    auto tup = decode(col, d, n);
    std::rotate(tup.rbegin(), tup.rbegin() + 1, tup.rend());
    m.set(encode(tup, d), col, sign);
  }
  return m;
}

namespace {

std::vector<std::int64_t> rank_profile(const std::vector<RatMatrix>& bnd,
                                       int cap) {
  // ranks[n] = rank of boundary C_n -> C_{n-1}, 1 <= n <= cap+1
  std::vector<std::int64_t> ranks(static_cast<std::size_t>(cap) + 2, 0);
  for (int n = 1; n <= cap + 1; ++n) ranks[n] = bnd[n].rank();
  return ranks;
}

void check_square_zero(const std::vector<RatMatrix>& bnd, int cap,
                       const std::string& what) {
  for (int n = 2; n <= cap + 1; ++n)
    if (!(bnd[n - 1] * bnd[n]).is_zero())
      throw std::logic_error(what + ": boundary square nonzero at degree " +
                             std::to_string(n));
}

// Representatives: cycles of d_n completing im(d_{n+1}) to ker(d_n).
std::vector<std::vector<Rat>> pick_representatives(const RatMatrix& d_out,
                                                   const RatMatrix& d_in) {
  SpanBuilder span(static_cast<std::size_t>(d_out.cols()));
  RatMatrix cols = d_in.transpose();
  for (std::int64_t r = 0; r < cols.rows(); ++r) {
    std::vector<Rat> v(static_cast<std::size_t>(d_out.cols()), Rat(0));
    for (const auto& [c, w] : cols.row(r)) v[c] = w;
    span.insert(std::move(v));
  }
  std::vector<std::vector<Rat>> reps;
  for (auto& k : d_out.kernel_basis())
    if (span.insert(k)) reps.push_back(std::move(k));
  return reps;
}

}  // namespace

std::vector<std::int64_t> ChainLevelComplex::homology_dims() const {
  check_square_zero(boundaries, degree_cap, "chain complex");
  std::vector<std::int64_t> dims;
  std::vector<std::int64_t> ranks = rank_profile(boundaries, degree_cap);
  for (int n = 0; n <= degree_cap; ++n)
    dims.push_back(space_dims[n] - (n >= 1 ? ranks[n] : 0) - ranks[n + 1]);
  return dims;
}

HomologyReport hochschild_homology(const FinDimAlgebra& a, int cap,
                                   std::uint64_t budget,
                                   bool with_representatives) {
  if (cap < 0) throw std::invalid_argument("negative degree cap");
  const int d = a.dim();
  std::vector<RatMatrix> bnd(static_cast<std::size_t>(cap) + 2);
  for (int n = 1; n <= cap + 1; ++n)
    bnd[n] = hochschild_boundary(a, n, budget);
  check_square_zero(bnd, cap, "Hochschild complex of " + a.label());

  HomologyReport rep;
  rep.label = "HH(" + a.label() + ")";
  auto ranks = rank_profile(bnd, cap);
  for (int n = 0; n <= cap; ++n) {
    auto space = static_cast<std::int64_t>(tensor_dim(d, n, budget));
    rep.dims[n] = space - (n >= 1 ? ranks[n] : 0) - ranks[n + 1];
  }
  if (with_representatives) {
    for (int n = 0; n <= cap; ++n) {
      auto space = static_cast<std::int64_t>(tensor_dim(d, n, budget));
      RatMatrix d_out = n >= 1 ? bnd[n] : RatMatrix(0, space);
      rep.representatives[n] = pick_representatives(d_out, bnd[n + 1]);
    }
  }
  return rep;
}

LambdaBasis lambda_basis(const FinDimAlgebra& a, int n,
                         std::uint64_t budget) {
  const int d = a.dim();
  const auto size = static_cast<std::int64_t>(tensor_dim(d, n, budget));
  LambdaBasis basis;
  basis.class_index.assign(static_cast<std::size_t>(size), -2);  // unseen
  basis.class_sign.assign(static_cast<std::size_t>(size), 0);
  const int cycle_sign = (n % 2 == 0) ? 1 : -1;
  std::vector<std::int64_t> orbit;
  std::vector<std::int8_t> signs;
  for (std::int64_t code = 0; code < size; ++code) {
    if (basis.class_index[code] != -2) continue;
    orbit.clear();
    signs.clear();
    auto tup = decode(code, d, n);
    std::int64_t cur = code;
    std::int8_t s = 1;
    bool killed = false;
    while (true) {
      auto pos = std::find(orbit.begin(), orbit.end(), cur);
      if (pos != orbit.end()) {
        // returned to an element with possibly opposite sign
        if (signs[pos - orbit.begin()] != s) killed = true;
        break;
      }
      orbit.push_back(cur);
      signs.push_back(s);
      std::rotate(tup.rbegin(), tup.rbegin() + 1, tup.rend());
      cur = encode(tup, d);
      s = static_cast<std::int8_t>(s * cycle_sign);
    }
    std::int32_t rep_index = -1;
    if (!killed) {
      rep_index = static_cast<std::int32_t>(basis.reps.size());
      basis.reps.push_back(code);
    }
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      basis.class_index[orbit[i]] = killed ? -1 : rep_index;
      basis.class_sign[orbit[i]] = signs[i];
    }
  }
  return basis;
}

ChainLevelComplex connes_lambda_complex(const FinDimAlgebra& a, int cap,
                                        std::uint64_t budget) {
  if (cap < 0) throw std::invalid_argument("negative degree cap");
  const int d = a.dim();
  ChainLevelComplex cx;
  cx.degree_cap = cap;
  std::vector<LambdaBasis> bases;
  for (int n = 0; n <= cap + 1; ++n)
    bases.push_back(lambda_basis(a, n, budget));
  for (int n = 0; n <= cap + 1; ++n)
    cx.space_dims.push_back(static_cast<std::int64_t>(bases[n].reps.size()));
  cx.boundaries.resize(static_cast<std::size_t>(cap) + 2);
  for (int n = 1; n <= cap + 1; ++n) {
    const auto& bn = bases[n];
    const auto& bm = bases[n - 1];
    RatMatrix m(static_cast<std::int64_t>(bm.reps.size()),
                static_cast<std::int64_t>(bn.reps.size()));
    for (std::size_t col = 0; col < bn.reps.size(); ++col) {
      auto tup = decode(bn.reps[col], d, n);
      for_each_face(a, tup, /*wrap=*/true,
                    [&](const std::vector<int>& face, Rat c) {
                      std::int64_t code = encode(face, d);
                      std::int32_t cls = bm.class_index[code];
                      if (cls < 0) return;
                      m.add(cls, static_cast<std::int64_t>(col),
                            bm.class_sign[code] > 0 ? c : -c);
                    });
    }
    cx.boundaries[n] = std::move(m);
  }
  return cx;
}

ChainLevelComplex cyclic_bicomplex_total(const FinDimAlgebra& a, int cap,
                                         std::uint64_t budget) {
  if (cap < 0) throw std::invalid_argument("negative degree cap");
  const int d = a.dim();
  ChainLevelComplex cx;
  cx.degree_cap = cap;

  // T_n = sum over columns p = 0..n of C_{n-p}; block offsets per degree.
  auto block_dims = [&](int n) {
    std::vector<std::int64_t> dims;
    for (int p = 0; p <= n; ++p)
      dims.push_back(static_cast<std::int64_t>(tensor_dim(d, n - p, budget)));
    return dims;
  };
  std::vector<std::vector<std::int64_t>> offsets(
      static_cast<std::size_t>(cap) + 2);
  for (int n = 0; n <= cap + 1; ++n) {
    std::int64_t total = 0;
    for (auto bd : block_dims(n)) {
      offsets[n].push_back(total);
      total += bd;
    }
    cx.space_dims.push_back(total);
  }

  cx.boundaries.resize(static_cast<std::size_t>(cap) + 2);
  for (int n = 1; n <= cap + 1; ++n) {
    RatMatrix m(cx.space_dims[n - 1], cx.space_dims[n]);
    for (int p = 0; p <= n; ++p) {
      const int q = n - p;
      const std::int64_t col0 = offsets[n][p];
      const auto block = static_cast<std::int64_t>(tensor_dim(d, q, budget));
      for (std::int64_t j = 0; j < block; ++j) {
        auto tup = decode(j, d, q);
        // vertical: b on even columns, -b' on odd columns.
        if (q >= 1) {
          const std::int64_t row0 = offsets[n - 1][p];
          const bool even = p % 2 == 0;
          for_each_face(a, tup, /*wrap=*/even,
                        [&](const std::vector<int>& face, Rat c) {
                          m.add(row0 + encode(face, d), col0 + j,
                                even ? c : -c);
                        });
        }
        // horizontal: 1 - t from odd columns, the norm N from even ones.
        if (p >= 1) {
          const std::int64_t row0 = offsets[n - 1][p - 1];
          const Rat sign = (q % 2 == 0) ? Rat(1) : Rat(-1);
          if (p % 2 == 1) {
            m.add(row0 + j, col0 + j, Rat(1));
            auto rot = tup;
            std::rotate(rot.rbegin(), rot.rbegin() + 1, rot.rend());
            m.add(row0 + encode(rot, d), col0 + j, -sign);
          } else {
            auto rot = tup;
            Rat s(1);
            for (int k = 0; k <= q; ++k) {
              m.add(row0 + encode(rot, d), col0 + j, s);
              std::rotate(rot.rbegin(), rot.rbegin() + 1, rot.rend());
              s *= sign;
            }
          }
        }
      }
    }
    cx.boundaries[n] = std::move(m);
  }
  return cx;
}

HomologyReport cyclic_homology(const FinDimAlgebra& a, int cap,
                               std::uint64_t budget,
                               bool with_representatives) {
  ChainLevelComplex lam = connes_lambda_complex(a, cap, budget);
  auto dims = lam.homology_dims();
  auto check = cyclic_bicomplex_total(a, cap, budget).homology_dims();
  for (int n = 0; n <= cap; ++n)
    if (dims[n] != check[n])
      throw std::logic_error(
          "cyclic homology routes disagree for " + a.label() + " in degree " +
          std::to_string(n) + ": lambda " + std::to_string(dims[n]) +
          " vs bicomplex " + std::to_string(check[n]));

  HomologyReport rep;
  rep.label = "HC(" + a.label() + ")";
  for (int n = 0; n <= cap; ++n) rep.dims[n] = dims[n];
  if (with_representatives) {
    for (int n = 0; n <= cap; ++n) {
      RatMatrix d_out =
          n >= 1 ? lam.boundaries[n] : RatMatrix(0, lam.space_dims[0]);
      rep.representatives[n] =
          pick_representatives(d_out, lam.boundaries[n + 1]);
    }
  }
  return rep;
}

}  // namespace glhom
