#include "glhom/lie_homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace glhom {

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

ExteriorBasis::ExteriorBasis(int dim, int degree, std::uint64_t budget)
    : dim_(dim), degree_(degree), size_(binomial(dim, degree)) {
  if (degree < 0) throw std::invalid_argument("negative exterior degree");
  check_budget(degree, static_cast<std::uint64_t>(size_), budget);
}

std::vector<int> ExteriorBasis::tuple(std::int64_t index) const {
  // Lexicographic unranking of a strictly increasing tuple.
  std::vector<int> t(static_cast<std::size_t>(degree_));
  int next = 0;
  for (int slot = 0; slot < degree_; ++slot) {
    for (int v = next;; ++v) {
      std::int64_t block = binomial(dim_ - v - 1, degree_ - slot - 1);
      if (index < block) {
        t[slot] = v;
        next = v + 1;
        break;
      }
      index -= block;
    }
  }
  return t;
}

std::int64_t ExteriorBasis::index(const std::vector<int>& tuple) const {
  if (static_cast<int>(tuple.size()) != degree_)
    throw std::invalid_argument("exterior tuple has wrong length");
  std::int64_t idx = 0;
  int prev = -1;
  for (int slot = 0; slot < degree_; ++slot) {
    int v = tuple[slot];
    if (v <= prev || v >= dim_)
      throw std::invalid_argument("exterior tuple not strictly increasing");
    for (int w = prev + 1; w < v; ++w)
      idx += binomial(dim_ - w - 1, degree_ - slot - 1);
    prev = v;
  }
  return idx;
}

RatMatrix ce_boundary(const FinDimLieAlgebra& g, int n,
                      std::uint64_t budget) {
  if (n < 1) throw std::invalid_argument("ce_boundary needs degree >= 1");
  const int d = g.dim();
  ExteriorBasis src(d, n, budget);
  ExteriorBasis dst(d, n - 1, budget);
  RatMatrix m(dst.size(), src.size());
  std::vector<int> rest(static_cast<std::size_t>(n > 2 ? n - 2 : 0));
  std::vector<int> merged(static_cast<std::size_t>(n - 1));
  for (std::int64_t col = 0; col < src.size(); ++col) {
    auto tup = src.tuple(col);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const bool neg = (i + j) % 2 != 0;  // (-1)^{(i+1)+(j+1)}, 0-based i, j
        rest.clear();
        for (int k = 0; k < n; ++k)
          if (k != i && k != j) rest.push_back(tup[k]);
        for (const auto& [b, c] : g.bracket(tup[i], tup[j])) {
          if (std::binary_search(rest.begin(), rest.end(), b)) continue;
          // insert b into rest with the transposition sign
          auto pos = std::lower_bound(rest.begin(), rest.end(), b);
          const auto shifts = pos - rest.begin();
          merged.assign(rest.begin(), pos);
          merged.push_back(b);
          merged.insert(merged.end(), pos, rest.end());
          Rat v = (shifts % 2 == 0) ? c : -c;
          m.add(dst.index(merged), col, neg ? -v : v);
        }
      }
    }
  }
  return m;
}

namespace {

std::vector<RatMatrix> ce_tower(const FinDimLieAlgebra& g, int top,
                                std::uint64_t budget) {
  // boundaries[n] : Lambda^n -> Lambda^{n-1} for 1 <= n <= top; degrees
  // beyond dim(g) are zero maps between zero/empty spaces.
  std::vector<RatMatrix> bnd(static_cast<std::size_t>(top) + 1);
  for (int n = 1; n <= top; ++n) {
    if (n <= g.dim())
      bnd[n] = ce_boundary(g, n, budget);
    else
      bnd[n] = RatMatrix(binomial(g.dim(), n - 1), 0);
  }
  return bnd;
}

std::vector<std::vector<Rat>> representatives_at(
    const FinDimLieAlgebra& g, const std::vector<RatMatrix>& bnd, int n) {
  const std::int64_t space = binomial(g.dim(), n);
  RatMatrix d_out = n >= 1 ? bnd[n] : RatMatrix(0, space);
  SpanBuilder span(static_cast<std::size_t>(space));
  const RatMatrix& d_in = bnd[n + 1];
  RatMatrix cols = d_in.transpose();
  for (std::int64_t r = 0; r < cols.rows(); ++r) {
    std::vector<Rat> v(static_cast<std::size_t>(space), Rat(0));
    for (const auto& [c, w] : cols.row(r)) v[c] = w;
    span.insert(std::move(v));
  }
  std::vector<std::vector<Rat>> reps;
  for (auto& k : d_out.kernel_basis())
    if (span.insert(k)) reps.push_back(std::move(k));
  return reps;
}

}  // namespace

HomologyReport lie_homology(const FinDimLieAlgebra& g, int cap,
                            std::uint64_t budget,
                            bool with_representatives) {
  if (cap < 0) throw std::invalid_argument("negative degree cap");
  auto bnd = ce_tower(g, cap + 1, budget);
  for (int n = 2; n <= cap + 1; ++n)
    if (!(bnd[n - 1] * bnd[n]).is_zero())
      throw std::logic_error("CE boundary square nonzero at degree " +
                             std::to_string(n));
  HomologyReport rep;
  rep.label = "H(" + g.label() + ")";
  for (int n = 0; n <= cap; ++n) {
    std::int64_t space = binomial(g.dim(), n);
    std::int64_t rout = n >= 1 ? bnd[n].rank() : 0;
    rep.dims[n] = space - rout - bnd[n + 1].rank();
  }
  if (with_representatives)
    for (int n = 0; n <= cap; ++n)
      rep.representatives[n] = representatives_at(g, bnd, n);
  return rep;
}

namespace {

// Sign of the unshuffle moving the positions in s to the front.
int unshuffle_sign(const std::vector<int>& positions, int n) {
  int inversions = 0;
  int seen = 0;  // members of s encountered so far
  std::size_t si = 0;
  for (int p = 0; p < n; ++p) {
    if (si < positions.size() && positions[si] == p) {
      ++seen;
      ++si;
    } else {
      inversions += static_cast<int>(positions.size()) - seen;
    }
  }
  // parity of pairs (t in complement, s in positions, t < s)... counted as
  // complement elements passed over by remaining s-members.
  return inversions % 2 == 0 ? 1 : -1;
}

struct TensorSquareLayout {
  // block offsets for (+)_{p+q=n} Lambda^p (x) Lambda^q
  std::vector<std::int64_t> offsets;
  std::int64_t total = 0;

  TensorSquareLayout(int dim, int n) {
    for (int p = 0; p <= n; ++p) {
      offsets.push_back(total);
      total += binomial(dim, p) * binomial(dim, n - p);
    }
  }
};

}  // namespace

std::vector<Rat> shuffle_coproduct(const FinDimLieAlgebra& g, int n,
                                   const std::vector<Rat>& chain,
                                   std::uint64_t budget) {
  const int d = g.dim();
  ExteriorBasis src(d, n, budget);
  if (static_cast<std::int64_t>(chain.size()) != src.size())
    throw std::invalid_argument("shuffle_coproduct: chain length mismatch");
  TensorSquareLayout layout(d, n);
  check_budget(n, static_cast<std::uint64_t>(layout.total), budget);
  std::vector<Rat> out(static_cast<std::size_t>(layout.total), Rat(0));
  std::vector<ExteriorBasis> bases;
  for (int p = 0; p <= n; ++p) bases.emplace_back(d, p, budget);

  std::vector<int> positions, left, right;
  for (std::int64_t ci = 0; ci < src.size(); ++ci) {
    if (chain[ci] == 0) continue;
    auto tup = src.tuple(ci);
    // iterate subsets of positions {0..n-1} by bitmask; n stays small
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      positions.clear();
      left.clear();
      right.clear();
      for (int p = 0; p < n; ++p) {
        if (mask & (1u << p)) {
          positions.push_back(p);
          left.push_back(tup[p]);
        } else {
          right.push_back(tup[p]);
        }
      }
      const int p = static_cast<int>(left.size());
      const int sign = unshuffle_sign(positions, n);
      std::int64_t row = layout.offsets[p] +
                         bases[p].index(left) * bases[n - p].size() +
                         bases[n - p].index(right);
      out[row] += sign > 0 ? chain[ci] : -chain[ci];
    }
  }
  return out;
}

namespace {

// Columns of the total boundary of the tensor-square complex from total
// degree n+1 to total degree n, as a RatMatrix. Differential on
// Lambda^p (x) Lambda^q is d (x) 1 + (-1)^p 1 (x) d.
RatMatrix tensor_square_boundary(const FinDimLieAlgebra& g,
                                 const std::vector<RatMatrix>& bnd, int n,
                                 std::uint64_t budget) {
  const int d = g.dim();
  TensorSquareLayout dst(d, n);
  TensorSquareLayout srcl(d, n + 1);
  check_budget(n + 1, static_cast<std::uint64_t>(srcl.total), budget);
  RatMatrix m(dst.total, srcl.total);
  for (int p = 0; p <= n + 1; ++p) {
    const int q = n + 1 - p;
    const std::int64_t bp = binomial(d, p);
    const std::int64_t bq = binomial(d, q);
    if (bp == 0 || bq == 0) continue;
    const std::int64_t col0 = srcl.offsets[p];
    RatMatrix dpT = p >= 1 ? bnd[p].transpose() : RatMatrix();
    RatMatrix dqT = q >= 1 ? bnd[q].transpose() : RatMatrix();
    for (std::int64_t i = 0; i < bp; ++i) {
      for (std::int64_t j = 0; j < bq; ++j) {
        const std::int64_t col = col0 + i * bq + j;
        if (p >= 1)
          for (const auto& [r, w] : dpT.row(i))
            m.add(dst.offsets[p - 1] + r * binomial(d, q) + j, col, w);
        if (q >= 1)
          for (const auto& [r, w] : dqT.row(j))
            m.add(dst.offsets[p] + i * binomial(d, q - 1) + r, col,
                  p % 2 == 0 ? w : -w);
      }
    }
  }
  return m;
}

}  // namespace

HomologyReport primitive_dims(const FinDimLieAlgebra& g, int cap,
                              std::uint64_t budget) {
  HomologyReport rep = lie_homology(g, cap, budget, true);
  auto bnd = ce_tower(g, cap + 2, budget);
  for (int n = 1; n <= cap; ++n) {
    const auto& reps = rep.representatives[n];
    const auto k = static_cast<std::int64_t>(reps.size());
    if (k == 0) {
      rep.prim_dims[n] = 0;
      continue;
    }
    if (n == 1) {
      // reduced coproduct vanishes identically on Lambda^1
      rep.prim_dims[n] = k;
      continue;
    }
    TensorSquareLayout layout(g.dim(), n);
    RatMatrix bmat = tensor_square_boundary(g, bnd, n, budget);
    // [z] primitive iff the reduced coproduct of z is a boundary in the
    // tensor square; solve for the subspace of H_n where that holds.
    RatMatrix system(layout.total, bmat.cols() + k);
    for (std::int64_t r = 0; r < bmat.rows(); ++r)
      for (const auto& [c, w] : bmat.row(r)) system.add(r, c, w);
    for (std::int64_t zi = 0; zi < k; ++zi) {
      auto cp = shuffle_coproduct(g, n, reps[zi], budget);
      // subtract z (x) 1 + 1 (x) z: blocks p = n and p = 0
      for (std::int64_t i = 0; i < binomial(g.dim(), n); ++i) {
        cp[layout.offsets[n] + i] -= reps[zi][i];
        cp[layout.offsets[0] + i] -= reps[zi][i];
      }
      for (std::int64_t r = 0; r < layout.total; ++r)
        if (cp[r] != 0) system.add(r, bmat.cols() + zi, cp[r]);
    }
    std::int64_t rank_b = bmat.rank();
    std::int64_t rank_full = system.rank();
    rep.prim_dims[n] = k - (rank_full - rank_b);
  }
  return rep;
}

std::int64_t primitive_dim(const FinDimLieAlgebra& g, int n, int cap,
                           std::uint64_t budget) {
  if (n > cap) throw std::invalid_argument("primitive_dim: n exceeds cap");
  return primitive_dims(g, cap, budget).prim_dims.at(n);
}

}  // namespace glhom
