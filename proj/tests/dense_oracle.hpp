#pragma once

// Test-only reference implementations. Everything here is dense and naive
// on purpose: an independent path the sparse production code is checked
// against.

#include <cstdint>
#include <vector>

#include "glhom/algebra.hpp"
#include "glhom/rational.hpp"
#include "glhom/sparse_matrix.hpp"

namespace glhom::oracle {

using Dense = std::vector<std::vector<Rat>>;

inline Dense to_dense(const RatMatrix& m) {
  Dense d(static_cast<std::size_t>(m.rows()),
          std::vector<Rat>(static_cast<std::size_t>(m.cols()), Rat(0)));
  for (std::int64_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r))
      d[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
  return d;
}

// Plain dense Gaussian elimination rank.
inline std::int64_t dense_rank(Dense m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::int64_t rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[row]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rat f = m[r][col] / m[row][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

inline std::int64_t dense_rank(const RatMatrix& m) {
  return dense_rank(to_dense(m));
}

// Dense Hochschild boundary on A^{(n+1)} built straight from the face
// definition, one basis tensor at a time.
inline Dense dense_hochschild_boundary(const FinDimAlgebra& a, int n) {
  const int d = a.dim();
  std::size_t dom = 1, cod = 1;
  for (int i = 0; i <= n; ++i) dom *= static_cast<std::size_t>(d);
  for (int i = 0; i < n; ++i) cod *= static_cast<std::size_t>(d);
  Dense out(cod, std::vector<Rat>(dom, Rat(0)));
  std::vector<int> idx(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t col = 0; col < dom; ++col) {
    std::size_t rest = col;
    for (int i = n; i >= 0; --i) {
      idx[static_cast<std::size_t>(i)] = static_cast<int>(rest % d);
      rest /= static_cast<std::size_t>(d);
    }
    for (int face = 0; face <= n; ++face) {
      const Rat sign = (face % 2 == 0) ? Rat(1) : Rat(-1);
      const int left = (face == n) ? idx[static_cast<std::size_t>(n)] : idx[static_cast<std::size_t>(face)];
      const int right = (face == n) ? idx[0] : idx[static_cast<std::size_t>(face + 1)];
      for (const auto& [k, c] : a.product(left, right)) {
        // d_i glues slots i, i+1; d_n wraps and puts a_n a_0 in slot 0
        std::vector<int> t;
        if (face == n) {
          t.push_back(k);
          for (int i = 1; i < n; ++i) t.push_back(idx[static_cast<std::size_t>(i)]);
        } else {
          for (int i = 0; i <= n; ++i) {
            if (i == face + 1) continue;
            t.push_back(i == face ? k : idx[static_cast<std::size_t>(i)]);
          }
        }
        std::size_t row = 0;
        for (int e : t) row = row * static_cast<std::size_t>(d) + static_cast<std::size_t>(e);
        out[row][col] += sign * c;
      }
    }
  }
  return out;
}

// Dense Chevalley-Eilenberg boundary, straight from the defining sum.
inline Dense dense_ce_boundary(const FinDimLieAlgebra& g,
                               const std::vector<std::vector<int>>& dom_tuples,
                               const std::vector<std::vector<int>>& cod_tuples) {
  Dense out(cod_tuples.size(), std::vector<Rat>(dom_tuples.size(), Rat(0)));
  auto cod_index = [&](std::vector<int> t, Rat sign, std::size_t col) {
    // insertion sort with sign tracking; repeated entries kill the term
    for (std::size_t i = 1; i < t.size(); ++i)
      for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
        if (t[j - 1] == t[j]) return;
        std::swap(t[j - 1], t[j]);
        sign = -sign;
      }
    for (std::size_t r = 0; r < cod_tuples.size(); ++r)
      if (cod_tuples[r] == t) {
        out[r][col] += sign;
        return;
      }
  };
  for (std::size_t col = 0; col < dom_tuples.size(); ++col) {
    const auto& t = dom_tuples[col];
    const int n = static_cast<int>(t.size());
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        // 1-based sign (-1)^{(i+1)+(j+1)}
        Rat sign = ((i + j) % 2 == 0) ? Rat(1) : Rat(-1);
        std::vector<int> rest;
        for (int k = 0; k < n; ++k)
          if (k != i && k != j) rest.push_back(t[static_cast<std::size_t>(k)]);
        for (const auto& [b, c] :
             g.bracket(t[static_cast<std::size_t>(i)],
                       t[static_cast<std::size_t>(j)])) {
          std::vector<int> full;
          full.push_back(b);
          full.insert(full.end(), rest.begin(), rest.end());
          cod_index(std::move(full), sign * c, col);
        }
      }
    }
  }
  return out;
}

}  // namespace glhom::oracle
