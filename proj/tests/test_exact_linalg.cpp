#include <doctest.h>


#include <random>

#include "dense_oracle.hpp"
#include "glhom/sparse_matrix.hpp"

using namespace glhom;

namespace {

RatMatrix random_matrix(std::mt19937_64& rng, std::int64_t rows,
                        std::int64_t cols) {
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> keep(0, 2);
  RatMatrix m(rows, cols);
  for (std::int64_t r = 0; r < rows; ++r)
    for (std::int64_t c = 0; c < cols; ++c)
      if (keep(rng) == 0) m.set(r, c, Rat(entry(rng)));
  return m;
}

}  // namespace

TEST_CASE("rank matches dense elimination on random matrices") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> dim(1, 14);
  for (int i = 0; i < 40; ++i) {
    auto m = random_matrix(rng, dim(rng), dim(rng));
    CHECK(m.rank() == oracle::dense_rank(m));
  }
}

TEST_CASE("kernel basis spans the exact null space") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::int64_t> dim(1, 12);
  for (int i = 0; i < 30; ++i) {
    auto m = random_matrix(rng, dim(rng), dim(rng));
    auto ker = m.kernel_basis();
    CHECK(static_cast<std::int64_t>(ker.size()) == m.cols() - m.rank());
    SpanBuilder span(static_cast<std::size_t>(m.cols()));
    for (const auto& v : ker) {
      for (const auto& y : m.apply(v)) CHECK(y == 0);
      CHECK(span.insert(v));
    }
  }
}

TEST_CASE("product, transpose and apply agree with direct computation") {
  std::mt19937_64 rng(13);
  auto a = random_matrix(rng, 7, 5);
  auto b = random_matrix(rng, 5, 6);
  auto ab = a * b;
  REQUIRE(ab.rows() == 7);
  REQUIRE(ab.cols() == 6);
  for (std::int64_t r = 0; r < 7; ++r)
    for (std::int64_t c = 0; c < 6; ++c) {
      Rat s(0);
      for (std::int64_t k = 0; k < 5; ++k) s += a.get(r, k) * b.get(k, c);
      CHECK(ab.get(r, c) == s);
    }
  auto at = a.transpose();
  for (std::int64_t r = 0; r < 7; ++r)
    for (std::int64_t c = 0; c < 5; ++c) CHECK(at.get(c, r) == a.get(r, c));
  std::vector<Rat> v{Rat(1), Rat(-2), Rat(3, 2), Rat(0), Rat(5)};
  auto av = a.apply(v);
  for (std::int64_t r = 0; r < 7; ++r) {
    Rat s(0);
    for (std::int64_t k = 0; k < 5; ++k)
      s += a.get(r, k) * v[static_cast<std::size_t>(k)];
    CHECK(av[static_cast<std::size_t>(r)] == s);
  }
}

TEST_CASE("homology_dim validates shapes and exactness of the composite") {
  RatMatrix d_out(2, 3), d_in(3, 4);
  d_out.set(0, 0, Rat(1));
  d_in.set(1, 0, Rat(1));  // d_out * d_in = 0 here
  CHECK(homology_dim(d_out, d_in) == 1);  // ker dim 2, rank d_in 1

  RatMatrix bad_shape(5, 4);
  CHECK_THROWS_AS(homology_dim(d_out, bad_shape), std::invalid_argument);

  RatMatrix leak(3, 4);
  leak.set(0, 0, Rat(1));  // lands on the pivot column of d_out
  CHECK_THROWS_AS(homology_dim(d_out, leak), std::invalid_argument);
}

TEST_CASE("SpanBuilder membership and canonical reduction") {
  SpanBuilder span(3);
  CHECK(span.insert({Rat(1), Rat(2), Rat(0)}));
  CHECK(span.insert({Rat(0), Rat(1), Rat(1)}));
  CHECK_FALSE(span.insert({Rat(1), Rat(3), Rat(1)}));
  CHECK(span.rank() == 2);
  CHECK(span.contains({Rat(2), Rat(5), Rat(1)}));
  CHECK_FALSE(span.contains({Rat(0), Rat(0), Rat(1)}));
  auto r1 = span.reduce({Rat(1), Rat(3), Rat(1)});
  for (const auto& x : r1) CHECK(x == 0);
  // residues are canonical: congruent vectors reduce identically
  auto r2 = span.reduce({Rat(0), Rat(0), Rat(7)});
  auto r3 = span.reduce({Rat(1), Rat(2), Rat(7)});
  CHECK(r2 == r3);
  CHECK(in_span({Rat(2), Rat(4), Rat(0)}, {{Rat(1), Rat(2), Rat(0)}}));
  CHECK_FALSE(in_span({Rat(2), Rat(4), Rat(1)}, {{Rat(1), Rat(2), Rat(0)}}));
}
