#include <doctest.h>

#include <json.hpp>

#include "glhom/algebra.hpp"
#include "glhom/json_io.hpp"

using namespace glhom;

TEST_CASE("builtin algebras multiply correctly") {
  auto q = FinDimAlgebra::base_field();
  CHECK(q.dim() == 1);
  CHECK(q.mul({Rat(2, 3)}, {Rat(3, 4)}) == std::vector<Rat>{Rat(1, 2)});

  auto dual = FinDimAlgebra::dual_numbers();
  // (a + b eps)(c + d eps) = ac + (ad + bc) eps
  CHECK(dual.mul({Rat(1), Rat(2)}, {Rat(3), Rat(4)}) ==
        std::vector<Rat>{Rat(3), Rat(10)});
  CHECK(alg_mul(alg_basis(dual, 1), alg_basis(dual, 1)).is_zero());
  CHECK(dual.is_commutative());

  auto trunc = FinDimAlgebra::truncated_poly(3);
  CHECK(alg_mul(alg_basis(trunc, 1), alg_basis(trunc, 1)) ==
        alg_basis(trunc, 2));
  CHECK(alg_mul(alg_basis(trunc, 2), alg_basis(trunc, 1)).is_zero());

  auto z2 = FinDimAlgebra::group_algebra_cyclic(2);
  CHECK(alg_mul(alg_basis(z2, 1), alg_basis(z2, 1)) == alg_unit(z2));

  auto m2 = FinDimAlgebra::matrix_algebra(FinDimAlgebra::base_field(), 2);
  CHECK(m2.dim() == 4);
  CHECK_FALSE(m2.is_commutative());
  // basis order (0,0),(0,1),(1,0),(1,1): e01 e10 = e00, e01 e01 = 0
  CHECK(alg_mul(alg_basis(m2, 1), alg_basis(m2, 2)) == alg_basis(m2, 0));
  CHECK(alg_mul(alg_basis(m2, 1), alg_basis(m2, 1)).is_zero());
  for (int i = 0; i < 4; ++i) {
    CHECK(alg_mul(alg_unit(m2), alg_basis(m2, i)) == alg_basis(m2, i));
    CHECK(alg_mul(alg_basis(m2, i), alg_unit(m2)) == alg_basis(m2, i));
  }
}

TEST_CASE("matrix algebra over a nontrivial coefficient ring") {
  auto m2d =
      FinDimAlgebra::matrix_algebra(FinDimAlgebra::dual_numbers(), 2);
  CHECK(m2d.dim() == 8);
  // (eps e01)(e10) = eps e00; basis index (r*2+c)*2+k
  auto eps01 = alg_basis(m2d, (0 * 2 + 1) * 2 + 1);
  auto one10 = alg_basis(m2d, (1 * 2 + 0) * 2 + 0);
  CHECK(alg_mul(eps01, one10) == alg_basis(m2d, (0 * 2 + 0) * 2 + 1));
  CHECK(alg_mul(eps01, eps01).is_zero());
}

TEST_CASE("structure table validation rejects broken algebras") {
  // dual-number table but the claimed unit is eps: unit law fails
  std::vector<ProductRow> t(4);
  t[0] = {{0, Rat(1)}};
  t[1] = {{1, Rat(1)}};
  t[2] = {{1, Rat(1)}};
  t[3] = {};
  CHECK_THROWS_AS(FinDimAlgebra(2, t, {Rat(0), Rat(1)}, "bad unit"),
                  std::invalid_argument);

  // nonassociative: e1 e1 = e1 but e1 e0 = 0 while e0 is the unit
  std::vector<ProductRow> t2(4);
  t2[0] = {{0, Rat(1)}};
  t2[1] = {{1, Rat(1)}};
  t2[2] = {};
  t2[3] = {{1, Rat(1)}};
  CHECK_THROWS_AS(FinDimAlgebra(2, t2, {Rat(1), Rat(0)}, "bad table"),
                  std::invalid_argument);
}

TEST_CASE("lie_of produces the commutator bracket") {
  auto m2 = FinDimAlgebra::matrix_algebra(FinDimAlgebra::base_field(), 2);
  auto gl2 = lie_of(m2);
  CHECK(gl2.dim() == 4);
  // [e00, e01] = e01, [e01, e10] = e00 - e11
  auto b = gl2.apply_bracket({Rat(1), Rat(0), Rat(0), Rat(0)},
                             {Rat(0), Rat(1), Rat(0), Rat(0)});
  CHECK(b == std::vector<Rat>{Rat(0), Rat(1), Rat(0), Rat(0)});
  b = gl2.apply_bracket({Rat(0), Rat(1), Rat(0), Rat(0)},
                        {Rat(0), Rat(0), Rat(1), Rat(0)});
  CHECK(b == std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(-1)});

  // abelian when the algebra is commutative
  auto l = lie_of(FinDimAlgebra::dual_numbers());
  CHECK(l.apply_bracket({Rat(1), Rat(2)}, {Rat(3), Rat(4)}) ==
        std::vector<Rat>{Rat(0), Rat(0)});
}

TEST_CASE("element arithmetic guards against parent mixing") {
  auto q = FinDimAlgebra::base_field();
  auto dual = FinDimAlgebra::dual_numbers();
  CHECK_THROWS_AS(alg_add(alg_unit(q), alg_unit(dual)),
                  std::invalid_argument);
}

TEST_CASE("algebra JSON round trip is the identity") {
  for (const auto& a :
       {FinDimAlgebra::dual_numbers(),
        FinDimAlgebra::matrix_algebra(FinDimAlgebra::base_field(), 2),
        FinDimAlgebra::group_algebra_cyclic(3)}) {
    auto j = algebra_to_json(a);
    auto back = algebra_from_json(j);
    CHECK(back.dim() == a.dim());
    CHECK(back.label() == a.label());
    CHECK(back.unit() == a.unit());
    for (int i = 0; i < a.dim(); ++i)
      for (int k = 0; k < a.dim(); ++k)
        CHECK(back.product(i, k) == a.product(i, k));
    CHECK(algebra_to_json(back) == j);
  }
}

TEST_CASE("ring_from_json accepts builtin labels") {
  CHECK(ring_from_json(nlohmann::json("Q")).dim() == 1);
  CHECK(ring_from_json(nlohmann::json("Q[eps]/(eps^2)")).dim() == 2);
  CHECK(ring_from_json(nlohmann::json("Q[Z/4]")).dim() == 4);
  CHECK(ring_from_json(nlohmann::json("Q[x]/(x^3)")).dim() == 3);
  CHECK_THROWS_AS(ring_from_json(nlohmann::json("Z")), std::invalid_argument);
}
