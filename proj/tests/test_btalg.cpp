#include <doctest.h>

#include <klbt/btalg/model.hpp>

using namespace klbt;

TEST_CASE("BTModel: basis size is (n+1)! Bell(n+1)") {
  CHECK(BTModel(1).dim() == 4);
  CHECK(BTModel(2).dim() == 30);
  CHECK(BTModel(3).dim() == 360);
}

TEST_CASE("bt_mul: oracles") {
  BTModel M(2);
  const auto v2 = RationalFunction::v(2);
  for (int s = 1; s <= 2; ++s)
    CHECK(M.mul(M.g(s), M.g(s)) == M.one() + M.e(s) * (v2 - 1) + M.mul(M.e(s), M.g(s)) * (v2 - 1));
  // g_1 e_(23) = e_(13) g_1
  CHECK(M.mul(M.g(1), M.e_part(M.reflection_part(2, 3))) == M.mul(M.e_part(M.reflection_part(1, 3)), M.g(1)));
  // e_(12) e_(23) = e_{123}
  CHECK(M.mul(M.e(1), M.e(2)) == M.e_part(M.part_index(SetPartition::from_blocks(3, {{1, 2, 3}}))));
}

TEST_CASE("verify_presentation: n = 1, 2, 3") {
  for (int n = 1; n <= 3; ++n) {
    BTModel M(n);
    for (const auto& r : verify_presentation(M, 42, n == 3 ? 10 : 30)) {
      INFO("n=" << n << " relation " << r.name);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("g_inverse: 4-dimensional solve in the n = 1 algebra") {
  BTModel M(1);
  // Basis {1, e, g, e g}: g_s^{-1} has coefficients (0, v^-2 - 1, 1, v^-2 - 1).
  const auto gi = M.g_inverse(1);
  CHECK(gi.coeff(M.index(M.discrete_part(), 1)) == RationalFunction(1));
  CHECK(gi.coeff(M.index(M.simple_part(1), 0)) == RationalFunction(LaurentPoly::v(-2) - 1));
  CHECK(gi.coeff(M.index(M.simple_part(1), 1)) == RationalFunction(LaurentPoly::v(-2) - 1));
  CHECK(gi.coeff(M.index(M.discrete_part(), 0)).is_zero());
}
