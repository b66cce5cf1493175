#include <doctest.h>

#include <klbt/hecke/hecke.hpp>

#include <random>

using namespace klbt;

namespace {

HeckeElement A(const Permutation& w) { return HeckeElement::basis(w); }
const LaurentPoly v = LaurentPoly::v();

}  // namespace

TEST_CASE("Hecke: quadratic, unit and braid relations") {
  for (int m : {3, 4}) {
    const auto e = Permutation::identity(m);
    for (int i = 1; i < m; ++i) {
      const auto s = Permutation::simple(m, i);
      CHECK(hecke_mul(A(s), A(s)) == A(s) * (v * v - 1) + A(e) * (v * v));
      CHECK(hecke_mul(A(e), A(s)) == A(s));
      for (int j = 1; j < m; ++j) {
        const auto t = Permutation::simple(m, j);
        auto st = hecke_mul(A(s), A(t)), ts = hecke_mul(A(t), A(s));
        if (std::abs(i - j) == 1)
          CHECK(hecke_mul(st, A(s)) == hecke_mul(ts, A(t)));
        else
          CHECK(st == ts);
      }
    }
  }
  const auto s1 = Permutation::simple(3, 1), s2 = Permutation::simple(3, 2);
  CHECK(hecke_mul(hecke_mul(A(s1), A(s2)), A(s1)) == A(s1 * s2 * s1));
}

TEST_CASE("Hecke: tilde inverses") {
  const auto s = Permutation::simple(3, 1);
  const auto e = Permutation::identity(3);
  CHECK(tilde_inverse(s) == tilde_basis(s) + A(e) * (LaurentPoly::v(-1) - v));
  for (const auto& w : all_permutations(3)) CHECK(hecke_mul(tilde_basis(w), tilde_inverse(w)) == A(e));
  CHECK(tilde_inverse(e) == A(e));
}

TEST_CASE("Hecke: bar involution") {
  const auto e = Permutation::identity(3);
  const auto s = Permutation::simple(3, 1);
  CHECK(bar_involution(A(e)) == A(e));
  const HeckeElement As_inv = A(s) * LaurentPoly::v(-2) - A(e) * (1 - LaurentPoly::v(-2));
  CHECK(bar_involution(A(s)) == As_inv);
  CHECK(hecke_mul(A(s), As_inv) == A(e));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-2, 2), ex(-3, 3);
  auto all = all_permutations(3);
  for (int it = 0; it < 50; ++it) {
    HeckeElement x(3), y(3);
    for (const auto& w : all) {
      x.add_term(w, LaurentPoly::monomial(c(rng), ex(rng)));
      y.add_term(w, LaurentPoly::monomial(c(rng), ex(rng)));
    }
    CHECK(bar_involution(bar_involution(x)) == x);
    CHECK(bar_involution(hecke_mul(x, y)) == hecke_mul(bar_involution(x), bar_involution(y)));
  }
}

TEST_CASE("KL polynomials: S_3 trivial, S_4 recursion agrees with bar-invariance oracle") {
  auto kl3 = KLTable::compute(3);
  for (const auto& w : kl3.elements())
    for (const auto& x : kl3.elements()) {
      if (bruhat_leq(x, w))
        CHECK(kl3.P(x, w).is_one());
      else
        CHECK(kl3.P(x, w).is_zero());
    }
  auto kl4 = KLTable::compute(4);
  const auto s2 = Permutation::simple(4, 2);
  const auto w = Permutation::from_word(4, {2, 1, 3, 2});
  CHECK(kl4.P(s2, w) == LaurentPoly(1) + LaurentPoly::v(1));  // 1 + q
  for (const auto& y : kl4.elements()) {
    auto oracle = kl_by_bar_invariance(y);
    for (const auto& x : kl4.elements()) {
      auto it = oracle.find(x);
      CHECK(kl4.P(x, y) == (it == oracle.end() ? LaurentPoly() : it->second));
      const int d = y.length() - x.length();
      if (x != y && !kl4.P(x, y).is_zero()) CHECK(2 * kl4.P(x, y).high_degree() <= d - 1);
    }
  }
}

TEST_CASE("Canonical basis: C_e, C_s, bar-invariance on S_4") {
  auto kl = KLTable::compute(4);
  const auto e = Permutation::identity(4);
  CHECK(canonical_basis(kl, e) == A(e));
  const auto s = Permutation::simple(4, 1);
  CHECK(canonical_basis(kl, s) == tilde_basis(s) - A(e) * v);
  for (const auto& w : kl.elements()) {
    auto C = canonical_basis(kl, w);
    CHECK(bar_involution(C) == C);
    CHECK(C.coeff(w) == LaurentPoly::v(-w.length()));
  }
}

TEST_CASE("c_expansion: integrality on S_3 and S_4") {
  auto kl3 = KLTable::compute(3);
  const auto e = Permutation::identity(3);
  CHECK(c_expansion(kl3, 1, e).empty());
  CHECK(c_expansion(kl3, 1, Permutation::simple(3, 2)).empty());
  auto r = c_expansion(kl3, 1, Permutation::from_word(3, {2, 1}));
  REQUIRE(r.size() == 1);
  CHECK(r[0].first == Permutation::simple(3, 1));
  CHECK(r[0].second == 1);
  auto kl4 = KLTable::compute(4);
  int checked = 0;
  for (const auto& u : kl4.elements())
    for (int s = 1; s < 4; ++s)
      if (!u.is_left_descent(s)) {
        CHECK_NOTHROW(c_expansion(kl4, s, u));
        ++checked;
      }
  CHECK(checked == 36);
  CHECK_THROWS(c_expansion(kl4, 1, Permutation::simple(4, 1)));
}

TEST_CASE("verify_hecke: every check passes on S_2 .. S_5") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& c : verify_hecke(n)) {
      CAPTURE(n);
      CAPTURE(c.name);
      CHECK(c.pass);
      if (n >= 2) CHECK(c.instances > 0);
    }
  CHECK_THROWS(verify_hecke(5));
}
