#include <doctest.h>

#include <klbt/scalars/cyclotomic.hpp>
#include <klbt/scalars/laurent.hpp>
#include <klbt/scalars/ratfunc.hpp>

#include <random>

using namespace klbt;

namespace {

LaurentPoly random_laurent(std::mt19937_64& rng, int span = 3) {
  std::uniform_int_distribution<int> c(-3, 3), lo(-span, span), len(0, 3);
  const int low = lo(rng);
  std::vector<BigRational> coeffs;
  for (int i = 0, n = len(rng); i < n; ++i) coeffs.emplace_back(c(rng));
  return LaurentPoly::from_dense(low, std::move(coeffs));
}

RationalFunction random_rf(std::mt19937_64& rng) {
  LaurentPoly den;
  while (den.is_zero()) den = random_laurent(rng, 1);
  return RationalFunction(random_laurent(rng), den);
}

}  // namespace

TEST_CASE("LaurentPoly: arithmetic oracles") {
  const LaurentPoly v = LaurentPoly::v();
  const LaurentPoly vi = LaurentPoly::v(-1);
  CHECK((v * vi).is_one());
  CHECK((v + vi).bar() == v + vi);
  CHECK(((v - 1) * (v + 1)) == LaurentPoly::v(2) - 1);
  CHECK((v - v).is_zero());
  CHECK(LaurentPoly::v(-2).evaluate(BigRational(2)) == BigRational(1, 4));
  CHECK_THROWS_AS(vi.evaluate(BigRational(0)), MathError);
  CHECK((LaurentPoly::v(3) * BigRational(2)).str() == "2*v^3");
  CHECK((v * v - 1).str() == "v^2 - 1");
  CHECK(LaurentPoly::from_dense(-2, {0, 0, 5, 0}).low_degree() == 0);
}

TEST_CASE("LaurentPoly: ring axioms and bar homomorphism (property)") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 300; ++it) {
    auto a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK(a.bar().bar() == a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("RationalFunction: canonical form") {
  const RationalFunction v = RationalFunction::v();
  RationalFunction r(LaurentPoly::v(2) - 1, LaurentPoly::v() - 1);
  CHECK(r.is_laurent());
  CHECK(r == v + 1);
  RationalFunction s(LaurentPoly(2), LaurentPoly::v(3) * BigRational(4) + LaurentPoly::v(2) * BigRational(2));
  // 2 / (4 v^3 + 2 v^2) = (1/2) v^-2 / (v + 1/2)
  CHECK(s.den() == LaurentPoly::v() + BigRational(1, 2));
  CHECK(s.num() == LaurentPoly::monomial(BigRational(1, 2), -2));
  CHECK((s * s.inverse()).is_one());
  CHECK_THROWS_AS(RationalFunction(0).inverse(), MathError);
  CHECK_THROWS_AS(RationalFunction(LaurentPoly(1), LaurentPoly()), MathError);
  CHECK_THROWS_AS(s.specialize(BigRational(-1, 2)), MathError);
  CHECK(s.specialize(BigRational(1)) == BigRational(1, 3));
  CHECK((v / (v + 1)).bar() == RationalFunction(1) / (v + 1));
}

TEST_CASE("RationalFunction: field axioms, bar and specialization (property)") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    auto a = random_rf(rng), b = random_rf(rng), c = random_rf(rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) - b == a);
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK((a + b).bar() == a.bar() + b.bar());
    CHECK(a.bar().bar() == a);
    const BigRational x(7, 3);
    try {
      CHECK((a * b).specialize(x) == a.specialize(x) * b.specialize(x));
    } catch (const MathError&) {
      // random denominators may vanish at x; nothing to compare
    }
  }
}

TEST_CASE("Cyclotomic: polynomials and field arithmetic") {
  CHECK(cyclotomic_polynomial(1) == polyq::Poly{-1, 1});
  CHECK(cyclotomic_polynomial(12) == polyq::Poly{1, 0, -1, 0, 1});
  CHECK(polyq::degree(cyclotomic_polynomial(15)) == 8);
  auto f = CyclotomicField::get(15);
  CHECK(f->degree == 8);
  auto z = Cyclotomic::zeta_power(f, 1);
  Cyclotomic p = 1;
  for (int i = 0; i < 15; ++i) p *= z;
  CHECK(p == Cyclotomic(1));
  CHECK(z.conj() * z == Cyclotomic(1));
  CHECK(z.inverse() == Cyclotomic::zeta_power(f, -1));
  // 1 + zeta_3 + zeta_3^2 = 0 inside Q(zeta_15)
  CHECK((Cyclotomic(1) + Cyclotomic::zeta_power(f, 5) + Cyclotomic::zeta_power(f, 10)).is_zero());
  // sum of all 15th roots of unity vanishes
  Cyclotomic s = 0;
  for (int k = 0; k < 15; ++k) s += Cyclotomic::zeta_power(f, k);
  CHECK(s.is_zero());
  CHECK_THROWS_AS(Cyclotomic(f, 0).inverse(), MathError);
}

TEST_CASE("Cyclotomic: quadratic Gauss sum over F_5 has norm 5") {
  auto f = CyclotomicField::get(5);
  Cyclotomic g = 0;
  for (int x = 0; x < 5; ++x) g += Cyclotomic::zeta_power(f, x * x);
  CHECK(g * g.conj() == Cyclotomic(5));
  CHECK(g * g == Cyclotomic(5));  // 5 = 1 mod 4
}

TEST_CASE("Cyclotomic: inverse and conjugation (property)") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int N : {3, 4, 6, 15, 21}) {
    auto f = CyclotomicField::get(N);
    for (int it = 0; it < 40; ++it) {
      Cyclotomic a(f, 0), b(f, 0);
      for (int k = 0; k < N; ++k) {
        a += Cyclotomic::zeta_power(f, k) * Cyclotomic(c(rng));
        b += Cyclotomic::zeta_power(f, k) * Cyclotomic(c(rng));
      }
      CHECK((a * b).conj() == a.conj() * b.conj());
      CHECK(a.conj().conj() == a);
      if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(1));
    }
  }
}
