#include <doctest.h>

#include <klbt/finite_model/finite_model.hpp>

#include <stdexcept>

using namespace klbt;
using namespace klbt::fm;

namespace {

Cyclotomic rat(long a, long b = 1) { return Cyclotomic(BigRational(a, b)); }

bool all_pass(const std::vector<FiniteCheck>& checks) {
  bool ok = true;
  for (const auto& c : checks) {
    CAPTURE(c.name);
    CHECK(c.pass);
    ok = ok && c.pass;
  }
  return ok;
}

}  // namespace

TEST_CASE("FiniteField: oracle tables") {
  const FiniteField F2(2), F3(3), F4(4), F8(8), F9(9);
  CHECK(F2.characteristic() == 2);
  CHECK(F4.characteristic() == 2);
  CHECK(F4.degree() == 2);
  CHECK(F9.characteristic() == 3);
  CHECK(F9.degree() == 2);
  // F_3: 2 * 2 = 1, -1 = 2, 2 generates.
  CHECK(F3.mul(2, 2) == 1);
  CHECK(F3.neg(1) == 2);
  CHECK(F3.generator() == 2);
  for (const FiniteField* F : {&F2, &F3, &F4, &F8, &F9}) {
    const std::uint32_t Q = F->size();
    for (std::uint32_t a = 0; a < Q; ++a) {
      CHECK(F->add(static_cast<Elem>(a), F->neg(static_cast<Elem>(a))) == 0);
      CHECK(F->trace(static_cast<Elem>(a)) < F->characteristic());
      if (a == 0) continue;
      CHECK(F->mul(static_cast<Elem>(a), F->inv(static_cast<Elem>(a))) == 1);
      CHECK(F->gen_power(F->log(static_cast<Elem>(a))) == a);
      for (std::uint32_t b = 0; b < Q; ++b)
        for (std::uint32_t c = 0; c < Q; ++c) {
          const auto ea = static_cast<Elem>(a), eb = static_cast<Elem>(b), ec = static_cast<Elem>(c);
          CHECK(F->mul(ea, F->add(eb, ec)) == F->add(F->mul(ea, eb), F->mul(ea, ec)));
        }
    }
    // The trace is additive and onto F_p: each value is taken Q/p times.
    std::vector<int> counts(F->characteristic(), 0);
    for (std::uint32_t a = 0; a < Q; ++a) ++counts[F->trace(static_cast<Elem>(a))];
    for (int c : counts) CHECK(c == static_cast<int>(Q / F->characteristic()));
  }
  CHECK_THROWS_AS(FiniteField(6), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField(32), std::invalid_argument);
  CHECK_THROWS_AS(F4.inv(0), MathError);
}

TEST_CASE("enumerate_X: sizes |G/U|") {
  CHECK(FiniteModel(1, 2, 1).size() == 3);
  CHECK(FiniteModel(1, 4, 1).size() == 15);
  CHECK(FiniteModel(1, 2, 2).size() == 15);
  CHECK(FiniteModel(2, 2, 1).size() == 21);
  CHECK(FiniteModel(1, 3, 1).size() == 8);
  CHECK(FiniteModel(2, 2, 1).group_order() == 168);
  CHECK(FiniteModel(1, 4, 1).group_order() == 60);
  CHECK_THROWS_AS(FiniteModel(2, 4, 1, 500), std::invalid_argument);  // 945 > ceiling
  CHECK_THROWS_AS(FiniteModel(1, 6, 1), std::invalid_argument);
  // Points are distinct cosets: x U contains point(x) and index_of is constant on it.
  const FiniteModel M(2, 2, 1);
  for (std::size_t x = 0; x < M.size(); ++x) {
    CHECK(M.index_of(M.point(x)) == x);
    CHECK(M.index_of(M.mul(M.point(x), M.x_simple(1, 1))) == x);
    CHECK(M.index_of(M.mul(M.point(x), M.x_simple(2, 1))) == x);
  }
}

TEST_CASE("op_ks on SL_2: symplectic Fourier transform oracle") {
  // For SL_2, X = F_Q^2 \ 0 via the first column, and
  // (op_ks)[x][y] = Q^{-1} psi(det(x, y)) for every pair of points.
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const FiniteModel M(1, q, 1);
    const auto& F = M.field();
    const SparseOperator K = op_ks(M, 1);
    for (std::size_t x = 0; x < M.size(); ++x)
      for (std::size_t y = 0; y < M.size(); ++y) {
        const auto &gx = M.point(x), &gy = M.point(y);
        const Elem det = F.sub(F.mul(gx(0, 0), gy(1, 0)), F.mul(gx(1, 0), gy(0, 0)));
        CHECK(K.entry(x, y) == rat(1, M.Q()) * M.psi(det));
      }
  }
}

TEST_CASE("SparseOperator: algebra") {
  const FiniteModel M(1, 4, 1);
  const SparseOperator I = SparseOperator::identity(M.size());
  const SparseOperator A = op_ks(M, 1), B = op_right_simple(M, 1), C = op_es(M, 1);
  CHECK((A * B) * C == A * (B * C));
  CHECK(A * (B + C) == A * B + A * C);
  CHECK(A * I == A);
  CHECK((A - A).is_zero());
  const FunctionOnX f = M.epsilon(M.characters()[1]);
  CHECK(B.apply(A.apply(f)) == (A * B).apply(f));
}

TEST_CASE("verify_main_identity: op_ks = L_s, op_es = E_s, braid on SL_3(F_2)") {
  for (auto [n, q, k] : std::vector<std::tuple<int, std::uint32_t, int>>{{1, 4, 1}, {1, 2, 2}, {2, 2, 1}, {1, 3, 1}}) {
    CAPTURE(n);
    CAPTURE(q);
    const FiniteModel M(n, q, k);
    const auto checks = verify_main_identity(M);
    CHECK(all_pass(checks));
    if (n == 2) {
      CHECK(checks[2].name == "op_ks_braid");
      CHECK(checks[2].instances == 1);
      CHECK(checks[3].instances == 1);  // two reduced words of w0
    }
  }
}

TEST_CASE("Yokonuma and Juyumaya relations as matrices") {
  for (auto [n, q] : std::vector<std::pair<int, std::uint32_t>>{{1, 4}, {2, 2}, {1, 3}, {1, 5}}) {
    const FiniteModel M(n, q, 1);
    CHECK(all_pass(yokonuma_relations(M)));
    CHECK(all_pass(juyumaya_relations(M)));
  }
}

TEST_CASE("structural checks: E_s, projection lemma, G-equivariance, E(v) at v^2 = 1/Q") {
  for (auto [n, q] : std::vector<std::pair<int, std::uint32_t>>{{1, 4}, {2, 2}, {1, 3}}) {
    const FiniteModel M(n, q, 1);
    CHECK(all_pass(structural_checks(M)));
  }
}

TEST_CASE("Case 1 / Case 2 values on every eps_theta") {
  const FiniteModel M(1, 4, 1);
  const auto cvs = case_values(M);
  REQUIRE(cvs.size() == 3);
  for (const auto& c : cvs) {
    CHECK(c.pass);
    if (c.theta.is_trivial()) {
      CHECK(c.in_w_circle);
      CHECK(c.cell_factor == rat(-1, 4));
    } else {
      CHECK_FALSE(c.in_w_circle);
    }
  }
  for (const auto& c : case_values(FiniteModel(2, 2, 1))) CHECK(c.pass);
  for (const auto& c : case_values(FiniteModel(1, 3, 1))) CHECK(c.pass);
}

TEST_CASE("delta_in_epsilon_span") {
  {
    const auto rep = delta_in_epsilon_span(FiniteModel(1, 2, 1));
    CHECK(rep.solved);
    REQUIRE(rep.coefficients.size() == 1);  // trivial torus: delta_1 = eps_triv
    CHECK(rep.coefficients[0].second == rat(1));
  }
  {
    const auto rep = delta_in_epsilon_span(FiniteModel(1, 4, 1));
    CHECK(rep.solved);
    CHECK(rep.uniform);
    REQUIRE(rep.coefficients.size() == 3);
    for (const auto& [th, c] : rep.coefficients) CHECK(c == rat(1, 3));
  }
  CHECK(delta_in_epsilon_span(FiniteModel(2, 2, 1)).solved);
  CHECK(delta_in_epsilon_span(FiniteModel(1, 5, 1)).uniform);
}

TEST_CASE("normalization: e_s -> E_s/(Q-1) and v^2 = 1/Q") {
  const auto table = normalization_table(FiniteModel(1, 4, 1));
  auto holds = [&](const std::string& rel, const std::string& e, const std::string& v2) {
    for (const auto& t : table)
      if (t.relation == rel && t.e_image == e && t.v2 == v2) return t.holds;
    FAIL("missing entry");
    return false;
  };
  CHECK_FALSE(holds("tie_idempotent", "E_s", "any"));
  CHECK(holds("tie_idempotent", "E_s/(Q-1)", "any"));
  CHECK(holds("quadratic", "E_s/(Q-1)", "1/Q"));
  CHECK_FALSE(holds("quadratic", "E_s/(Q-1)", "Q"));
  CHECK_FALSE(holds("quadratic", "E_s", "1/Q"));
  CHECK(holds("cubic", "any", "1/Q"));
  CHECK_FALSE(holds("cubic", "any", "Q"));
}

TEST_CASE("verify_finite_model: acceptance configurations") {
  for (auto [n, q, k] : std::vector<std::tuple<int, std::uint32_t, int>>{{1, 4, 1}, {2, 2, 1}}) {
    const auto rep = verify_finite_model(FiniteModel(n, q, k));
    CHECK(rep.pass());
  }
}

TEST_CASE("monodromic_crosscheck at Q = 4, v = 2") {
  for (int n = 1; n <= 2; ++n) {
    const auto rep = monodromic_crosscheck(FiniteModel(n, 4, 1));
    CHECK(rep.pass);
    CHECK(rep.entries.size() == static_cast<std::size_t>(n == 1 ? 3 : 18));
    for (const auto& e : rep.entries) {
      CAPTURE(e.theta.str());
      CHECK(e.pass);
      if (e.in_w_circle) {
        CHECK(e.scale == rat(-1, 4));  // Case-1 constants: Phi(A_s - 3) = -4 op_ks(eps)
        CHECK(e.gauss == rat(-1));
      } else {
        CHECK(e.gauss * e.gauss.conj() == rat(4));  // |Gauss sum|^2 = Q
      }
    }
  }
  CHECK_THROWS_AS(monodromic_crosscheck(FiniteModel(2, 2, 1)), std::invalid_argument);
}

TEST_CASE("KL lift descent dependence seen on C[X]") {
  // Trivial torus: only the trivial sector, where the two lifts of c_{w0} agree.
  CHECK(kl_descent_witness(FiniteModel(2, 2, 1)).zero);
  // Q = 4 has sectors with W° generated by one simple reflection: the lifts differ.
  CHECK_FALSE(kl_descent_witness(FiniteModel(2, 4, 1)).zero);
}
