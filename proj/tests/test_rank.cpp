#include <doctest.h>

#include <klbt/btalg/rank.hpp>
#include <klbt/coxeter/dimension.hpp>

using namespace klbt;

namespace {
Partition lambda_of(const SetPartition& R) {
  Partition lam;
  for (int b : R.nonsingleton_type()) lam.push_back(b - 1);
  return lam;
}
}  // namespace

TEST_CASE("c_dimension: exact mode matches the known values and the formula") {
  const std::uint64_t expected[] = {1, 3, 20, 217};
  for (int n = 0; n <= 3; ++n) {
    const auto r = c_dimension(n, RankMode::Exact);
    CHECK(r.dimension == expected[n]);
    CHECK(BigInt(static_cast<unsigned long>(r.dimension)) == dim_C(n, DimMode::SubsetEnumeration));
  }
  CHECK_THROWS_AS(c_dimension(4, RankMode::Exact), std::invalid_argument);
}

TEST_CASE("c_dimension: specialized mode agrees with exact mode for n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    const auto e = c_dimension(n, RankMode::Exact);
    const auto s = c_dimension(n, RankMode::Specialized, 7, 4);
    CHECK(s.points.size() == 4);
    CHECK(s.points_agree);
    CHECK(s.dimension == e.dimension);
  }
  CHECK_THROWS_AS(c_dimension(2, RankMode::Specialized, 1, 2), std::invalid_argument);
}

TEST_CASE("c_dimension: results do not depend on the kernel or thread count") {
  BTModel M(3);
  const std::uint32_t vp = modp::from_rational(BigRational(3, 7));
  const std::uint32_t k = modp::sub(modp::mul(vp, vp), 1);
  for (const auto* kern : modp::available_kernels()) CHECK(closure_rank_modp(M, k, *kern) == 217);
  const auto a = c_dimension(3, RankMode::Specialized, 11, 3, 1);
  const auto b = c_dimension(3, RankMode::Specialized, 11, 3, 3);
  REQUIRE(a.points.size() == b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    CHECK(a.points[i].v0 == b.points[i].v0);
    CHECK(a.points[i].rank == b.points[i].rank);
  }
}

TEST_CASE("specialization_points: deterministic, bounded, off the denylist") {
  const auto p = specialization_points(42, 10);
  CHECK(p == specialization_points(42, 10));
  CHECK(p != specialization_points(43, 10));
  for (std::size_t i = 0; i < p.size(); ++i) {
    CHECK(p[i] != 0);
    CHECK(p[i] * p[i] != 1);
    CHECK(abs(p[i].get_num()) <= 100);
    CHECK(p[i].get_den() <= 100);
    for (std::size_t j = 0; j < i; ++j) CHECK(p[i] * p[i] != p[j] * p[j]);
  }
}

TEST_CASE("jr_span: oracle dimensions") {
  for (int n = 1; n <= 3; ++n) {
    BTModel M(n);
    CHECK(jr_span(M, SetPartition::discrete(n + 1)).rank == static_cast<std::size_t>(factorial(n + 1).get_ui()));
  }
  BTModel M2(2);
  CHECK(jr_span(M2, SetPartition::from_blocks(3, {{1, 2}, {3}})).rank == 3);
}

TEST_CASE("jr_span: dim J_R e_R = D_I for every R, n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    BTModel M(n);
    for (std::size_t p = 0; p < M.num_parts(); ++p) {
      const auto sb = jr_span(M, M.part(p));
      CHECK(sb.vectors.size() == sb.rank);
      CHECK(BigInt(static_cast<unsigned long>(sb.rank)) == d_product(n, lambda_of(M.part(p))));
    }
  }
}

TEST_CASE("jr_decomposition: direct sum equals C(v) and contains random words, n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    BTModel M(n);
    const auto rep = jr_decomposition(M, 5, 30);
    CHECK(rep.sum_of_dims == rep.rank_of_sum);
    CHECK(rep.rank_of_sum == rep.c_dimension);
    CHECK(rep.words_tested == 30);
    CHECK(rep.words_inside);
  }
}
