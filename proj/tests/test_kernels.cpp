#include <doctest.h>

#include <klbt/linalg/modp.hpp>

#include <random>

using namespace klbt;
using namespace klbt::modp;

namespace {
std::vector<std::uint32_t> random_vec(std::mt19937_64& rng, std::size_t n, double zero_frac = 0.0) {
  std::uniform_int_distribution<std::uint32_t> d(0, kP - 1);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) {
    const double r = u(rng);
    x = r < zero_frac ? 0 : r < zero_frac + 0.05 ? kP - 1 : d(rng);
  }
  return v;
}
}  // namespace

TEST_CASE("modp: scalar arithmetic matches big integers") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint32_t> d(0, kP - 1);
  const BigInt P(kP);
  for (int t = 0; t < 2000; ++t) {
    const std::uint32_t a = t < 4 ? (t < 2 ? 0 : kP - 1) : d(rng), b = t % 2 ? kP - 1 : d(rng);
    CHECK(BigInt(mul(a, b)) == BigInt(BigInt(a) * b) % P);
    CHECK(BigInt(add(a, b)) == BigInt(BigInt(a) + b) % P);
    CHECK(BigInt(sub(a, b)) == ((BigInt(a) - b) % P + P) % P);
    if (a) CHECK(mul(a, inv(a)) == 1);
  }
  CHECK_THROWS_AS(inv(0), MathError);
  CHECK(from_rational(BigRational(1, 2)) == inv(2));
  CHECK(from_rational(BigRational(-3)) == kP - 3);
  CHECK_THROWS_AS(from_rational(BigRational(1, static_cast<unsigned long>(kP))), MathError);
}

TEST_CASE("modp: every kernel variant equals the scalar reference") {
  const Kernels& ref = scalar_kernels();
  const auto all = available_kernels();
  CHECK(all.front() == &ref);
  CHECK(&best_kernels() != nullptr);
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::uint32_t> d(0, kP - 1);
  for (const Kernels* k : all) {
    CAPTURE(k->name);
    for (std::size_t n = 0; n <= 67; ++n) {
      for (int rep = 0; rep < 5; ++rep) {
        const auto x = random_vec(rng, n), y0 = random_vec(rng, n);
        const std::uint32_t a = rep == 0 ? kP - 1 : rep == 1 ? 0 : d(rng);
        auto y1 = y0, y2 = y0;
        ref.axpy(y1.data(), x.data(), a, n);
        k->axpy(y2.data(), x.data(), a, n);
        CHECK(y1 == y2);
        auto s1 = x, s2 = x;
        ref.scale(s1.data(), a, n);
        k->scale(s2.data(), a, n);
        CHECK(s1 == s2);
        auto z = random_vec(rng, n, 0.95);
        for (std::size_t from = 0; from <= n; from += 3)
          CHECK(ref.find_nonzero(z.data(), from, n) == k->find_nonzero(z.data(), from, n));
      }
    }
  }
}

TEST_CASE("modp::Echelon: identical echelon forms for every kernel") {
  std::mt19937_64 rng(3);
  const std::size_t width = 53;
  std::vector<std::vector<std::uint32_t>> input;
  for (int i = 0; i < 40; ++i) input.push_back(random_vec(rng, width, 0.7));
  // Add dependent rows: sums of earlier ones.
  for (int i = 0; i < 20; ++i) {
    std::vector<std::uint32_t> v(width);
    for (std::size_t j = 0; j < width; ++j) v[j] = add(input[i][j], mul(3, input[i + 1][j]));
    input.push_back(v);
  }
  std::vector<std::vector<std::uint32_t>> reference;
  std::size_t ref_rank = 0;
  for (const Kernels* k : available_kernels()) {
    Echelon E(width, *k);
    for (const auto& v : input) E.insert(v);
    std::vector<std::vector<std::uint32_t>> rows;
    for (std::size_t i = 0; i < E.rank(); ++i) rows.emplace_back(E.row(i), E.row(i) + width);
    if (reference.empty()) {
      reference = rows;
      ref_rank = E.rank();
    }
    CHECK(E.rank() == ref_rank);
    CHECK(rows == reference);
    for (const auto& v : input) CHECK(E.in_span(v));
    for (std::size_t i = 0; i < E.rank(); ++i) {
      CHECK(E.row(i)[E.pivot_col(i)] == 1);
      for (std::size_t j = 0; j < E.pivot_col(i); ++j) CHECK(E.row(i)[j] == 0);
    }
  }
  CHECK(ref_rank == 40);
}
