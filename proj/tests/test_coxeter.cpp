#include <doctest.h>

#include <klbt/coxeter/dimension.hpp>
#include <klbt/coxeter/permutation.hpp>
#include <klbt/coxeter/set_partition.hpp>

using namespace klbt;

TEST_CASE("Permutation: length and descents") {
  auto e = Permutation::identity(3);
  CHECK(e.length() == 0);
  CHECK(e.right_descents() == 0);
  Permutation w0({3, 2, 1});
  CHECK(w0.length() == 3);
  CHECK(w0.right_descents() == 0b11);
  Permutation w({2, 1, 4, 3});
  CHECK(w.length() == 2);
  CHECK(w.right_descents() == 0b101);
  CHECK_THROWS(Permutation({1, 1, 2}));
}

TEST_CASE("Permutation: group laws, words and lex index") {
  for (int m = 1; m <= 5; ++m) {
    auto all = all_permutations(m);
    for (std::size_t k = 0; k < all.size(); ++k) {
      const auto& w = all[k];
      CHECK(w.lex_index() == k);
      CHECK(Permutation::from_lex_index(m, k) == w);
      CHECK((w * w.inverse()).is_identity());
      const auto word = w.reduced_word();
      CHECK(static_cast<int>(word.size()) == w.length());
      CHECK(Permutation::from_word(m, word) == w);
      for (int i = 1; i < m; ++i) {
        CHECK(w.left_mul_simple(i) == Permutation::simple(m, i) * w);
        CHECK(w.right_mul_simple(i) == w * Permutation::simple(m, i));
        CHECK(w.is_left_descent(i) == (w.left_mul_simple(i).length() < w.length()));
        CHECK(w.is_right_descent(i) == (w.right_mul_simple(i).length() < w.length()));
      }
    }
  }
}

TEST_CASE("Bruhat order: rank matrix agrees with the subword oracle") {
  for (int m : {3, 4}) {
    auto all = all_permutations(m);
    int comparable = 0;
    for (const auto& x : all)
      for (const auto& w : all) {
        const bool b = bruhat_leq(x, w);
        CHECK(b == bruhat_leq_subword(x, w));
        comparable += b;
      }
    if (m == 3) CHECK(comparable == 19);  // S_3 Bruhat poset has 19 relations x <= w
  }
  auto e = Permutation::identity(4);
  for (const auto& w : all_permutations(4)) {
    CHECK(bruhat_leq(e, w));
    CHECK(bruhat_leq(w, w));
  }
}

TEST_CASE("SetPartition: join and action") {
  auto d = SetPartition::discrete(3);
  auto p = SetPartition::from_blocks(3, {{1, 2}});
  auto q = SetPartition::from_blocks(3, {{2, 3}});
  CHECK(d.join(p) == p);
  CHECK(p.join(q).num_blocks() == 1);
  CHECK(p.str() == "{12|3}");
  CHECK(p.act(Permutation::simple(3, 1)) == p);
  CHECK(p.act(Permutation::simple(3, 2)) == SetPartition::from_blocks(3, {{1, 3}}));
  CHECK(all_set_partitions(4).size() == 15);
  CHECK(all_set_partitions(5).size() == 52);
  // Action is a group action and commutes with join.
  auto parts = all_set_partitions(4);
  auto perms = all_permutations(4);
  for (const auto& a : parts)
    for (const auto& w : perms) {
      CHECK(a.act(w).act(w.inverse()) == a);
      CHECK(a.join(parts[7]).act(w) == a.act(w).join(parts[7].act(w)));
    }
}

TEST_CASE("SimpleSubset: blocks and lambda") {
  auto I = SimpleSubset::from_members(7, {1, 2, 4, 5, 7});
  CHECK(I.lambda() == Partition{2, 2, 1});
  CHECK(I.blocks().size() == 3);
  CHECK(SimpleSubset::canonical(7, {2, 2, 1}) == I);
  CHECK(I.str() == "{s1,s2,s4,s5,s7}");
  CHECK(I.multiplicities() == std::map<int, int>{{1, 1}, {2, 2}});
}

TEST_CASE("Howlett order: oracles and brute force") {
  CHECK(howlett_order(3, SimpleSubset::from_members(3, {1, 3})) == 8);
  CHECK(howlett_order(2, SimpleSubset(2, 0)) == 6);
  CHECK(howlett_order(2, SimpleSubset::from_members(2, {1})) == 2);
  CHECK(normalizer_bruteforce(2, SimpleSubset::from_members(2, {1})) == 2);
  CHECK(normalizer_bruteforce(3, SimpleSubset::from_members(3, {1, 3})) == 8);
  for (int n = 0; n <= 5; ++n)
    for (std::uint64_t m = 0; m < (1ULL << n); ++m) {
      SimpleSubset I(n, m);
      CHECK(howlett_order(n, I) == normalizer_bruteforce(n, I));
    }
  CHECK(normalizer_bruteforce(4, SimpleSubset(4, 0b1111)) == 120);
}

TEST_CASE("D_I: oracles and brute force") {
  CHECK(d_subset(4, SimpleSubset::from_members(4, {1, 2, 4})) == 50);
  CHECK(d_subset(3, SimpleSubset::from_members(3, {1, 3})) == 6);
  for (int n = 0; n <= 4; ++n) CHECK(d_subset(n, SimpleSubset(n, 0)) == factorial(static_cast<unsigned>(n + 1)));
  CHECK(d_subset_bruteforce(2, SimpleSubset::from_members(2, {1})) == 3);
  CHECK(d_subset_bruteforce(2, SimpleSubset::from_members(2, {1, 2})) == 5);
  CHECK(d_subset_bruteforce(4, SimpleSubset(4, 0b1111)) == 119);
  CHECK_THROWS(d_subset_bruteforce(10, SimpleSubset(10, 1)));
  for (int n = 0; n <= 7; ++n)
    for (std::uint64_t m = 0; m < (1ULL << n); ++m) {
      SimpleSubset I(n, m);
      CHECK(d_subset(n, I) == d_subset_bruteforce(n, I));
    }
}

TEST_CASE("P(n) and R_I cross-count") {
  auto p1 = partitions_P(1);
  REQUIRE(p1.size() == 2);
  CHECK(p1[0].lambda == Partition{1});
  CHECK(p1[1].lambda == Partition{});
  bool found = false;
  for (const auto& c : partitions_P(7)) found |= c.lambda == Partition{2, 2, 1};
  CHECK(found);
  for (const auto& c : partitions_P(4))
    if (c.lambda == Partition{1, 1}) CHECK(c.count == 3);
  for (int n = 0; n <= 6; ++n)
    for (const auto& c : partitions_P(n)) {
      const BigInt R = factorial(static_cast<unsigned>(n + 1)) / howlett_order(n, c.lambda);
      CHECK(R == r_by_set_partitions(n, c.lambda));
    }
}

TEST_CASE("dim_C: sequence and mode agreement") {
  const char* expected[] = {"1",          "3",           "20",           "217",           "3364",
                            "71098",      "1960867",     "67886033",     "2871659468",    "145498348666",
                            "8683447971439", "601843453126056", "47875219836485209"};
  for (int n = 0; n <= 12; ++n) {
    auto a = dimension_table(n, DimMode::SubsetEnumeration);
    auto b = dimension_table(n, DimMode::PartitionAggregation);
    CHECK(a.total == BigInt(expected[n]));
    CHECK(b.total == a.total);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
      CHECK(a.rows[i].lambda == b.rows[i].lambda);
      CHECK(a.rows[i].N == b.rows[i].N);
      CHECK(a.rows[i].D == b.rows[i].D);
      CHECK(a.rows[i].multiplicity == b.rows[i].multiplicity);
    }
  }
  CHECK_THROWS(dimension_table(21, DimMode::SubsetEnumeration));
  CHECK_THROWS(dimension_table(51, DimMode::PartitionAggregation));
  CHECK(dim_C(43, DimMode::PartitionAggregation) > 0);
}

TEST_CASE("dim_C: n = 4 rows match the published table") {
  auto t = dimension_table(4, DimMode::PartitionAggregation);
  REQUIRE(t.rows.size() == 7);
  const int N[] = {120, 24, 12, 12, 8, 12, 120}, R[] = {1, 5, 10, 10, 15, 10, 1}, D[] = {119, 115, 50, 100, 30, 60, 120};
  for (int i = 0; i < 7; ++i) {
    CHECK(t.rows[i].N == N[i]);
    CHECK(t.rows[i].R == R[i]);
    CHECK(t.rows[i].D == D[i]);
  }
  CHECK(t.rows[2].subset.str() == "{s1,s2,s4}");
}
