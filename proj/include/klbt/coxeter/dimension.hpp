#pragma once

#include <klbt/scalars/rational.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace klbt {

// Integer partition, parts weakly decreasing.
using Partition = std::vector<int>;

// Subset I of the simple reflections {s_1, ..., s_n} of type A_n; bit i-1 <-> s_i.
class SimpleSubset {
 public:
  SimpleSubset() = default;
  SimpleSubset(int n, std::uint64_t mask);
  static SimpleSubset from_members(int n, const std::vector<int>& members);
  // Canonical representative of lambda: blocks in decreasing size, packed to
  // the left with single gaps (the picture of the P(n) definition).
  static SimpleSubset canonical(int n, const Partition& lambda);

  int n() const { return n_; }
  std::uint64_t mask() const { return mask_; }
  bool contains(int i) const { return (mask_ >> (i - 1)) & 1U; }
  std::vector<int> members() const;
  // Maximal runs of consecutive members as (first index, length).
  std::vector<std::pair<int, int>> blocks() const;
  Partition lambda() const;
  // n_i(I): number of parts of lambda equal to i.
  std::map<int, int> multiplicities() const;
  std::string str() const;
  bool operator==(const SimpleSubset&) const = default;

 private:
  int n_ = 0;
  std::uint64_t mask_ = 0;
};

Partition lambda_of_mask(std::uint64_t mask);

// Order of the normalizer of W_I in S_{n+1} (Howlett's formula).
BigInt howlett_order(int n, const Partition& lambda);
inline BigInt howlett_order(int n, const SimpleSubset& I) { return howlett_order(n, I.lambda()); }
// |{w in S_{n+1} : w W_I w^-1 = W_I}| by enumeration; n <= 6.
std::uint64_t normalizer_bruteforce(int n, const SimpleSubset& I);

// D_I by inclusion-exclusion over subsets of block positions; asserts the
// product form (n+1)! prod_i (1 - 1/(lambda_i+1)!) and throws MathError on mismatch.
BigInt d_subset(int n, const SimpleSubset& I);
BigInt d_product(int n, const Partition& lambda);
// Count of w in S_{n+1} with a right descent in every block of I; n <= 9.
std::uint64_t d_subset_bruteforce(int n, const SimpleSubset& I);

// R_I cross-count: set partitions of {1..n+1} whose non-singleton block sizes
// are {lambda_i + 1}; n <= 6.
std::uint64_t r_by_set_partitions(int n, const Partition& lambda);

struct PartitionClass {
  Partition lambda;
  BigInt count;  // number of subsets I with lambda^I = lambda
};
// P(n) ordered like the published tables: larger |lambda| first, then lambda
// lexicographically decreasing.
std::vector<PartitionClass> partitions_P(int n);

enum class DimMode { SubsetEnumeration, PartitionAggregation };
const char* to_string(DimMode m);

struct DimensionRow {
  SimpleSubset subset;  // canonical representative of the class
  Partition lambda;
  BigInt N, R, D;
  BigInt multiplicity;  // subsets I in the class
};

struct DimensionTable {
  int n = 0;
  DimMode mode = DimMode::PartitionAggregation;
  std::vector<DimensionRow> rows;
  BigInt total;
};

constexpr int kMaxSubsetModeN = 20;
constexpr int kMaxAggregationModeN = 50;

// dim C(v) = sum over classes lambda in P(n) of R_lambda * D_lambda. Throws
// std::invalid_argument beyond the mode's bound.
DimensionTable dimension_table(int n, DimMode mode);
inline BigInt dim_C(int n, DimMode mode) { return dimension_table(n, mode).total; }

std::string partition_str(const Partition& lambda);

}  // namespace klbt
