#pragma once

#include <klbt/coxeter/permutation.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace klbt {

// Set partition of {1, ..., m} stored as a restricted growth string: rgs()[x-1]
// is the index of the block containing x, blocks numbered by their minima.
// Type-A reflection subgroups correspond to set partitions (blocks = orbits).
class SetPartition {
 public:
  SetPartition() = default;
  static SetPartition discrete(int m);
  // Builds the canonical form from arbitrary block labels.
  static SetPartition from_labels(const std::vector<int>& labels);
  static SetPartition from_blocks(int m, const std::vector<std::vector<int>>& blocks);
  // Partition generated by the reflection (i j).
  static SetPartition reflection(int m, int i, int j);

  int size() const { return static_cast<int>(rgs_.size()); }
  const std::vector<std::uint8_t>& rgs() const { return rgs_; }
  int block_of(int x) const { return rgs_[x - 1]; }
  bool same_block(int x, int y) const { return rgs_[x - 1] == rgs_[y - 1]; }
  int num_blocks() const;
  bool is_discrete() const { return num_blocks() == size(); }
  std::vector<std::vector<int>> blocks() const;
  // Sizes of blocks with at least two elements, decreasing.
  std::vector<int> nonsingleton_type() const;

  // Finest common coarsening.
  SetPartition join(const SetPartition& o) const;
  // Image under w: the block B becomes w(B).
  SetPartition act(const Permutation& w) const;
  // True when every block of *this lies inside a block of o.
  bool refines(const SetPartition& o) const;

  auto operator<=>(const SetPartition& o) const = default;
  std::string str() const;

 private:
  std::vector<std::uint8_t> rgs_;
};

// All set partitions of {1..m} in lexicographic order of their growth strings.
std::vector<SetPartition> all_set_partitions(int m);

}  // namespace klbt
