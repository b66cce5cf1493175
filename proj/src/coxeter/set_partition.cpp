#include <klbt/coxeter/set_partition.hpp>

#include <algorithm>
#include <functional>
#include <numeric>

namespace klbt {

SetPartition SetPartition::discrete(int m) {
  SetPartition p;
  p.rgs_.resize(static_cast<std::size_t>(m));
  std::iota(p.rgs_.begin(), p.rgs_.end(), std::uint8_t{0});
  return p;
}

SetPartition SetPartition::from_labels(const std::vector<int>& labels) {
  SetPartition p;
  std::vector<std::pair<int, std::uint8_t>> seen;
  for (int l : labels) {
    auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& e) { return e.first == l; });
    if (it == seen.end()) {
      seen.emplace_back(l, static_cast<std::uint8_t>(seen.size()));
      p.rgs_.push_back(seen.back().second);
    } else {
      p.rgs_.push_back(it->second);
    }
  }
  return p;
}

SetPartition SetPartition::from_blocks(int m, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> labels(static_cast<std::size_t>(m));
  std::iota(labels.begin(), labels.end(), 0);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int x : blocks[b]) labels[static_cast<std::size_t>(x - 1)] = m + static_cast<int>(b);
  return from_labels(labels);
}

SetPartition SetPartition::reflection(int m, int i, int j) { return from_blocks(m, {{i, j}}); }

int SetPartition::num_blocks() const {
  int mx = -1;
  for (auto b : rgs_) mx = std::max(mx, static_cast<int>(b));
  return mx + 1;
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(num_blocks()));
  for (int x = 1; x <= size(); ++x) out[rgs_[x - 1]].push_back(x);
  return out;
}

std::vector<int> SetPartition::nonsingleton_type() const {
  std::vector<int> t;
  for (const auto& b : blocks())
    if (b.size() > 1) t.push_back(static_cast<int>(b.size()));
  std::sort(t.rbegin(), t.rend());
  return t;
}

SetPartition SetPartition::join(const SetPartition& o) const {
  // Union-find over elements; union along both partitions' blocks.
  const int m = size();
  std::vector<int> parent(static_cast<std::size_t>(m));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::vector<int> first_a(static_cast<std::size_t>(m), -1), first_b(static_cast<std::size_t>(m), -1);
  for (int x = 0; x < m; ++x) {
    int& fa = first_a[rgs_[x]];
    if (fa < 0) fa = x; else parent[find(x)] = find(fa);
    int& fb = first_b[o.rgs_[x]];
    if (fb < 0) fb = x; else parent[find(x)] = find(fb);
  }
  std::vector<int> labels(static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x) labels[x] = find(x);
  return from_labels(labels);
}

SetPartition SetPartition::act(const Permutation& w) const {
  // x in block B  =>  w(x) in block w(B).
  std::vector<int> labels(static_cast<std::size_t>(size()));
  for (int x = 1; x <= size(); ++x) labels[static_cast<std::size_t>(w(x) - 1)] = rgs_[x - 1];
  return from_labels(labels);
}

bool SetPartition::refines(const SetPartition& o) const { return join(o) == o; }

std::string SetPartition::str() const {
  std::string s = "{";
  bool first = true;
  for (const auto& b : blocks()) {
    if (!first) s += "|";
    first = false;
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (k && size() > 9) s += ",";
      s += std::to_string(b[k]);
    }
  }
  return s + "}";
}

std::vector<SetPartition> all_set_partitions(int m) {
  std::vector<SetPartition> out;
  std::vector<int> labels(static_cast<std::size_t>(m), 0);
  std::function<void(int, int)> rec = [&](int pos, int maxb) {
    if (pos == m) {
      out.push_back(SetPartition::from_labels(labels));
      return;
    }
    for (int b = 0; b <= maxb + 1; ++b) {
      labels[static_cast<std::size_t>(pos)] = b;
      rec(pos + 1, std::max(maxb, b));
    }
  };
  if (m == 0) return {SetPartition()};
  labels[0] = 0;
  rec(1, 0);
  return out;
}

}  // namespace klbt
