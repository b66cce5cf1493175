#include <klbt/coxeter/dimension.hpp>
#include <klbt/coxeter/permutation.hpp>
#include <klbt/coxeter/set_partition.hpp>

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace klbt {

SimpleSubset::SimpleSubset(int n, std::uint64_t mask) : n_(n), mask_(mask) {
  if (n < 0 || n > 63) throw std::invalid_argument("SimpleSubset: n out of range");
  if (n < 64 && (mask >> n) != 0) throw std::invalid_argument("SimpleSubset: member outside {1..n}");
}

SimpleSubset SimpleSubset::from_members(int n, const std::vector<int>& members) {
  std::uint64_t m = 0;
  for (int i : members) {
    if (i < 1 || i > n) throw std::invalid_argument("SimpleSubset: member outside {1..n}");
    m |= std::uint64_t{1} << (i - 1);
  }
  return {n, m};
}

SimpleSubset SimpleSubset::canonical(int n, const Partition& lambda) {
  std::uint64_t m = 0;
  int pos = 0;
  for (int part : lambda) {
    for (int j = 0; j < part; ++j) m |= std::uint64_t{1} << (pos + j);
    pos += part + 1;
  }
  if (pos - 1 > n) throw std::invalid_argument("SimpleSubset::canonical: partition not in P(n)");
  return {n, m};
}

std::vector<int> SimpleSubset::members() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::vector<std::pair<int, int>> SimpleSubset::blocks() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n_; ++i) {
    if (!contains(i)) continue;
    if (!out.empty() && out.back().first + out.back().second == i)
      ++out.back().second;
    else
      out.emplace_back(i, 1);
  }
  return out;
}

Partition lambda_of_mask(std::uint64_t mask) {
  Partition lam;
  while (mask) {
    mask >>= std::countr_zero(mask);
    const int run = std::countr_one(mask);
    lam.push_back(run);
    mask = run >= 64 ? 0 : mask >> run;
  }
  std::sort(lam.rbegin(), lam.rend());
  return lam;
}

Partition SimpleSubset::lambda() const { return lambda_of_mask(mask_); }

std::map<int, int> SimpleSubset::multiplicities() const {
  std::map<int, int> m;
  for (int p : lambda()) ++m[p];
  return m;
}

std::string SimpleSubset::str() const {
  std::string s = "{";
  bool first = true;
  for (int i : members()) {
    if (!first) s += ",";
    first = false;
    s += "s" + std::to_string(i);
  }
  return s + "}";
}

std::string partition_str(const Partition& lambda) {
  std::string s = "(";
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(lambda[i]);
  }
  return s + ")";
}

BigInt howlett_order(int n, const Partition& lambda) {
  std::map<int, int> mult;
  long used = 0;
  for (int p : lambda) {
    ++mult[p];
    used += p + 1;
  }
  if (used > n + 1) throw std::invalid_argument("howlett_order: partition not in P(n)");
  BigInt r = factorial(static_cast<unsigned>(n + 1 - used));
  for (const auto& [i, ni] : mult) {
    r *= factorial(static_cast<unsigned>(ni));
    BigInt f = factorial(static_cast<unsigned>(i + 1)), pw;
    mpz_pow_ui(pw.get_mpz_t(), f.get_mpz_t(), static_cast<unsigned long>(ni));
    r *= pw;
  }
  return r;
}

namespace {

// Component label of each point 1..n+1 under W_I: points joined by s_i in I.
std::vector<int> components(int n, const SimpleSubset& I) {
  std::vector<int> comp(static_cast<std::size_t>(n + 2), 0);
  int c = 0;
  comp[1] = 0;
  for (int x = 2; x <= n + 1; ++x) comp[x] = I.contains(x - 1) ? c : ++c;
  return comp;
}

}  // namespace

std::uint64_t normalizer_bruteforce(int n, const SimpleSubset& I) {
  if (n > 6) throw std::invalid_argument("normalizer_bruteforce: n must be <= 6");
  const auto comp = components(n, I);
  const auto members = I.members();
  std::uint64_t count = 0;
  // w s_i w^-1 = (w(i) w(i+1)) lies in W_I iff both points share a component;
  // conjugation is injective, so w W_I w^-1 subset of W_I forces equality.
  for (const auto& w : all_permutations(n + 1)) {
    bool ok = true;
    for (int i : members)
      if (comp[w(i)] != comp[w(i + 1)]) {
        ok = false;
        break;
      }
    count += ok;
  }
  return count;
}

BigInt d_product(int n, const Partition& lambda) {
  BigInt num = factorial(static_cast<unsigned>(n + 1)), den = 1;
  for (int p : lambda) {
    const BigInt f = factorial(static_cast<unsigned>(p + 1));
    num *= f - 1;
    den *= f;
  }
  if (num % den != 0) throw MathError("d_product: non-integral value");
  return num / den;
}

BigInt d_subset(int n, const SimpleSubset& I) {
  const Partition lam = I.lambda();
  const std::size_t k = lam.size();
  if (k > 30) throw std::invalid_argument("d_subset: too many blocks for inclusion-exclusion");
  const BigInt total = factorial(static_cast<unsigned>(n + 1));
  std::vector<BigInt> fac(k);
  for (std::size_t i = 0; i < k; ++i) fac[i] = factorial(static_cast<unsigned>(lam[i] + 1));
  BigInt sum = 0;
  for (std::uint64_t T = 0; T < (std::uint64_t{1} << k); ++T) {
    BigInt den = 1;
    for (std::size_t i = 0; i < k; ++i)
      if ((T >> i) & 1U) den *= fac[i];
    const BigInt term = total / den;
    if (std::popcount(T) % 2) sum -= term; else sum += term;
  }
  if (sum != d_product(n, lam)) throw MathError("d_subset: inclusion-exclusion disagrees with product form");
  return sum;
}

std::uint64_t d_subset_bruteforce(int n, const SimpleSubset& I) {
  if (n > 9) throw std::invalid_argument("d_subset_bruteforce: n must be <= 9");
  const auto blocks = I.blocks();
  std::vector<std::uint8_t> img(static_cast<std::size_t>(n + 1));
  std::iota(img.begin(), img.end(), std::uint8_t{1});
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (const auto& [start, len] : blocks) {
      bool has = false;
      for (int i = start; i < start + len && !has; ++i) has = img[i - 1] > img[i];
      if (!has) {
        ok = false;
        break;
      }
    }
    count += ok;
  } while (std::next_permutation(img.begin(), img.end()));
  return count;
}

std::uint64_t r_by_set_partitions(int n, const Partition& lambda) {
  if (n > 6) throw std::invalid_argument("r_by_set_partitions: n must be <= 6");
  std::vector<int> want;
  for (int p : lambda) want.push_back(p + 1);
  std::uint64_t count = 0;
  for (const auto& P : all_set_partitions(n + 1)) count += P.nonsingleton_type() == want;
  return count;
}

std::vector<PartitionClass> partitions_P(int n) {
  std::vector<Partition> lams;
  Partition cur;
  // Parts weakly decreasing with sum(lambda_i + 1) <= n + 1.
  std::function<void(int, int)> rec = [&](int budget, int maxpart) {
    lams.push_back(cur);
    for (int p = std::min(maxpart, budget - 1); p >= 1; --p) {
      cur.push_back(p);
      rec(budget - p - 1, p);
      cur.pop_back();
    }
  };
  rec(n + 1, n);
  std::sort(lams.begin(), lams.end(), [](const Partition& a, const Partition& b) {
    const int sa = std::accumulate(a.begin(), a.end(), 0), sb = std::accumulate(b.begin(), b.end(), 0);
    if (sa != sb) return sa > sb;
    return a > b;
  });
  std::vector<PartitionClass> out;
  for (auto& lam : lams) {
    const int k = static_cast<int>(lam.size());
    const int used = std::accumulate(lam.begin(), lam.end(), 0) + k - 1;
    const int free = n - used;
    BigInt binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(free + k), static_cast<unsigned long>(k));
    BigInt arrangements = factorial(static_cast<unsigned>(k));
    std::map<int, int> mult;
    for (int p : lam) ++mult[p];
    for (const auto& [p, c] : mult) arrangements /= factorial(static_cast<unsigned>(c));
    out.push_back({std::move(lam), binom * arrangements});
  }
  return out;
}

const char* to_string(DimMode m) {
  return m == DimMode::SubsetEnumeration ? "subset" : "aggregate";
}

DimensionTable dimension_table(int n, DimMode mode) {
  if (n < 0) throw std::invalid_argument("dimension_table: n must be >= 0");
  DimensionTable t;
  t.n = n;
  t.mode = mode;
  const BigInt order = factorial(static_cast<unsigned>(n + 1));
  auto classes = partitions_P(n);

  if (mode == DimMode::SubsetEnumeration) {
    if (n > kMaxSubsetModeN) throw std::invalid_argument("subset mode requires n <= 20");
    // Enumerate every I subset of S, grouping by lambda^I.
    std::map<Partition, std::uint64_t> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) ++seen[lambda_of_mask(mask)];
    if (seen.size() != classes.size()) throw MathError("dimension_table: class count disagrees with P(n)");
    for (const auto& cls : classes) {
      auto it = seen.find(cls.lambda);
      if (it == seen.end()) throw MathError("dimension_table: partition of P(n) not realized by any subset");
      DimensionRow row;
      row.subset = SimpleSubset::canonical(n, cls.lambda);
      row.lambda = row.subset.lambda();
      row.N = howlett_order(n, row.subset);
      row.R = order / row.N;
      row.D = d_subset(n, row.subset);
      row.multiplicity = it->second;
      t.rows.push_back(std::move(row));
    }
  } else {
    if (n > kMaxAggregationModeN) throw std::invalid_argument("aggregation mode requires n <= 50");
    BigInt subsets = 0;
    for (const auto& cls : classes) {
      DimensionRow row;
      row.subset = SimpleSubset::canonical(n, cls.lambda);
      row.lambda = cls.lambda;
      row.N = howlett_order(n, cls.lambda);
      row.R = order / row.N;
      row.D = d_product(n, cls.lambda);
      row.multiplicity = cls.count;
      subsets += cls.count;
      t.rows.push_back(std::move(row));
    }
    BigInt all;
    mpz_ui_pow_ui(all.get_mpz_t(), 2, static_cast<unsigned long>(n));
    if (subsets != all) throw MathError("dimension_table: class multiplicities do not sum to 2^n");
  }
  t.total = 0;
  for (const auto& r : t.rows) {
    if (r.N * r.R != order) throw MathError("dimension_table: N * R != (n+1)!");
    t.total += r.R * r.D;
  }
  return t;
}

}  // namespace klbt
