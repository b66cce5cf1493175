#include <klbt/coxeter/permutation.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace klbt {

Permutation::Permutation(std::vector<std::uint8_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size() + 1, false);
  for (auto x : img_) {
    if (x < 1 || x > img_.size() || seen[x]) throw std::invalid_argument("Permutation: not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int m) {
  Permutation p;
  p.img_.resize(static_cast<std::size_t>(m));
  std::iota(p.img_.begin(), p.img_.end(), std::uint8_t{1});
  return p;
}

Permutation Permutation::simple(int m, int i) { return identity(m).right_mul_simple(i); }

Permutation Permutation::transposition(int m, int i, int j) {
  Permutation p = identity(m);
  std::swap(p.img_[i - 1], p.img_[j - 1]);
  return p;
}

Permutation Permutation::from_word(int m, const std::vector<int>& word) {
  Permutation p = identity(m);
  for (int i : word) p = p.right_mul_simple(i);
  return p;
}

Permutation operator*(const Permutation& w, const Permutation& u) {
  Permutation r;
  r.img_.resize(u.img_.size());
  for (std::size_t x = 0; x < u.img_.size(); ++x) r.img_[x] = w.img_[u.img_[x] - 1];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img_.resize(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) r.img_[img_[x] - 1] = static_cast<std::uint8_t>(x + 1);
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < img_.size(); ++x)
    if (img_[x] != x + 1) return false;
  return true;
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t a = 0; a < img_.size(); ++a)
    for (std::size_t b = a + 1; b < img_.size(); ++b) inv += img_[a] > img_[b];
  return inv;
}

bool Permutation::is_left_descent(int i) const {
  // s_i w < w iff i+1 appears before i in the one-line notation.
  for (auto x : img_) {
    if (x == i) return false;
    if (x == i + 1) return true;
  }
  return false;
}

std::uint64_t Permutation::right_descents() const {
  std::uint64_t m = 0;
  for (int i = 1; i < size(); ++i)
    if (is_right_descent(i)) m |= std::uint64_t{1} << (i - 1);
  return m;
}

std::uint64_t Permutation::left_descents() const { return inverse().right_descents(); }

Permutation Permutation::left_mul_simple(int i) const {
  Permutation r = *this;
  for (auto& x : r.img_) {
    if (x == i)
      x = static_cast<std::uint8_t>(i + 1);
    else if (x == i + 1)
      x = static_cast<std::uint8_t>(i);
  }
  return r;
}

Permutation Permutation::right_mul_simple(int i) const {
  Permutation r = *this;
  std::swap(r.img_[i - 1], r.img_[i]);
  return r;
}

std::vector<int> Permutation::reduced_word() const {
  // Peel the smallest left descent each time: w = s_i (s_i w).
  std::vector<int> word;
  Permutation w = *this;
  while (!w.is_identity()) {
    for (int i = 1; i < size(); ++i) {
      if (w.is_left_descent(i)) {
        word.push_back(i);
        w = w.left_mul_simple(i);
        break;
      }
    }
  }
  return word;
}

std::uint64_t Permutation::lex_index() const {
  // Lehmer code in the factorial number system.
  std::uint64_t idx = 0;
  const std::size_t m = img_.size();
  for (std::size_t a = 0; a < m; ++a) {
    std::uint64_t smaller = 0;
    for (std::size_t b = a + 1; b < m; ++b) smaller += img_[b] < img_[a];
    idx = idx * (m - a) + smaller;
  }
  return idx;
}

Permutation Permutation::from_lex_index(int m, std::uint64_t index) {
  std::vector<std::uint64_t> digits(static_cast<std::size_t>(m));
  for (int a = m - 1; a >= 0; --a) {
    const std::uint64_t base = static_cast<std::uint64_t>(m - a);
    digits[static_cast<std::size_t>(a)] = index % base;
    index /= base;
  }
  std::vector<std::uint8_t> avail(static_cast<std::size_t>(m));
  std::iota(avail.begin(), avail.end(), std::uint8_t{1});
  Permutation p;
  for (int a = 0; a < m; ++a) {
    auto it = avail.begin() + static_cast<std::ptrdiff_t>(digits[static_cast<std::size_t>(a)]);
    p.img_.push_back(*it);
    avail.erase(it);
  }
  return p;
}

std::string Permutation::str() const {
  std::string s = "[";
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (x) s += ",";
    s += std::to_string(img_[x]);
  }
  return s + "]";
}

std::vector<Permutation> all_permutations(int m) {
  std::vector<Permutation> out;
  std::vector<std::uint8_t> img(static_cast<std::size_t>(m));
  std::iota(img.begin(), img.end(), std::uint8_t{1});
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

bool bruhat_leq(const Permutation& x, const Permutation& w) {
  const int m = x.size();
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      int cx = 0, cw = 0;
      for (int a = 1; a <= i; ++a) {
        cx += x(a) >= j;
        cw += w(a) >= j;
      }
      if (cx > cw) return false;
    }
  }
  return true;
}

bool bruhat_leq_subword(const Permutation& x, const Permutation& w) {
  const auto word = w.reduced_word();
  std::set<Permutation> reach{Permutation::identity(w.size())};
  // Subword products built right to left keep the set small.
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    std::set<Permutation> next = reach;
    for (const auto& p : reach) next.insert(p.left_mul_simple(*it));
    reach = std::move(next);
  }
  return reach.count(x) > 0;
}

}  // namespace klbt
