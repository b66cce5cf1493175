#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace klbt {

// Element of S_m (W of type A_{m-1}) in one-line notation: images()[x-1] = w(x).
// Composition is (w * u)(x) = w(u(x)); s_i is the transposition (i, i+1).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint8_t> images);
  static Permutation identity(int m);
  static Permutation simple(int m, int i);
  static Permutation transposition(int m, int i, int j);
  // Product s_{w[0]} s_{w[1]} ... in S_m.
  static Permutation from_word(int m, const std::vector<int>& word);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x - 1]; }
  const std::vector<std::uint8_t>& images() const { return img_; }

  friend Permutation operator*(const Permutation& w, const Permutation& u);
  Permutation inverse() const;
  bool is_identity() const;
  int length() const;
  // l(w s_i) < l(w)
  bool is_right_descent(int i) const { return img_[i - 1] > img_[i]; }
  // l(s_i w) < l(w)
  bool is_left_descent(int i) const;
  // Bit i-1 set for each right (resp. left) descent s_i.
  std::uint64_t right_descents() const;
  std::uint64_t left_descents() const;
  // s_i * w and w * s_i without building s_i.
  Permutation left_mul_simple(int i) const;
  Permutation right_mul_simple(int i) const;
  // Lexicographically smallest reduced word (i_1, ..., i_l) with w = s_{i_1} ... s_{i_l}.
  std::vector<int> reduced_word() const;

  // Rank of w among all permutations of S_m in lexicographic order.
  std::uint64_t lex_index() const;
  static Permutation from_lex_index(int m, std::uint64_t index);

  auto operator<=>(const Permutation& o) const = default;
  std::string str() const;

 private:
  std::vector<std::uint8_t> img_;
};

// All of S_m in lexicographic order.
std::vector<Permutation> all_permutations(int m);

// Bruhat order by the rank-matrix (Ehresmann tableau) criterion.
bool bruhat_leq(const Permutation& x, const Permutation& w);
// Oracle: x is the product of a subword of the reduced word of w.
bool bruhat_leq_subword(const Permutation& x, const Permutation& w);

}  // namespace klbt
