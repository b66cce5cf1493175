#pragma once

#include <klbt/coxeter/permutation.hpp>
#include <klbt/coxeter/set_partition.hpp>
#include <klbt/scalars/ratfunc.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace klbt {

// Finitely supported map (SetPartition, Permutation) -> Q(v): the element
// sum c * e_P g_w of E(v). Keys are basis indices of a BTModel, ordered
// lexicographically by (partition growth string, one-line permutation).
class BTElement {
 public:
  using Terms = std::map<std::uint32_t, RationalFunction>;
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RationalFunction coeff(std::uint32_t b) const;
  void add_term(std::uint32_t b, const RationalFunction& c);

  BTElement& operator+=(const BTElement& o);
  BTElement& operator-=(const BTElement& o);
  BTElement& operator*=(const RationalFunction& c);
  friend BTElement operator+(BTElement a, const BTElement& b) { return a += b; }
  friend BTElement operator-(BTElement a, const BTElement& b) { return a -= b; }
  friend BTElement operator*(BTElement a, const RationalFunction& c) { return a *= c; }
  bool operator==(const BTElement& o) const { return terms_ == o.terms_; }

 private:
  Terms terms_;
};

// One term of g_s * (e_P g_y): coefficient 1 (kind 0) or v^2 - 1 (kind 1).
struct GenTerm {
  std::uint32_t target;
  std::uint8_t kind;
};

// The (set partition, permutation) realization of E(v) for W = S_{n+1}:
// basis e_P g_w, product (e_P g_w)(e_Q g_u) = e_{P v w(Q)} (g_w g_u).
class BTModel {
 public:
  explicit BTModel(int n);

  int n() const { return n_; }
  int m() const { return n_ + 1; }
  std::size_t dim() const { return parts_.size() * perms_.size(); }
  std::size_t num_perms() const { return perms_.size(); }
  std::size_t num_parts() const { return parts_.size(); }
  const Permutation& perm(std::size_t i) const { return perms_[i]; }
  const SetPartition& part(std::size_t i) const { return parts_[i]; }
  std::size_t perm_index(const Permutation& w) const { return static_cast<std::size_t>(w.lex_index()); }
  std::size_t part_index(const SetPartition& p) const;
  std::uint32_t index(std::size_t part, std::size_t perm) const {
    return static_cast<std::uint32_t>(part * perms_.size() + perm);
  }
  std::size_t part_of(std::uint32_t b) const { return b / perms_.size(); }
  std::size_t perm_of(std::uint32_t b) const { return b % perms_.size(); }
  std::string basis_str(std::uint32_t b) const;

  std::size_t join(std::size_t P, std::size_t Q) const { return join_[P * parts_.size() + Q]; }
  std::size_t act(std::size_t w, std::size_t P) const { return act_[w * parts_.size() + P]; }
  std::size_t discrete_part() const { return discrete_; }
  std::size_t identity_perm() const { return 0; }
  // Partition generated by the reflection (i j).
  std::size_t reflection_part(int i, int j) const;
  std::size_t simple_part(int s) const { return reflection_part(s, s + 1); }

  // Left action of g_s on a basis element: up to three terms.
  const std::vector<GenTerm>& gen_terms(int s, std::uint32_t b) const { return gen_[(s - 1) * dim() + b]; }

  // Elements.
  BTElement one() const;
  BTElement basis(std::size_t part, std::size_t perm, const RationalFunction& c = RationalFunction(1)) const;
  BTElement g(int s) const;
  BTElement g_word(const std::vector<int>& word) const;
  BTElement e_part(std::size_t part) const;
  BTElement e(int s) const { return e_part(simple_part(s)); }
  // g_s^{-1} = g_s + (v^{-2} - 1) e_s + (v^{-2} - 1) e_s g_s.
  BTElement g_inverse(int s) const;
  // Kazhdan-Laumon generators: a_s = -g_s, c_s = -e_s (1 + g_s) / v.
  BTElement a(int s) const;
  BTElement c_s(int s) const;

  BTElement left_gen(int s, const BTElement& x) const;
  BTElement mul(const BTElement& a, const BTElement& b) const;
  // v-semilinear automorphism with g_s -> g_s^{-1}, e_r -> e_r, v -> v^{-1}.
  BTElement bar(const BTElement& x) const;

  std::string str(const BTElement& x) const;

 private:
  const BTElement& g_times_g(std::size_t w, std::size_t u) const;  // g_w g_u, memoized
  const BTElement& bar_basis(std::uint32_t b) const;               // memoized

  int n_;
  std::vector<Permutation> perms_;
  std::vector<SetPartition> parts_;
  std::map<SetPartition, std::size_t> part_lookup_;
  std::vector<std::uint32_t> join_, act_;
  std::size_t discrete_ = 0;
  std::vector<std::vector<GenTerm>> gen_;
  mutable std::mutex memo_mu_;
  mutable std::vector<std::unique_ptr<BTElement>> gg_memo_;
  mutable std::vector<std::unique_ptr<BTElement>> bar_memo_;
};

struct RelationCheck {
  std::string name;
  bool pass = false;
  std::size_t instances = 0;
};

// Every defining relation of E(v) (braid, e_r^2 = e_r, commuting ties, the
// conjugated-tie relation, g_s e_r = e_{srs} g_s, quadratic), the cubic for
// a_s = -g_s, g_s invertibility, bar involutivity/multiplicativity, and the
// c_s identities. Random checks use the given seed.
std::vector<RelationCheck> verify_presentation(const BTModel& M, std::uint64_t seed, int random_trials = 20);

}  // namespace klbt
