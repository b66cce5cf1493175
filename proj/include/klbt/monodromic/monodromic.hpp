#pragma once

#include <klbt/btalg/kl_lift.hpp>
#include <klbt/btalg/model.hpp>
#include <klbt/hecke/hecke.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace klbt {

// Character of the diagonal torus T of SL_{n+1}(F_Q), written through a fixed
// generator chi of the cyclic group of characters of F_Q^x (modulus Q - 1):
// theta(diag(t_1, ..., t_{n+1})) = prod_{i <= n} chi(t_i)^{m_i}. Equivalently the
// exponent vector (m_1, ..., m_n, 0) in (Z/(Q-1))^{n+1} modulo constant shifts.
class TorusCharacter {
 public:
  TorusCharacter() = default;
  TorusCharacter(std::uint32_t modulus, std::vector<std::uint32_t> exponents);
  static TorusCharacter trivial(int n, std::uint32_t modulus);

  int n() const { return static_cast<int>(exps_.size()); }
  std::uint32_t modulus() const { return mod_; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  // Exponent of coordinate i in 1..n+1 (the last one is 0).
  std::uint32_t coord(int i) const { return i <= n() ? exps_[i - 1] : 0; }
  bool is_trivial() const;
  // (w theta)(t) = theta(w^{-1} t w): coordinates are permuted, (w m)_i = m_{w^{-1}(i)},
  // then shifted so that the last coordinate is 0.
  TorusCharacter act(const Permutation& w) const;
  // The reflection (i j) lies in W_theta° iff theta is trivial on its coroot,
  // i.e. m_i = m_j.
  bool in_w_circle(int i, int j) const { return coord(i) == coord(j); }

  auto operator<=>(const TorusCharacter&) const = default;
  std::string str() const;

 private:
  std::uint32_t mod_ = 1;
  std::vector<std::uint32_t> exps_;
};

// Reflections (i, j), i < j, generating W_theta°.
std::vector<std::pair<int, int>> w_circle(const TorusCharacter& theta);
// W-orbit of theta, sorted.
std::vector<TorusCharacter> orbit(const TorusCharacter& theta);
// All characters for SL_{n+1} with the given modulus, sorted.
std::vector<TorusCharacter> all_characters(int n, std::uint32_t modulus);

// Element sum c * A_w 1_L of the monodromic Hecke algebra H_o.
class MonodromicElement {
 public:
  using Key = std::pair<Permutation, TorusCharacter>;
  using Terms = std::map<Key, RationalFunction>;
  static MonodromicElement basis(const Permutation& w, const TorusCharacter& L,
                                 const RationalFunction& c = RationalFunction(1));
  // 1_L.
  static MonodromicElement idempotent(const TorusCharacter& L);
  // sum of 1_L over the orbit of L (the unit of H_o).
  static MonodromicElement unit(const TorusCharacter& L);
  // A_w = sum over the orbit of A_w 1_L.
  static MonodromicElement standard(const Permutation& w, const TorusCharacter& any_in_orbit);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RationalFunction coeff(const Permutation& w, const TorusCharacter& L) const;
  void add_term(const Permutation& w, const TorusCharacter& L, const RationalFunction& c);
  MonodromicElement& operator+=(const MonodromicElement& o);
  MonodromicElement& operator-=(const MonodromicElement& o);
  MonodromicElement& operator*=(const RationalFunction& c);
  friend MonodromicElement operator+(MonodromicElement a, const MonodromicElement& b) { return a += b; }
  friend MonodromicElement operator-(MonodromicElement a, const MonodromicElement& b) { return a -= b; }
  friend MonodromicElement operator*(MonodromicElement a, const RationalFunction& c) { return a *= c; }
  bool operator==(const MonodromicElement& o) const { return terms_ == o.terms_; }
  std::string str() const;
  // Substitutes v = v0 in every coefficient.
  std::map<Key, BigRational> specialize(const BigRational& v0) const;

 private:
  Terms terms_;
};

// A_s * x in normal form: A_s A_u 1_L = A_{su} 1_L when l(su) > l(u), and
// v^2 A_{su} 1_L + (v^2 - 1)[s in W°_{su L}] A_u 1_L otherwise.
MonodromicElement ho_left_simple(int s, const MonodromicElement& x);
// (A_w 1_L)(A_u 1_L') = [L = u L'] A_w A_u 1_L'.
MonodromicElement ho_mul(const MonodromicElement& a, const MonodromicElement& b);
// A_w 1_L for every term c A_w of a Hecke element.
MonodromicElement from_hecke(const HeckeElement& h, const TorusCharacter& L);
// Forgets the (single) character: A_w 1_L -> A_w. Throws if several characters occur.
HeckeElement to_hecke(const MonodromicElement& x);

// Image of a generator letter on an element (left multiplication): with L' the
// character met by A_s,
//   a_s      -> +v A~_s^{-1} = A_s - (v^2 - 1)   if s in W°_{L'},   -A~_s otherwise;
//   a_s^{-1} -> v^{-1} A~_s = v^{-2} A_s         if s in W°_{L'},   -A~_s otherwise.
MonodromicElement pi_letter(int letter, const MonodromicElement& x);
// pi_L(word) = pi(word) 1_L, evaluated right to left.
MonodromicElement pi_L(const Word& word, const TorusCharacter& L);
MonodromicElement pi_L(const WordCombination& x, const TorusCharacter& L);
// pi = pi_L at the trivial character, as an element of the Hecke algebra of S_{n+1}.
HeckeElement pi_hecke(const WordCombination& x, int n);

struct MonodromicCheck {
  std::string name;
  bool pass = false;
  std::size_t instances = 0;
};
// The displayed H_o relations (idempotents, length-additive products, character
// transport, quadratic relation), the braid relations, the trivial-orbit
// comparison with the Hecke algebra, and the corner-unit property of pi_L,
// for every orbit of characters of SL_{n+1} with the given modulus.
std::vector<MonodromicCheck> verify_ho_relations(int n, std::uint32_t modulus);

struct PiConsistencyReport {
  int n = 0;
  std::size_t pairs = 0;          // word pairs sampled
  std::size_t bt_equal = 0;       // pairs whose E(v) images agree
  std::size_t pi_equal = 0;       // pairs whose pi_L images agree for every L
  std::size_t characters = 0;     // characters L tested per pair
  bool pass = false;
};
// Samples pairs (x, x') of word combinations related by the defining relations
// (braid, far commutation, a_s a_s^{-1} = 1, the cubic), checks that their
// images in E(v) agree and that pi_L(x) = pi_L(x') for every character L of
// SL_{n+1} with the given modulus (n <= 2).
PiConsistencyReport pi_consistency(int n, int trials, std::uint64_t seed, std::uint32_t modulus = 3);

}  // namespace klbt
