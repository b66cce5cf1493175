#pragma once

#include <klbt/coxeter/permutation.hpp>
#include <klbt/scalars/laurent.hpp>

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace klbt {

// Element of the Hecke algebra of S_m over Q[v, v^-1] in the standard basis
// {A_w}: A_s^2 = (v^2 - 1) A_s + v^2. The coefficients of every element in scope
// are Laurent polynomials, so LaurentPoly is the coefficient type.
class HeckeElement {
 public:
  using Terms = std::map<Permutation, LaurentPoly>;
  HeckeElement() = default;
  explicit HeckeElement(int m) : m_(m) {}
  static HeckeElement basis(const Permutation& w, const LaurentPoly& c = LaurentPoly(1));

  int rank_m() const { return m_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const Permutation& w) const;
  void add_term(const Permutation& w, const LaurentPoly& c);

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  HeckeElement& operator*=(const LaurentPoly& c);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(HeckeElement a, const LaurentPoly& c) { return a *= c; }
  bool operator==(const HeckeElement& o) const { return m_ == o.m_ && terms_ == o.terms_; }
  std::string str() const;

 private:
  int m_ = 0;
  Terms terms_;
};

// A_s * x for the simple reflection s_i.
HeckeElement hecke_left_simple(int i, const HeckeElement& x);
HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b);
// A~_w = v^{-l(w)} A_w.
HeckeElement tilde_basis(const Permutation& w);
// A~_w^{-1} as the product of A~_s^{-1} = A~_s - v + v^{-1} along a reversed reduced word.
HeckeElement tilde_inverse(const Permutation& w);
// Semilinear involution: v -> v^{-1}, A_w -> A_{w^{-1}}^{-1}.
HeckeElement bar_involution(const HeckeElement& a);

// Kazhdan-Lusztig polynomials P_{x,w} of S_m stored as Laurent polynomials in q = v^2.
class KLTable {
 public:
  // Classical recursion over left descents with mu-corrections; m <= 7.
  static KLTable compute(int m);
  int rank_m() const { return m_; }
  // P_{x,w} as a polynomial in q; zero unless x <= w.
  const LaurentPoly& P(const Permutation& x, const Permutation& w) const;
  // Coefficient of q^{(l(w)-l(x)-1)/2} in P_{x,w} (0 when the parity is even).
  BigRational mu(const Permutation& x, const Permutation& w) const;
  const std::vector<Permutation>& elements() const { return elems_; }

 private:
  int m_ = 0;
  std::vector<Permutation> elems_;                     // lex order
  std::vector<std::map<std::uint32_t, LaurentPoly>> p_;  // p_[w][x]
};

// Substitutes q = v^2.
LaurentPoly q_to_v(const LaurentPoly& p);

// Oracle: P_{x,w} for all x by solving bar(C_w) = C_w with P_{w,w} = 1 and the
// degree bound, as a linear system over Q in the unknown coefficients.
std::map<Permutation, LaurentPoly> kl_by_bar_invariance(const Permutation& w);

// Convention: C_w = sum_{x <= w} (-1)^{l(w)-l(x)} v^{l(x)-l(w)} P_{x,w}(v^2) A~_{x^{-1}}^{-1}.
HeckeElement canonical_basis(const KLTable& kl, const Permutation& w);

// Integer gamma_y with C_s C_u = C_{su} + sum_y gamma_y C_y (requires l(su) > l(u)).
// Throws MathError when a coefficient is not an integer.
std::vector<std::pair<Permutation, BigInt>> c_expansion(const KLTable& kl, int s, const Permutation& u);

struct HeckeCheck {
  std::string name;
  bool pass = true;
  std::size_t instances = 0;
};
// Hecke/KL suite on S_{n+1} (n <= 4): quadratic and braid relations, bar
// involutivity and multiplicativity on basis pairs, bar-invariance and leading
// coefficient of every C_w, the degree bound for P_{x,w}, agreement of the
// recursion with the bar-invariance solve, and integrality of c_expansion.
std::vector<HeckeCheck> verify_hecke(int n);

}  // namespace klbt
