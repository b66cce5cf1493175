#pragma once

#include <klbt/scalars/laurent.hpp>

#include <string>

namespace klbt {

// Element of Q(v) in canonical form num/den where num is a Laurent polynomial
// and den is an ordinary polynomial that is monic with nonzero constant term
// and coprime to num. Equality is therefore structural.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}                // NOLINT
  RationalFunction(const BigRational& c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(const LaurentPoly& p) : num_(p), den_(1) {}  // NOLINT
  // General constructor; throws MathError when den is zero.
  RationalFunction(const LaurentPoly& num, const LaurentPoly& den);

  static RationalFunction v(int exponent = 1) { return LaurentPoly::v(exponent); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }
  // Rough size used by pivot selection: constants are cheapest.
  std::size_t cost() const { return num_.num_coeffs() + den_.num_coeffs() - 1; }

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  RationalFunction operator-() const;
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

  RationalFunction inverse() const;
  // v -> v^{-1}.
  RationalFunction bar() const;
  // Substitutes v -> v0; throws MathError at a pole.
  BigRational specialize(const BigRational& v0) const;

  std::string str(const char* var = "v") const;

 private:
  void normalize();
  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace klbt
