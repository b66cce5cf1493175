#pragma once

#include <klbt/scalars/rational.hpp>

#include <compare>
#include <string>
#include <vector>

namespace klbt {

// Laurent polynomial in v with rational coefficients. Stored densely from the
// lowest to the highest nonzero exponent; the zero polynomial has no
// coefficients at all.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c) : LaurentPoly(BigRational(c)) {}  // NOLINT
  LaurentPoly(const BigRational& c);                    // NOLINT

  static LaurentPoly monomial(const BigRational& c, int exponent);
  static LaurentPoly v(int exponent = 1) { return monomial(1, exponent); }
  // Builds sum_i coeffs[i] v^(low + i) and trims zeros.
  static LaurentPoly from_dense(int low, std::vector<BigRational> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1 && (is_zero() || low_ == 0); }
  bool is_one() const;
  // Exponent range; meaningless for the zero polynomial.
  int low_degree() const { return low_; }
  int high_degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::size_t num_coeffs() const { return coeffs_.size(); }
  BigRational coeff(int exponent) const;
  const std::vector<BigRational>& dense() const { return coeffs_; }
  BigRational leading_coeff() const { return coeffs_.back(); }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const BigRational& c);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const BigRational& c) { return a *= c; }
  bool operator==(const LaurentPoly& o) const { return low_ == o.low_ && coeffs_ == o.coeffs_; }

  // Multiplies by v^k.
  LaurentPoly shifted(int k) const;
  // v -> v^{-1}.
  LaurentPoly bar() const;
  // Substitutes v -> v0; v0 must be nonzero when negative exponents occur.
  BigRational evaluate(const BigRational& v0) const;

  // Total order used only for deterministic containers.
  std::strong_ordering compare(const LaurentPoly& o) const;
  std::string str(const char* var = "v") const;

 private:
  void trim();
  int low_ = 0;
  std::vector<BigRational> coeffs_;
};

}  // namespace klbt
