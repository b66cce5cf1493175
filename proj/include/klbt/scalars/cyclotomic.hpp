#pragma once

#include <klbt/scalars/poly_q.hpp>

#include <memory>
#include <string>
#include <vector>

namespace klbt {

// Q(zeta_N) with the power basis 1, zeta, ..., zeta^(phi(N)-1).
struct CyclotomicField {
  int N = 1;
  int degree = 1;
  polyq::Poly phi;                                   // Phi_N, monic with integer coefficients
  std::vector<std::vector<BigRational>> powers;      // zeta^k in the power basis, k = 0..N-1
  std::vector<std::vector<BigRational>> reduction;   // zeta^(degree + j) for j = 0..degree-2

  static std::shared_ptr<const CyclotomicField> get(int N);
};

polyq::Poly cyclotomic_polynomial(int N);

// Element of Q(zeta_N). A default-constructed or rational-constructed element
// carries no field and acts as a rational constant in mixed arithmetic, so
// Cyclotomic(0) and Cyclotomic(1) work in generic code.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(long c) : Cyclotomic(BigRational(c)) {}  // NOLINT
  Cyclotomic(const BigRational& c);                    // NOLINT
  Cyclotomic(std::shared_ptr<const CyclotomicField> field, const BigRational& c);

  static Cyclotomic zeta_power(const std::shared_ptr<const CyclotomicField>& field, long k);

  const std::shared_ptr<const CyclotomicField>& field() const { return field_; }
  const std::vector<BigRational>& coords() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  BigRational rational_part() const { return c_.empty() ? BigRational(0) : c_[0]; }
  std::size_t cost() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }
  Cyclotomic operator-() const;
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  bool operator==(const Cyclotomic& o) const;

  Cyclotomic inverse() const;
  // Complex conjugation zeta -> zeta^{-1}.
  Cyclotomic conj() const;
  std::string str() const;

 private:
  void lift(const std::shared_ptr<const CyclotomicField>& f);
  std::shared_ptr<const CyclotomicField> field_;
  std::vector<BigRational> c_;  // size degree when field_ is set, else size <= 1
};

}  // namespace klbt
