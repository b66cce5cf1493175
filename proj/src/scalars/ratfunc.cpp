#include <klbt/scalars/poly_q.hpp>
#include <klbt/scalars/ratfunc.hpp>

namespace klbt {

namespace {

// Ordinary part of a Laurent polynomial with nonnegative exponents shifted to 0.
polyq::Poly to_poly(const LaurentPoly& p) { return p.dense(); }

LaurentPoly from_poly(polyq::Poly p) { return LaurentPoly::from_dense(0, std::move(p)); }

}  // namespace

RationalFunction::RationalFunction(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw MathError("RationalFunction: zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  // Move the v-power of the denominator into the numerator.
  const int d0 = den_.low_degree();
  if (d0 != 0) {
    den_ = den_.shifted(-d0);
    num_ = num_.shifted(-d0);
  }
  if (den_.num_coeffs() == 1) {
    num_ *= BigRational(1) / den_.leading_coeff();
    den_ = 1;
    return;
  }
  const int n0 = num_.low_degree();
  polyq::Poly g = polyq::gcd(to_poly(num_), to_poly(den_));
  if (g.size() > 1) {
    polyq::Poly q, r;
    polyq::divmod(to_poly(num_), g, q, r);
    num_ = from_poly(std::move(q)).shifted(n0);
    polyq::divmod(to_poly(den_), g, q, r);
    den_ = from_poly(std::move(q));
  }
  const BigRational lead = den_.leading_coeff();
  if (lead != 1) {
    const BigRational inv = BigRational(1) / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) normalize();
    else if (num_.is_zero()) den_ = 1;
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RationalFunction();
  num_ *= o.num_;
  if (den_.is_one() && o.den_.is_one()) return *this;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw MathError("RationalFunction: division by zero");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::bar() const {
  if (den_.is_one()) return RationalFunction(num_.bar());
  return RationalFunction(num_.bar(), den_.bar());
}

BigRational RationalFunction::specialize(const BigRational& v0) const {
  const BigRational d = den_.evaluate(v0);
  if (sgn(d) == 0) throw MathError("RationalFunction::specialize: pole at v = " + v0.get_str());
  return num_.evaluate(v0) / d;
}

std::string RationalFunction::str(const char* var) const {
  if (den_.is_one()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace klbt
