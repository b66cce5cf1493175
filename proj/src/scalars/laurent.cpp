#include <klbt/scalars/laurent.hpp>

#include <algorithm>
#include <sstream>

namespace klbt {

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

LaurentPoly::LaurentPoly(const BigRational& c) {
  if (sgn(c) != 0) coeffs_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const BigRational& c, int exponent) {
  LaurentPoly p(c);
  if (!p.is_zero()) p.low_ = exponent;
  return p;
}

LaurentPoly LaurentPoly::from_dense(int low, std::vector<BigRational> coeffs) {
  LaurentPoly p;
  p.low_ = low;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

bool LaurentPoly::is_one() const { return coeffs_.size() == 1 && low_ == 0 && coeffs_[0] == 1; }

BigRational LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high_degree()) return 0;
  return coeffs_[exponent - low_];
}

void LaurentPoly::trim() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const BigRational& c) { return sgn(c) != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](const BigRational& c) { return sgn(c) != 0; });
  coeffs_.erase(last.base(), coeffs_.end());
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
}

static void add_into(const LaurentPoly& o, bool negate, int& low, std::vector<BigRational>& coeffs) {
  if (o.is_zero()) return;
  if (coeffs.empty()) {
    low = o.low_degree();
    coeffs = o.dense();
    if (negate)
      for (auto& c : coeffs) c = -c;
    return;
  }
  const int new_low = std::min(low, o.low_degree());
  const int new_high = std::max(low + static_cast<int>(coeffs.size()) - 1, o.high_degree());
  if (new_low < low) coeffs.insert(coeffs.begin(), static_cast<std::size_t>(low - new_low), BigRational(0));
  coeffs.resize(static_cast<std::size_t>(new_high - new_low + 1));
  low = new_low;
  const auto& oc = o.dense();
  const int off = o.low_degree() - low;
  for (std::size_t i = 0; i < oc.size(); ++i) {
    if (negate)
      coeffs[off + i] -= oc[i];
    else
      coeffs[off + i] += oc[i];
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  add_into(o, false, low_, coeffs_);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  add_into(o, true, low_, coeffs_);
  trim();
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPoly::from_dense(a.low_ + b.low_, std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const BigRational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  if (is_zero()) return {};
  LaurentPoly r;
  r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  r.low_ = -high_degree();
  return r;
}

BigRational LaurentPoly::evaluate(const BigRational& v0) const {
  if (is_zero()) return 0;
  if (low_ < 0 && sgn(v0) == 0) throw MathError("LaurentPoly::evaluate: negative power at v = 0");
  // Horner on the ordinary part, then scale by v0^low.
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v0 + *it;
  BigRational scale = 1;
  const BigRational base = low_ >= 0 ? v0 : BigRational(1) / v0;
  for (int i = 0; i < std::abs(low_); ++i) scale *= base;
  return acc * scale;
}

std::strong_ordering LaurentPoly::compare(const LaurentPoly& o) const {
  if (auto c = coeffs_.size() <=> o.coeffs_.size(); c != 0) return c;
  if (auto c = low_ <=> o.low_; c != 0) return c;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const int c = cmp(coeffs_[i], o.coeffs_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string LaurentPoly::str(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = high_degree(); e >= low_; --e) {
    BigRational c = coeffs_[e - low_];
    if (sgn(c) == 0) continue;
    const bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace klbt
