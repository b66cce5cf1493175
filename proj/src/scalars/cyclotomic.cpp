#include <klbt/scalars/cyclotomic.hpp>

#include <map>
#include <mutex>
#include <sstream>

namespace klbt {

polyq::Poly cyclotomic_polynomial(int N) {
  if (N < 1) throw MathError("cyclotomic_polynomial: N must be positive");
  // x^N - 1 divided by Phi_d for every proper divisor d of N.
  polyq::Poly p(static_cast<std::size_t>(N) + 1, BigRational(0));
  p[0] = -1;
  p[N] = 1;
  for (int d = 1; d < N; ++d) {
    if (N % d != 0) continue;
    polyq::Poly q, r;
    polyq::divmod(p, cyclotomic_polynomial(d), q, r);
    p = std::move(q);
  }
  return p;
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(int N) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;

  auto f = std::make_shared<CyclotomicField>();
  f->N = N;
  f->phi = cyclotomic_polynomial(N);
  f->degree = polyq::degree(f->phi);
  const auto d = static_cast<std::size_t>(f->degree);
  // zeta^k mod Phi_N by repeated multiplication with zeta.
  std::vector<BigRational> cur(d, BigRational(0));
  cur[0] = 1;
  const std::size_t upto = std::max<std::size_t>(static_cast<std::size_t>(N), 2 * d - 1);
  std::vector<std::vector<BigRational>> all;
  for (std::size_t k = 0; k < upto; ++k) {
    all.push_back(cur);
    // multiply by zeta: shift up, reduce zeta^d = -sum phi_i zeta^i
    BigRational top = cur[d - 1];
    for (std::size_t i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (sgn(top) != 0)
      for (std::size_t i = 0; i < d; ++i) cur[i] -= top * f->phi[i];
  }
  f->powers.assign(all.begin(), all.begin() + N);
  for (std::size_t j = d; j + 1 < 2 * d; ++j) f->reduction.push_back(all[j]);
  cache.emplace(N, f);
  return f;
}

Cyclotomic::Cyclotomic(const BigRational& c) {
  if (sgn(c) != 0) c_.push_back(c);
}

Cyclotomic::Cyclotomic(std::shared_ptr<const CyclotomicField> field, const BigRational& c) : field_(std::move(field)) {
  c_.assign(static_cast<std::size_t>(field_->degree), BigRational(0));
  c_[0] = c;
}

Cyclotomic Cyclotomic::zeta_power(const std::shared_ptr<const CyclotomicField>& field, long k) {
  Cyclotomic z;
  z.field_ = field;
  const long N = field->N;
  z.c_ = field->powers[static_cast<std::size_t>(((k % N) + N) % N)];
  return z;
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

std::size_t Cyclotomic::cost() const {
  std::size_t n = 0;
  for (const auto& x : c_) n += sgn(x) != 0;
  return n;
}

void Cyclotomic::lift(const std::shared_ptr<const CyclotomicField>& f) {
  if (field_ || !f) return;
  const BigRational c = rational_part();
  field_ = f;
  c_.assign(static_cast<std::size_t>(f->degree), BigRational(0));
  c_[0] = c;
}

static void check_same(const std::shared_ptr<const CyclotomicField>& a, const std::shared_ptr<const CyclotomicField>& b) {
  if (a && b && a->N != b->N) throw MathError("Cyclotomic: mixing different fields");
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  check_same(field_, o.field_);
  lift(o.field_);
  if (!field_) return *this = Cyclotomic(rational_part() + o.rational_part());
  if (!o.field_) {
    c_[0] += o.rational_part();
    return *this;
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  check_same(a.field_, b.field_);
  if (!a.field_ || !b.field_) {
    const Cyclotomic& s = a.field_ ? b : a;
    const Cyclotomic& e = a.field_ ? a : b;
    const BigRational c = s.rational_part();
    if (!e.field_) return Cyclotomic(c * e.rational_part());
    Cyclotomic r = e;
    for (auto& x : r.c_) x *= c;
    return r;
  }
  const auto& f = *a.field_;
  const std::size_t d = static_cast<std::size_t>(f.degree);
  std::vector<BigRational> prod(2 * d - 1, BigRational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (sgn(b.c_[j]) != 0) prod[i + j] += a.c_[i] * b.c_[j];
  }
  Cyclotomic r;
  r.field_ = a.field_;
  r.c_.assign(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(d));
  for (std::size_t j = d; j < prod.size(); ++j) {
    if (sgn(prod[j]) == 0) continue;
    const auto& red = f.reduction[j - d];
    for (std::size_t i = 0; i < d; ++i) r.c_[i] += prod[j] * red[i];
  }
  return r;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) { return *this = *this * o; }

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (!field_ || !o.field_) {
    const Cyclotomic& s = field_ ? o : *this;
    const Cyclotomic& e = field_ ? *this : o;
    return e.is_rational() && e.rational_part() == s.rational_part();
  }
  return field_->N == o.field_->N && c_ == o.c_;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw MathError("Cyclotomic: division by zero");
  if (!field_) return Cyclotomic(BigRational(1) / rational_part());
  polyq::Poly a = c_;
  polyq::trim(a);
  polyq::Poly s = polyq::inverse_mod(a, field_->phi);
  Cyclotomic r;
  r.field_ = field_;
  r.c_.assign(static_cast<std::size_t>(field_->degree), BigRational(0));
  for (std::size_t i = 0; i < s.size(); ++i) r.c_[i] = s[i];
  return r;
}

Cyclotomic Cyclotomic::conj() const {
  if (!field_) return *this;
  Cyclotomic r(field_, BigRational(0));
  const int N = field_->N;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    const auto& p = field_->powers[static_cast<std::size_t>((N - static_cast<int>(i)) % N)];
    for (std::size_t j = 0; j < p.size(); ++j) r.c_[j] += c_[i] * p[j];
  }
  return r;
}

std::string Cyclotomic::str() const {
  if (is_zero()) return "0";
  if (!field_) return rational_part().get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[i].get_str() << ")";
    if (i > 0) os << "*z" << field_->N << "^" << i;
  }
  return os.str();
}

}  // namespace klbt
