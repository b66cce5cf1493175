#include <klbt/scalars/poly_q.hpp>

#include <algorithm>

namespace klbt::polyq {

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly scale(const Poly& a, const BigRational& c) {
  if (sgn(c) == 0) return {};
  Poly r = a;
  for (auto& x : r) x *= c;
  return r;
}

void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.empty()) throw MathError("polynomial division by zero");
  r = a;
  q.clear();
  if (r.size() < b.size()) return;
  q.assign(r.size() - b.size() + 1, BigRational(0));
  const BigRational inv_lead = BigRational(1) / b.back();
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    const BigRational c = r.back() * inv_lead;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    r.pop_back();  // leading term cancels exactly
    trim(r);
  }
  trim(q);
}

Poly make_monic(const Poly& a) {
  if (a.empty() || a.back() == 1) return a;
  return scale(a, BigRational(1) / a.back());
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b, q, r;
  while (!y.empty()) {
    divmod(x, y, q, r);
    x = std::move(y);
    y = make_monic(r);
  }
  return make_monic(x);
}

Poly inverse_mod(const Poly& a, const Poly& modulus) {
  // Extended Euclid tracking only the coefficient of a.
  Poly r0 = modulus, r1 = a, s0, s1{BigRational(1)}, q, r;
  {
    Poly tmp;
    divmod(r1, modulus, tmp, r1);
  }
  while (!r1.empty()) {
    divmod(r0, r1, q, r);
    Poly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw MathError("inverse_mod: element is not invertible");
  Poly out = scale(s0, BigRational(1) / r0[0]);
  Poly qq;
  divmod(out, modulus, qq, out);
  return out;
}

}  // namespace klbt::polyq
