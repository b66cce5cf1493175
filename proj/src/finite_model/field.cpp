#include <klbt/finite_model/field.hpp>
#include <klbt/scalars/rational.hpp>

#include <map>
#include <mutex>
#include <stdexcept>

namespace klbt::fm {

namespace {

std::vector<std::uint32_t> digits(std::uint32_t a, std::uint32_t p, std::uint32_t m) {
  std::vector<std::uint32_t> d(m);
  for (std::uint32_t i = 0; i < m; ++i, a /= p) d[i] = a % p;
  return d;
}

std::uint32_t undigits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  std::uint32_t a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
  return a;
}

// Product of residues a, b modulo the monic polynomial f (coefficients f[0..m], f[m] = 1).
std::uint32_t poly_mulmod(std::uint32_t a, std::uint32_t b, const std::vector<std::uint32_t>& f, std::uint32_t p,
                          std::uint32_t m) {
  const auto da = digits(a, p, m), db = digits(b, p, m);
  std::vector<std::uint32_t> prod(2 * m, 0);
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  for (std::uint32_t k = 2 * m; k-- > m;) {
    const std::uint32_t c = prod[k];
    if (c == 0) continue;
    for (std::uint32_t i = 0; i <= m; ++i) prod[k - m + i] = (prod[k - m + i] + p * p - c * f[i]) % p;
  }
  prod.resize(m);
  return undigits(prod, p);
}

}  // namespace

FiniteField::FiniteField(std::uint32_t Q) : Q_(Q) {
  if (Q < 2 || Q > kMaxSize) throw std::invalid_argument("finite field size must be in [2, 16]");
  p_ = 0;
  for (std::uint32_t d = 2; d <= Q; ++d)
    if (Q % d == 0) {
      p_ = d;
      break;
    }
  m_ = 0;
  for (std::uint32_t t = Q; t > 1; t /= p_) {
    if (t % p_ != 0) throw std::invalid_argument("finite field size must be a prime power");
    ++m_;
  }
  add_.resize(Q * Q);
  neg_.resize(Q);
  for (std::uint32_t a = 0; a < Q; ++a) {
    const auto da = digits(a, p_, m_);
    std::vector<std::uint32_t> dn(m_);
    for (std::uint32_t i = 0; i < m_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = static_cast<Elem>(undigits(dn, p_));
    for (std::uint32_t b = 0; b < Q; ++b) {
      const auto db = digits(b, p_, m_);
      std::vector<std::uint32_t> ds(m_);
      for (std::uint32_t i = 0; i < m_; ++i) ds[i] = (da[i] + db[i]) % p_;
      add_[a * Q + b] = static_cast<Elem>(undigits(ds, p_));
    }
  }
  // The first monic polynomial of degree m (ordered by its lower coefficients)
  // whose residue ring is a field.
  mul_.resize(Q * Q);
  bool found = false;
  for (std::uint32_t low = 0; low < Q && !found; ++low) {
    std::vector<std::uint32_t> f = digits(low, p_, m_);
    f.push_back(1);
    for (std::uint32_t a = 0; a < Q; ++a)
      for (std::uint32_t b = 0; b < Q; ++b) mul_[a * Q + b] = static_cast<Elem>(poly_mulmod(a, b, f, p_, m_));
    bool field = true;
    for (std::uint32_t a = 1; a < Q && field; ++a) {
      bool has_inv = false;
      for (std::uint32_t b = 1; b < Q; ++b)
        if (mul_[a * Q + b] == 1) has_inv = true;
      field = has_inv;
    }
    if (field) {
      modulus_ = f;
      found = true;
    }
  }
  if (!found) throw std::logic_error("no irreducible polynomial found");
  // Generator: smallest element of multiplicative order Q - 1.
  for (std::uint32_t g = 1; g < Q; ++g) {
    std::uint32_t x = g, order = 1;
    while (x != 1) {
      x = mul_[x * Q + g];
      ++order;
    }
    if (order == Q - 1) {
      gen_ = static_cast<Elem>(g);
      break;
    }
  }
  exp_.resize(Q - 1);
  log_.assign(Q, 0);
  Elem x = 1;
  for (std::uint32_t k = 0; k + 1 < Q; ++k) {
    exp_[k] = x;
    log_[x] = k;
    x = mul(x, gen_);
  }
  trace_.resize(Q);
  for (std::uint32_t a = 0; a < Q; ++a) {
    // Tr(a) = a + a^p + ... + a^(p^(m-1)) lies in the prime field {0, ..., p-1}.
    Elem t = 0, y = static_cast<Elem>(a);
    for (std::uint32_t i = 0; i < m_; ++i) {
      t = add(t, y);
      Elem z = 1;
      for (std::uint32_t j = 0; j < p_; ++j) z = mul(z, y);
      y = z;
    }
    if (t >= p_) throw std::logic_error("trace outside the prime field");
    trace_[a] = t;
  }
}

std::shared_ptr<const FiniteField> FiniteField::get(std::uint32_t Q) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::shared_ptr<const FiniteField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[Q];
  if (!slot) slot = std::make_shared<const FiniteField>(Q);
  return slot;
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw MathError("inverse of zero in a finite field");
  return exp_[(Q_ - 1 - log_[a]) % (Q_ - 1)];
}

FiniteField::Elem FiniteField::gen_power(std::int64_t k) const {
  const std::int64_t ord = Q_ - 1;
  return exp_[static_cast<std::size_t>(((k % ord) + ord) % ord)];
}

std::uint32_t FiniteField::log(Elem a) const {
  if (a == 0) throw MathError("logarithm of zero in a finite field");
  return log_[a];
}

std::string FiniteField::str(Elem a) const {
  if (m_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  return "g^" + std::to_string(log_[a]);
}

}  // namespace klbt::fm
