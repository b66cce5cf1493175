#include <klbt/hecke/hecke.hpp>
#include <klbt/linalg/echelon.hpp>

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace klbt {

namespace {

const LaurentPoly kZero;

LaurentPoly v_pow(int k) { return LaurentPoly::v(k); }

}  // namespace

HeckeElement HeckeElement::basis(const Permutation& w, const LaurentPoly& c) {
  HeckeElement h(w.size());
  h.add_term(w, c);
  return h;
}

LaurentPoly HeckeElement::coeff(const Permutation& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void HeckeElement::add_term(const Permutation& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  if (m_ == 0) m_ = o.m_;
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  if (m_ == 0) m_ = o.m_;
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

HeckeElement& HeckeElement::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

std::string HeckeElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*A" << w.str();
  }
  return os.str();
}

HeckeElement hecke_left_simple(int i, const HeckeElement& x) {
  HeckeElement r(x.rank_m());
  const LaurentPoly v2 = v_pow(2), v2m1 = v_pow(2) - 1;
  for (const auto& [w, c] : x.terms()) {
    const Permutation sw = w.left_mul_simple(i);
    if (!w.is_left_descent(i)) {
      r.add_term(sw, c);
    } else {
      r.add_term(w, v2m1 * c);
      r.add_term(sw, v2 * c);
    }
  }
  return r;
}

HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b) {
  HeckeElement r(std::max(a.rank_m(), b.rank_m()));
  for (const auto& [x, c] : a.terms()) {
    HeckeElement t = b;
    const auto word = x.reduced_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) t = hecke_left_simple(*it, t);
    r += t * c;
  }
  return r;
}

HeckeElement tilde_basis(const Permutation& w) { return HeckeElement::basis(w, v_pow(-w.length())); }

HeckeElement tilde_inverse(const Permutation& w) {
  // A~_w = A~_{i1} ... A~_{ik}, so A~_w^{-1} = A~_{ik}^{-1} ... A~_{i1}^{-1}.
  HeckeElement r = HeckeElement::basis(Permutation::identity(w.size()));
  const LaurentPoly vinv = v_pow(-1), shift = v_pow(-1) - v_pow(1);
  for (int i : w.reduced_word()) r = hecke_left_simple(i, r) * vinv + r * shift;
  return r;
}

namespace {

// bar(A_w) = A_{j1}^{-1} ... A_{jk}^{-1} for a reduced word w = s_{j1} ... s_{jk},
// with A_s^{-1} = v^{-2} A_s + (v^{-2} - 1).
HeckeElement bar_of_basis(const Permutation& w) {
  static std::mutex mu;
  static std::map<Permutation, HeckeElement> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
  }
  HeckeElement r = HeckeElement::basis(Permutation::identity(w.size()));
  const LaurentPoly vm2 = v_pow(-2), shift = v_pow(-2) - 1;
  const auto word = w.reduced_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = hecke_left_simple(*it, r) * vm2 + r * shift;
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(w, r);
  return r;
}

}  // namespace

HeckeElement bar_involution(const HeckeElement& a) {
  HeckeElement r(a.rank_m());
  for (const auto& [w, c] : a.terms()) r += bar_of_basis(w) * c.bar();
  return r;
}

LaurentPoly q_to_v(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  std::vector<BigRational> dense(2 * p.num_coeffs() - 1, BigRational(0));
  for (std::size_t i = 0; i < p.num_coeffs(); ++i) dense[2 * i] = p.dense()[i];
  return LaurentPoly::from_dense(2 * p.low_degree(), std::move(dense));
}

KLTable KLTable::compute(int m) {
  if (m < 1 || m > 7) throw std::invalid_argument("KLTable: requires 1 <= n+1 <= 7");
  KLTable t;
  t.m_ = m;
  t.elems_ = all_permutations(m);
  const std::size_t N = t.elems_.size();
  t.p_.resize(N);
  std::vector<std::size_t> order(N);
  for (std::size_t k = 0; k < N; ++k) order[k] = k;
  std::vector<int> len(N);
  for (std::size_t k = 0; k < N; ++k) len[k] = t.elems_[k].length();
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return len[a] < len[b]; });

  const LaurentPoly one(1);
  for (std::size_t wi : order) {
    const Permutation& w = t.elems_[wi];
    if (w.is_identity()) {
      t.p_[wi][static_cast<std::uint32_t>(wi)] = one;
      continue;
    }
    int s = 1;
    while (!w.is_left_descent(s)) ++s;
    const Permutation v = w.left_mul_simple(s);
    // Correction terms: z < v with s z < z and mu(z, v) != 0.
    std::vector<std::pair<Permutation, BigRational>> corr;
    for (const auto& [zi, poly] : t.p_[v.lex_index()]) {
      const Permutation& z = t.elems_[zi];
      if (z == v || !z.is_left_descent(s)) continue;
      const BigRational mu = t.mu(z, v);
      if (sgn(mu) != 0) corr.emplace_back(z, mu);
    }
    for (std::size_t xi = 0; xi < N; ++xi) {
      const Permutation& x = t.elems_[xi];
      if (!bruhat_leq(x, w)) continue;
      const bool c = x.is_left_descent(s);
      LaurentPoly p = t.P(x.left_mul_simple(s), v).shifted(c ? 0 : 1) + t.P(x, v).shifted(c ? 1 : 0);
      for (const auto& [z, mu] : corr) {
        const LaurentPoly& pxz = t.P(x, z);
        if (pxz.is_zero()) continue;
        p -= pxz.shifted((len[wi] - z.length()) / 2) * mu;
      }
      if (!p.is_zero()) t.p_[wi][static_cast<std::uint32_t>(xi)] = std::move(p);
    }
  }
  return t;
}

const LaurentPoly& KLTable::P(const Permutation& x, const Permutation& w) const {
  const auto& row = p_[w.lex_index()];
  auto it = row.find(static_cast<std::uint32_t>(x.lex_index()));
  return it == row.end() ? kZero : it->second;
}

BigRational KLTable::mu(const Permutation& x, const Permutation& w) const {
  const int d = w.length() - x.length();
  if (d <= 0 || d % 2 == 0) return 0;
  return P(x, w).coeff((d - 1) / 2);
}

namespace {

// Flattens a Hecke element into (permutation, exponent) -> coefficient.
void flatten(const HeckeElement& h, const BigRational& scale, std::map<std::pair<Permutation, int>, BigRational>& out) {
  for (const auto& [w, c] : h.terms())
    for (int e = c.low_degree(); e <= c.high_degree(); ++e) {
      const BigRational x = c.coeff(e);
      if (sgn(x) != 0) out[{w, e}] += x * scale;
    }
}

HeckeElement signed_term(const Permutation& x, const Permutation& w, int j) {
  // (-1)^{l(w)-l(x)} v^{l(x)-l(w)+2j} A~_{x^{-1}}^{-1}
  const int d = w.length() - x.length();
  LaurentPoly c = LaurentPoly::monomial(d % 2 ? -1 : 1, -d + 2 * j);
  return tilde_inverse(x.inverse()) * c;
}

}  // namespace

std::map<Permutation, LaurentPoly> kl_by_bar_invariance(const Permutation& w) {
  const int m = w.size();
  std::vector<std::pair<Permutation, int>> unknowns;
  for (const auto& x : all_permutations(m)) {
    if (x == w || !bruhat_leq(x, w)) continue;
    const int d = w.length() - x.length();
    for (int j = 0; 2 * j <= d - 1; ++j) unknowns.emplace_back(x, j);
  }
  // Equation: sum_u a_u (U_u - bar U_u) = -(T - bar T), coordinate-wise.
  std::vector<std::map<std::pair<Permutation, int>, BigRational>> cols(unknowns.size());
  std::map<std::pair<Permutation, int>, BigRational> rhs;
  std::set<std::pair<Permutation, int>> keys;
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    const HeckeElement U = signed_term(unknowns[u].first, w, unknowns[u].second);
    flatten(U, 1, cols[u]);
    flatten(bar_involution(U), -1, cols[u]);
    for (const auto& [k, _] : cols[u]) keys.insert(k);
  }
  const HeckeElement T = signed_term(w, w, 0);
  flatten(T, -1, rhs);
  flatten(bar_involution(T), 1, rhs);
  for (const auto& [k, _] : rhs) keys.insert(k);

  std::vector<std::vector<BigRational>> columns(unknowns.size());
  std::vector<BigRational> b;
  for (const auto& k : keys) {
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      auto it = cols[u].find(k);
      columns[u].push_back(it == cols[u].end() ? BigRational(0) : it->second);
    }
    auto it = rhs.find(k);
    b.push_back(it == rhs.end() ? BigRational(0) : it->second);
  }
  std::map<Permutation, LaurentPoly> out;
  out[w] = LaurentPoly(1);
  if (unknowns.empty()) return out;
  auto sol = solve_unique(columns, b);
  if (!sol) throw MathError("kl_by_bar_invariance: bar-invariance system has no unique solution");
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    LaurentPoly& p = out[unknowns[u].first];
    p += LaurentPoly::monomial((*sol)[u], unknowns[u].second);
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

HeckeElement canonical_basis(const KLTable& kl, const Permutation& w) {
  HeckeElement c(w.size());
  for (const auto& x : kl.elements()) {
    const LaurentPoly& p = kl.P(x, w);
    if (p.is_zero()) continue;
    const int d = w.length() - x.length();
    c += tilde_inverse(x.inverse()) * (q_to_v(p) * LaurentPoly::monomial(d % 2 ? -1 : 1, -d));
  }
  return c;
}

std::vector<std::pair<Permutation, BigInt>> c_expansion(const KLTable& kl, int s, const Permutation& u) {
  if (u.is_left_descent(s)) throw std::invalid_argument("c_expansion: requires l(su) > l(u)");
  const Permutation su = u.left_mul_simple(s);
  HeckeElement X = hecke_mul(canonical_basis(kl, Permutation::simple(u.size(), s)), canonical_basis(kl, u));
  std::vector<std::pair<Permutation, BigInt>> out;
  bool saw_top = false;
  while (!X.is_zero()) {
    // A maximal-length term of X can only come from C_y itself (unitriangularity).
    const Permutation* top = nullptr;
    for (const auto& [y, c] : X.terms())
      if (!top || y.length() > top->length()) top = &y;
    const Permutation y = *top;
    const HeckeElement Cy = canonical_basis(kl, y);
    const LaurentPoly gamma_poly = X.coeff(y) * LaurentPoly::v(y.length());  // C_y leads with v^{-l(y)} A_y
    if (!gamma_poly.is_constant()) throw MathError("c_expansion: non-constant coefficient for " + y.str());
    const BigRational g = gamma_poly.coeff(0);
    if (g.get_den() != 1) throw MathError("c_expansion: non-integral coefficient for " + y.str());
    X -= Cy * LaurentPoly(g);
    if (y == su) {
      if (g != 1) throw MathError("c_expansion: coefficient of C_{su} is not 1");
      saw_top = true;
    } else {
      out.emplace_back(y, g.get_num());
    }
  }
  if (!saw_top) throw MathError("c_expansion: C_{su} missing from the product");
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace klbt

namespace klbt {

std::vector<HeckeCheck> verify_hecke(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("verify_hecke requires 1 <= n <= 4");
  const int m = n + 1;
  std::vector<HeckeCheck> out;
  out.reserve(16);  // references into out are held across check() calls
  auto check = [&](const char* name) -> HeckeCheck& {
    out.push_back({name, true, 0});
    return out.back();
  };
  auto record = [](HeckeCheck& c, bool ok) {
    ++c.instances;
    c.pass = c.pass && ok;
  };
  auto A = [](const Permutation& w) { return HeckeElement::basis(w); };
  const LaurentPoly v = LaurentPoly::v();
  const auto e = Permutation::identity(m);
  const auto elems = all_permutations(m);
  {
    auto& q = check("quadratic");
    auto& b = check("braid");
    for (int i = 1; i < m; ++i) {
      const auto s = Permutation::simple(m, i);
      record(q, hecke_mul(A(s), A(s)) == A(s) * (v * v - 1) + A(e) * (v * v));
      for (int j = i + 1; j < m; ++j) {
        const auto t = Permutation::simple(m, j);
        const auto st = hecke_mul(A(s), A(t)), ts = hecke_mul(A(t), A(s));
        record(b, j == i + 1 ? hecke_mul(st, A(s)) == hecke_mul(ts, A(t)) : st == ts);
      }
    }
  }
  {
    auto& inv = check("bar_involution");
    auto& mul = check("bar_multiplicative");
    for (std::size_t i = 0; i < elems.size(); ++i) {
      const auto x = A(elems[i]) * (v + 2);
      record(inv, bar_involution(bar_involution(x)) == x);
      const auto y = A(elems[(i * 7 + 3) % elems.size()]);
      record(mul, bar_involution(hecke_mul(x, y)) == hecke_mul(bar_involution(x), bar_involution(y)));
    }
  }
  const KLTable kl = KLTable::compute(m);
  {
    auto& bar = check("canonical_bar_invariant");
    auto& lead = check("canonical_leading_term");
    for (const auto& w : elems) {
      const auto C = canonical_basis(kl, w);
      record(bar, bar_involution(C) == C);
      record(lead, C.coeff(w) == LaurentPoly::v(-w.length()));
    }
  }
  {
    auto& deg = check("kl_degree_bound");
    auto& agree = check("kl_recursion_vs_bar_solve");
    for (const auto& w : elems) {
      const auto oracle = kl_by_bar_invariance(w);
      bool same = true;
      for (const auto& x : elems) {
        const auto it = oracle.find(x);
        same = same && kl.P(x, w) == (it == oracle.end() ? LaurentPoly() : it->second);
        if (x == w || kl.P(x, w).is_zero()) continue;
        record(deg, bruhat_leq(x, w) && 2 * kl.P(x, w).high_degree() <= w.length() - x.length() - 1);
      }
      record(agree, same);
    }
  }
  {
    auto& c = check("c_expansion_integral");
    for (const auto& u : elems)
      for (int s = 1; s < m; ++s) {
        if (u.is_left_descent(s)) continue;
        bool ok = true;
        try {
          (void)c_expansion(kl, s, u);
        } catch (const MathError&) {
          ok = false;
        }
        record(c, ok);
      }
  }
  return out;
}

}  // namespace klbt
