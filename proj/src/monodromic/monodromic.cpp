#include <klbt/monodromic/monodromic.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace klbt {

// ---- TorusCharacter -----------------------------------------------------------

TorusCharacter::TorusCharacter(std::uint32_t modulus, std::vector<std::uint32_t> exponents)
    : mod_(modulus), exps_(std::move(exponents)) {
  if (mod_ == 0) throw std::invalid_argument("TorusCharacter: modulus must be positive");
  for (auto& e : exps_) e %= mod_;
}

TorusCharacter TorusCharacter::trivial(int n, std::uint32_t modulus) {
  return TorusCharacter(modulus, std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0));
}

bool TorusCharacter::is_trivial() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
}

TorusCharacter TorusCharacter::act(const Permutation& w) const {
  const int m = n() + 1;
  if (w.size() != m) throw std::invalid_argument("TorusCharacter::act: rank mismatch");
  const Permutation wi = w.inverse();
  const std::uint32_t last = coord(wi(m));
  std::vector<std::uint32_t> e(static_cast<std::size_t>(n()));
  for (int i = 1; i <= n(); ++i) e[i - 1] = (coord(wi(i)) + mod_ - last) % mod_;
  return TorusCharacter(mod_, std::move(e));
}

std::string TorusCharacter::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < exps_.size(); ++i) os << (i ? "," : "") << exps_[i];
  os << ")/" << mod_;
  return os.str();
}

std::vector<std::pair<int, int>> w_circle(const TorusCharacter& theta) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= theta.n() + 1; ++i)
    for (int j = i + 1; j <= theta.n() + 1; ++j)
      if (theta.in_w_circle(i, j)) out.emplace_back(i, j);
  return out;
}

std::vector<TorusCharacter> orbit(const TorusCharacter& theta) {
  std::set<TorusCharacter> seen;
  for (const auto& w : all_permutations(theta.n() + 1)) seen.insert(theta.act(w));
  return {seen.begin(), seen.end()};
}

std::vector<TorusCharacter> all_characters(int n, std::uint32_t modulus) {
  std::vector<TorusCharacter> out;
  std::vector<std::uint32_t> e(static_cast<std::size_t>(n), 0);
  while (true) {
    out.emplace_back(modulus, e);
    int i = 0;
    while (i < n && ++e[i] == modulus) e[i++] = 0;
    if (i == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- MonodromicElement ----------------------------------------------------------

MonodromicElement MonodromicElement::basis(const Permutation& w, const TorusCharacter& L, const RationalFunction& c) {
  MonodromicElement x;
  x.add_term(w, L, c);
  return x;
}

MonodromicElement MonodromicElement::idempotent(const TorusCharacter& L) {
  return basis(Permutation::identity(L.n() + 1), L);
}

MonodromicElement MonodromicElement::unit(const TorusCharacter& L) { return standard(Permutation::identity(L.n() + 1), L); }

MonodromicElement MonodromicElement::standard(const Permutation& w, const TorusCharacter& any_in_orbit) {
  MonodromicElement x;
  for (const auto& L : orbit(any_in_orbit)) x.add_term(w, L, RationalFunction(1));
  return x;
}

RationalFunction MonodromicElement::coeff(const Permutation& w, const TorusCharacter& L) const {
  auto it = terms_.find({w, L});
  return it == terms_.end() ? RationalFunction(0) : it->second;
}

void MonodromicElement::add_term(const Permutation& w, const TorusCharacter& L, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({w, L}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MonodromicElement& MonodromicElement::operator+=(const MonodromicElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

MonodromicElement& MonodromicElement::operator-=(const MonodromicElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

MonodromicElement& MonodromicElement::operator*=(const RationalFunction& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, x] : terms_) x *= c;
  return *this;
}

std::string MonodromicElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*A" << k.first.str() << "*1" << k.second.str();
  }
  return os.str();
}

std::map<MonodromicElement::Key, BigRational> MonodromicElement::specialize(const BigRational& v0) const {
  std::map<Key, BigRational> out;
  for (const auto& [k, c] : terms_) {
    BigRational x = c.specialize(v0);
    if (x != 0) out.emplace(k, x);
  }
  return out;
}

// ---- products ------------------------------------------------------------------

namespace {
const RationalFunction& v2() {
  static const RationalFunction x = RationalFunction::v(2);
  return x;
}
const RationalFunction& v2m1() {
  static const RationalFunction x = RationalFunction::v(2) - RationalFunction(1);
  return x;
}
bool simple_in_circle(int s, const TorusCharacter& L) { return L.in_w_circle(s, s + 1); }
}  // namespace

MonodromicElement ho_left_simple(int s, const MonodromicElement& x) {
  MonodromicElement out;
  for (const auto& [k, c] : x.terms()) {
    const auto& [u, L] = k;
    if (s < 1 || s >= u.size()) throw std::invalid_argument("ho_left_simple: s out of range");
    const Permutation su = u.left_mul_simple(s);
    if (su.length() > u.length()) {
      out.add_term(su, L, c);
    } else {
      out.add_term(su, L, c * v2());
      if (simple_in_circle(s, L.act(su))) out.add_term(u, L, c * v2m1());
    }
  }
  return out;
}

MonodromicElement ho_mul(const MonodromicElement& a, const MonodromicElement& b) {
  MonodromicElement out;
  for (const auto& [ka, ca] : a.terms()) {
    const std::vector<int> word = ka.first.reduced_word();
    for (const auto& [kb, cb] : b.terms()) {
      if (ka.second != kb.second.act(kb.first)) continue;  // 1_L A_u 1_L' = 0 unless L = u L'
      MonodromicElement x = MonodromicElement::basis(kb.first, kb.second, ca * cb);
      for (auto it = word.rbegin(); it != word.rend(); ++it) x = ho_left_simple(*it, x);
      out += x;
    }
  }
  return out;
}

MonodromicElement from_hecke(const HeckeElement& h, const TorusCharacter& L) {
  MonodromicElement out;
  for (const auto& [w, c] : h.terms()) out.add_term(w, L, RationalFunction(c));
  return out;
}

HeckeElement to_hecke(const MonodromicElement& x) {
  HeckeElement out;
  const TorusCharacter* L = nullptr;
  for (const auto& [k, c] : x.terms()) {
    if (L && *L != k.second) throw std::invalid_argument("to_hecke: several characters");
    L = &k.second;
    if (!c.is_laurent()) throw MathError("to_hecke: coefficient is not a Laurent polynomial: " + c.str());
    if (out.rank_m() == 0) out = HeckeElement(k.first.size());
    out.add_term(k.first, c.num());
  }
  return out;
}

MonodromicElement pi_letter(int letter, const MonodromicElement& x) {
  const int s = letter > 0 ? letter : -letter;
  static const RationalFunction minus_vinv = RationalFunction(LaurentPoly::monomial(-1, -1));
  static const RationalFunction vm2 = RationalFunction::v(-2);
  MonodromicElement out;
  for (const auto& [k, c] : x.terms()) {
    const auto& [u, L] = k;
    const MonodromicElement term = MonodromicElement::basis(u, L, c);
    const MonodromicElement As = ho_left_simple(s, term);
    if (!simple_in_circle(s, L.act(u))) {
      out += As * minus_vinv;
    } else if (letter > 0) {
      out += As;
      out -= term * v2m1();
    } else {
      out += As * vm2;
    }
  }
  return out;
}

MonodromicElement pi_L(const Word& word, const TorusCharacter& L) {
  MonodromicElement x = MonodromicElement::idempotent(L);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int s = *it > 0 ? *it : -*it;
    if (s < 1 || s > L.n()) throw std::invalid_argument("pi_L: letter out of range");
    x = pi_letter(*it, x);
  }
  return x;
}

MonodromicElement pi_L(const WordCombination& x, const TorusCharacter& L) {
  MonodromicElement out;
  for (const auto& [w, c] : x) out += pi_L(w, L) * c;
  return out;
}

HeckeElement pi_hecke(const WordCombination& x, int n) {
  HeckeElement h = to_hecke(pi_L(x, TorusCharacter::trivial(n, 1)));
  return h.rank_m() == 0 ? HeckeElement(n + 1) : h;
}

// ---- verification ----------------------------------------------------------------

std::vector<MonodromicCheck> verify_ho_relations(int n, std::uint32_t modulus) {
  if (n < 1 || n > 3) throw std::invalid_argument("verify_ho_relations: n must be in 1..3");
  std::vector<MonodromicCheck> out;
  out.reserve(16);
  auto check = [&](const std::string& name) -> MonodromicCheck& {
    out.push_back({name, true, 0});
    return out.back();
  };
  const int m = n + 1;
  const auto W = all_permutations(m);
  // Orbit representatives.
  std::vector<TorusCharacter> reps;
  {
    std::set<TorusCharacter> seen;
    for (const auto& L : all_characters(n, modulus)) {
      if (seen.count(L)) continue;
      for (const auto& x : orbit(L)) seen.insert(x);
      reps.push_back(L);
    }
  }
  auto& idem = check("idempotents_orthogonal");
  auto& length_add = check("length_additive_products");
  auto& transport = check("character_transport");
  auto& quad = check("quadratic");
  auto& braid = check("braid");
  auto& assoc = check("associativity");
  auto& corner = check("pi_corner_unit");
  for (const auto& rep : reps) {
    const auto orb = orbit(rep);
    for (const auto& L : orb)
      for (const auto& L2 : orb) {
        ++idem.instances;
        const auto p = ho_mul(MonodromicElement::idempotent(L), MonodromicElement::idempotent(L2));
        idem.pass &= L == L2 ? p == MonodromicElement::idempotent(L) : p.is_zero();
      }
    for (const auto& w : W)
      for (const auto& u : W) {
        if ((w * u).length() != w.length() + u.length()) continue;
        ++length_add.instances;
        length_add.pass &= ho_mul(MonodromicElement::standard(w, rep), MonodromicElement::standard(u, rep)) ==
                           MonodromicElement::standard(w * u, rep);
      }
    for (const auto& w : W)
      for (const auto& L : orb) {
        ++transport.instances;
        transport.pass &= ho_mul(MonodromicElement::standard(w, rep), MonodromicElement::idempotent(L)) ==
                          ho_mul(MonodromicElement::idempotent(L.act(w)), MonodromicElement::standard(w, rep));
        transport.pass &= ho_mul(MonodromicElement::standard(w, rep), MonodromicElement::idempotent(L)) ==
                          MonodromicElement::basis(w, L);
      }
    for (int s = 1; s <= n; ++s) {
      ++quad.instances;
      const Permutation ps = Permutation::simple(m, s);
      MonodromicElement rhs = MonodromicElement::unit(rep) * v2();
      for (const auto& L : orb)
        if (simple_in_circle(s, L)) rhs += MonodromicElement::basis(ps, L, v2m1());
      const auto As = MonodromicElement::standard(ps, rep);
      quad.pass &= ho_mul(As, As) == rhs;
      for (int t = 1; t <= n; ++t) {
        if (t == s) continue;
        ++braid.instances;
        const auto At = MonodromicElement::standard(Permutation::simple(m, t), rep);
        if (t == s + 1 || t == s - 1)
          braid.pass &= ho_mul(ho_mul(As, At), As) == ho_mul(ho_mul(At, As), At);
        else
          braid.pass &= ho_mul(As, At) == ho_mul(At, As);
      }
      for (const auto& L : orb) {
        ++corner.instances;
        corner.pass &= pi_L(Word{s, -s}, L) == MonodromicElement::idempotent(L);
        corner.pass &= pi_L(Word{-s, s}, L) == MonodromicElement::idempotent(L);
      }
    }
    // Associativity on basis triples (sampled deterministically for larger n).
    std::mt19937_64 rng(static_cast<std::uint64_t>(n) * 1000 + orb.size());
    for (int t = 0; t < 40; ++t) {
      auto pick = [&] {
        return MonodromicElement::basis(W[rng() % W.size()], orb[rng() % orb.size()],
                                        RationalFunction::v(static_cast<int>(rng() % 3)));
      };
      const auto a = pick() + pick(), b = pick() + pick(), c = pick() + pick();
      ++assoc.instances;
      assoc.pass &= ho_mul(ho_mul(a, b), c) == ho_mul(a, ho_mul(b, c));
    }
  }
  auto& hecke = check("trivial_orbit_is_hecke");
  const auto triv = TorusCharacter::trivial(n, modulus);
  for (const auto& w : W)
    for (const auto& u : W) {
      ++hecke.instances;
      const auto a = HeckeElement::basis(w), b = HeckeElement::basis(u);
      hecke.pass &= to_hecke(ho_mul(from_hecke(a, triv), from_hecke(b, triv))) == hecke_mul(a, b);
    }
  return out;
}

namespace {

Word random_word(std::mt19937_64& rng, int n, int max_len) {
  Word w(rng() % static_cast<std::uint64_t>(max_len + 1));
  for (auto& l : w) l = static_cast<int>(1 + rng() % static_cast<std::uint64_t>(n)) * (rng() % 2 ? 1 : -1);
  return w;
}

// A pair (lhs, rhs) of combinations equal in E(v) by one defining relation.
std::pair<WordCombination, WordCombination> relation_instance(std::mt19937_64& rng, int n) {
  const int s = static_cast<int>(1 + rng() % static_cast<std::uint64_t>(n));
  const RationalFunction v2 = RationalFunction::v(2), vm2 = RationalFunction::v(-2);
  WordCombination lhs, rhs;
  const int kind = static_cast<int>(rng() % (n >= 2 ? 5 : 3));
  switch (kind) {
    case 0:  // a_s a_s^{-1} = 1 (either order)
      if (rng() % 2) lhs = {{Word{s, -s}, RationalFunction(1)}};
      else lhs = {{Word{-s, s}, RationalFunction(1)}};
      rhs = {{Word{}, RationalFunction(1)}};
      break;
    case 1:  // a_s^3 = -v^2 a_s^2 + a_s + v^2
      lhs = {{Word{s, s, s}, RationalFunction(1)}};
      wc_add_term(rhs, {s, s}, -v2);
      wc_add_term(rhs, {s}, RationalFunction(1));
      wc_add_term(rhs, {}, v2);
      break;
    case 2:  // a_s^{-1} = v^{-2}(a_s^2 + v^2 a_s - 1)
      lhs = {{Word{-s}, RationalFunction(1)}};
      wc_add_term(rhs, {s, s}, vm2);
      wc_add_term(rhs, {s}, RationalFunction(1));
      wc_add_term(rhs, {}, -vm2);
      break;
    default: {  // braid relation, in a_s or in a_s^{-1}
      const int t = s < n ? s + 1 : s - 1;
      const int sg = kind == 3 ? 1 : -1;
      lhs = {{Word{sg * s, sg * t, sg * s}, RationalFunction(1)}};
      rhs = {{Word{sg * t, sg * s, sg * t}, RationalFunction(1)}};
      break;
    }
  }
  return {lhs, rhs};
}

}  // namespace

PiConsistencyReport pi_consistency(int n, int trials, std::uint64_t seed, std::uint32_t modulus) {
  if (n < 1 || n > 2) throw std::invalid_argument("pi_consistency: n must be 1 or 2");
  PiConsistencyReport rep;
  rep.n = n;
  BTModel M(n);
  const auto chars = all_characters(n, modulus);
  rep.characters = chars.size();
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const WordCombination pre = {{random_word(rng, n, 3), RationalFunction(1)}};
    const WordCombination post = {{random_word(rng, n, 3), RationalFunction(1)}};
    const auto [l, r] = relation_instance(rng, n);
    const WordCombination x = wc_mul(wc_mul(pre, l), post), y = wc_mul(wc_mul(pre, r), post);
    ++rep.pairs;
    if (eval_words(M, x) == eval_words(M, y)) ++rep.bt_equal;
    bool ok = true;
    for (const auto& L : chars) ok = ok && pi_L(x, L) == pi_L(y, L);
    if (ok) ++rep.pi_equal;
  }
  rep.pass = rep.pairs > 0 && rep.bt_equal == rep.pairs && rep.pi_equal == rep.pairs;
  return rep;
}

}  // namespace klbt
