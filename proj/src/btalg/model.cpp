#include <klbt/btalg/model.hpp>

#include <random>
#include <sstream>
#include <stdexcept>

namespace klbt {

namespace {

RationalFunction v2m1() { return RationalFunction(LaurentPoly::v(2) - 1); }

}  // namespace

// ---------------------------------------------------------------- BTElement

RationalFunction BTElement::coeff(std::uint32_t b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? RationalFunction() : it->second;
}

void BTElement::add_term(std::uint32_t b, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BTElement& BTElement::operator+=(const BTElement& o) {
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

BTElement& BTElement::operator-=(const BTElement& o) {
  for (const auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

BTElement& BTElement::operator*=(const RationalFunction& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, x] : terms_) x *= c;
  return *this;
}

// ---------------------------------------------------------------- BTModel

BTModel::BTModel(int n) : n_(n) {
  if (n < 0 || n > 5) throw std::invalid_argument("BTModel: requires 0 <= n <= 5");
  perms_ = all_permutations(m());
  parts_ = all_set_partitions(m());
  for (std::size_t i = 0; i < parts_.size(); ++i) part_lookup_.emplace(parts_[i], i);
  discrete_ = part_index(SetPartition::discrete(m()));
  const std::size_t np = parts_.size(), nw = perms_.size();
  join_.resize(np * np);
  for (std::size_t P = 0; P < np; ++P)
    for (std::size_t Q = 0; Q < np; ++Q) join_[P * np + Q] = static_cast<std::uint32_t>(part_index(parts_[P].join(parts_[Q])));
  act_.resize(nw * np);
  for (std::size_t w = 0; w < nw; ++w)
    for (std::size_t P = 0; P < np; ++P) act_[w * np + P] = static_cast<std::uint32_t>(part_index(parts_[P].act(perms_[w])));

  gen_.resize(static_cast<std::size_t>(n_) * dim());
  for (int s = 1; s <= n_; ++s) {
    const std::size_t sidx = perm_index(Permutation::simple(m(), s));
    const std::size_t es = simple_part(s);
    for (std::size_t P = 0; P < np; ++P) {
      const std::size_t sP = act(sidx, P);
      const std::size_t sPs = join(sP, es);
      for (std::size_t y = 0; y < nw; ++y) {
        const Permutation& py = perms_[y];
        const std::size_t sy = perm_index(py.left_mul_simple(s));
        auto& out = gen_[(s - 1) * dim() + index(P, y)];
        if (!py.is_left_descent(s)) {
          out.push_back({index(sP, sy), 0});
        } else {
          // g_s g_y = g_s^2 g_{sy} = g_{sy} + (v^2-1) e_s g_{sy} + (v^2-1) e_s g_y
          out.push_back({index(sP, sy), 0});
          out.push_back({index(sPs, sy), 1});
          out.push_back({index(sPs, y), 1});
        }
      }
    }
  }
  gg_memo_.resize(nw * nw);
  bar_memo_.resize(dim());
}

std::size_t BTModel::part_index(const SetPartition& p) const {
  auto it = part_lookup_.find(p);
  if (it == part_lookup_.end()) throw std::invalid_argument("BTModel: partition of the wrong size");
  return it->second;
}

std::size_t BTModel::reflection_part(int i, int j) const { return part_index(SetPartition::reflection(m(), i, j)); }

std::string BTModel::basis_str(std::uint32_t b) const {
  return "e" + parts_[part_of(b)].str() + "g" + perms_[perm_of(b)].str();
}

BTElement BTModel::basis(std::size_t part, std::size_t perm, const RationalFunction& c) const {
  BTElement x;
  x.add_term(index(part, perm), c);
  return x;
}

BTElement BTModel::one() const { return basis(discrete_, identity_perm()); }
BTElement BTModel::g(int s) const { return basis(discrete_, perm_index(Permutation::simple(m(), s))); }
BTElement BTModel::g_word(const std::vector<int>& word) const {
  BTElement x = one();
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = left_gen(*it, x);
  return x;
}
BTElement BTModel::e_part(std::size_t part) const { return basis(part, identity_perm()); }

BTElement BTModel::g_inverse(int s) const {
  const RationalFunction c = RationalFunction(LaurentPoly::v(-2) - 1);
  return g(s) + e(s) * c + mul(e(s), g(s)) * c;
}

BTElement BTModel::a(int s) const { return g(s) * RationalFunction(-1); }

BTElement BTModel::c_s(int s) const {
  return mul(e(s), one() + g(s)) * RationalFunction(LaurentPoly::monomial(-1, -1));
}

BTElement BTModel::left_gen(int s, const BTElement& x) const {
  BTElement r;
  const RationalFunction k = v2m1();
  for (const auto& [b, c] : x.terms())
    for (const auto& t : gen_terms(s, b)) r.add_term(t.target, t.kind ? c * k : c);
  return r;
}

const BTElement& BTModel::g_times_g(std::size_t w, std::size_t u) const {
  const std::size_t key = w * perms_.size() + u;
  {
    std::lock_guard<std::mutex> lock(memo_mu_);
    if (gg_memo_[key]) return *gg_memo_[key];
  }
  BTElement x = basis(discrete_, u);
  const auto word = perms_[w].reduced_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = left_gen(*it, x);
  std::lock_guard<std::mutex> lock(memo_mu_);
  if (!gg_memo_[key]) gg_memo_[key] = std::make_unique<BTElement>(std::move(x));
  return *gg_memo_[key];
}

BTElement BTModel::mul(const BTElement& a, const BTElement& b) const {
  BTElement r;
  for (const auto& [ba, ca] : a.terms()) {
    const std::size_t P = part_of(ba), w = perm_of(ba);
    for (const auto& [bb, cb] : b.terms()) {
      const std::size_t R = join(P, act(w, part_of(bb)));
      const RationalFunction cab = ca * cb;
      for (const auto& [t, c] : g_times_g(w, perm_of(bb)).terms())
        r.add_term(index(join(R, part_of(t)), perm_of(t)), cab * c);
    }
  }
  return r;
}

const BTElement& BTModel::bar_basis(std::uint32_t b) const {
  {
    std::lock_guard<std::mutex> lock(memo_mu_);
    if (bar_memo_[b]) return *bar_memo_[b];
  }
  // bar(e_P g_w) = e_P g_{i1}^{-1} ... g_{ik}^{-1}.
  BTElement x = one();
  const auto word = perms_[perm_of(b)].reduced_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = mul(g_inverse(*it), x);
  x = mul(e_part(part_of(b)), x);
  std::lock_guard<std::mutex> lock(memo_mu_);
  if (!bar_memo_[b]) bar_memo_[b] = std::make_unique<BTElement>(std::move(x));
  return *bar_memo_[b];
}

BTElement BTModel::bar(const BTElement& x) const {
  BTElement r;
  for (const auto& [b, c] : x.terms()) r += bar_basis(b) * c.bar();
  return r;
}

std::string BTModel::str(const BTElement& x) const {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << basis_str(b);
  }
  return os.str();
}

// ---------------------------------------------------------------- relations

namespace {

BTElement random_element(const BTModel& M, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> basis(0, static_cast<std::uint32_t>(M.dim() - 1));
  std::uniform_int_distribution<int> coef(-3, 3), ex(-2, 2), terms(1, 4);
  BTElement x;
  for (int t = terms(rng); t > 0; --t) {
    const int c = coef(rng);
    x.add_term(basis(rng), RationalFunction(LaurentPoly::monomial(c == 0 ? 1 : c, ex(rng))));
  }
  return x;
}

}  // namespace

std::vector<RelationCheck> verify_presentation(const BTModel& M, std::uint64_t seed, int random_trials) {
  std::vector<RelationCheck> out;
  out.reserve(32);  // check() hands out references into this vector
  auto check = [&](const std::string& name) -> RelationCheck& {
    out.push_back({name, true, 0});
    return out.back();
  };
  const int n = M.n(), m = M.m();
  const RationalFunction v2 = RationalFunction::v(2);
  const BTElement one = M.one();
  std::vector<std::pair<int, int>> refl;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) refl.emplace_back(i, j);
  auto e_r = [&](std::pair<int, int> r) { return M.e_part(M.reflection_part(r.first, r.second)); };
  auto conj = [&](const Permutation& w, std::pair<int, int> r) {
    int a = w(r.first), b = w(r.second);
    if (a > b) std::swap(a, b);
    return std::make_pair(a, b);
  };

  {
    auto& c = check("braid");
    for (int s = 1; s <= n; ++s)
      for (int t = s + 1; t <= n; ++t) {
        ++c.instances;
        const bool ok = t == s + 1 ? M.g_word({s, t, s}) == M.g_word({t, s, t}) : M.g_word({s, t}) == M.g_word({t, s});
        c.pass &= ok;
      }
  }
  {
    auto& c = check("tie_idempotent");
    for (auto r : refl) {
      ++c.instances;
      c.pass &= M.mul(e_r(r), e_r(r)) == e_r(r);
    }
  }
  {
    auto& c = check("tie_commute");
    auto& d = check("tie_conjugate");
    for (auto r1 : refl)
      for (auto r2 : refl) {
        ++c.instances;
        ++d.instances;
        const BTElement p12 = M.mul(e_r(r1), e_r(r2));
        c.pass &= p12 == M.mul(e_r(r2), e_r(r1));
        const Permutation t1 = Permutation::transposition(m, r1.first, r1.second);
        d.pass &= p12 == M.mul(e_r(r1), e_r(conj(t1, r2)));
      }
  }
  {
    auto& c = check("g_e_mixed");
    for (int s = 1; s <= n; ++s)
      for (auto r : refl) {
        ++c.instances;
        c.pass &= M.mul(M.g(s), e_r(r)) == M.mul(e_r(conj(Permutation::simple(m, s), r)), M.g(s));
      }
  }
  {
    auto& c = check("quadratic");
    for (int s = 1; s <= n; ++s) {
      ++c.instances;
      const BTElement rhs = one + M.mul(M.e(s), one + M.g(s)) * (v2 - 1);
      c.pass &= M.mul(M.g(s), M.g(s)) == rhs;
    }
  }
  {
    auto& c = check("cubic");
    for (int s = 1; s <= n; ++s) {
      ++c.instances;
      const BTElement a = M.a(s);
      const BTElement lhs = M.mul(M.mul(a, a) - one, a + one * v2);
      c.pass &= lhs.is_zero();
    }
  }
  {
    auto& c = check("g_invertible");
    for (int s = 1; s <= n; ++s) {
      ++c.instances;
      const BTElement gi = M.g_inverse(s);
      c.pass &= M.mul(M.g(s), gi) == one && M.mul(gi, M.g(s)) == one;
      // a_s^{-1} = v^{-2} (a_s^2 + v^2 a_s - 1) from the cubic relation.
      const BTElement a = M.a(s);
      const BTElement ainv = (M.mul(a, a) + a * v2 - one) * RationalFunction::v(-2);
      c.pass &= M.mul(a, ainv) == one;
    }
  }
  {
    auto& c = check("bar_generators");
    for (int s = 1; s <= n; ++s) {
      ++c.instances;
      c.pass &= M.bar(M.g(s)) == M.g_inverse(s) && M.bar(M.e(s)) == M.e(s);
    }
    ++c.instances;
    c.pass &= M.bar(one) == one;
  }
  {
    auto& c = check("c_s_formula");
    for (int s = 1; s <= n; ++s) {
      ++c.instances;
      const BTElement a = M.a(s);
      const RationalFunction k = RationalFunction(1) / RationalFunction(LaurentPoly::v(1) - LaurentPoly::v(3));
      const BTElement cs = (M.mul(a, a) - one) * k;
      c.pass &= cs == M.c_s(s) && M.bar(cs) == cs;
    }
  }
  std::mt19937_64 rng(seed);
  {
    auto& inv = check("bar_involution");
    auto& hom = check("bar_multiplicative");
    auto& assoc = check("associativity");
    auto& unit = check("unit");
    for (int t = 0; t < random_trials; ++t) {
      const BTElement x = random_element(M, rng), y = random_element(M, rng), z = random_element(M, rng);
      ++inv.instances;
      ++hom.instances;
      ++assoc.instances;
      ++unit.instances;
      inv.pass &= M.bar(M.bar(x)) == x;
      hom.pass &= M.bar(M.mul(x, y)) == M.mul(M.bar(x), M.bar(y));
      assoc.pass &= M.mul(M.mul(x, y), z) == M.mul(x, M.mul(y, z));
      unit.pass &= M.mul(one, x) == x && M.mul(x, one) == x;
    }
  }
  return out;
}

}  // namespace klbt
