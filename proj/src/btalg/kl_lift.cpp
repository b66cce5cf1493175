#include <klbt/btalg/kl_lift.hpp>

#include <sstream>
#include <stdexcept>

namespace klbt {

void wc_add_term(WordCombination& x, const Word& w, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto it = x.find(w);
  if (it == x.end()) {
    x.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) x.erase(it);
}

WordCombination wc_add(const WordCombination& a, const WordCombination& b, const RationalFunction& scale_b) {
  WordCombination out = a;
  for (const auto& [w, c] : b) wc_add_term(out, w, c * scale_b);
  return out;
}

WordCombination wc_mul(const WordCombination& a, const WordCombination& b) {
  WordCombination out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      wc_add_term(out, w, ca * cb);
    }
  return out;
}

std::string wc_str(const WordCombination& x) {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : x) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (w.empty()) os << "*1";
    for (int l : w) os << "*a" << (l > 0 ? l : -l) << (l > 0 ? "" : "^-1");
  }
  return os.str();
}

BTElement eval_word(const BTModel& M, const Word& w) {
  BTElement x = M.one();
  const RationalFunction minus_one(-1);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const int s = *it > 0 ? *it : -*it;
    if (s < 1 || s > M.n()) throw std::invalid_argument("eval_word: letter out of range");
    x = (*it > 0 ? M.left_gen(s, x) : M.mul(M.g_inverse(s), x)) * minus_one;
  }
  return x;
}

BTElement eval_words(const BTModel& M, const WordCombination& x) {
  BTElement out;
  for (const auto& [w, c] : x) out += eval_word(M, w) * c;
  return out;
}

WordCombination c_s_words(int s) {
  const RationalFunction d = RationalFunction(1) / (RationalFunction::v(1) - RationalFunction::v(3));
  WordCombination out;
  wc_add_term(out, {s, s}, d);
  wc_add_term(out, {}, -d);
  return out;
}

KLLifter::KLLifter(const BTModel& M) : M_(&M), kl_(KLTable::compute(M.m())) {
  if (M.n() > 3) throw std::invalid_argument("KLLifter: n must be <= 3");
}

const KLLift& KLLifter::lift(const Permutation& w) {
  if (auto it = memo_.find(w); it != memo_.end()) return *it->second;
  KLLift out;
  if (w.is_identity()) {
    out.w = w;
    out.element = M_->one();
    out.words = {{Word{}, RationalFunction(1)}};
  } else {
    int s = 1;
    while (!w.is_left_descent(s)) ++s;
    out = lift_via(w, s);
  }
  return *memo_.emplace(w, std::make_unique<KLLift>(std::move(out))).first->second;
}

KLLift KLLifter::lift_via(const Permutation& w, int s) {
  if (!w.is_left_descent(s)) throw std::invalid_argument("lift_via: s is not a left descent of w");
  KLLift out;
  out.w = w;
  out.descent = s;
  const Permutation sw = w.left_mul_simple(s);
  WordCombination cs = c_s_words(s);
  const BTElement cs_el = M_->c_s(s);
  if (sw.is_identity()) {
    out.element = cs_el;
    out.words = std::move(cs);
    return out;
  }
  const KLLift& lower = lift(sw);
  out.element = M_->mul(cs_el, lower.element);
  out.words = wc_mul(cs, lower.words);
  for (const auto& [y, gamma] : c_expansion(kl_, s, sw)) {
    const KLLift& ly = lift(y);
    const RationalFunction g{BigRational(gamma)};
    out.element -= ly.element * g;
    out.words = wc_add(out.words, ly.words, -g);
  }
  return out;
}

std::vector<KLLiftCheck> verify_kl_lift(KLLifter& lifter) {
  const BTModel& M = lifter.model();
  std::vector<KLLiftCheck> out;
  for (const auto& w : all_permutations(M.m())) {
    KLLiftCheck c;
    c.w = w;
    const KLLift& L = lifter.lift(w);
    c.bar_invariant = M.bar(L.element) == L.element;
    c.words_match = eval_words(M, L.words) == L.element;
    c.descent_independent = true;
    for (int s = 1; s <= M.n(); ++s) {
      if (!w.is_left_descent(s)) continue;
      ++c.descents;
      c.descent_independent = c.descent_independent && lifter.lift_via(w, s).element == L.element;
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace klbt
