#pragma once

#include <klbt/btalg/model.hpp>
#include <klbt/hecke/hecke.hpp>

#include <map>
#include <memory>
#include <vector>

namespace klbt {

// A word in the Kazhdan-Laumon generators: letter +s is a_s, letter -s is a_s^{-1}.
using Word = std::vector<int>;
// Finite Q(v)-linear combination of words, i.e. an element of the free algebra.
using WordCombination = std::map<Word, RationalFunction>;

void wc_add_term(WordCombination& x, const Word& w, const RationalFunction& c);
WordCombination wc_add(const WordCombination& a, const WordCombination& b, const RationalFunction& scale_b = RationalFunction(1));
// Product by concatenation.
WordCombination wc_mul(const WordCombination& a, const WordCombination& b);
std::string wc_str(const WordCombination& x);

// Image of a word / combination in E(v) with a_s = -g_s.
BTElement eval_word(const BTModel& M, const Word& w);
BTElement eval_words(const BTModel& M, const WordCombination& x);

// c_s = (a_s^2 - 1) / (v - v^3) as a combination of words.
WordCombination c_s_words(int s);

struct KLLift {
  Permutation w;
  int descent = 0;  // left descent used in the last step (0 for w = e)
  BTElement element;
  WordCombination words;
};

// Lifts c_w of the canonical basis into C(v) by c_e = 1, c_s as above and, for
// a left descent s of w, c_w = c_s c_{sw} - sum_y gamma_y c_y where
// C_s C_{sw} = C_w + sum_y gamma_y C_y in the Hecke algebra. Canonical lifts use
// the smallest left descent and are memoized; lift_via recomputes the last step
// for any other descent (n <= 3).
class KLLifter {
 public:
  explicit KLLifter(const BTModel& M);
  const BTModel& model() const { return *M_; }
  const KLTable& kl() const { return kl_; }
  const KLLift& lift(const Permutation& w);
  KLLift lift_via(const Permutation& w, int s);

 private:
  const BTModel* M_;
  KLTable kl_;
  std::map<Permutation, std::unique_ptr<KLLift>> memo_;
};

struct KLLiftCheck {
  Permutation w;
  bool bar_invariant = false;
  bool descent_independent = false;  // every left descent gives the same element
  bool words_match = false;          // evaluating the tracked words reproduces the element
  int descents = 0;
};
std::vector<KLLiftCheck> verify_kl_lift(KLLifter& lifter);

}  // namespace klbt
