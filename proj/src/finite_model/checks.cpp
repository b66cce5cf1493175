#include <klbt/finite_model/finite_model.hpp>
#include <klbt/linalg/echelon.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

namespace klbt::fm {

namespace {

FiniteCheck& check(std::vector<FiniteCheck>& out, const std::string& name) {
  // Callers hold references to earlier entries; keep push_back from reallocating.
  if (out.capacity() < 32) out.reserve(32);
  out.push_back({name, true, 0});
  return out.back();
}

void record(FiniteCheck& c, bool ok) {
  ++c.instances;
  c.pass = c.pass && ok;
}

Cyclotomic rational(long a, long b = 1) { return Cyclotomic(BigRational(a, b)); }

// All reduced words of w.
void reduced_words(const Permutation& w, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (w.is_identity()) {
    out.push_back(prefix);
    return;
  }
  for (int s = 1; s < w.size(); ++s) {
    if (!w.is_left_descent(s)) continue;
    prefix.push_back(s);
    reduced_words(w.left_mul_simple(s), prefix, out);
    prefix.pop_back();
  }
}

Permutation longest(int m) {
  std::vector<std::uint8_t> img(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(m - i);
  return Permutation(img);
}

SparseOperator product(const std::vector<SparseOperator>& ops, const std::vector<int>& word, std::size_t dim) {
  SparseOperator P = SparseOperator::identity(dim);
  for (int s : word) P = P * ops[static_cast<std::size_t>(s - 1)];
  return P;
}

FunctionOnX scaled(FunctionOnX f, const Cyclotomic& c) {
  for (auto& e : f) e *= c;
  return f;
}

bool functions_equal(const FunctionOnX& a, const FunctionOnX& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

// Generators of G used for the equivariance check: x_s(1), x_s(gen), the
// lower root element, n_s and h_s(gen) for every s.
std::vector<GroupElement> group_generators(const FiniteModel& M) {
  const Elem g = M.field().generator();
  std::vector<GroupElement> gens;
  for (int s = 1; s <= M.n(); ++s) {
    gens.push_back(M.x_simple(s, 1));
    gens.push_back(M.x_simple(s, g));
    gens.push_back(M.rho(s, 1, 0, 1, 1));
    gens.push_back(M.n_simple(s));
    gens.push_back(M.h_simple(s, g));
  }
  return gens;
}

// (i, j) -> w(i), w(j) sorted.
std::pair<int, int> conj_reflection(const Permutation& w, std::pair<int, int> r) {
  int a = w(r.first), b = w(r.second);
  if (a > b) std::swap(a, b);
  return {a, b};
}

}  // namespace

std::vector<FiniteCheck> verify_main_identity(const FiniteModel& M) {
  std::vector<FiniteCheck> out;
  std::vector<SparseOperator> K;
  for (int s = 1; s <= M.n(); ++s) K.push_back(op_ks(M, s));
  {
    auto& c = check(out, "op_ks_equals_L_s");
    for (int s = 1; s <= M.n(); ++s) record(c, K[static_cast<std::size_t>(s - 1)] == op_juyumaya(M, s));
  }
  {
    auto& c = check(out, "op_es_equals_E_s");
    for (int s = 1; s <= M.n(); ++s) record(c, op_es(M, s) == op_e(M, s));
  }
  {
    auto& c = check(out, "op_ks_braid");
    for (int s = 1; s <= M.n(); ++s)
      for (int t = s + 1; t <= M.n(); ++t) {
        const auto &A = K[static_cast<std::size_t>(s - 1)], &B = K[static_cast<std::size_t>(t - 1)];
        record(c, t == s + 1 ? A * B * A == B * A * B : A * B == B * A);
      }
  }
  {
    auto& c = check(out, "op_ks_reduced_word_independence");
    std::vector<std::vector<int>> words;
    std::vector<int> prefix;
    reduced_words(longest(M.d()), prefix, words);
    const SparseOperator first = product(K, words.front(), M.size());
    for (std::size_t i = 1; i < words.size(); ++i) record(c, product(K, words[i], M.size()) == first);
  }
  return out;
}

std::vector<FiniteCheck> yokonuma_relations(const FiniteModel& M) {
  std::vector<FiniteCheck> out;
  const auto& T = M.torus();
  std::vector<SparseOperator> RT;
  for (const auto& t : T) RT.push_back(op_right_torus(M, t));
  std::vector<SparseOperator> RS;
  for (int s = 1; s <= M.n(); ++s) RS.push_back(op_right_simple(M, s));
  auto torus_index = [&](const GroupElement& t) {
    for (std::size_t i = 0; i < T.size(); ++i)
      if (T[i] == t) return i;
    throw std::logic_error("element is not in the torus");
  };
  {
    auto& c = check(out, "yokonuma_torus_product");
    for (std::size_t i = 0; i < T.size(); ++i)
      for (std::size_t j = 0; j < T.size(); ++j) record(c, RT[i] * RT[j] == RT[torus_index(M.mul(T[i], T[j]))]);
  }
  {
    auto& c = check(out, "yokonuma_torus_transport");
    for (int s = 1; s <= M.n(); ++s) {
      const GroupElement ns = M.n_simple(s), nsi = M.inverse(ns);
      for (std::size_t i = 0; i < T.size(); ++i) {
        const std::size_t j = torus_index(M.mul(M.mul(nsi, T[i]), ns));
        record(c, RT[i] * RS[static_cast<std::size_t>(s - 1)] == RS[static_cast<std::size_t>(s - 1)] * RT[j]);
      }
    }
  }
  {
    auto& c = check(out, "yokonuma_quadratic");
    for (int s = 1; s <= M.n(); ++s) {
      const auto& R = RS[static_cast<std::size_t>(s - 1)];
      const SparseOperator rhs =
          op_h(M, s, M.field().neg(1)) * rational(static_cast<long>(M.Q())) + R * op_e(M, s);
      record(c, R * R == rhs);
    }
  }
  {
    auto& c = check(out, "yokonuma_braid");
    for (int s = 1; s <= M.n(); ++s)
      for (int t = s + 1; t <= M.n(); ++t) {
        const auto &A = RS[static_cast<std::size_t>(s - 1)], &B = RS[static_cast<std::size_t>(t - 1)];
        record(c, t == s + 1 ? A * B * A == B * A * B : A * B == B * A);
      }
  }
  return out;
}

std::vector<FiniteCheck> juyumaya_relations(const FiniteModel& M) {
  std::vector<FiniteCheck> out;
  std::vector<SparseOperator> L, E;
  for (int s = 1; s <= M.n(); ++s) {
    L.push_back(op_juyumaya(M, s));
    E.push_back(op_e(M, s));
  }
  const SparseOperator I = SparseOperator::identity(M.size());
  const Cyclotomic qinv = rational(1, M.Q());
  {
    auto& c = check(out, "juyumaya_quadratic");
    for (std::size_t i = 0; i < L.size(); ++i) record(c, L[i] * L[i] == I - (E[i] - L[i] * E[i]) * qinv);
  }
  {
    auto& c = check(out, "juyumaya_braid");
    for (int s = 1; s + 1 <= M.n(); ++s) {
      const auto &A = L[static_cast<std::size_t>(s - 1)], &B = L[static_cast<std::size_t>(s)];
      record(c, A * B * A == B * A * B);
    }
  }
  {
    auto& c = check(out, "juyumaya_far_commute");
    for (int s = 1; s <= M.n(); ++s)
      for (int t = s + 2; t <= M.n(); ++t) {
        const auto &A = L[static_cast<std::size_t>(s - 1)], &B = L[static_cast<std::size_t>(t - 1)];
        record(c, A * B == B * A);
      }
  }
  {
    auto& c = check(out, "juyumaya_torus_transport");
    for (int s = 1; s <= M.n(); ++s) {
      const GroupElement ns = M.n_simple(s), nsi = M.inverse(ns);
      for (const auto& t : M.torus()) {
        const SparseOperator lhs = op_right_torus(M, t) * L[static_cast<std::size_t>(s - 1)];
        const SparseOperator rhs = L[static_cast<std::size_t>(s - 1)] * op_right_torus(M, M.mul(M.mul(nsi, t), ns));
        record(c, lhs == rhs);
      }
    }
  }
  return out;
}

std::vector<FiniteCheck> structural_checks(const FiniteModel& M) {
  std::vector<FiniteCheck> out;
  const std::size_t dim = M.size();
  const SparseOperator I = SparseOperator::identity(dim);
  const Cyclotomic qm1(static_cast<long>(M.Q() - 1));
  const Cyclotomic qinv = rational(1, M.Q());
  std::vector<SparseOperator> L, Es;
  for (int s = 1; s <= M.n(); ++s) {
    L.push_back(op_ks(M, s));
    Es.push_back(op_es(M, s));
  }
  {
    auto& c = check(out, "e_square");
    for (const auto& E : Es) record(c, E * E == E * qm1);
  }
  {
    auto& c = check(out, "e_normalized_projection");
    for (int s = 1; s <= M.n(); ++s) {
      const SparseOperator P = op_es_normalized(M, s);
      const SparseOperator H = op_h(M, s, M.field().generator());
      record(c, P * P == P && P * H == P && H * P == P);
    }
  }
  {
    // Lemma: E_s eps_theta = (Q - 1) eps_theta if s in W°_theta, 0 otherwise.
    auto& c = check(out, "lemma_es_projection");
    for (const auto& th : M.characters()) {
      const FunctionOnX eps = M.epsilon(th);
      for (int s = 1; s <= M.n(); ++s) {
        const FunctionOnX img = Es[static_cast<std::size_t>(s - 1)].apply(eps);
        const FunctionOnX expect = th.in_w_circle(s, s + 1) ? scaled(eps, qm1) : M.zero_function();
        record(c, functions_equal(img, expect));
      }
    }
  }
  {
    auto& c = check(out, "g_equivariance");
    for (const auto& g : group_generators(M)) {
      const SparseOperator T = op_left_translation(M, g);
      for (std::size_t i = 0; i < L.size(); ++i) record(c, T * L[i] == L[i] * T && T * Es[i] == Es[i] * T);
    }
  }

  // E(v) relations at v^2 = 1/Q with g_s -> -L_s and e_r -> tie_r / (Q - 1).
  const Cyclotomic v2 = qinv;
  std::vector<SparseOperator> g;
  for (const auto& l : L) g.push_back(l * Cyclotomic(-1));
  std::vector<std::pair<int, int>> refl;
  for (int i = 1; i <= M.d(); ++i)
    for (int j = i + 1; j <= M.d(); ++j) refl.emplace_back(i, j);
  std::map<std::pair<int, int>, SparseOperator> tie;
  for (auto r : refl) tie.emplace(r, op_tie(M, r.first, r.second) * Cyclotomic(BigRational(1, M.Q() - 1)));
  auto e_simple = [&](int s) -> const SparseOperator& { return tie.at({s, s + 1}); };
  {
    auto& c = check(out, "ev_braid");
    for (int s = 1; s <= M.n(); ++s)
      for (int t = s + 1; t <= M.n(); ++t) {
        const auto &A = g[static_cast<std::size_t>(s - 1)], &B = g[static_cast<std::size_t>(t - 1)];
        record(c, t == s + 1 ? A * B * A == B * A * B : A * B == B * A);
      }
  }
  {
    auto& c = check(out, "ev_tie_idempotent");
    for (auto r : refl) record(c, tie.at(r) * tie.at(r) == tie.at(r));
  }
  {
    auto& c = check(out, "ev_tie_commute");
    auto& d = check(out, "ev_tie_conjugate");
    for (auto r1 : refl)
      for (auto r2 : refl) {
        const SparseOperator p12 = tie.at(r1) * tie.at(r2);
        record(c, p12 == tie.at(r2) * tie.at(r1));
        const Permutation t1 = Permutation::transposition(M.d(), r1.first, r1.second);
        record(d, p12 == tie.at(r1) * tie.at(conj_reflection(t1, r2)));
      }
  }
  {
    auto& c = check(out, "ev_g_e_mixed");
    for (int s = 1; s <= M.n(); ++s)
      for (auto r : refl) {
        const auto& G = g[static_cast<std::size_t>(s - 1)];
        record(c, G * tie.at(r) == tie.at(conj_reflection(Permutation::simple(M.d(), s), r)) * G);
      }
  }
  {
    auto& c = check(out, "ev_quadratic");
    for (int s = 1; s <= M.n(); ++s) {
      const auto& G = g[static_cast<std::size_t>(s - 1)];
      record(c, G * G == I + e_simple(s) * (I + G) * (v2 - Cyclotomic(1)));
    }
  }
  {
    auto& c = check(out, "ev_cubic");
    for (const auto& A : L) record(c, ((A * A - I) * (A + I * v2)).is_zero());
  }
  {
    auto& c = check(out, "ev_g_invertible");
    const Cyclotomic k = Cyclotomic(static_cast<long>(M.Q())) - Cyclotomic(1);  // v^{-2} - 1
    for (int s = 1; s <= M.n(); ++s) {
      const auto& G = g[static_cast<std::size_t>(s - 1)];
      const SparseOperator Gi = G + e_simple(s) * k + e_simple(s) * G * k;
      record(c, G * Gi == I && Gi * G == I);
    }
  }
  return out;
}

std::vector<CaseValue> case_values(const FiniteModel& M) {
  std::vector<CaseValue> out;
  const Cyclotomic qinv = rational(1, M.Q());
  for (int s = 1; s <= M.n(); ++s) {
    const SparseOperator K = op_ks(M, s);
    const GroupElement ns = M.n_simple(s);
    for (const auto& th : M.characters()) {
      CaseValue cv;
      cv.theta = th;
      cv.s = s;
      cv.in_w_circle = th.in_w_circle(s, s + 1);
      const FunctionOnX img = K.apply(M.epsilon(th));
      cv.cell_factor = img[M.index_of(ns)];
      FunctionOnX expect = M.zero_function();
      for (const auto& t : M.torus()) {
        const Cyclotomic th_t = M.theta(th, t);
        if (cv.in_w_circle) expect[M.index_of(t)] = (Cyclotomic(1) - qinv) * th_t;
        for (std::uint32_t a = 0; a < M.Q(); ++a)
          expect[M.index_of(M.mul(M.mul(t, M.x_simple(s, static_cast<Elem>(a))), ns))] = cv.cell_factor * th_t;
      }
      const bool factor_ok = cv.in_w_circle ? cv.cell_factor == -qinv : cv.cell_factor * cv.cell_factor.conj() == qinv;
      cv.pass = factor_ok && functions_equal(img, expect);
      out.push_back(std::move(cv));
    }
  }
  return out;
}

DeltaReport delta_in_epsilon_span(const FiniteModel& M) {
  DeltaReport rep;
  const auto chars = M.characters();
  std::vector<FunctionOnX> cols;
  for (const auto& th : chars) cols.push_back(M.epsilon(th));
  const FunctionOnX target = M.delta(M.index_of(M.identity()));
  const auto sol = solve_unique(cols, target);
  if (!sol) return rep;
  // Reassemble and compare on all of X.
  FunctionOnX sum = M.zero_function();
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t x = 0; x < sum.size(); ++x)
      if (!cols[i][x].is_zero()) sum[x] += (*sol)[i] * cols[i][x];
  rep.solved = functions_equal(sum, target);
  rep.uniform = true;
  const Cyclotomic inv_t = rational(1, static_cast<long>(M.torus().size()));
  for (std::size_t i = 0; i < chars.size(); ++i) {
    rep.coefficients.emplace_back(chars[i], (*sol)[i]);
    rep.uniform = rep.uniform && (*sol)[i] == inv_t;
  }
  return rep;
}

std::vector<NormalizationEntry> normalization_table(const FiniteModel& M) {
  std::vector<NormalizationEntry> out;
  const SparseOperator I = SparseOperator::identity(M.size());
  const Cyclotomic Q(static_cast<long>(M.Q())), qinv = rational(1, M.Q());
  const std::vector<std::pair<std::string, Cyclotomic>> v2s = {{"Q", Q}, {"1/Q", qinv}};
  for (int pass = 0; pass < 2; ++pass) {
    const std::string e_name = pass == 0 ? "E_s" : "E_s/(Q-1)";
    bool idem = true;
    for (int s = 1; s <= M.n(); ++s) {
      const SparseOperator e = pass == 0 ? op_es(M, s) : op_es_normalized(M, s);
      idem = idem && e * e == e;
    }
    out.push_back({"tie_idempotent", e_name, "any", idem});
    for (const auto& [v2_name, v2] : v2s) {
      bool quad = true;
      for (int s = 1; s <= M.n(); ++s) {
        const SparseOperator e = pass == 0 ? op_es(M, s) : op_es_normalized(M, s);
        const SparseOperator G = op_ks(M, s) * Cyclotomic(-1);
        quad = quad && G * G == I + e * (I + G) * (v2 - Cyclotomic(1));
      }
      out.push_back({"quadratic", e_name, v2_name, quad});
    }
  }
  for (const auto& [v2_name, v2] : v2s) {
    bool cubic = true;
    for (int s = 1; s <= M.n(); ++s) {
      const SparseOperator A = op_ks(M, s);
      cubic = cubic && ((A * A - I) * (A + I * v2)).is_zero();
    }
    out.push_back({"cubic", "any", v2_name, cubic});
  }
  return out;
}

bool FiniteModelReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  for (const auto& c : case_values)
    if (!c.pass) return false;
  return delta.solved;
}

FiniteModelReport verify_finite_model(const FiniteModel& M) {
  FiniteModelReport rep;
  rep.n = M.n();
  rep.q = M.q();
  rep.k = M.k();
  rep.Q = M.Q();
  rep.points = M.size();
  rep.group_order = M.group_order();
  for (auto&& part : {verify_main_identity(M), yokonuma_relations(M), juyumaya_relations(M), structural_checks(M)})
    rep.checks.insert(rep.checks.end(), part.begin(), part.end());
  rep.case_values = case_values(M);
  rep.delta = delta_in_epsilon_span(M);
  rep.normalization = normalization_table(M);
  return rep;
}

CrosscheckReport monodromic_crosscheck(const FiniteModel& M) {
  if (M.n() > 2 || M.Q() != 4) throw std::invalid_argument("monodromic_crosscheck requires n <= 2 and q^k = 4");
  CrosscheckReport rep;
  rep.n = M.n();
  rep.Q = M.Q();
  rep.v = BigRational(2);
  const Cyclotomic qinv = rational(1, M.Q()), Qc(static_cast<long>(M.Q()));
  const Cyclotomic v2_over_q = Cyclotomic(BigRational(4)) * qinv;
  std::vector<SparseOperator> R, K, Kinv;
  const SparseOperator I = SparseOperator::identity(M.size());
  for (int s = 1; s <= M.n(); ++s) {
    R.push_back(op_right_simple(M, s));
    K.push_back(op_ks(M, s));
    const SparseOperator E = op_es(M, s);
    Kinv.push_back(K.back() - E + E * K.back());
  }
  bool inverses_ok = true;
  for (std::size_t i = 0; i < K.size(); ++i) inverses_ok = inverses_ok && K[i] * Kinv[i] == I;

  // Phi(A_w 1_L) = eps_L R_{s_k} ... R_{s_1} for a reduced word s_1 ... s_k of w.
  auto phi = [&](const MonodromicElement& x) {
    FunctionOnX f = M.zero_function();
    for (const auto& [key, coeff] : x.specialize(rep.v)) {
      FunctionOnX g = M.epsilon(key.second);
      auto word = key.first.reduced_word();
      std::reverse(word.begin(), word.end());
      for (int s : word) g = R[static_cast<std::size_t>(s - 1)].apply(g);
      const Cyclotomic c(coeff);
      for (std::size_t i = 0; i < f.size(); ++i)
        if (!g[i].is_zero()) f[i] += c * g[i];
    }
    return f;
  };
  // Returns c with target = c * f, or nullopt.
  auto proportion = [&](const FunctionOnX& target, const FunctionOnX& f) -> std::optional<Cyclotomic> {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i].is_zero()) continue;
      const Cyclotomic c = target[i] / f[i];
      if (functions_equal(target, scaled(f, c))) return c;
      return std::nullopt;
    }
    return std::nullopt;
  };

  rep.pass = inverses_ok;
  for (const auto& th : M.characters()) {
    const FunctionOnX eps = M.epsilon(th);
    for (int s = 1; s <= M.n(); ++s) {
      CrosscheckEntry e;
      e.theta = th;
      e.s = s;
      e.in_w_circle = th.in_w_circle(s, s + 1);
      const auto c1 = proportion(K[static_cast<std::size_t>(s - 1)].apply(eps), phi(pi_L(Word{s}, th)));
      const auto c2 = proportion(Kinv[static_cast<std::size_t>(s - 1)].apply(eps), phi(pi_L(Word{-s}, th)));
      e.proportional = c1.has_value() && c2.has_value();
      if (c1) e.scale = *c1;
      if (c2) e.scale_inverse = *c2;
      for (std::uint32_t r = 1; r < M.Q(); ++r)
        e.gauss += M.theta(th, M.h_simple(s, static_cast<Elem>(r))) * M.psi(static_cast<Elem>(r));
      e.gauss_norm = e.in_w_circle ? e.gauss == Cyclotomic(-1) : e.gauss * e.gauss.conj() == Qc;
      bool scales_ok = false;
      if (e.proportional) {
        scales_ok = e.in_w_circle ? e.scale == -qinv && e.scale_inverse == -Qc
                                  : e.scale * e.scale.conj() == v2_over_q &&
                                        e.scale_inverse * e.scale_inverse.conj() == v2_over_q;
      }
      e.pass = e.proportional && scales_ok && e.gauss_norm;
      rep.pass = rep.pass && e.pass;
      rep.entries.push_back(std::move(e));
    }
  }
  return rep;
}

}  // namespace klbt::fm

namespace klbt::fm {

DescentWitness kl_descent_witness(const FiniteModel& M) {
  if (M.n() < 2) throw std::invalid_argument("kl_descent_witness requires n >= 2");
  const SparseOperator I = SparseOperator::identity(M.size());
  const SparseOperator L1 = op_ks(M, 1), L2 = op_ks(M, 2);
  const SparseOperator A1 = L1 * L1 - I, A2 = L2 * L2 - I;
  const Cyclotomic v2(BigRational(1, M.Q()));
  const Cyclotomic one_minus = Cyclotomic(1) - v2;
  const SparseOperator X = A1 * A2 * A1 - A2 * A1 * A2 - (A1 - A2) * (v2 * one_minus * one_minus);
  return {X.is_zero(), X.nnz()};
}

}  // namespace klbt::fm
