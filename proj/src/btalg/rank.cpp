#include <klbt/btalg/rank.hpp>

#include <algorithm>
#include <atomic>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

namespace klbt {

DenseVec<RationalFunction> to_dense(const BTModel& M, const BTElement& x) {
  DenseVec<RationalFunction> out(M.dim(), RationalFunction(0));
  for (const auto& [b, c] : x.terms()) out[b] = c;
  return out;
}

BTElement from_dense(const DenseVec<RationalFunction>& x) {
  BTElement out;
  for (std::uint32_t b = 0; b < x.size(); ++b)
    if (!x[b].is_zero()) out.add_term(b, x[b]);
  return out;
}

std::uint64_t closure_rank_exact(const BTModel& M) {
  const RationalFunction k = RationalFunction::v(2) - RationalFunction(1);
  Echelon<RationalFunction> E(M.dim());
  std::vector<DenseVec<RationalFunction>> queue{to_dense(M, M.one())};
  E.insert(queue.front());
  DenseVec<RationalFunction> y;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (int s = 1; s <= M.n(); ++s) {
      apply_gen_dense(M, s, queue[i], y, k);
      if (E.insert(y)) queue.push_back(y);
    }
  }
  return E.rank();
}

namespace {

void apply_gen_modp(const BTModel& M, int s, const std::uint32_t* x, std::vector<std::uint32_t>& out,
                    std::uint32_t k) {
  out.assign(M.dim(), 0);
  for (std::uint32_t b = 0; b < M.dim(); ++b) {
    if (!x[b]) continue;
    const std::uint32_t xk = modp::mul(x[b], k);
    for (const auto& t : M.gen_terms(s, b)) out[t.target] = modp::add(out[t.target], t.kind ? xk : x[b]);
  }
}

}  // namespace

std::uint64_t closure_rank_modp(const BTModel& M, std::uint32_t k, const modp::Kernels& kernels) {
  modp::Echelon E(M.dim(), kernels);
  std::vector<std::uint32_t> one(M.dim(), 0);
  one[M.index(M.discrete_part(), M.identity_perm())] = 1;
  E.insert(one);
  // The rows of E span the same space as the generated vectors, so closing the
  // stored (reduced) rows under the g_s closes the span.
  std::vector<std::uint32_t> y;
  for (std::size_t i = 0; i < E.rank(); ++i) {
    for (int s = 1; s <= M.n(); ++s) {
      apply_gen_modp(M, s, E.row(i), y, k);
      E.insert(y);
    }
  }
  return E.rank();
}

std::vector<BigRational> specialization_points(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-100, 100);
  std::vector<BigRational> out;
  std::set<BigRational> squares;
  while (static_cast<int>(out.size()) < count) {
    const int a = dist(rng), b = dist(rng);
    if (a == 0 || b == 0) continue;
    BigRational v0(a, b);
    v0.canonicalize();
    const BigRational sq = v0 * v0;
    if (sq == 1 || squares.count(sq)) continue;
    const std::uint32_t vp = modp::from_rational(v0);
    if (vp == 0 || modp::mul(vp, vp) == 1) continue;
    squares.insert(sq);
    out.push_back(v0);
  }
  return out;
}

CDimensionReport c_dimension(int n, RankMode mode, std::uint64_t seed, int num_points, int threads) {
  CDimensionReport rep;
  rep.n = n;
  rep.mode = mode;
  if (n < 0) throw std::invalid_argument("c_dimension: n must be >= 0");
  if (mode == RankMode::Exact) {
    if (n > 3) throw std::invalid_argument("c_dimension: exact mode requires n <= 3");
    BTModel M(n);
    rep.dimension = closure_rank_exact(M);
    return rep;
  }
  if (n > 4) throw std::invalid_argument("c_dimension: specialized mode requires n <= 4");
  if (num_points < 3) throw std::invalid_argument("c_dimension: at least 3 specialization points");
  BTModel M(n);
  const modp::Kernels& kern = modp::best_kernels();
  rep.kernel = kern.name;
  const auto pts = specialization_points(seed, num_points);
  rep.points.resize(pts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < pts.size();) {
      const std::uint32_t vp = modp::from_rational(pts[i]);
      const std::uint32_t k = modp::sub(modp::mul(vp, vp), 1);
      rep.points[i] = {pts[i], closure_rank_modp(M, k, kern)};
    }
  };
  const int nt = std::clamp(threads, 1, num_points);
  std::vector<std::thread> pool;
  for (int t = 1; t < nt; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& p : rep.points) rep.dimension = std::max(rep.dimension, p.rank);
  for (const auto& p : rep.points) rep.points_agree = rep.points_agree && p.rank == rep.dimension;
  return rep;
}

namespace {

// y with R = y(P) for the parabolic partition P whose interval blocks have the
// sizes of R's blocks (ordered by smallest element); y is increasing on each block.
Permutation parabolic_transport(const SetPartition& R, SetPartition& P) {
  const int m = R.size();
  std::vector<std::uint8_t> img(m + 1);
  std::vector<int> labels(m);
  int pos = 1, label = 0;
  for (const auto& block : R.blocks()) {
    for (int x : block) {
      img[pos] = static_cast<std::uint8_t>(x);
      labels[pos - 1] = label;
      ++pos;
    }
    ++label;
  }
  P = SetPartition::from_labels(labels);
  std::vector<std::uint8_t> one_line(img.begin() + 1, img.end());
  const Permutation y(std::move(one_line));
  return y;
}

BTElement g_inverse_of(const BTModel& M, const Permutation& y) {
  BTElement x = M.one();
  for (int s : y.reduced_word()) x = M.mul(M.g_inverse(s), x);  // (g_{s1}...g_{sk})^{-1}
  return x;
}

}  // namespace

SpanBasis jr_span(const BTModel& M, const SetPartition& R) {
  if (R.size() != M.m()) throw std::invalid_argument("jr_span: partition size mismatch");
  const std::size_t disc = M.discrete_part();
  SetPartition P;
  const Permutation y = parabolic_transport(R, P);
  // Simple reflections in each non-singleton (interval) block of P.
  std::vector<std::vector<int>> choices;
  for (const auto& block : P.blocks()) {
    if (block.size() < 2) continue;
    std::vector<int> simples;
    for (std::size_t i = 0; i + 1 < block.size(); ++i) simples.push_back(block[i]);
    choices.push_back(std::move(simples));
  }
  // Right factors (1 + g_{s_1}) ... (1 + g_{s_l}) e_P g_y^{-1}, built right to left.
  std::vector<BTElement> heads{M.mul(M.e_part(M.part_index(P)), g_inverse_of(M, y))};
  for (auto c = choices.rbegin(); c != choices.rend(); ++c) {
    std::vector<BTElement> next;
    for (int s : *c)
      for (const auto& h : heads) next.push_back(M.mul(M.one() + M.g(s), h));
    heads = std::move(next);
  }
  // Left factors g_y g_w.
  const BTElement gy = M.basis(disc, M.perm_index(y));
  SpanBasis out;
  Echelon<RationalFunction> E(M.dim());
  for (std::size_t w = 0; w < M.num_perms(); ++w) {
    const BTElement left = M.mul(gy, M.basis(disc, w));
    for (const auto& h : heads) {
      BTElement x = M.mul(left, h);
      if (E.insert(to_dense(M, x))) out.vectors.push_back(std::move(x));
    }
  }
  out.rank = E.rank();
  return out;
}

JRDecompositionReport jr_decomposition(const BTModel& M, std::uint64_t seed, int words) {
  JRDecompositionReport rep;
  Echelon<RationalFunction> E(M.dim());
  for (std::size_t p = 0; p < M.num_parts(); ++p) {
    const SpanBasis sb = jr_span(M, M.part(p));
    rep.sum_of_dims += sb.rank;
    for (const auto& x : sb.vectors) E.insert(to_dense(M, x));
  }
  rep.rank_of_sum = E.rank();
  rep.c_dimension = closure_rank_exact(M);
  std::mt19937_64 rng(seed);
  std::vector<BTElement> gens, invs;
  for (int s = 1; s <= M.n(); ++s) {
    gens.push_back(M.g(s));
    invs.push_back(M.g_inverse(s));
  }
  for (int t = 0; t < words && M.n() > 0; ++t) {
    const int len = 1 + static_cast<int>(rng() % 6);
    BTElement x = M.one();
    for (int i = 0; i < len; ++i) {
      const std::size_t s = rng() % gens.size();
      x = M.mul(rng() % 2 ? gens[s] : invs[s], x);
    }
    ++rep.words_tested;
    if (!E.in_span(to_dense(M, x))) rep.words_inside = false;
  }
  return rep;
}

}  // namespace klbt
