#pragma once

#include <klbt/btalg/model.hpp>
#include <klbt/linalg/echelon.hpp>
#include <klbt/linalg/modp.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace klbt {

enum class RankMode { Exact, Specialized };

struct SpecializationRank {
  BigRational v0;
  std::uint64_t rank = 0;
};

struct CDimensionReport {
  int n = 0;
  RankMode mode = RankMode::Exact;
  std::uint64_t dimension = 0;
  std::vector<SpecializationRank> points;  // specialized mode only
  bool points_agree = true;
  std::string kernel;  // mod-p kernel used (specialized mode)
};

// Dense vector in the BTModel basis.
template <class F>
using DenseVec = std::vector<F>;

// Applies g_s to a dense vector; k is the value of v^2 - 1 in F.
template <class F>
void apply_gen_dense(const BTModel& M, int s, const DenseVec<F>& x, DenseVec<F>& out, const F& k) {
  out.assign(x.size(), F(0));
  for (std::uint32_t b = 0; b < x.size(); ++b) {
    if (is_zero(x[b])) continue;
    for (const auto& t : M.gen_terms(s, b)) out[t.target] += t.kind ? x[b] * k : x[b];
  }
}

DenseVec<RationalFunction> to_dense(const BTModel& M, const BTElement& x);
BTElement from_dense(const DenseVec<RationalFunction>& x);

// Dimension of the unital subalgebra C(v) generated by the g_s: Krylov closure
// V <- V + sum_s g_s V from V = span{1}. Exact mode eliminates over Q(v)
// (n <= 3); specialized mode computes ranks over F_p at >= 3 random rational
// points v0 = a/b (|a|, |b| <= 100, v0 not in {0, 1, -1}) and reports the maximum.
// Points are eliminated concurrently on up to `threads` workers; each
// elimination is single-threaded and deterministic.
CDimensionReport c_dimension(int n, RankMode mode, std::uint64_t seed = 1, int num_points = 3, int threads = 1);

// Rank of the closure over F_p, with g_s acting by the model and v^2 - 1 = k.
std::uint64_t closure_rank_modp(const BTModel& M, std::uint32_t k, const modp::Kernels& kernels);
// Exact closure over Q(v); returns the rank (n <= 3).
std::uint64_t closure_rank_exact(const BTModel& M);

// Random rational specialization points for a seed; deterministic. Distinct
// values of v^2; v^2 = 1 and v = 0 (the denylist) are never returned, nor are
// points whose image mod p hits the denylist.
std::vector<BigRational> specialization_points(std::uint64_t seed, int count);

// Basis of J_R e_R. For a parabolic R = P_I this is the span of
// g_w (1 + g_{s_1}) ... (1 + g_{s_l}) e_I, s_i simple in distinct blocks of I;
// a general R = y(P_I) is reached by conjugation, J_R e_R = g_y (J_I e_I) g_y^{-1}
// (exact, n <= 3).
struct SpanBasis {
  std::vector<BTElement> vectors;
  std::size_t rank = 0;
};
SpanBasis jr_span(const BTModel& M, const SetPartition& R);

// Sum over all R of dim J_R e_R, the rank of the concatenation (directness), and
// whether random C(v) words lie inside the sum.
struct JRDecompositionReport {
  std::size_t sum_of_dims = 0;
  std::size_t rank_of_sum = 0;
  std::size_t c_dimension = 0;
  bool words_inside = true;
  std::size_t words_tested = 0;
};
JRDecompositionReport jr_decomposition(const BTModel& M, std::uint64_t seed, int words);

}  // namespace klbt
