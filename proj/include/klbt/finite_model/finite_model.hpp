#pragma once

#include <klbt/finite_model/field.hpp>
#include <klbt/monodromic/monodromic.hpp>
#include <klbt/scalars/cyclotomic.hpp>

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace klbt::fm {

using Elem = FiniteField::Elem;

// A d x d matrix over F_Q (d <= 4), row-major.
struct GroupElement {
  int d = 0;
  std::array<Elem, 16> a{};

  Elem operator()(int i, int j) const { return a[static_cast<std::size_t>(i * d + j)]; }
  Elem& operator()(int i, int j) { return a[static_cast<std::size_t>(i * d + j)]; }
  // Entries packed 4 bits each, row-major; distinct matrices have distinct keys.
  std::uint64_t key() const;
  bool operator==(const GroupElement& o) const { return d == o.d && a == o.a; }
};

// Functions on X, one exact value per point.
using FunctionOnX = std::vector<Cyclotomic>;

// Sparse square matrix over Q(zeta_N) acting on row vectors: row x holds the
// coefficients of delta_x * A. Products compose left to right, (f * A) * B = f * (A * B).
class SparseOperator {
 public:
  using Row = std::vector<std::pair<std::uint32_t, Cyclotomic>>;  // sorted by column, no zeros

  explicit SparseOperator(std::size_t dim = 0) : rows_(dim) {}
  static SparseOperator identity(std::size_t dim);

  std::size_t dim() const { return rows_.size(); }
  const Row& row(std::size_t i) const { return rows_[i]; }
  // Adds c to entry (i, j).
  void add(std::size_t i, std::size_t j, const Cyclotomic& c);
  Cyclotomic entry(std::size_t i, std::size_t j) const;
  std::size_t nnz() const;
  bool is_zero() const;

  SparseOperator& operator+=(const SparseOperator& o);
  SparseOperator& operator-=(const SparseOperator& o);
  SparseOperator& operator*=(const Cyclotomic& c);
  friend SparseOperator operator+(SparseOperator a, const SparseOperator& b) { return a += b; }
  friend SparseOperator operator-(SparseOperator a, const SparseOperator& b) { return a -= b; }
  friend SparseOperator operator*(SparseOperator a, const Cyclotomic& c) { return a *= c; }
  friend SparseOperator operator*(const Cyclotomic& c, SparseOperator a) { return a *= c; }
  friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);
  bool operator==(const SparseOperator& o) const;

  // f * A.
  FunctionOnX apply(const FunctionOnX& f) const;

 private:
  std::vector<Row> rows_;
};

// X = (G/U)(F_Q) for G = SL_{n+1}, Q = q^k, U the upper unitriangular matrices.
// Points are indexed 0..|X|-1 in order of their canonical representatives (the
// coset element with the smallest key()). Requires Q <= 16, n + 1 <= 4 and
// |X| <= ceiling; throws std::invalid_argument otherwise.
class FiniteModel {
 public:
  FiniteModel(int n, std::uint32_t q, int k, std::size_t ceiling = 1000);

  int n() const { return n_; }
  int d() const { return n_ + 1; }
  std::uint32_t q() const { return q_; }
  int k() const { return k_; }
  std::uint32_t Q() const { return F_->size(); }
  const FiniteField& field() const { return *F_; }
  std::size_t size() const { return reps_.size(); }
  std::size_t group_order() const { return group_order_; }
  const GroupElement& point(std::size_t x) const { return reps_[x]; }
  // Index of the coset gU.
  std::size_t index_of(const GroupElement& g) const;

  // Group elements.
  GroupElement identity() const;
  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& g) const;
  GroupElement diagonal(const std::vector<Elem>& t) const;
  // rho_s: the 2 x 2 block in rows and columns s, s+1 (1-based simple index).
  GroupElement rho(int s, Elem a, Elem b, Elem c, Elem e) const;
  GroupElement x_simple(int s, Elem a) const { return rho(s, 1, a, 0, 1); }
  GroupElement n_simple(int s) const { return rho(s, 0, F_->neg(1), 1, 0); }
  // Coroot of the reflection (i j), 1-based: r at i, r^{-1} at j.
  GroupElement coroot(int i, int j, Elem r) const;
  GroupElement h_simple(int s, Elem r) const { return coroot(s, s + 1, r); }
  // T(F_Q) in the order of the discrete logs of its first n entries.
  const std::vector<GroupElement>& torus() const { return torus_; }

  // Scalars: Q(zeta_N) with N = Q - 1 in characteristic 2 (psi is +-1) and
  // N = lcm(Q - 1, p) otherwise.
  const std::shared_ptr<const CyclotomicField>& cyclotomic_field() const { return cf_; }
  // psi(a) = zeta_p^{Tr(a)}.
  Cyclotomic psi(Elem a) const;
  // theta(t) = prod_{i <= n} chi(t_i)^{m_i}, chi(gen^j) = zeta_{Q-1}^j.
  Cyclotomic theta(const TorusCharacter& th, const GroupElement& t) const;
  // All characters of T(F_Q) (modulus Q - 1).
  std::vector<TorusCharacter> characters() const;

  FunctionOnX zero_function() const { return FunctionOnX(size(), Cyclotomic(0)); }
  FunctionOnX delta(std::size_t x) const;
  // eps_theta = sum_t theta(t) delta_t.
  FunctionOnX epsilon(const TorusCharacter& th) const;

 private:
  int n_, k_;
  std::uint32_t q_;
  std::shared_ptr<const FiniteField> F_;
  std::size_t group_order_ = 0;
  std::vector<GroupElement> reps_;
  std::unordered_map<std::uint64_t, std::uint32_t> coset_of_;  // every group element -> point
  std::vector<GroupElement> torus_;
  std::shared_ptr<const CyclotomicField> cf_;
};

// Operators on C[X]; all are right actions commuting with left translation by G.
// R_t: delta_g -> delta_{gt}.
SparseOperator op_right_torus(const FiniteModel& M, const GroupElement& t);
// R_s: delta_g -> sum over the Q points g x_s(a) n_s of the s-cell fiber.
SparseOperator op_right_simple(const FiniteModel& M, int s);
// H_s(r) = R_{h_s(r)}.
SparseOperator op_h(const FiniteModel& M, int s, Elem r);
// Tie operator of the reflection (i j): sum_r R_{h_ij(r)}; E_s for (s, s+1).
SparseOperator op_tie(const FiniteModel& M, int i, int j);
SparseOperator op_e(const FiniteModel& M, int s);
// Psi_s = sum_r psi(r) H_s(r).
SparseOperator op_psi(const FiniteModel& M, int s);
// Juyumaya generator L_s = Q^{-1} (E_s + R_s Psi_s).
SparseOperator op_juyumaya(const FiniteModel& M, int s);
// Convolution with K(s): delta_x -> Q^{-1} sum_{y in x Q_s / U} psi(<x, y>) delta_y,
// where <x, y> is the lower-left entry of the Levi SL_2 part of g_x^{-1} g_y.
SparseOperator op_ks(const FiniteModel& M, int s);
// Convolution with E(s): delta_x -> sum_{t in T_s} delta_{xt}, and the variant divided by Q - 1.
SparseOperator op_es(const FiniteModel& M, int s);
SparseOperator op_es_normalized(const FiniteModel& M, int s);
// Left translation delta_x -> delta_{gx}.
SparseOperator op_left_translation(const FiniteModel& M, const GroupElement& g);

struct FiniteCheck {
  std::string name;
  bool pass = true;
  std::size_t instances = 0;
};

// One cell of the normalization comparison: does `relation` hold with
// g_s -> -L_s, e_s -> the given image of E_s, at the given value of v^2?
struct NormalizationEntry {
  std::string relation;
  std::string e_image;  // "E_s" or "E_s/(Q-1)"
  std::string v2;       // "Q" or "1/Q"
  bool holds = false;
};

struct CaseValue {
  TorusCharacter theta;
  int s = 0;
  bool in_w_circle = false;
  // Value of op_ks(eps_theta) at t x_s(a) n_s divided by theta(t) (the same for all t, a).
  Cyclotomic cell_factor;
  bool pass = false;
};

struct DeltaReport {
  bool solved = false;
  std::vector<std::pair<TorusCharacter, Cyclotomic>> coefficients;
  bool uniform = false;  // every coefficient equals 1/|T|
};

struct FiniteModelReport {
  int n = 0;
  std::uint32_t q = 0;
  int k = 0;
  std::uint32_t Q = 0;
  std::size_t points = 0;
  std::size_t group_order = 0;
  std::vector<FiniteCheck> checks;
  std::vector<CaseValue> case_values;
  DeltaReport delta;
  std::vector<NormalizationEntry> normalization;  // informational, not part of pass()
  bool pass() const;
};

// The main identity as matrices: op_ks(s) = L_s and op_es(s) = E_s for every s, plus the
// braid relation / reduced-word independence for the op_ks.
std::vector<FiniteCheck> verify_main_identity(const FiniteModel& M);
// R_{t1} R_{t2} = R_{t1 t2}, R_t R_s = R_s R_{s(t)}, R_s^2 = Q H_s(-1) + R_s E_s, braid for R_s.
std::vector<FiniteCheck> yokonuma_relations(const FiniteModel& M);
// L_s^2 = 1 - Q^{-1}(E_s - L_s E_s), braid for L_s, R_t L_s = L_s R_{s(t)}, far commutation.
std::vector<FiniteCheck> juyumaya_relations(const FiniteModel& M);
// E_s^2 = (Q-1) E_s, the normalized variant is the projection onto T_s-invariants,
// op_es(eps_theta) in {0, (Q-1) eps_theta} by W_theta° membership, G-equivariance of
// op_ks (n = 1), and the E(v) relations under g_s -> -L_s, e_r -> tie_r/(Q-1), v^2 = 1/Q.
std::vector<FiniteCheck> structural_checks(const FiniteModel& M);
// Sec. 3.4 Case 1 / Case 2 values of op_ks(eps_theta) for every theta and s.
std::vector<CaseValue> case_values(const FiniteModel& M);
// Solves delta_1 = sum_theta c_theta eps_theta exactly.
DeltaReport delta_in_epsilon_span(const FiniteModel& M);
// Which normalization of (e_s, v^2) satisfies idempotence, the quadratic and the cubic.
std::vector<NormalizationEntry> normalization_table(const FiniteModel& M);
// Everything above.
FiniteModelReport verify_finite_model(const FiniteModel& M);

// Comparison with the monodromic Hecke algebra at v = 2 (n <= 2, Q = 4): with
// Phi(A_w 1_L) = eps_L * R_w, op_ks(eps_L) must be a scalar multiple of
// Phi(pi_L(a_s) 1_L) (and L_s^{-1} eps_L of Phi(pi_L(a_s^{-1}) 1_L)).
struct CrosscheckEntry {
  TorusCharacter theta;
  int s = 0;
  bool in_w_circle = false;
  bool proportional = false;          // for a_s and a_s^{-1}
  Cyclotomic scale, scale_inverse;    // op = scale * Phi(pi_L(.))
  Cyclotomic gauss;                   // sum_r theta(h_s(r)) psi(r)
  bool gauss_norm = false;            // gauss * conj(gauss) = Q when s is not in W°, else gauss = -1
  bool pass = false;
};
struct CrosscheckReport {
  int n = 0;
  std::uint32_t Q = 0;
  BigRational v;
  std::vector<CrosscheckEntry> entries;
  bool pass = false;
};
CrosscheckReport monodromic_crosscheck(const FiniteModel& M);

}  // namespace klbt::fm

namespace klbt::fm {

// Image in the finite model of the difference between the two recursive lifts
// of c_{w0} for S_3 (via s_1 and via s_2), scaled by v^3 (1 - v^2)^3:
//   A_1 A_2 A_1 - A_2 A_1 A_2 - v^2 (1 - v^2)^2 (A_1 - A_2),  A_s = L_s^2 - 1, v^2 = 1/Q.
// Zero means the lift is descent-independent on C[X]. Requires n >= 2.
struct DescentWitness {
  bool zero = true;
  std::size_t nonzero_entries = 0;
};
DescentWitness kl_descent_witness(const FiniteModel& M);

}  // namespace klbt::fm
