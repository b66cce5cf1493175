#include <klbt/finite_model/finite_model.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace klbt::fm {

// ---------------------------------------------------------------- GroupElement

std::uint64_t GroupElement::key() const {
  std::uint64_t k = 0;
  for (int i = 0; i < d * d; ++i) k |= std::uint64_t{a[static_cast<std::size_t>(i)]} << (4 * i);
  return k;
}

// -------------------------------------------------------------- SparseOperator

SparseOperator SparseOperator::identity(std::size_t dim) {
  SparseOperator I(dim);
  for (std::size_t i = 0; i < dim; ++i) I.rows_[i].emplace_back(static_cast<std::uint32_t>(i), Cyclotomic(1));
  return I;
}

void SparseOperator::add(std::size_t i, std::size_t j, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto& r = rows_[i];
  const auto col = static_cast<std::uint32_t>(j);
  auto it = std::lower_bound(r.begin(), r.end(), col, [](const auto& e, std::uint32_t v) { return e.first < v; });
  if (it != r.end() && it->first == col) {
    it->second += c;
    if (it->second.is_zero()) r.erase(it);
  } else {
    r.insert(it, {col, c});
  }
}

Cyclotomic SparseOperator::entry(std::size_t i, std::size_t j) const {
  const auto& r = rows_[i];
  const auto col = static_cast<std::uint32_t>(j);
  auto it = std::lower_bound(r.begin(), r.end(), col, [](const auto& e, std::uint32_t v) { return e.first < v; });
  return it != r.end() && it->first == col ? it->second : Cyclotomic(0);
}

std::size_t SparseOperator::nnz() const {
  std::size_t t = 0;
  for (const auto& r : rows_) t += r.size();
  return t;
}

bool SparseOperator::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.empty(); });
}

namespace {

SparseOperator::Row merge_rows(const SparseOperator::Row& a, const SparseOperator::Row& b, bool subtract) {
  SparseOperator::Row out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, subtract ? -b[j].second : b[j].second);
      ++j;
    } else {
      Cyclotomic c = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
      if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

void check_dims(const SparseOperator& a, const SparseOperator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("operator dimensions differ");
}

}  // namespace

SparseOperator& SparseOperator::operator+=(const SparseOperator& o) {
  check_dims(*this, o);
  for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i] = merge_rows(rows_[i], o.rows_[i], false);
  return *this;
}

SparseOperator& SparseOperator::operator-=(const SparseOperator& o) {
  check_dims(*this, o);
  for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i] = merge_rows(rows_[i], o.rows_[i], true);
  return *this;
}

SparseOperator& SparseOperator::operator*=(const Cyclotomic& c) {
  if (c.is_zero()) {
    for (auto& r : rows_) r.clear();
    return *this;
  }
  for (auto& r : rows_)
    for (auto& e : r) e.second *= c;
  return *this;
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
  check_dims(a, b);
  const std::size_t n = a.dim();
  SparseOperator out(n);
  std::vector<Cyclotomic> acc(n);
  std::vector<char> used(n, 0);
  std::vector<std::uint32_t> touched;
  for (std::size_t i = 0; i < n; ++i) {
    touched.clear();
    for (const auto& [k, c] : a.rows_[i])
      for (const auto& [j, d] : b.rows_[k]) {
        if (!used[j]) {
          used[j] = 1;
          touched.push_back(j);
          acc[j] = c * d;
        } else {
          acc[j] += c * d;
        }
      }
    std::sort(touched.begin(), touched.end());
    auto& row = out.rows_[i];
    for (std::uint32_t j : touched) {
      if (!acc[j].is_zero()) row.emplace_back(j, std::move(acc[j]));
      acc[j] = Cyclotomic(0);
      used[j] = 0;
    }
  }
  return out;
}

bool SparseOperator::operator==(const SparseOperator& o) const {
  if (dim() != o.dim()) return false;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto &r = rows_[i], &s = o.rows_[i];
    if (r.size() != s.size()) return false;
    for (std::size_t j = 0; j < r.size(); ++j)
      if (r[j].first != s[j].first || !(r[j].second == s[j].second)) return false;
  }
  return true;
}

FunctionOnX SparseOperator::apply(const FunctionOnX& f) const {
  if (f.size() != dim()) throw std::invalid_argument("function size differs from operator dimension");
  FunctionOnX out(dim(), Cyclotomic(0));
  for (std::size_t i = 0; i < dim(); ++i) {
    if (f[i].is_zero()) continue;
    for (const auto& [j, c] : rows_[i]) out[j] += f[i] * c;
  }
  return out;
}

// ----------------------------------------------------------------- FiniteModel

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

Elem det(const FiniteField& F, const GroupElement& g, std::vector<int> rows, int col) {
  if (rows.size() == 1) return g(rows[0], col);
  Elem total = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<int> rest;
    for (std::size_t t = 0; t < rows.size(); ++t)
      if (t != r) rest.push_back(rows[t]);
    Elem term = F.mul(g(rows[r], col), det(F, g, rest, col + 1));
    total = r % 2 ? F.sub(total, term) : F.add(total, term);
  }
  return total;
}

}  // namespace

FiniteModel::FiniteModel(int n, std::uint32_t q, int k, std::size_t ceiling) : n_(n), k_(k), q_(q) {
  if (n < 1 || n > 3) throw std::invalid_argument("finite model requires 1 <= n <= 3");
  if (k < 1 || q < 2) throw std::invalid_argument("finite model requires q >= 2 and k >= 1");
  const std::uint64_t Q = ipow(q, k);
  if (Q > FiniteField::kMaxSize) throw std::invalid_argument("finite model requires q^k <= 16");
  F_ = FiniteField::get(static_cast<std::uint32_t>(Q));
  if (ipow(F_->characteristic(), 1) > q || q % F_->characteristic() != 0)
    throw std::invalid_argument("q must be a prime power");
  {
    std::uint32_t t = q;
    while (t % F_->characteristic() == 0) t /= F_->characteristic();
    if (t != 1) throw std::invalid_argument("q must be a prime power");
  }
  const int dd = n + 1;
  // |X| = prod_{i=2}^{d} (Q^i - 1).
  std::uint64_t xsize = 1;
  for (int i = 2; i <= dd; ++i) xsize *= ipow(Q, i) - 1;
  if (xsize > ceiling)
    throw std::invalid_argument("|X| = " + std::to_string(xsize) + " exceeds the ceiling " + std::to_string(ceiling));

  // Unitriangular group U.
  std::vector<std::pair<int, int>> upper;
  for (int i = 0; i < dd; ++i)
    for (int j = i + 1; j < dd; ++j) upper.emplace_back(i, j);
  std::vector<GroupElement> U;
  const std::uint64_t usize = ipow(Q, static_cast<int>(upper.size()));
  for (std::uint64_t code = 0; code < usize; ++code) {
    GroupElement u = identity();
    std::uint64_t c = code;
    for (auto [i, j] : upper) {
      u(i, j) = static_cast<Elem>(c % Q);
      c /= Q;
    }
    U.push_back(u);
  }

  // Enumerate SL_d(F_Q) and group it into cosets gU.
  std::vector<int> all_rows(static_cast<std::size_t>(dd));
  std::iota(all_rows.begin(), all_rows.end(), 0);
  const std::uint64_t total = ipow(Q, dd * dd);
  std::vector<GroupElement> reps;
  std::vector<std::vector<std::uint64_t>> members;
  GroupElement g;
  g.d = dd;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int i = 0; i < dd * dd; ++i) {
      g.a[static_cast<std::size_t>(i)] = static_cast<Elem>(c % Q);
      c /= Q;
    }
    if (det(*F_, g, all_rows, 0) != 1) continue;
    ++group_order_;
    if (coset_of_.count(g.key())) continue;
    const auto idx = static_cast<std::uint32_t>(reps.size());
    GroupElement best = g;
    std::vector<std::uint64_t> keys;
    for (const auto& u : U) {
      const GroupElement gu = mul(g, u);
      keys.push_back(gu.key());
      coset_of_[gu.key()] = idx;
      if (gu.key() < best.key()) best = gu;
    }
    reps.push_back(best);
    members.push_back(std::move(keys));
  }
  if (reps.size() != xsize) throw std::logic_error("coset enumeration does not match |G/U|");
  // Renumber by canonical representative.
  std::vector<std::uint32_t> order(reps.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return reps[a].key() < reps[b].key(); });
  for (std::uint32_t i = 0; i < order.size(); ++i) {
    reps_.push_back(reps[order[i]]);
    for (auto key : members[order[i]]) coset_of_[key] = i;
  }

  // Torus, ordered by the discrete logs of the first n diagonal entries.
  const std::uint32_t ord = F_->size() - 1;
  const std::uint64_t tsize = ipow(ord, n);
  for (std::uint64_t code = 0; code < tsize; ++code) {
    std::vector<Elem> diag(static_cast<std::size_t>(dd));
    std::uint64_t c = code;
    std::int64_t logsum = 0;
    for (int i = n - 1; i >= 0; --i) {
      const auto e = static_cast<std::int64_t>(c % ord);
      c /= ord;
      diag[static_cast<std::size_t>(i)] = F_->gen_power(e);
      logsum += e;
    }
    diag[static_cast<std::size_t>(n)] = F_->gen_power(-logsum);
    torus_.push_back(diagonal(diag));
  }

  const int p = static_cast<int>(F_->characteristic());
  const int N = p == 2 ? static_cast<int>(ord) : std::lcm(static_cast<int>(ord), p);
  cf_ = CyclotomicField::get(N);
}

std::size_t FiniteModel::index_of(const GroupElement& g) const {
  auto it = coset_of_.find(g.key());
  if (it == coset_of_.end()) throw std::invalid_argument("matrix is not in SL_{n+1}(F_Q)");
  return it->second;
}

GroupElement FiniteModel::identity() const {
  GroupElement g;
  g.d = d();
  for (int i = 0; i < d(); ++i) g(i, i) = 1;
  return g;
}

GroupElement FiniteModel::mul(const GroupElement& a, const GroupElement& b) const {
  GroupElement c;
  c.d = a.d;
  for (int i = 0; i < a.d; ++i)
    for (int j = 0; j < a.d; ++j) {
      Elem s = 0;
      for (int t = 0; t < a.d; ++t) s = F_->add(s, F_->mul(a(i, t), b(t, j)));
      c(i, j) = s;
    }
  return c;
}

GroupElement FiniteModel::inverse(const GroupElement& g) const {
  // Gauss-Jordan on [g | 1].
  const int n = g.d;
  GroupElement a = g, r = identity();
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) throw std::invalid_argument("singular matrix");
    for (int j = 0; j < n; ++j) {
      std::swap(a(col, j), a(piv, j));
      std::swap(r(col, j), r(piv, j));
    }
    const Elem inv = F_->inv(a(col, col));
    for (int j = 0; j < n; ++j) {
      a(col, j) = F_->mul(a(col, j), inv);
      r(col, j) = F_->mul(r(col, j), inv);
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const Elem f = a(i, col);
      for (int j = 0; j < n; ++j) {
        a(i, j) = F_->sub(a(i, j), F_->mul(f, a(col, j)));
        r(i, j) = F_->sub(r(i, j), F_->mul(f, r(col, j)));
      }
    }
  }
  return r;
}

GroupElement FiniteModel::diagonal(const std::vector<Elem>& t) const {
  GroupElement g;
  g.d = d();
  for (int i = 0; i < d(); ++i) g(i, i) = t[static_cast<std::size_t>(i)];
  return g;
}

GroupElement FiniteModel::rho(int s, Elem a, Elem b, Elem c, Elem e) const {
  if (s < 1 || s > n_) throw std::invalid_argument("simple index out of range");
  GroupElement g = identity();
  g(s - 1, s - 1) = a;
  g(s - 1, s) = b;
  g(s, s - 1) = c;
  g(s, s) = e;
  return g;
}

GroupElement FiniteModel::coroot(int i, int j, Elem r) const {
  GroupElement g = identity();
  g(i - 1, i - 1) = r;
  g(j - 1, j - 1) = F_->inv(r);
  return g;
}

Cyclotomic FiniteModel::psi(Elem a) const {
  const std::uint32_t tr = F_->trace(a);
  if (F_->characteristic() == 2) return Cyclotomic(tr ? -1L : 1L);
  return Cyclotomic::zeta_power(cf_, static_cast<long>(cf_->N / static_cast<int>(F_->characteristic()) * tr));
}

Cyclotomic FiniteModel::theta(const TorusCharacter& th, const GroupElement& t) const {
  const std::uint32_t ord = F_->size() - 1;
  if (th.modulus() != ord || th.n() != n_) throw std::invalid_argument("character does not match the torus");
  std::uint64_t e = 0;
  for (int i = 1; i <= n_; ++i) e += std::uint64_t{th.coord(i)} * F_->log(t(i - 1, i - 1));
  e %= ord;
  return Cyclotomic::zeta_power(cf_, static_cast<long>(static_cast<std::uint64_t>(cf_->N / static_cast<int>(ord)) * e));
}

std::vector<TorusCharacter> FiniteModel::characters() const { return all_characters(n_, F_->size() - 1); }

FunctionOnX FiniteModel::delta(std::size_t x) const {
  FunctionOnX f = zero_function();
  f[x] = Cyclotomic(1);
  return f;
}

FunctionOnX FiniteModel::epsilon(const TorusCharacter& th) const {
  FunctionOnX f = zero_function();
  for (const auto& t : torus_) f[index_of(t)] += theta(th, t);
  return f;
}

// ------------------------------------------------------------------- Operators

SparseOperator op_right_torus(const FiniteModel& M, const GroupElement& t) {
  SparseOperator R(M.size());
  for (std::size_t x = 0; x < M.size(); ++x) R.add(x, M.index_of(M.mul(M.point(x), t)), Cyclotomic(1));
  return R;
}

SparseOperator op_right_simple(const FiniteModel& M, int s) {
  SparseOperator R(M.size());
  const GroupElement ns = M.n_simple(s);
  for (std::size_t x = 0; x < M.size(); ++x)
    for (std::uint32_t a = 0; a < M.Q(); ++a)
      R.add(x, M.index_of(M.mul(M.mul(M.point(x), M.x_simple(s, static_cast<Elem>(a))), ns)), Cyclotomic(1));
  return R;
}

SparseOperator op_h(const FiniteModel& M, int s, Elem r) { return op_right_torus(M, M.h_simple(s, r)); }

SparseOperator op_tie(const FiniteModel& M, int i, int j) {
  SparseOperator E(M.size());
  for (std::uint32_t r = 1; r < M.Q(); ++r) E += op_right_torus(M, M.coroot(i, j, static_cast<Elem>(r)));
  return E;
}

SparseOperator op_e(const FiniteModel& M, int s) {
  SparseOperator E(M.size());
  for (std::uint32_t r = 1; r < M.Q(); ++r) E += op_h(M, s, static_cast<Elem>(r));
  return E;
}

SparseOperator op_psi(const FiniteModel& M, int s) {
  SparseOperator P(M.size());
  for (std::uint32_t r = 1; r < M.Q(); ++r) P += op_h(M, s, static_cast<Elem>(r)) * M.psi(static_cast<Elem>(r));
  return P;
}

SparseOperator op_juyumaya(const FiniteModel& M, int s) {
  const Cyclotomic qinv(BigRational(1, M.Q()));
  return (op_e(M, s) + op_right_simple(M, s) * op_psi(M, s)) * qinv;
}

namespace {

// For m = g_x^{-1} g_y: whether m lies in Q_s = rho_s(SL_2) U (block upper
// triangular, identity diagonal outside the s-block), and whether it lies in
// T_s U (upper triangular with diagonal h_s(r)).
bool in_parabolic(const FiniteModel& M, const GroupElement& m, int s) {
  for (int i = 0; i < m.d; ++i)
    for (int j = 0; j < i; ++j)
      if (m(i, j) != 0 && !(i == s && j == s - 1)) return false;
  for (int i = 0; i < m.d; ++i)
    if (i != s - 1 && i != s && m(i, i) != 1) return false;
  (void)M;
  return true;
}

bool in_coroot_torus(const FiniteModel& M, const GroupElement& m, int s) {
  if (!in_parabolic(M, m, s) || m(s, s - 1) != 0) return false;
  return M.field().mul(m(s - 1, s - 1), m(s, s)) == 1;
}

}  // namespace

SparseOperator op_ks(const FiniteModel& M, int s) {
  const Cyclotomic qinv(BigRational(1, M.Q()));
  SparseOperator K(M.size());
  for (std::size_t x = 0; x < M.size(); ++x) {
    const GroupElement gi = M.inverse(M.point(x));
    for (std::size_t y = 0; y < M.size(); ++y) {
      const GroupElement m = M.mul(gi, M.point(y));
      // <x, y> is the lower-left entry of the Levi SL_2 block; right
      // multiplication by U does not change it, so it is well defined on X.
      if (in_parabolic(M, m, s)) K.add(x, y, qinv * M.psi(m(s, s - 1)));
    }
  }
  return K;
}

SparseOperator op_es(const FiniteModel& M, int s) {
  SparseOperator E(M.size());
  for (std::size_t x = 0; x < M.size(); ++x) {
    const GroupElement gi = M.inverse(M.point(x));
    for (std::size_t y = 0; y < M.size(); ++y)
      if (in_coroot_torus(M, M.mul(gi, M.point(y)), s)) E.add(x, y, Cyclotomic(1));
  }
  return E;
}

SparseOperator op_es_normalized(const FiniteModel& M, int s) {
  return op_es(M, s) * Cyclotomic(BigRational(1, M.Q() - 1));
}

SparseOperator op_left_translation(const FiniteModel& M, const GroupElement& g) {
  SparseOperator T(M.size());
  for (std::size_t x = 0; x < M.size(); ++x) T.add(x, M.index_of(M.mul(g, M.point(x))), Cyclotomic(1));
  return T;
}

}  // namespace klbt::fm
