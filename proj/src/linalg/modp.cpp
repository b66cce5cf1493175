#include <klbt/linalg/modp.hpp>

#include <cstdlib>
#include <cstring>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define KLBT_HAVE_AVX2_KERNELS 1
#endif
#if defined(__ARM_NEON) || defined(__aarch64__)
#include <arm_neon.h>
#define KLBT_HAVE_NEON_KERNELS 1
#endif

namespace klbt::modp {

std::uint32_t pow(std::uint32_t a, std::uint64_t e) {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t inv(std::uint32_t a) {
  if (a == 0) throw MathError("modp::inv: zero has no inverse");
  return pow(a, kP - 2);
}

std::uint32_t from_rational(const BigRational& q) {
  const BigInt P(kP);
  BigInt n = q.get_num() % P, d = q.get_den() % P;
  if (n < 0) n += P;
  if (d == 0) throw MathError("modp::from_rational: denominator divisible by p");
  return mul(static_cast<std::uint32_t>(n.get_ui()), inv(static_cast<std::uint32_t>(d.get_ui())));
}

// ---- scalar reference ------------------------------------------------------

namespace {

void axpy_scalar(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = reduce(std::uint64_t{a} * x[i] + y[i]);
}

void scale_scalar(std::uint32_t* x, std::uint32_t a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] = mul(a, x[i]);
}

std::size_t find_nonzero_scalar(const std::uint32_t* x, std::size_t from, std::size_t n) {
  for (std::size_t i = from; i < n; ++i)
    if (x[i]) return i;
  return n;
}

const Kernels kScalar{"scalar", axpy_scalar, scale_scalar, find_nonzero_scalar};

// ---- AVX2 ------------------------------------------------------------------

#ifdef KLBT_HAVE_AVX2_KERNELS

// Residues of four 64-bit lanes, each < 2^63, folded to [0, p + 2].
__attribute__((target("avx2"))) inline __m256i fold2(__m256i t, __m256i p64) {
  t = _mm256_add_epi64(_mm256_and_si256(t, p64), _mm256_srli_epi64(t, 31));
  return _mm256_add_epi64(_mm256_and_si256(t, p64), _mm256_srli_epi64(t, 31));
}

// Eight lanes of a*x + y: even lanes via the low halves of the 64-bit
// products, odd lanes after shifting them down; then one conditional
// subtraction done as an unsigned min.
__attribute__((target("avx2"))) inline __m256i axpy8(__m256i X, __m256i Y, __m256i A, __m256i p64, __m256i p32,
                                                     __m256i lo_mask) {
  __m256i te = _mm256_add_epi64(_mm256_mul_epu32(X, A), _mm256_and_si256(Y, lo_mask));
  __m256i to = _mm256_add_epi64(_mm256_mul_epu32(_mm256_srli_epi64(X, 32), A), _mm256_srli_epi64(Y, 32));
  te = fold2(te, p64);
  to = fold2(to, p64);
  __m256i r = _mm256_blend_epi32(te, _mm256_slli_epi64(to, 32), 0xAA);
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, p32));
}

__attribute__((target("avx2"))) void axpy_avx2(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a,
                                               std::size_t n) {
  const __m256i A = _mm256_set1_epi64x(a), p64 = _mm256_set1_epi64x(kP), p32 = _mm256_set1_epi32(kP);
  const __m256i lo_mask = _mm256_set1_epi64x(0xffffffffLL);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i X = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    const __m256i Y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), axpy8(X, Y, A, p64, p32, lo_mask));
  }
  axpy_scalar(y + i, x + i, a, n - i);
}

__attribute__((target("avx2"))) void scale_avx2(std::uint32_t* x, std::uint32_t a, std::size_t n) {
  const __m256i A = _mm256_set1_epi64x(a), p64 = _mm256_set1_epi64x(kP), p32 = _mm256_set1_epi32(kP);
  const __m256i lo_mask = _mm256_set1_epi64x(0xffffffffLL), zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i X = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(x + i), axpy8(X, zero, A, p64, p32, lo_mask));
  }
  scale_scalar(x + i, a, n - i);
}

__attribute__((target("avx2"))) std::size_t find_nonzero_avx2(const std::uint32_t* x, std::size_t from,
                                                              std::size_t n) {
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = from;
  for (; i + 8 <= n; i += 8) {
    const __m256i X = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    const unsigned eq = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(X, zero))));
    if (eq != 0xFFu) return i + static_cast<std::size_t>(__builtin_ctz(~eq & 0xFFu));
  }
  return find_nonzero_scalar(x, i, n);
}

const Kernels kAvx2{"avx2", axpy_avx2, scale_avx2, find_nonzero_avx2};

#endif

// ---- NEON ------------------------------------------------------------------

#ifdef KLBT_HAVE_NEON_KERNELS

inline uint64x2_t fold2_neon(uint64x2_t t, uint64x2_t p64) {
  t = vaddq_u64(vandq_u64(t, p64), vshrq_n_u64(t, 31));
  return vaddq_u64(vandq_u64(t, p64), vshrq_n_u64(t, 31));
}

void axpy_neon(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n) {
  const uint32x2_t A = vdup_n_u32(a);
  const uint64x2_t p64 = vdupq_n_u64(kP);
  const uint32x4_t p32 = vdupq_n_u32(kP);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const uint32x4_t X = vld1q_u32(x + i), Y = vld1q_u32(y + i);
    uint64x2_t lo = vmlal_u32(vmovl_u32(vget_low_u32(Y)), vget_low_u32(X), A);
    uint64x2_t hi = vmlal_u32(vmovl_u32(vget_high_u32(Y)), vget_high_u32(X), A);
    uint32x4_t r = vcombine_u32(vmovn_u64(fold2_neon(lo, p64)), vmovn_u64(fold2_neon(hi, p64)));
    vst1q_u32(y + i, vminq_u32(r, vsubq_u32(r, p32)));
  }
  axpy_scalar(y + i, x + i, a, n - i);
}

void scale_neon(std::uint32_t* x, std::uint32_t a, std::size_t n) {
  const uint32x2_t A = vdup_n_u32(a);
  const uint64x2_t p64 = vdupq_n_u64(kP);
  const uint32x4_t p32 = vdupq_n_u32(kP);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const uint32x4_t X = vld1q_u32(x + i);
    uint64x2_t lo = vmull_u32(vget_low_u32(X), A);
    uint64x2_t hi = vmull_u32(vget_high_u32(X), A);
    uint32x4_t r = vcombine_u32(vmovn_u64(fold2_neon(lo, p64)), vmovn_u64(fold2_neon(hi, p64)));
    vst1q_u32(x + i, vminq_u32(r, vsubq_u32(r, p32)));
  }
  scale_scalar(x + i, a, n - i);
}

std::size_t find_nonzero_neon(const std::uint32_t* x, std::size_t from, std::size_t n) {
  std::size_t i = from;
  for (; i + 4 <= n; i += 4)
    if (vmaxvq_u32(vld1q_u32(x + i))) break;
  return find_nonzero_scalar(x, i, n);
}

const Kernels kNeon{"neon", axpy_neon, scale_neon, find_nonzero_neon};

#endif

}  // namespace

const Kernels& scalar_kernels() { return kScalar; }

const Kernels* avx2_kernels() {
#ifdef KLBT_HAVE_AVX2_KERNELS
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const Kernels* neon_kernels() {
#ifdef KLBT_HAVE_NEON_KERNELS
  return &kNeon;  // Advanced SIMD is mandatory on AArch64.
#else
  return nullptr;
#endif
}

const Kernels& best_kernels() {
  const char* env = std::getenv("KLBT_KERNEL");
  if (env && std::strcmp(env, "scalar") == 0) return kScalar;
  if (const Kernels* k = avx2_kernels()) return *k;
  if (const Kernels* k = neon_kernels()) return *k;
  return kScalar;
}

std::vector<const Kernels*> available_kernels() {
  std::vector<const Kernels*> out{&kScalar};
  if (const Kernels* k = avx2_kernels()) out.push_back(k);
  if (const Kernels* k = neon_kernels()) out.push_back(k);
  return out;
}

// ---- Echelon -----------------------------------------------------------------

Echelon::Echelon(std::size_t width, const Kernels& k) : width_(width), k_(&k), row_of_col_(width, -1) {}

std::size_t Echelon::reduce(std::uint32_t* x) const {
  std::size_t j = k_->find_nonzero(x, 0, width_);
  while (j < width_) {
    const std::int32_t r = row_of_col_[j];
    if (r < 0) return j;
    // Row r vanishes before column j and is 1 at j, so this clears x[j].
    k_->axpy(x + j, row(static_cast<std::size_t>(r)) + j, neg(x[j]), width_ - j);
    j = k_->find_nonzero(x, j + 1, width_);
  }
  return npos;
}

bool Echelon::insert(std::vector<std::uint32_t> x) {
  if (x.size() != width_) throw MathError("modp::Echelon::insert: width mismatch");
  const std::size_t j = reduce(x.data());
  if (j == npos) return false;
  k_->scale(x.data() + j, inv(x[j]), width_ - j);
  row_of_col_[j] = static_cast<std::int32_t>(pivots_.size());
  pivots_.push_back(j);
  rows_.insert(rows_.end(), x.begin(), x.end());
  return true;
}

}  // namespace klbt::modp
