#pragma once

#include <klbt/scalars/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace klbt::modp {

// Arithmetic modulo the Mersenne prime p = 2^31 - 1. Residues are kept in [0, p).
inline constexpr std::uint32_t kP = 2147483647u;

inline std::uint32_t reduce(std::uint64_t t) {
  t = (t & kP) + (t >> 31);
  t = (t & kP) + (t >> 31);
  return static_cast<std::uint32_t>(t >= kP ? t - kP : t);
}
inline std::uint32_t add(std::uint32_t a, std::uint32_t b) { return reduce(std::uint64_t{a} + b); }
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b) { return reduce(std::uint64_t{a} + kP - b); }
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b) { return reduce(std::uint64_t{a} * b); }
inline std::uint32_t neg(std::uint32_t a) { return a == 0 ? 0 : kP - a; }
std::uint32_t pow(std::uint32_t a, std::uint64_t e);
// Throws MathError on 0.
std::uint32_t inv(std::uint32_t a);
// Image of a rational number; throws MathError when p divides the denominator.
std::uint32_t from_rational(const BigRational& q);

// Vector kernels. All pointers address arrays of residues; unaligned access is allowed.
struct Kernels {
  const char* name;
  // y[i] = y[i] + a * x[i]  (mod p), i < n.
  void (*axpy)(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n);
  // x[i] = a * x[i]  (mod p), i < n.
  void (*scale)(std::uint32_t* x, std::uint32_t a, std::size_t n);
  // Smallest i in [from, n) with x[i] != 0, or n.
  std::size_t (*find_nonzero)(const std::uint32_t* x, std::size_t from, std::size_t n);
};

// Portable reference kernels.
const Kernels& scalar_kernels();
// SIMD variants; nullptr when not compiled in or not supported by this CPU.
const Kernels* avx2_kernels();
const Kernels* neon_kernels();
// Fastest supported variant (runtime CPU detection), unless KLBT_KERNEL=scalar.
const Kernels& best_kernels();
// Every variant usable on this machine, scalar first.
std::vector<const Kernels*> available_kernels();

// Semi-echelon basis over F_p with leading pivots: row r has a 1 at its pivot
// column and zeros before it. Reduction walks columns in increasing order, so
// no back-substitution is needed and results do not depend on the kernel.
class Echelon {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  Echelon(std::size_t width, const Kernels& k);

  std::size_t width() const { return width_; }
  std::size_t rank() const { return pivots_.size(); }
  const std::uint32_t* row(std::size_t i) const { return rows_.data() + i * width_; }
  std::size_t pivot_col(std::size_t i) const { return pivots_[i]; }

  // Reduces x in place; returns the first nonzero column of the remainder (npos if zero).
  std::size_t reduce(std::uint32_t* x) const;
  bool in_span(std::vector<std::uint32_t> x) const { return reduce(x.data()) == npos; }
  // Adds x (width entries) to the span; returns true when the rank grew.
  bool insert(std::vector<std::uint32_t> x);

 private:
  std::size_t width_;
  const Kernels* k_;
  std::vector<std::uint32_t> rows_;  // rank() * width_, row-major
  std::vector<std::size_t> pivots_;
  std::vector<std::int32_t> row_of_col_;  // -1 when the column is not a pivot
};

}  // namespace klbt::modp
