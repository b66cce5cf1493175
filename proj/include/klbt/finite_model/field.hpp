#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace klbt::fm {

// The finite field F_Q, Q = p^m <= 16, by lookup tables. An element is the
// integer whose base-p digits are the coefficients of its residue polynomial
// modulo a fixed irreducible polynomial (lowest degree first), so 0 and 1 are
// the field's zero and one.
class FiniteField {
 public:
  using Elem = std::uint8_t;
  static constexpr std::uint32_t kMaxSize = 16;

  // Throws std::invalid_argument unless Q = p^m <= 16 is a prime power.
  explicit FiniteField(std::uint32_t Q);
  static std::shared_ptr<const FiniteField> get(std::uint32_t Q);

  std::uint32_t size() const { return Q_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return m_; }
  // Coefficients of the monic irreducible modulus, lowest degree first.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const { return add_[a * Q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * Q_ + neg_[b]]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * Q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  // Throws MathError on 0.
  Elem inv(Elem a) const;

  // Fixed generator of F_Q^x (the smallest element of order Q - 1).
  Elem generator() const { return gen_; }
  Elem gen_power(std::int64_t k) const;
  // Discrete logarithm to the base generator(), in [0, Q - 1); throws on 0.
  std::uint32_t log(Elem a) const;
  // Absolute trace F_Q -> F_p, as an integer in [0, p).
  std::uint32_t trace(Elem a) const { return trace_[a]; }

  std::string str(Elem a) const;

 private:
  std::uint32_t Q_, p_, m_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> add_, mul_, neg_, exp_;
  std::vector<std::uint32_t> log_, trace_;
  Elem gen_ = 1;
};

}  // namespace klbt::fm
