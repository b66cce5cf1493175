#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace klbt {

// GMP keeps mpq_class canonical (reduced, positive denominator) after every
// arithmetic operation, which is the invariant BigRational needs.
using BigInt = mpz_class;
using BigRational = mpq_class;

class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string to_string(const BigRational& q) { return q.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

BigInt factorial(unsigned n);

}  // namespace klbt
