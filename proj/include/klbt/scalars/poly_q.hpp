#pragma once

#include <klbt/scalars/rational.hpp>

#include <vector>

// Dense univariate polynomials over Q: index = degree, no trailing zeros,
// the zero polynomial is the empty vector.
namespace klbt::polyq {

using Poly = std::vector<BigRational>;

void trim(Poly& p);
int degree(const Poly& p);  // -1 for zero
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const BigRational& c);
// Euclidean division; throws MathError when b is zero.
void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly make_monic(const Poly& a);
// Monic gcd (zero only when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
// Returns s with s*a = 1 (mod modulus); throws MathError when gcd(a, modulus) != 1.
Poly inverse_mod(const Poly& a, const Poly& modulus);

}  // namespace klbt::polyq
