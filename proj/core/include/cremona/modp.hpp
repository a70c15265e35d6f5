#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cremona/multipoly.hpp"
#include "cremona/rational.hpp"

namespace cremona {
namespace modp {

// Arithmetic in F_p for p < 2^63, intermediate products via 128-bit widening.

inline uint64_t add(uint64_t a, uint64_t b, uint64_t p) {
  uint64_t s = a + b;
  return s >= p ? s - p : s;
}

inline uint64_t sub(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }

inline uint64_t mul(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t pow(uint64_t base, uint64_t exp, uint64_t p);
uint64_t inv(uint64_t a, uint64_t p);  // a != 0 mod p

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(uint64_t n);

// Smallest prime >= n (n >= 2).
uint64_t first_prime_at_least(uint64_t n);

// Reduce an integer mod p.
uint64_t reduce(const Integer& z, uint64_t p);

// Reduce a rational mod p; empty when the denominator vanishes mod p
// ("bad reduction" — caller redraws the prime).
std::optional<uint64_t> reduce(const Rational& r, uint64_t p);

// Dense univariate polynomials over F_p, coefficient of u^i at index i.
// The zero polynomial is the empty vector; otherwise the back() is nonzero.
using DensePoly = std::vector<uint64_t>;

void trim(DensePoly& f);
inline int degree(const DensePoly& f) { return static_cast<int>(f.size()) - 1; }

DensePoly mul(const DensePoly& f, const DensePoly& g, uint64_t p);
DensePoly add(const DensePoly& f, const DensePoly& g, uint64_t p);
DensePoly sub(const DensePoly& f, const DensePoly& g, uint64_t p);
DensePoly scale(const DensePoly& f, uint64_t c, uint64_t p);

// Remainder of f by nonzero g.
DensePoly rem(const DensePoly& f, const DensePoly& g, uint64_t p);

// Polynomial quotient of f by nonzero g (f = q*g + r with deg r < deg g).
DensePoly quotient(const DensePoly& f, const DensePoly& g, uint64_t p);

// base^exp reduced by a nonconstant modulus.
DensePoly powmod(const DensePoly& base, uint64_t exp, const DensePoly& modulus,
                 uint64_t p);

// Monic gcd; gcd(0,0) = 0.
DensePoly gcd(DensePoly f, DensePoly g, uint64_t p);

DensePoly derivative(const DensePoly& f, uint64_t p);
uint64_t eval(const DensePoly& f, uint64_t x, uint64_t p);

// Restrict a multivariate polynomial with integer coefficients to the line
// x_j = a_j + b_j*u over F_p, returning a dense polynomial in u. The input's
// coefficients must be integers (denominator 1); this is checked.
DensePoly restrict_to_line(const MultiPoly<Rational>& f, const std::vector<uint64_t>& a,
                           const std::vector<uint64_t>& b, uint64_t p);

// Evaluate a multivariate polynomial with integer coefficients at a point
// over F_p.
uint64_t eval_at_point(const MultiPoly<Rational>& f, const std::vector<uint64_t>& point,
                       uint64_t p);

}  // namespace modp
}  // namespace cremona
