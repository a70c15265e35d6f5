#pragma once

// Arithmetic in Q[t]/(m(t)) for a monic squarefree modulus m: the scalar
// field used to certify statements "at every root of m" without leaving
// exact arithmetic. When m is irreducible this is a number field; when it is
// merely squarefree it is a product of fields, and any computation whose
// control flow would distinguish the factors raises ModulusSplit with a
// certified factor so the caller can split m and rerun per factor (dynamic
// evaluation). Either way, a completed computation is valid uniformly for
// every root of the modulus in play.

#include <memory>
#include <string>
#include <vector>

#include "cremona/multipoly.hpp"
#include "cremona/rational.hpp"

namespace cremona {

// Monic univariate modulus over Q, shared immutably by scalars.
class QuotientModulus {
 public:
  // Coefficients ascending by power; scaled to monic. Degree >= 1 required.
  explicit QuotientModulus(std::vector<Rational> coeffs);
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

 private:
  std::vector<Rational> coeffs_;
};

using ModulusPtr = std::shared_ptr<const QuotientModulus>;

// Build a modulus from a nonconstant polynomial on a one-variable context.
ModulusPtr make_modulus(const MultiPoly<Rational>& p);

// Render a modulus as a polynomial on a one-variable context (for reports).
MultiPoly<Rational> modulus_poly(const QuotientModulus& m, const ContextPtr& ctx);

// Control-flow signal, not an error: arithmetic met a zero divisor, which
// certifies a proper monic factor of the modulus. The catcher splits the
// modulus into factor and cofactor and reruns the computation on each.
// Must never escape a public API.
struct ModulusSplit {
  ModulusPtr modulus;
  std::vector<Rational> factor;  // monic, 1 <= degree < degree of modulus
};

// Residue class in Q[t]/(m). A scalar without a modulus is a plain rational
// constant; binary operations adopt the modulus of either side and require
// agreement when both sides carry one.
class QuotientScalar {
 public:
  QuotientScalar() = default;                     // zero
  QuotientScalar(int value);                      // NOLINT: kernel builds scalars from ints
  explicit QuotientScalar(const Rational& value);
  static QuotientScalar constant(ModulusPtr m, const Rational& value);
  static QuotientScalar generator(ModulusPtr m);  // the class of t
  // Coefficients ascending by power; reduced mod m on construction.
  static QuotientScalar from_coeffs(ModulusPtr m, std::vector<Rational> coeffs);

  const ModulusPtr& modulus() const { return modulus_; }  // null: plain rational
  // Ascending, no trailing zeros; empty means zero.
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  friend QuotientScalar operator+(const QuotientScalar& a, const QuotientScalar& b);
  friend QuotientScalar operator-(const QuotientScalar& a, const QuotientScalar& b);
  friend QuotientScalar operator*(const QuotientScalar& a, const QuotientScalar& b);
  // Throws ModulusSplit if b is a zero divisor (nonzero but not invertible).
  friend QuotientScalar operator/(const QuotientScalar& a, const QuotientScalar& b);
  QuotientScalar operator-() const;
  friend bool operator==(const QuotientScalar& a, const QuotientScalar& b);
  friend bool operator!=(const QuotientScalar& a, const QuotientScalar& b) {
    return !(a == b);
  }

  std::string to_string(const std::string& var = "t") const;

 private:
  QuotientScalar(ModulusPtr m, std::vector<Rational> coeffs);

  ModulusPtr modulus_;            // null for plain rational constants
  std::vector<Rational> coeffs_;  // ascending; size <= max(1, deg m - 1) + ...
};

// Certifies that c is invertible in its quotient ring; throws ModulusSplit
// on a zero divisor. Plain nonzero rationals pass trivially. Calling this on
// zero is an internal error (the kernel never stores zero coefficients).
void certify_unit(const QuotientScalar& c);

template <>
struct FieldTraits<QuotientScalar> {
  static QuotientScalar zero() { return QuotientScalar(); }
  static QuotientScalar one() { return QuotientScalar(1); }
  static bool is_zero(const QuotientScalar& c) { return c.is_zero(); }
  static std::string str(const QuotientScalar& c) { return c.to_string(); }
  // Hook picked up by the gcd's structural certification (see gcd.hpp):
  // over a product of fields, a polynomial's shape may only steer control
  // flow once every stored coefficient is known invertible.
  static void certify_unit(const QuotientScalar& c) { cremona::certify_unit(c); }
};

}  // namespace cremona
