#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cremona/context.hpp"
#include "cremona/matrix.hpp"
#include "cremona/multipoly.hpp"

namespace cremona {

// A rational self-map of projective space, held as an (n+1)-tuple of
// homogeneous polynomials of one common degree. Two tuples describe the
// same map when they agree up to a scalar or a common polynomial factor;
// `normalize` produces the canonical coprime representative.
class RationalMap {
 public:
  // Validates on construction: component count, homogeneity, matching
  // degrees, not identically zero. The context fixes the coordinate names
  // (x0..xn for maps of P^n; the quotient machinery also builds maps on
  // hyperplane coordinates x1..xn).
  static RationalMap make(ContextPtr ctx, std::vector<MultiPoly<Rational>> components);

  // Components given in the standard coordinates x0..xn of P^n.
  static RationalMap make(int n, std::vector<MultiPoly<Rational>> components);

  static RationalMap identity(int n);
  static RationalMap identity(const ContextPtr& ctx);

  int n() const { return static_cast<int>(components_.size()) - 1; }
  const ContextPtr& context() const { return ctx_; }
  const std::vector<MultiPoly<Rational>>& components() const { return components_; }
  bool normalized() const { return normalized_; }

  // Degree of the tuple as written (components may share a factor).
  int written_degree() const;

 private:
  RationalMap(ContextPtr ctx, std::vector<MultiPoly<Rational>> components, bool normalized)
      : ctx_(std::move(ctx)), components_(std::move(components)), normalized_(normalized) {}

  friend RationalMap normalize(const RationalMap& f);

  ContextPtr ctx_;
  std::vector<MultiPoly<Rational>> components_;
  bool normalized_;
};

// Divide out gcd of the components and scale canonically; the result
// represents the same rational map with coprime components.
RationalMap normalize(const RationalMap& f);

// Algebraic degree: the common degree of the normalized components.
int degree(const RationalMap& f);

// compose(f, g) = f after g: substitute the components of g for the
// coordinates of f, then normalize. Throws ComposedToZero when every
// component vanishes identically (g lands in f's indeterminacy locus).
RationalMap compose(const RationalMap& f, const RationalMap& g);

// Projective identity test via the cross-product criterion
// x_j*f_i - x_i*f_j = 0 for all i < j; insensitive to common factors.
bool is_identity(const RationalMap& f);

// Projective equality f_i*g_j - f_j*g_i = 0 for all i < j.
bool maps_equal(const RationalMap& f, const RationalMap& g);

// Determinant of the matrix of partial derivatives.
MultiPoly<Rational> jacobian(const RationalMap& f);

// Nonzero Jacobian is necessary for birationality; it certifies dominance
// of the image closure, not the existence of an inverse.
bool is_dominant_candidate(const RationalMap& f);

// True iff f∘g and g∘f are both the identity; a composition that collapses
// to zero counts as failure rather than an error.
bool verify_mutual_inverse(const RationalMap& f, const RationalMap& g);

// Degree-1 map from an (n+1)x(n+1) coefficient matrix (rows are components).
RationalMap linear_map(const QMatrix& matrix);
RationalMap linear_map(const ContextPtr& ctx, const QMatrix& matrix);

// Inverse of a degree-1 map via the adjugate (projectively, no division).
RationalMap invert_linear(const RationalMap& f);

// The quadratic involution (x1x2 : x0x2 : x0x1) of P^2.
RationalMap standard_quadratic();

struct DegreeSequence {
  int n = 0;
  std::vector<std::pair<int, int>> entries;  // (m, degree of the m-th power)
};

enum class GrowthClass { finite_order, bounded_observed, strictly_growing_observed };

const char* to_string(GrowthClass g);

struct GrowthReport {
  GrowthClass classification = GrowthClass::bounded_observed;
  int order = 0;  // set iff classification == finite_order
  DegreeSequence evidence;
  std::string caveat;  // states the observation horizon explicitly
};

// Degrees of f, f^2, ..., f^M by iterated compose-and-normalize.
DegreeSequence power_degree_sequence(const RationalMap& f, int max_power);

// finite-order(k) only on a verified identity power; everything else is an
// observation up to the horizon, never a proof.
GrowthReport cyclic_growth_report(const RationalMap& f, int max_power);

// F^(-1) ∘ f ∘ F after checking that (F, F_inv) really are mutual inverses.
RationalMap conjugate(const RationalMap& f, const RationalMap& F, const RationalMap& F_inv);

}  // namespace cremona
