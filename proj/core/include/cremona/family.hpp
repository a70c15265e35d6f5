#pragma once

// One-parameter polynomial families of rational maps of P^n. A family is
// held as a "writing": an (n+1)-tuple of polynomials in the coordinates
// x0..xn and one parameter variable, homogeneous of a common degree in the
// x variables. Specializing the parameter yields rational maps; this module
// computes the minimal writing, the family degree, the finite sets of
// parameter values where the specialized map drops degree or the writing
// vanishes outright, and reports certifying lower semicontinuity of the
// specialized degree.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cremona/birmap.hpp"
#include "cremona/multipoly.hpp"
#include "cremona/quotient.hpp"
#include "cremona/rational.hpp"

namespace cremona {

class ParamWriting {
 public:
  // Components live on the context {x0..xn, param} (parameter last), must
  // be homogeneous in the x variables of one common degree, and must not
  // all be zero. Individual zero components are allowed.
  static ParamWriting make(int n, const std::string& param,
                           std::vector<MultiPoly<Rational>> components,
                           std::string provenance = "");

  int n() const { return static_cast<int>(components_.size()) - 1; }
  const std::string& param() const { return param_; }
  const ContextPtr& context() const { return ctx_; }
  const std::vector<MultiPoly<Rational>>& components() const { return components_; }
  const std::string& provenance() const { return provenance_; }

 private:
  ParamWriting(ContextPtr ctx, std::string param,
               std::vector<MultiPoly<Rational>> components, std::string provenance)
      : ctx_(std::move(ctx)),
        param_(std::move(param)),
        components_(std::move(components)),
        provenance_(std::move(provenance)) {}

  ContextPtr ctx_;
  std::string param_;
  std::vector<MultiPoly<Rational>> components_;
  std::string provenance_;
};

// Common degree of the components in the x variables.
int writing_degree(const ParamWriting& w);

// True when the components have no common factor in Q[param, x].
bool is_minimal(const ParamWriting& w);

// Divides the components by their full Q[param, x] gcd (both pure-parameter
// content and x-involving factors) and renormalizes; the result has gcd 1
// and realizes the smallest degree any writing of this family can have.
ParamWriting minimal_writing(const ParamWriting& w);

// Degree of the family: the writing degree of the minimal writing. Equals
// the maximal degree among the specialized maps.
int family_Deg(const ParamWriting& w);

struct SpecializedMap {
  RationalMap map;  // normalized (coprime components)
  int degree = 0;   // algebraic degree of the specialized map
};

// Substitute param = t0. Throws CollapsePoint (with the value in the error
// detail) when every component vanishes there: the writing does not pass
// through t0 and defines no map at it.
SpecializedMap specialize(const ParamWriting& w, const Rational& t0);

// Specialization of the parameter at the roots of a squarefree modulus,
// without leaving exact arithmetic. The computation runs over Q[param]/(m);
// whenever its control flow would distinguish two factors of m, the modulus
// is split and both factors rerun, so the output partitions the squarefree
// part of m into factors with a uniform answer each.
struct AlgebraicSpecialization {
  MultiPoly<Rational> modulus;   // monic factor of the input modulus
  bool collapsed = false;        // every component vanishes at every root
  int common_factor_degree = 0;  // x-degree of the common factor acquired
  int degree = 0;                // degree of the specialized map (when not collapsed)
};
std::vector<AlgebraicSpecialization> specialize_algebraic(const ParamWriting& w,
                                                          const MultiPoly<Rational>& modulus);

// An exact parameter value: a rational number, or the algebraic numbers
// with a given minimal polynomial (squarefree, free of rational roots,
// integer coefficients with content 1). Exactly one member is set.
struct ParamValue {
  std::optional<Rational> rational;
  std::optional<MultiPoly<Rational>> minimal_polynomial;

  friend bool operator==(const ParamValue& a, const ParamValue& b) {
    return a.rational == b.rational && a.minimal_polynomial == b.minimal_polynomial;
  }
};

std::string format_param_value(const ParamValue& v);

struct DropPoint {
  ParamValue at;
  int degree = 0;  // specialized degree, strictly below the family degree

  friend bool operator==(const DropPoint& a, const DropPoint& b) {
    return a.at == b.at && a.degree == b.degree;
  }
};

struct DropScanOptions {
  uint64_t seed = 2026;
  int coefficient_bound = 100;  // line coefficients drawn from [-bound, bound]
  int lines = 2;                // independent lines; disagreement adds one more
};

struct DropScan {
  std::vector<DropPoint> points;  // verified drop points, sorted
  int runs = 0;                   // lines actually used
  bool agreed = true;             // false when a third line had to adjudicate
  std::string note;               // randomization record, for reproducibility
};

// The finite set of parameter values where the specialized components
// acquire a common x-factor, for a minimal writing (enforced). Candidates
// come from resultants of the components restricted to random lines; every
// reported point is then verified by an exact gcd computation (over Q for
// rational candidates, over Q[param]/(m) for irrational ones), so the
// randomness can only cost completeness, never soundness — and a second
// independent line guards completeness.
DropScan drop_locus(const ParamWriting& w, const DropScanOptions& options = {});

struct DegreeProfile {
  int writing_deg = 0;  // degree of the supplied writing
  int Deg = 0;          // family degree
  // Gcd the minimal writing divides out (constant 1 when already minimal).
  std::optional<MultiPoly<Rational>> common_factor;
  Rational generic_witness_value;     // a sample attaining Deg
  int generic_witness_degree = 0;
  std::vector<DropPoint> drop_points;      // of the family (minimal writing)
  std::vector<ParamValue> collapse_points; // of the supplied writing
  std::string horizon_note;
};

// Full degree stratification of the family defined by w: the generic
// degree, the verified drop points with their lower degrees, and the
// parameter values where this particular writing vanishes identically
// (the minimal writing never does; collapse is a property of the writing,
// not of the family).
DegreeProfile stratify(const ParamWriting& w, const DropScanOptions& options = {});

struct SemicontinuitySample {
  Rational value;
  int degree = 0;                 // degree of the specialized map
  bool at_drop = false;           // listed in the computed drop locus
  bool collapses_writing = false; // the supplied writing vanishes here
};

struct SemicontinuityReport {
  int Deg = 0;
  std::vector<SemicontinuitySample> samples;
  std::string note;
};

// Specializes the family at every sample and enforces the semicontinuity
// contract: degree <= Deg everywhere, with equality exactly off the drop
// locus. A violation is a hard internal error — it would falsify the
// theory this module rests on, so it is never reported as data.
SemicontinuityReport semicontinuity_scan(const ParamWriting& w,
                                         const std::vector<Rational>& samples,
                                         const DropScanOptions& options = {});

// Parameterwise composition (w1 after w2) followed by minimal_writing.
// Specialization commutes: at every parameter value off both collapse
// sets, the specialized composition equals the composition of the
// specializations. Throws ComposedToZero when the substituted tuple
// vanishes identically over Q(param).
ParamWriting family_compose(const ParamWriting& w1, const ParamWriting& w2);

struct Mobius {
  Rational a, b, c, d;  // param -> (a*param + b) / (c*param + d), ad - bc != 0
};

// Substitutes the Möbius change of parameter and clears denominators by
// the one global power (c*param + d)^K, K = max parameter-degree over the
// components — multiplying every component by the same factor, so each
// specialization off the pole is unchanged as a projective map. The family
// degree is invariant under this operation. Throws DegenerateMobius when
// ad - bc = 0.
ParamWriting reparameterize(const ParamWriting& w, const Mobius& mobius);

// Built-in examples.
//
// A degree-3 writing on P^n (n >= 2) pulled back along the rational
// parameterization (a : b : c) = (s : s^2 : 1 + s^3) of the nodal cubic
// a^3 + b^3 - abc = 0. Its components share the factor s^3*(x0 + s*x2);
// the family degree is 2, and the minimal writing specializes to the
// identity at s = 0.
ParamWriting nodal_cubic_family(int n);

// (x0^2 : x0*x1 : x2*(x0 + t*x1)): a pencil of quadratic maps of P^2 whose
// specialization at t = 0 drops to a linear map — the degree stratification
// in miniature.
ParamWriting degeneration_demo();

// The parameter-independent family with every specialization equal to f.
ParamWriting constant_family(const RationalMap& f, const std::string& param = "t");

}  // namespace cremona
