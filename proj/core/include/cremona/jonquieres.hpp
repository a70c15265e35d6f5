#pragma once

// Structure of birational maps around the fixed point o = (1:0:...:0):
// the coordinate projection away from o, membership in the subgroup that
// commutes with that projection (and in the larger subgroup that merely
// permutes its fibres), the induced quotient map on the target P^{n-1},
// and the coordinate sections that split the quotient.
//
// Conventions: the source is P^n with coordinates x0..xn; the projection is
// (x0:...:xn) -> (x1:...:xn), defined away from o. Maps of the target
// P^{n-1} are written in the variables x1..xn (see hyperplane_context).
// Other centers are reached by conjugating with a linear map.

#include <optional>
#include <vector>

#include "cremona/birmap.hpp"
#include "cremona/multipoly.hpp"
#include "cremona/rational.hpp"

namespace cremona {

// Coordinate context {x1, ..., xn} for the target P^{n-1} of the projection
// away from o. Requires n >= 2 (so the target is at least P^1).
ContextPtr hyperplane_context(int n);

// The projection of center o as a bare component tuple (it is a map
// P^n -> P^{n-1}, not a self-map, so it is not a RationalMap).
struct Projection {
  int n = 0;                               // source dimension
  ContextPtr source;                       // x0..xn
  ContextPtr target;                       // x1..xn
  std::vector<MultiPoly<Rational>> components;  // (x1, ..., xn) on the source
};
Projection projection(int n);

// True iff f fixes every fibre of the projection: projectively,
// (f_1 : ... : f_n) = (x_1 : ... : x_n), i.e. the cross products
// x_j f_i - x_i f_j all vanish. Maps whose last n components are all zero
// (everything collapses to o) are rejected.
bool in_jon(const RationalMap& f);

// Certificate of the star-membership decision: for each index pair the
// doubled-variable identity that was checked, and whether it vanished.
struct StarCertificate {
  struct Pair {
    int i = 0;
    int j = 0;
    bool vanishes = false;
  };
  std::vector<Pair> pairs;
  // The tuple (f_1, ..., f_n) was identically zero, so the projected map is
  // nowhere defined and membership fails without any pair being checked.
  bool all_zero_tail = false;
};

struct StarMembership {
  bool member = false;
  // Present iff member: the map tau of P^{n-1} with proj(f(x)) = tau(proj(x)).
  std::optional<RationalMap> quotient;
  StarCertificate certificate;
};

// Decides whether f permutes the fibres of the projection, i.e. whether
// (f_1 : ... : f_n) factors through it. Decision procedure: introduce a
// fresh variable y0 and check, for all 1 <= i < j <= n, the identity
//   f_i(x0, x') * f_j(y0, x') - f_j(x0, x') * f_i(y0, x') = 0
// where x' = (x1..xn). This holds iff the projected tuple is independent of
// x0 up to a common factor. When membership holds the quotient is computed
// exactly as in rho.
StarMembership in_star(const RationalMap& f);

// The quotient map on P^{n-1} induced by a fibre-permuting f: divide
// (f_1, ..., f_n) by its gcd; the cofactors are then free of x0 and define
// the quotient in the variables x1..xn, returned normalized.
//
// Precondition: in_star(f).member. The x0-freeness check is both necessary
// and sufficient for membership, so on any non-member it fails with
// InconsistentStarCertificate rather than returning a bogus map.
RationalMap rho(const RationalMap& f);

// Section of the quotient: for h = (h_1 : ... : h_n) on x1..xn and an index
// 1 <= ell <= n, the self-map of P^n
//   (x0 * h_ell : x_ell * h_1 : ... : x_ell * h_n),
// normalized. It permutes the fibres of the projection with quotient h, and
// rho(sigma_ell(h, ell)) == h.
RationalMap sigma_ell(const RationalMap& h, int ell);

// True iff f lies in the image of the ell-th section, i.e. f permutes the
// fibres and f == sigma_ell(rho(f), ell). The images for different ell
// intersect exactly in the identity.
bool in_image_sigma_ell(const RationalMap& f, int ell);

// Diagnostic decomposition of a fibre-fixing map. Such a map normalizes to
//   (f0 : x1*q : ... : xn*q)
// for a single cofactor q; the classical shape conditions bound the
// x0-degrees of f0 and q by 1 and require that x0 actually appears (a map
// ignoring x0 cannot be birational). Fields beyond `member` are meaningful
// only when member is true.
struct JonShape {
  bool member = false;
  std::optional<MultiPoly<Rational>> f0;  // first normalized component
  std::optional<MultiPoly<Rational>> q;   // shared tail cofactor
  bool deg_x0_f0_at_most_1 = false;
  bool deg_x0_q_at_most_1 = false;
  bool depends_on_x0 = false;
};
JonShape jon_shape(const RationalMap& f);

}  // namespace cremona
