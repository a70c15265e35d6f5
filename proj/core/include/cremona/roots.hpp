#pragma once

// Exact root analysis of univariate polynomials over Q: squarefree part,
// every rational root (found by a seeded modular search, certified by exact
// evaluation, so the output carries no probabilistic caveat), and the
// squarefree rational-root-free cofactor that accounts for all remaining
// roots.

#include <cstdint>
#include <optional>
#include <vector>

#include "cremona/multipoly.hpp"
#include "cremona/rational.hpp"

namespace cremona {

// p divided by gcd(p, p'): the same roots, each simple. Requires a nonzero
// polynomial on a one-variable context; constants come back as 1.
MultiPoly<Rational> squarefree_part(const MultiPoly<Rational>& p);

struct RootSplit {
  std::vector<Rational> rational_roots;  // distinct, ascending
  // Squarefree with no rational roots, integer coefficients, positive
  // leading coefficient; absent when the rational roots account for the
  // whole squarefree part. Not factored further: refinement happens on
  // demand when a later computation distinguishes its roots.
  std::optional<MultiPoly<Rational>> irrational_factor;
};

// All roots of p, through its squarefree part. Deterministic for a fixed
// seed; the seed only steers the modular search, never the (exact) answer.
RootSplit split_roots(const MultiPoly<Rational>& p, uint64_t seed);

}  // namespace cremona
