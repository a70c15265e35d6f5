#pragma once

#include <utility>
#include <vector>

#include "cremona/errors.hpp"
#include "cremona/gcd.hpp"
#include "cremona/multipoly.hpp"

namespace cremona {

// Square matrices of rationals (linear maps on projective space).
using QMatrix = std::vector<std::vector<Rational>>;

Rational determinant(const QMatrix& m);

// adj(A) with A*adj(A) = det(A)*I; defined for every square matrix.
QMatrix adjugate(const QMatrix& m);

template <class S>
using PolyMatrix = std::vector<std::vector<MultiPoly<S>>>;

// Fraction-free (Bareiss) determinant over a polynomial ring; every interior
// division is exact by construction.
template <class S>
MultiPoly<S> poly_determinant(PolyMatrix<S> m) {
  const size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) fail(ErrorKind::internal_invariant, "non-square matrix");
  }
  if (n == 0) fail(ErrorKind::internal_invariant, "empty matrix");
  const ContextPtr& ctx = m[0][0].context();
  if (n == 1) return m[0][0];

  bool negate = false;
  MultiPoly<S> prev_pivot = MultiPoly<S>::constant(ctx, FieldTraits<S>::one());
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return MultiPoly<S>::zero(ctx);
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        MultiPoly<S> num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = divide_exact(num, prev_pivot);
      }
      m[i][k] = MultiPoly<S>::zero(ctx);
    }
    prev_pivot = m[k][k];
  }
  MultiPoly<S> det = m[n - 1][n - 1];
  return negate ? -det : det;
}

// Sylvester resultant of f and g with respect to one variable; the entries
// are the var-coefficients, so the result lives in the remaining variables.
// Zero input gives the zero resultant; two var-free inputs give 1.
template <class S>
MultiPoly<S> resultant_wrt(const MultiPoly<S>& f, const MultiPoly<S>& g, int var) {
  if (!compatible(f.context(), g.context())) {
    fail(ErrorKind::context_mismatch, "resultant: different variable contexts");
  }
  const ContextPtr& ctx = f.context();
  if (f.is_zero() || g.is_zero()) return MultiPoly<S>::zero(ctx);
  const int df = f.degree_in(var);
  const int dg = g.degree_in(var);
  if (df == 0 && dg == 0) return MultiPoly<S>::constant(ctx, FieldTraits<S>::one());
  if (df == 0) return f.pow(dg);
  if (dg == 0) return g.pow(df);

  auto fc = coefficients_in(f, var);
  auto gc = coefficients_in(g, var);
  auto coeff_or_zero = [&](const std::map<int, MultiPoly<S>>& c, int e) {
    auto it = c.find(e);
    return it != c.end() ? it->second : MultiPoly<S>::zero(ctx);
  };

  const size_t n = static_cast<size_t>(df + dg);
  PolyMatrix<S> sylvester(n, std::vector<MultiPoly<S>>(n, MultiPoly<S>::zero(ctx)));
  for (int row = 0; row < dg; ++row) {
    for (int k = 0; k <= df; ++k) {
      sylvester[static_cast<size_t>(row)][static_cast<size_t>(row + k)] =
          coeff_or_zero(fc, df - k);
    }
  }
  for (int row = 0; row < df; ++row) {
    for (int k = 0; k <= dg; ++k) {
      sylvester[static_cast<size_t>(dg + row)][static_cast<size_t>(row + k)] =
          coeff_or_zero(gc, dg - k);
    }
  }
  return poly_determinant(std::move(sylvester));
}

}  // namespace cremona
