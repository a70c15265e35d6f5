#pragma once

#include <algorithm>
#include <map>
#include <type_traits>
#include <vector>

#include "cremona/errors.hpp"
#include "cremona/multipoly.hpp"

namespace cremona {

// Canonical scalar normalization.
//   Rational coefficients: the unique positive multiple with integer
//   coefficients of content 1, sign fixed so the lex-leading coefficient is
//   positive. Other fields: monic (grlex-leading coefficient 1).
// Equality of normalized polynomials is plain term-map equality.
template <class S>
MultiPoly<S> normalize_scalars(const MultiPoly<S>& p) {
  if (p.is_zero()) return p;
  if constexpr (std::is_same_v<S, Rational>) {
    Integer den_lcm(1);
    for (const auto& [m, c] : p.terms()) den_lcm = lcm(den_lcm, Integer(c.get_den()));
    Integer num_gcd(0);
    for (const auto& [m, c] : p.terms()) {
      Integer scaled = Integer(c.get_num()) * (den_lcm / Integer(c.get_den()));
      num_gcd = gcd(num_gcd, scaled);
    }
    Rational mult = make_rational(den_lcm, num_gcd);
    MultiPoly<S> out = mult * p;
    if (sgn(out.lex_leading_coeff()) < 0) out = -out;
    return out;
  } else {
    S inv_lead = FieldTraits<S>::one() / p.leading_coeff();
    return inv_lead * p;
  }
}

// Scale a whole tuple by one common scalar so it is canonical as a
// projective tuple: over the rationals, integer coefficients with joint
// content 1 and the first nonzero component's lex-leading coefficient
// positive; over other fields, that leading coefficient becomes 1.
// Zero components pass through; an all-zero tuple is returned unchanged.
template <class S>
std::vector<MultiPoly<S>> normalize_scalars_jointly(std::vector<MultiPoly<S>> tuple) {
  const MultiPoly<S>* first_nonzero = nullptr;
  for (const auto& p : tuple) {
    if (!p.is_zero()) {
      first_nonzero = &p;
      break;
    }
  }
  if (!first_nonzero) return tuple;
  if constexpr (std::is_same_v<S, Rational>) {
    Integer den_lcm(1);
    for (const auto& p : tuple) {
      for (const auto& [m, c] : p.terms()) den_lcm = lcm(den_lcm, Integer(c.get_den()));
    }
    Integer num_gcd(0);
    for (const auto& p : tuple) {
      for (const auto& [m, c] : p.terms()) {
        num_gcd = gcd(num_gcd, Integer(c.get_num()) * (den_lcm / Integer(c.get_den())));
      }
    }
    Rational mult = make_rational(den_lcm, num_gcd);
    if (sgn(first_nonzero->lex_leading_coeff()) < 0) mult = -mult;
    for (auto& p : tuple) p = mult * p;
  } else {
    S inv_lead = FieldTraits<S>::one() / first_nonzero->leading_coeff();
    for (auto& p : tuple) p = inv_lead * p;
  }
  return tuple;
}

// Exact polynomial division: returns q with q*d == p, or throws NotDivisible.
template <class S>
MultiPoly<S> divide_exact(const MultiPoly<S>& p, const MultiPoly<S>& d) {
  if (!compatible(p.context(), d.context())) {
    fail(ErrorKind::context_mismatch, "divide_exact: different variable contexts");
  }
  if (d.is_zero()) fail(ErrorKind::zero_polynomial, "divide_exact: zero divisor");
  if (p.is_zero()) return p;
  if (d.is_constant()) {
    S inv = FieldTraits<S>::one() / d.constant_value();
    return inv * p;
  }
  const Monomial& dm = d.leading_monomial();
  const S& dc = d.leading_coeff();
  typename MultiPoly<S>::TermMap quotient;
  MultiPoly<S> r = p;
  while (!r.is_zero()) {
    const Monomial& rm = r.leading_monomial();
    Monomial t(rm.size());
    for (size_t i = 0; i < rm.size(); ++i) {
      if (rm[i] < dm[i]) {
        fail(ErrorKind::not_divisible, "divide_exact: leading term not divisible");
      }
      t[i] = rm[i] - dm[i];
    }
    S coeff = r.leading_coeff() / dc;
    auto term = MultiPoly<S>::monomial(p.context(), t, coeff);
    quotient.emplace(std::move(t), std::move(coeff));
    r = r - term * d;
  }
  return MultiPoly<S>::from_terms(p.context(), std::move(quotient));
}

// Coefficients of p viewed as univariate in `var`: exponent of var ->
// coefficient polynomial (same context, var-exponent stripped to zero).
template <class S>
std::map<int, MultiPoly<S>> coefficients_in(const MultiPoly<S>& p, int var) {
  std::map<int, typename MultiPoly<S>::TermMap> buckets;
  const size_t v = static_cast<size_t>(var);
  for (const auto& [m, c] : p.terms()) {
    Monomial stripped = m;
    int e = stripped[v];
    stripped[v] = 0;
    buckets[e].emplace(std::move(stripped), c);
  }
  std::map<int, MultiPoly<S>> out;
  for (auto& [e, terms] : buckets) {
    out.emplace(e, MultiPoly<S>::from_terms(p.context(), std::move(terms)));
  }
  return out;
}

template <class S>
MultiPoly<S> from_coefficients(const ContextPtr& ctx, int var,
                               const std::map<int, MultiPoly<S>>& coeffs) {
  MultiPoly<S> u = MultiPoly<S>::variable(ctx, var);
  MultiPoly<S> acc = MultiPoly<S>::zero(ctx);
  for (const auto& [e, c] : coeffs) acc = acc + c * u.pow(e);
  return acc;
}

namespace detail {

// Certified mod-p coprimality pre-check for rational-coefficient inputs
// (definition in gcd.cpp). May only answer "certainly coprime" (true) or
// "unknown" (false); a true answer is exact, not probabilistic.
bool certified_coprime(const std::vector<MultiPoly<Rational>>& polys);

template <class S>
MultiPoly<S> gcd_raw(const MultiPoly<S>& a, const MultiPoly<S>& b);

// Over a coefficient ring with zero divisors (a squarefree quotient ring is
// a product of fields), a polynomial's stored shape — degrees, leading
// terms, zero tests — may only steer control flow once every stored
// coefficient is known invertible; otherwise two factors of the modulus
// could disagree about that shape and the remainder sequence would silently
// compute garbage for one of them. Scalar types with zero divisors expose
// FieldTraits<S>::certify_unit (which raises a split request instead of
// letting that happen); genuine fields need nothing and this compiles away.
template <class S>
void certify_structure(const MultiPoly<S>& p) {
  if constexpr (requires(const S& c) { FieldTraits<S>::certify_unit(c); }) {
    for (const auto& [m, c] : p.terms()) FieldTraits<S>::certify_unit(c);
  } else {
    (void)p;
  }
}

template <class S>
MultiPoly<S> gcd_raw_many(const std::vector<MultiPoly<S>>& polys) {
  MultiPoly<S> g = MultiPoly<S>::zero(polys.front().context());
  for (const auto& p : polys) {
    g = gcd_raw(g, p);
    if (!g.is_zero() && g.is_constant()) break;
  }
  return g;
}

template <class S>
MultiPoly<S> content_wrt(const MultiPoly<S>& p, int var) {
  auto coeffs = coefficients_in(p, var);
  std::vector<MultiPoly<S>> values;
  values.reserve(coeffs.size());
  for (auto& [e, c] : coeffs) values.push_back(std::move(c));
  return normalize_scalars(gcd_raw_many(values));
}

template <class S>
MultiPoly<S> primitive_part_wrt(const MultiPoly<S>& p, int var) {
  if (p.is_zero()) return p;
  return normalize_scalars(divide_exact(p, content_wrt(p, var)));
}

// One step of pseudo-division: eliminates the u-leading term of r against g.
template <class S>
MultiPoly<S> pseudo_remainder(MultiPoly<S> r, const MultiPoly<S>& g, int u) {
  const int dg = g.degree_in(u);
  auto g_coeffs = coefficients_in(g, u);
  const MultiPoly<S> lc_g = g_coeffs.rbegin()->second;
  while (!r.is_zero()) {
    int dr = r.degree_in(u);
    if (dr < dg) break;
    auto r_coeffs = coefficients_in(r, u);
    const MultiPoly<S> lc_r = r_coeffs.rbegin()->second;
    Monomial shift(static_cast<size_t>(r.context()->size()), 0);
    shift[static_cast<size_t>(u)] = dr - dg;
    auto u_shift = MultiPoly<S>::monomial(r.context(), shift, FieldTraits<S>::one());
    r = lc_g * r - lc_r * u_shift * g;
  }
  return r;
}

template <class S>
MultiPoly<S> gcd_monomial_case(const MultiPoly<S>& mono, const MultiPoly<S>& other) {
  Monomial g = mono.leading_monomial();
  for (const auto& [m, c] : other.terms()) {
    for (size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], m[i]);
  }
  return MultiPoly<S>::monomial(mono.context(), g, FieldTraits<S>::one());
}

template <class S>
MultiPoly<S> gcd_raw(const MultiPoly<S>& a, const MultiPoly<S>& b) {
  certify_structure(a);
  certify_structure(b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_constant() || b.is_constant()) {
    return MultiPoly<S>::constant(a.context(), FieldTraits<S>::one());
  }
  if (a.term_count() == 1) return gcd_monomial_case(a, b);
  if (b.term_count() == 1) return gcd_monomial_case(b, a);

  // Main variable: the highest-index variable either operand touches.
  int u = -1;
  for (int v = a.context()->size() - 1; v >= 0; --v) {
    if (a.depends_on(v) || b.depends_on(v)) {
      u = v;
      break;
    }
  }
  if (u < 0) fail(ErrorKind::internal_invariant, "gcd: non-constant with no variables");

  MultiPoly<S> cont_a = content_wrt(a, u);
  MultiPoly<S> cont_b = content_wrt(b, u);
  MultiPoly<S> c = gcd_raw(cont_a, cont_b);
  MultiPoly<S> f = normalize_scalars(divide_exact(a, cont_a));
  MultiPoly<S> g = normalize_scalars(divide_exact(b, cont_b));
  certify_structure(f);
  certify_structure(g);
  if (f.degree_in(u) < g.degree_in(u)) std::swap(f, g);

  MultiPoly<S> prim = MultiPoly<S>::zero(a.context());
  while (true) {
    if (g.is_zero()) {
      prim = primitive_part_wrt(f, u);
      break;
    }
    if (g.degree_in(u) == 0) {
      // A nonzero u-free remainder divides two u-primitive polynomials,
      // so the primitive gcd is a unit.
      prim = MultiPoly<S>::constant(a.context(), FieldTraits<S>::one());
      break;
    }
    MultiPoly<S> r = pseudo_remainder(f, g, u);
    f = std::move(g);
    g = primitive_part_wrt(r, u);
    certify_structure(g);
  }
  MultiPoly<S> out = c * prim;
  certify_structure(out);
  return out;
}

}  // namespace detail

// GCD over the coefficient field, canonically normalized; gcd(p, 0) is the
// normalization of p, and gcd(0, 0) = 0. Exact division of either input by
// the result always succeeds.
template <class S>
MultiPoly<S> poly_gcd(const MultiPoly<S>& a, const MultiPoly<S>& b) {
  if (!compatible(a.context(), b.context())) {
    fail(ErrorKind::context_mismatch, "gcd: different variable contexts");
  }
  if (a.is_zero()) return normalize_scalars(b);
  if (b.is_zero()) return normalize_scalars(a);
  if constexpr (std::is_same_v<S, Rational>) {
    if (detail::certified_coprime({a, b})) {
      return MultiPoly<S>::constant(a.context(), FieldTraits<S>::one());
    }
  }
  return normalize_scalars(detail::gcd_raw(a, b));
}

template <class S>
MultiPoly<S> gcd_many(const std::vector<MultiPoly<S>>& polys) {
  if (polys.empty()) fail(ErrorKind::empty_list, "gcd_many: empty input list");
  const ContextPtr& ctx = polys.front().context();
  for (const auto& p : polys) {
    if (!compatible(p.context(), ctx)) {
      fail(ErrorKind::context_mismatch, "gcd_many: different variable contexts");
    }
  }
  if constexpr (std::is_same_v<S, Rational>) {
    if (polys.size() >= 2 && detail::certified_coprime(polys)) {
      return MultiPoly<S>::constant(ctx, FieldTraits<S>::one());
    }
  }
  MultiPoly<S> g = MultiPoly<S>::zero(ctx);
  for (const auto& p : polys) {
    g = poly_gcd(g, p);
    if (!g.is_zero() && g.is_constant()) break;
  }
  return g;
}

}  // namespace cremona
