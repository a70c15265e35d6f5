#include "cremona/jonquieres.hpp"

#include <string>
#include <utility>

#include "cremona/errors.hpp"
#include "cremona/gcd.hpp"

namespace cremona {

namespace {

using Poly = MultiPoly<Rational>;

void require_source(const RationalMap& f, const char* where) {
  if (f.n() < 2) {
    fail(ErrorKind::invalid_argument,
         std::string(where) + ": need a map of Pn with n >= 2");
  }
  if (!compatible(f.context(), projective(f.n()))) {
    fail(ErrorKind::context_mismatch,
         std::string(where) + ": the map must use the coordinates x0..x" +
             std::to_string(f.n()));
  }
}

bool tail_is_zero(const RationalMap& f) {
  const auto& c = f.components();
  for (size_t i = 1; i < c.size(); ++i) {
    if (!c[i].is_zero()) return false;
  }
  return true;
}

// Quotient of (f_1, ..., f_n) by its gcd, with the x0-freeness consistency
// check. Shared by rho and in_star; the check fails exactly on non-members.
RationalMap star_quotient(const RationalMap& f) {
  const int n = f.n();
  const auto& c = f.components();
  std::vector<Poly> tail(c.begin() + 1, c.end());
  Poly g = gcd_many(tail);
  ContextPtr target = hyperplane_context(n);
  std::vector<Poly> quotient;
  quotient.reserve(tail.size());
  for (const Poly& p : tail) {
    Poly q = divide_exact(p, g);
    if (!q.is_zero() && q.degree_in(0) > 0) {
      fail(ErrorKind::inconsistent_star_certificate,
           "rho: components still involve x0 after removing their gcd; "
           "the map does not permute the fibres of the projection");
    }
    quotient.push_back(q.restricted_to(target));
  }
  return normalize(RationalMap::make(target, std::move(quotient)));
}

}  // namespace

ContextPtr hyperplane_context(int n) {
  if (n < 2) {
    fail(ErrorKind::invalid_argument, "hyperplane_context: need n >= 2");
  }
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return make_context(std::move(names));
}

Projection projection(int n) {
  if (n < 2) {
    fail(ErrorKind::invalid_argument, "projection: need n >= 2");
  }
  Projection pi;
  pi.n = n;
  pi.source = projective(n);
  pi.target = hyperplane_context(n);
  pi.components.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    pi.components.push_back(Poly::variable(pi.source, i));
  }
  return pi;
}

bool in_jon(const RationalMap& f) {
  require_source(f, "in_jon");
  if (tail_is_zero(f)) return false;
  const int n = f.n();
  const auto& c = f.components();
  for (int i = 1; i < n; ++i) {
    Poly xi = Poly::variable(f.context(), i);
    for (int j = i + 1; j <= n; ++j) {
      Poly xj = Poly::variable(f.context(), j);
      if (!(xj * c[static_cast<size_t>(i)] - xi * c[static_cast<size_t>(j)])
               .is_zero()) {
        return false;
      }
    }
  }
  return true;
}

StarMembership in_star(const RationalMap& f) {
  require_source(f, "in_star");
  StarMembership result;
  if (tail_is_zero(f)) {
    result.certificate.all_zero_tail = true;
    return result;
  }
  const int n = f.n();
  ContextPtr ext = extend_context(f.context(), "y0");
  Poly y0 = Poly::variable(ext, "y0");
  // a[i] = f_i(x0, x');  b[i] = f_i(y0, x').
  std::vector<Poly> a, b;
  a.reserve(static_cast<size_t>(n));
  b.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const Poly& fi = f.components()[static_cast<size_t>(i)];
    a.push_back(fi.embedded_in(ext));
    b.push_back(fi.substitute_one(f.context()->name(0), y0, ext));
  }
  bool all_vanish = true;
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const Poly& ai = a[static_cast<size_t>(i - 1)];
      const Poly& aj = a[static_cast<size_t>(j - 1)];
      const Poly& bi = b[static_cast<size_t>(i - 1)];
      const Poly& bj = b[static_cast<size_t>(j - 1)];
      bool vanishes = (ai * bj - aj * bi).is_zero();
      result.certificate.pairs.push_back({i, j, vanishes});
      all_vanish = all_vanish && vanishes;
    }
  }
  result.member = all_vanish;
  if (result.member) result.quotient = star_quotient(f);
  return result;
}

RationalMap rho(const RationalMap& f) {
  require_source(f, "rho");
  if (tail_is_zero(f)) {
    fail(ErrorKind::inconsistent_star_certificate,
         "rho: the components past the first are identically zero, so the "
         "projected map is nowhere defined");
  }
  return star_quotient(f);
}

RationalMap sigma_ell(const RationalMap& h, int ell) {
  const int n = static_cast<int>(h.components().size());
  if (n < 2) {
    fail(ErrorKind::invalid_argument,
         "sigma_ell: the quotient map needs at least two components");
  }
  ContextPtr expected = hyperplane_context(n);
  if (!compatible(h.context(), expected)) {
    fail(ErrorKind::context_mismatch,
         "sigma_ell: the quotient map must be written in the variables x1.." +
             std::string("x") + std::to_string(n));
  }
  if (ell < 1 || ell > n) {
    fail(ErrorKind::invalid_argument,
         "sigma_ell: index must be between 1 and " + std::to_string(n) +
             ", got " + std::to_string(ell));
  }
  ContextPtr source = projective(n);
  Poly x0 = Poly::variable(source, 0);
  Poly xl = Poly::variable(source, ell);
  std::vector<Poly> comps;
  comps.reserve(static_cast<size_t>(n) + 1);
  comps.push_back(x0 * h.components()[static_cast<size_t>(ell - 1)].embedded_in(source));
  for (int i = 1; i <= n; ++i) {
    comps.push_back(xl * h.components()[static_cast<size_t>(i - 1)].embedded_in(source));
  }
  return normalize(RationalMap::make(source, std::move(comps)));
}

bool in_image_sigma_ell(const RationalMap& f, int ell) {
  require_source(f, "in_image_sigma_ell");
  if (ell < 1 || ell > f.n()) {
    fail(ErrorKind::invalid_argument,
         "in_image_sigma_ell: index must be between 1 and " +
             std::to_string(f.n()) + ", got " + std::to_string(ell));
  }
  StarMembership star = in_star(f);
  if (!star.member) return false;
  return maps_equal(f, sigma_ell(*star.quotient, ell));
}

JonShape jon_shape(const RationalMap& f) {
  JonShape shape;
  shape.member = in_jon(f);
  if (!shape.member) return shape;
  RationalMap g = normalize(f);
  const auto& c = g.components();
  const int n = g.n();
  // A fibre-fixing map has tail x_i * q with one shared q; no tail component
  // is zero (one zero forces all zero, which in_jon rejects).
  Poly q = divide_exact(c[1], Poly::variable(g.context(), 1));
  for (int i = 2; i <= n; ++i) {
    Poly expectation = Poly::variable(g.context(), i) * q;
    if (!(c[static_cast<size_t>(i)] - expectation).is_zero()) {
      fail(ErrorKind::internal_invariant,
           "jon_shape: tail of a fibre-fixing map is not x_i times a shared "
           "cofactor");
    }
  }
  auto x0_degree = [](const Poly& p) { return p.is_zero() ? 0 : p.degree_in(0); };
  shape.f0 = c[0];
  shape.q = q;
  shape.deg_x0_f0_at_most_1 = x0_degree(c[0]) <= 1;
  shape.deg_x0_q_at_most_1 = x0_degree(q) <= 1;
  shape.depends_on_x0 = x0_degree(c[0]) + x0_degree(q) >= 1;
  return shape;
}

}  // namespace cremona
