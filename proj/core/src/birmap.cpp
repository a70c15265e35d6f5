#include "cremona/birmap.hpp"

#include <algorithm>
#include <optional>

#include "cremona/errors.hpp"
#include "cremona/gcd.hpp"

namespace cremona {

RationalMap RationalMap::make(ContextPtr ctx, std::vector<MultiPoly<Rational>> components) {
  if (components.size() != static_cast<size_t>(ctx->size())) {
    fail(ErrorKind::degree_mismatch,
         "a map on this context needs exactly " + std::to_string(ctx->size()) +
             " components, got " + std::to_string(components.size()));
  }
  if (ctx->size() < 2) {
    fail(ErrorKind::invalid_argument, "projective maps need at least two coordinates");
  }
  std::optional<int> common_degree;
  bool any_nonzero = false;
  for (size_t i = 0; i < components.size(); ++i) {
    const auto& c = components[i];
    if (!compatible(c.context(), ctx)) {
      fail(ErrorKind::context_mismatch, "component " + std::to_string(i) +
                                            " lives in a different variable context");
    }
    if (c.is_zero()) continue;
    any_nonzero = true;
    if (!c.is_homogeneous()) {
      fail(ErrorKind::not_homogeneous,
           "component " + std::to_string(i) + " is not homogeneous");
    }
    int d = c.total_degree();
    if (!common_degree) {
      common_degree = d;
    } else if (*common_degree != d) {
      fail(ErrorKind::degree_mismatch,
           "components have degrees " + std::to_string(*common_degree) + " and " +
               std::to_string(d));
    }
  }
  if (!any_nonzero) fail(ErrorKind::all_zero, "all components are zero");
  return RationalMap(std::move(ctx), std::move(components), false);
}

RationalMap RationalMap::make(int n, std::vector<MultiPoly<Rational>> components) {
  return make(projective(n), std::move(components));
}

RationalMap RationalMap::identity(const ContextPtr& ctx) {
  std::vector<MultiPoly<Rational>> comps;
  comps.reserve(static_cast<size_t>(ctx->size()));
  for (int i = 0; i < ctx->size(); ++i) comps.push_back(MultiPoly<Rational>::variable(ctx, i));
  RationalMap f = make(ctx, std::move(comps));
  f.normalized_ = true;
  return f;
}

RationalMap RationalMap::identity(int n) { return identity(projective(n)); }

int RationalMap::written_degree() const {
  for (const auto& c : components_) {
    if (!c.is_zero()) return c.total_degree();
  }
  fail(ErrorKind::internal_invariant, "map with no nonzero component");
}

RationalMap normalize(const RationalMap& f) {
  std::vector<MultiPoly<Rational>> comps = f.components();
  if (!f.normalized()) {
    MultiPoly<Rational> g = gcd_many(comps);
    if (!g.is_constant()) {
      for (auto& c : comps) c = divide_exact(c, g);
    }
  }
  comps = normalize_scalars_jointly(std::move(comps));
  return RationalMap(f.context(), std::move(comps), true);
}

int degree(const RationalMap& f) {
  if (f.normalized()) return f.written_degree();
  return normalize(f).written_degree();
}

RationalMap compose(const RationalMap& f, const RationalMap& g) {
  if (!compatible(f.context(), g.context())) {
    fail(ErrorKind::context_mismatch, "compose: maps live on different spaces");
  }
  std::vector<std::optional<MultiPoly<Rational>>> images;
  images.reserve(g.components().size());
  for (const auto& c : g.components()) images.emplace_back(c);
  std::vector<MultiPoly<Rational>> comps;
  comps.reserve(f.components().size());
  bool any_nonzero = false;
  for (const auto& c : f.components()) {
    comps.push_back(c.substitute(images, g.context()));
    any_nonzero = any_nonzero || !comps.back().is_zero();
  }
  if (!any_nonzero) {
    fail(ErrorKind::composed_to_zero,
         "every component of the composition vanishes identically (the right-hand "
         "map lands inside the left-hand map's indeterminacy locus)");
  }
  return normalize(RationalMap::make(g.context(), std::move(comps)));
}

bool is_identity(const RationalMap& f) {
  const auto& ctx = f.context();
  const auto& c = f.components();
  for (size_t i = 0; i + 1 < c.size(); ++i) {
    auto xi = MultiPoly<Rational>::variable(ctx, static_cast<int>(i));
    for (size_t j = i + 1; j < c.size(); ++j) {
      auto xj = MultiPoly<Rational>::variable(ctx, static_cast<int>(j));
      if (!(xj * c[i] - xi * c[j]).is_zero()) return false;
    }
  }
  return true;
}

bool maps_equal(const RationalMap& f, const RationalMap& g) {
  if (!compatible(f.context(), g.context())) return false;
  const auto& a = f.components();
  const auto& b = g.components();
  for (size_t i = 0; i + 1 < a.size(); ++i) {
    for (size_t j = i + 1; j < a.size(); ++j) {
      if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
    }
  }
  return true;
}

MultiPoly<Rational> jacobian(const RationalMap& f) {
  const size_t m = f.components().size();
  PolyMatrix<Rational> partials(m, std::vector<MultiPoly<Rational>>());
  for (size_t i = 0; i < m; ++i) {
    partials[i].reserve(m);
    for (size_t j = 0; j < m; ++j) {
      partials[i].push_back(f.components()[i].derivative(static_cast<int>(j)));
    }
  }
  return poly_determinant(std::move(partials));
}

bool is_dominant_candidate(const RationalMap& f) { return !jacobian(f).is_zero(); }

bool verify_mutual_inverse(const RationalMap& f, const RationalMap& g) {
  if (!compatible(f.context(), g.context())) return false;
  try {
    return is_identity(compose(f, g)) && is_identity(compose(g, f));
  } catch (const CremonaError& e) {
    if (e.kind() == ErrorKind::composed_to_zero) return false;
    throw;
  }
}

RationalMap linear_map(const QMatrix& matrix) {
  if (matrix.size() < 2) {
    fail(ErrorKind::invalid_argument, "linear map needs a matrix of size >= 2");
  }
  return linear_map(projective(static_cast<int>(matrix.size()) - 1), matrix);
}

RationalMap linear_map(const ContextPtr& ctx, const QMatrix& matrix) {
  const size_t m = matrix.size();
  if (m != static_cast<size_t>(ctx->size())) {
    fail(ErrorKind::invalid_argument, "linear map matrix size must match the context");
  }
  for (const auto& row : matrix) {
    if (row.size() != m) {
      fail(ErrorKind::invalid_argument, "linear map matrix must be square");
    }
  }
  std::vector<MultiPoly<Rational>> comps;
  comps.reserve(m);
  for (size_t i = 0; i < m; ++i) {
    MultiPoly<Rational> c = MultiPoly<Rational>::zero(ctx);
    for (size_t j = 0; j < m; ++j) {
      c = c + matrix[i][j] * MultiPoly<Rational>::variable(ctx, static_cast<int>(j));
    }
    comps.push_back(std::move(c));
  }
  return RationalMap::make(ctx, std::move(comps));
}

RationalMap invert_linear(const RationalMap& f) {
  RationalMap norm = normalize(f);
  if (degree(norm) != 1) {
    fail(ErrorKind::not_linear, "invert_linear: map has degree " + std::to_string(degree(norm)));
  }
  const size_t m = norm.components().size();
  QMatrix a(m, std::vector<Rational>(m, Rational(0)));
  for (size_t i = 0; i < m; ++i) {
    for (const auto& [mono, coeff] : norm.components()[i].terms()) {
      for (size_t j = 0; j < m; ++j) {
        if (mono[j] == 1) a[i][j] = coeff;
      }
    }
  }
  if (is_zero(determinant(a))) {
    fail(ErrorKind::singular_matrix, "invert_linear: coefficient matrix is singular");
  }
  return normalize(linear_map(norm.context(), adjugate(a)));
}

RationalMap standard_quadratic() {
  auto ctx = projective(2);
  auto x0 = MultiPoly<Rational>::variable(ctx, 0);
  auto x1 = MultiPoly<Rational>::variable(ctx, 1);
  auto x2 = MultiPoly<Rational>::variable(ctx, 2);
  RationalMap f = RationalMap::make(ctx, {x1 * x2, x0 * x2, x0 * x1});
  return normalize(f);
}

const char* to_string(GrowthClass g) {
  switch (g) {
    case GrowthClass::finite_order: return "finite-order";
    case GrowthClass::bounded_observed: return "bounded-observed";
    case GrowthClass::strictly_growing_observed: return "strictly-growing-observed";
  }
  return "unknown";
}

DegreeSequence power_degree_sequence(const RationalMap& f, int max_power) {
  if (max_power < 1) {
    fail(ErrorKind::invalid_argument, "power sequence needs max_power >= 1");
  }
  DegreeSequence seq;
  seq.n = f.n();
  RationalMap base = normalize(f);
  RationalMap power = base;
  seq.entries.emplace_back(1, degree(power));
  for (int m = 2; m <= max_power; ++m) {
    try {
      power = compose(power, base);
    } catch (const CremonaError& e) {
      if (e.kind() == ErrorKind::composed_to_zero) {
        fail(ErrorKind::composed_to_zero,
             "power " + std::to_string(m) + " of the map collapses to zero",
             std::to_string(m));
      }
      throw;
    }
    seq.entries.emplace_back(m, degree(power));
  }
  return seq;
}

GrowthReport cyclic_growth_report(const RationalMap& f, int max_power) {
  if (max_power < 2) {
    fail(ErrorKind::invalid_argument, "growth report needs max_power >= 2");
  }
  GrowthReport report;
  report.evidence.n = f.n();
  RationalMap base = normalize(f);
  RationalMap power = base;
  for (int m = 1; m <= max_power; ++m) {
    if (m > 1) power = compose(power, base);
    int d = degree(power);
    report.evidence.entries.emplace_back(m, d);
    // Only a degree-1 power can be the identity; the cross-product test
    // then decides exactly.
    if (d == 1 && is_identity(power)) {
      report.classification = GrowthClass::finite_order;
      report.order = m;
      report.caveat = "verified exactly: the " + std::to_string(m) +
                      "-th power equals the identity map";
      return report;
    }
  }
  int max_degree = 0;
  for (const auto& [m, d] : report.evidence.entries) max_degree = std::max(max_degree, d);
  int hits = 0;
  for (const auto& [m, d] : report.evidence.entries) {
    if (d == max_degree) ++hits;
  }
  report.classification =
      hits >= 2 ? GrowthClass::bounded_observed : GrowthClass::strictly_growing_observed;
  report.order = 0;
  report.caveat = "observation up to horizon M=" + std::to_string(max_power) +
                  " only; the degree sequence beyond the computed powers is not "
                  "determined by this finite sample";
  return report;
}

RationalMap conjugate(const RationalMap& f, const RationalMap& F, const RationalMap& F_inv) {
  if (!verify_mutual_inverse(F, F_inv)) {
    fail(ErrorKind::not_inverse_pair,
         "conjugate: the supplied pair does not verify as mutual inverses");
  }
  return compose(F_inv, compose(f, F));
}

}  // namespace cremona
