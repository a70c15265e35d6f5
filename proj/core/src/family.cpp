#include "cremona/family.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <utility>

#include "cremona/context.hpp"
#include "cremona/errors.hpp"
#include "cremona/gcd.hpp"
#include "cremona/matrix.hpp"
#include "cremona/poly_format.hpp"
#include "cremona/roots.hpp"

namespace cremona {

namespace {

using Poly = MultiPoly<Rational>;
using QPoly = MultiPoly<QuotientScalar>;

int param_index(const ParamWriting& w) { return w.n() + 1; }

std::vector<int> x_indices(int n) {
  std::vector<int> vars(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) vars[static_cast<size_t>(i)] = i;
  return vars;
}

int x_degree_of(const Poly& p, int pi) {
  // Total degree in the x variables of any term; the caller has verified
  // x-homogeneity, so the first term is as good as any.
  const auto& [m, c] = *p.terms().begin();
  int d = 0;
  for (size_t v = 0; v < m.size(); ++v) {
    if (static_cast<int>(v) != pi) d += m[v];
  }
  return d;
}

// Substitute the parameter by a rational constant; components land on
// projective(n).
std::vector<Poly> specialize_components(const ParamWriting& w, const Rational& t0) {
  ContextPtr target = projective(w.n());
  std::vector<std::optional<Poly>> images;
  images.reserve(static_cast<size_t>(w.n()) + 2);
  for (int i = 0; i <= w.n(); ++i) images.emplace_back(Poly::variable(target, i));
  images.emplace_back(Poly::constant(target, t0));
  std::vector<Poly> out;
  out.reserve(w.components().size());
  for (const auto& c : w.components()) out.push_back(c.substitute(images, target));
  return out;
}

// Substitute the parameter by the class of t in Q[t]/(m); components land
// on projective(n) with algebraic coefficients.
QPoly to_algebraic(const Poly& p, int pi, const ModulusPtr& m, const ContextPtr& target) {
  int max_e = 0;
  for (const auto& [mono, c] : p.terms()) {
    max_e = std::max(max_e, static_cast<int>(mono[static_cast<size_t>(pi)]));
  }
  std::vector<QuotientScalar> powers;
  powers.reserve(static_cast<size_t>(max_e) + 1);
  powers.push_back(QuotientScalar::constant(m, Rational(1)));
  QuotientScalar alpha = QuotientScalar::generator(m);
  for (int e = 1; e <= max_e; ++e) powers.push_back(powers.back() * alpha);

  std::map<Monomial, QuotientScalar, GrlexLess> acc;
  for (const auto& [mono, c] : p.terms()) {
    Monomial xm(mono.begin(), mono.begin() + target->size());
    QuotientScalar value =
        QuotientScalar::constant(m, c) * powers[mono[static_cast<size_t>(pi)]];
    auto [it, inserted] = acc.emplace(std::move(xm), value);
    if (!inserted) it->second = it->second + value;
  }
  QPoly::TermMap terms;
  for (auto& [mono, value] : acc) {
    if (!value.is_zero()) terms.emplace(mono, std::move(value));
  }
  return QPoly::from_terms(target, std::move(terms));
}

// Gcd over Q[param] of the coefficient polynomials of every x-monomial of
// every component: its roots are exactly the parameter values where the
// whole writing vanishes.
Poly param_content(const ParamWriting& w, const ContextPtr& pctx) {
  const size_t pi = static_cast<size_t>(param_index(w));
  std::vector<Poly> coefficient_polys;
  for (const auto& comp : w.components()) {
    std::map<Monomial, Poly::TermMap, GrlexLess> buckets;
    for (const auto& [mono, c] : comp.terms()) {
      Monomial xm = mono;
      int32_t e = xm[pi];
      xm[pi] = 0;
      buckets[std::move(xm)].emplace(Monomial{e}, c);
    }
    for (auto& [xm, terms] : buckets) {
      coefficient_polys.push_back(Poly::from_terms(pctx, std::move(terms)));
    }
  }
  return gcd_many(coefficient_polys);
}

bool param_value_less(const ParamValue& a, const ParamValue& b) {
  // Rational values first (ascending), then algebraic ones by rendering.
  if (a.rational && b.rational) return *a.rational < *b.rational;
  if (a.rational != b.rational) return a.rational.has_value();
  if (a.minimal_polynomial && b.minimal_polynomial) {
    return format_poly(*a.minimal_polynomial) < format_poly(*b.minimal_polynomial);
  }
  return false;
}

bool drop_point_less(const DropPoint& a, const DropPoint& b) {
  return param_value_less(a.at, b.at);
}

std::vector<DropPoint> verify_candidates(const ParamWriting& w, int d, const RootSplit& found) {
  std::vector<DropPoint> out;
  for (const Rational& root : found.rational_roots) {
    std::vector<Poly> specialized = specialize_components(w, root);
    bool all_zero = std::all_of(specialized.begin(), specialized.end(),
                                [](const Poly& p) { return p.is_zero(); });
    if (all_zero) {
      fail(ErrorKind::internal_invariant,
           "drop scan: a minimal writing specialized to the zero tuple");
    }
    Poly g = gcd_many(specialized);
    if (!g.is_constant()) {
      out.push_back(DropPoint{ParamValue{root, std::nullopt}, d - g.total_degree()});
    }
  }
  if (found.irrational_factor) {
    for (const AlgebraicSpecialization& branch :
         specialize_algebraic(w, *found.irrational_factor)) {
      if (branch.collapsed) {
        fail(ErrorKind::internal_invariant,
             "drop scan: a minimal writing specialized to the zero tuple");
      }
      if (branch.common_factor_degree > 0) {
        out.push_back(DropPoint{ParamValue{std::nullopt, normalize_scalars(branch.modulus)},
                                branch.degree});
      }
    }
  }
  std::sort(out.begin(), out.end(), drop_point_less);
  return out;
}

// One randomized scan: restrict the components to a random line in x,
// collect the resultants that eliminate the line coordinate, and verify the
// parameter roots of their gcd. Returns the verified drop points.
std::vector<DropPoint> scan_once(const ParamWriting& w, int d, std::mt19937_64& rng,
                                 int bound) {
  const int n = w.n();
  const std::string line_var = w.param() == "u" ? "v" : "u";
  ContextPtr line_ctx = make_context({w.param(), line_var});
  ContextPtr pctx = make_context({w.param()});
  Poly u = Poly::variable(line_ctx, 1);
  std::uniform_int_distribution<int> coeff(-bound, bound);

  std::vector<const Poly*> active;
  for (const auto& c : w.components()) {
    if (!c.is_zero()) active.push_back(&c);
  }

  for (int attempt = 0; attempt < 12; ++attempt) {
    std::vector<std::optional<Poly>> images;
    images.reserve(static_cast<size_t>(n) + 2);
    for (int i = 0; i <= n; ++i) {
      images.emplace_back(Poly::constant(line_ctx, Rational(coeff(rng))) +
                          Poly::constant(line_ctx, Rational(coeff(rng))) * u);
    }
    images.emplace_back(Poly::variable(line_ctx, 0));

    std::vector<Poly> restricted;
    restricted.reserve(active.size());
    bool good = true;
    for (const Poly* c : active) {
      Poly r = c->substitute(images, line_ctx);
      // Degenerate restrictions lose degree information; take a new line.
      if (r.is_zero() || r.degree_in(1) < d) {
        good = false;
        break;
      }
      restricted.push_back(std::move(r));
    }
    if (!good) continue;

    std::vector<Poly> resultants;
    for (size_t i = 0; i < restricted.size(); ++i) {
      for (size_t j = i + 1; j < restricted.size(); ++j) {
        Poly res = resultant_wrt(restricted[i], restricted[j], 1);
        if (!res.is_zero()) resultants.push_back(res.restricted_to(pctx));
      }
    }
    if (resultants.empty()) {
      // Every pair of components shares a factor along this line (possible
      // even for a minimal writing, e.g. pairwise products of coordinates).
      // Two random linear combinations of the components still detect any
      // factor common to all of them.
      for (int combo = 0; combo < 12 && resultants.empty(); ++combo) {
        Poly l1 = Poly::zero(line_ctx);
        Poly l2 = Poly::zero(line_ctx);
        for (const Poly& r : restricted) {
          l1 = l1 + Rational(coeff(rng)) * r;
          l2 = l2 + Rational(coeff(rng)) * r;
        }
        if (l1.is_zero() || l2.is_zero()) continue;
        if (l1.degree_in(1) < d || l2.degree_in(1) < d) continue;
        Poly res = resultant_wrt(l1, l2, 1);
        if (!res.is_zero()) resultants.push_back(res.restricted_to(pctx));
      }
      if (resultants.empty()) continue;
    }

    Poly g = gcd_many(resultants);
    if (g.is_constant()) return {};
    return verify_candidates(w, d, split_roots(g, rng()));
  }
  fail(ErrorKind::internal_invariant,
       "drop scan: no usable random line after repeated draws");
}

std::vector<Rational> rational_collapse_values(const Poly& content, uint64_t seed) {
  if (content.is_constant()) return {};
  return split_roots(content, seed).rational_roots;
}

}  // namespace

ParamWriting ParamWriting::make(int n, const std::string& param,
                                std::vector<MultiPoly<Rational>> components,
                                std::string provenance) {
  if (n < 1) fail(ErrorKind::invalid_argument, "a family of maps of P^n needs n >= 1");
  if (param.empty()) fail(ErrorKind::invalid_argument, "empty parameter variable name");
  ContextPtr proj = projective(n);
  if (proj->has(param)) {
    fail(ErrorKind::invalid_argument,
         "parameter variable '" + param + "' collides with a coordinate");
  }
  ContextPtr ctx = projective_with_param(n, param);
  if (components.size() != static_cast<size_t>(n) + 1) {
    fail(ErrorKind::degree_mismatch,
         "a writing on P^" + std::to_string(n) + " needs exactly " + std::to_string(n + 1) +
             " components, got " + std::to_string(components.size()));
  }
  std::vector<int> xs = x_indices(n);
  std::optional<int> common;
  bool any_nonzero = false;
  for (size_t i = 0; i < components.size(); ++i) {
    const Poly& c = components[i];
    if (!compatible(c.context(), ctx)) {
      fail(ErrorKind::context_mismatch,
           "component " + std::to_string(i) + " lives in a different variable context");
    }
    if (c.is_zero()) continue;
    any_nonzero = true;
    if (!c.is_homogeneous(xs)) {
      fail(ErrorKind::not_homogeneous, "component " + std::to_string(i) +
                                           " is not homogeneous in the x variables");
    }
    int d = x_degree_of(c, n + 1);
    if (!common) {
      common = d;
    } else if (*common != d) {
      fail(ErrorKind::degree_mismatch, "components have x-degrees " +
                                           std::to_string(*common) + " and " +
                                           std::to_string(d));
    }
  }
  if (!any_nonzero) fail(ErrorKind::all_zero, "all components are zero");
  return ParamWriting(std::move(ctx), param, std::move(components), std::move(provenance));
}

int writing_degree(const ParamWriting& w) {
  for (const auto& c : w.components()) {
    if (!c.is_zero()) return x_degree_of(c, param_index(w));
  }
  fail(ErrorKind::internal_invariant, "writing with no nonzero component");
}

bool is_minimal(const ParamWriting& w) {
  return gcd_many(w.components()).is_constant();
}

ParamWriting minimal_writing(const ParamWriting& w) {
  Poly g = gcd_many(w.components());
  std::vector<Poly> comps = w.components();
  if (!g.is_constant()) {
    for (auto& c : comps) c = divide_exact(c, g);
  }
  comps = normalize_scalars_jointly(std::move(comps));
  return ParamWriting::make(w.n(), w.param(), std::move(comps), w.provenance());
}

int family_Deg(const ParamWriting& w) { return writing_degree(minimal_writing(w)); }

SpecializedMap specialize(const ParamWriting& w, const Rational& t0) {
  std::vector<Poly> comps = specialize_components(w, t0);
  bool all_zero =
      std::all_of(comps.begin(), comps.end(), [](const Poly& p) { return p.is_zero(); });
  if (all_zero) {
    fail(ErrorKind::collapse_point,
         "the writing vanishes identically at " + to_string(t0) +
             " and defines no map there",
         to_string(t0));
  }
  RationalMap m = normalize(RationalMap::make(projective(w.n()), std::move(comps)));
  int deg = m.written_degree();
  return SpecializedMap{std::move(m), deg};
}

std::vector<AlgebraicSpecialization> specialize_algebraic(const ParamWriting& w,
                                                          const MultiPoly<Rational>& modulus) {
  if (modulus.context()->size() != 1) {
    fail(ErrorKind::invalid_argument,
         "the modulus must be univariate (it is read as a polynomial in the parameter)");
  }
  Poly base = squarefree_part(modulus);
  if (base.is_constant()) {
    fail(ErrorKind::invalid_argument, "the modulus must be nonconstant");
  }
  const ContextPtr& mctx = modulus.context();
  const ContextPtr target = projective(w.n());
  const int pi = param_index(w);
  const int d = writing_degree(w);

  std::vector<Poly> worklist = {base};
  std::vector<AlgebraicSpecialization> out;
  while (!worklist.empty()) {
    Poly m_poly = std::move(worklist.back());
    worklist.pop_back();
    ModulusPtr m = make_modulus(m_poly);
    Poly monic = modulus_poly(*m, mctx);

    std::vector<QPoly> specialized;
    specialized.reserve(w.components().size());
    for (const auto& c : w.components()) specialized.push_back(to_algebraic(c, pi, m, target));
    bool all_zero =
        std::all_of(specialized.begin(), specialized.end(), [](const QPoly& p) { return p.is_zero(); });
    if (all_zero) {
      out.push_back(AlgebraicSpecialization{std::move(monic), true, 0, 0});
      continue;
    }
    try {
      QPoly g = gcd_many(specialized);
      // The gcd's shape (in particular its degree) may only be reported
      // once every stored coefficient is a certified unit — otherwise two
      // factors of the modulus could disagree about it.
      for (const auto& [mono, c] : g.terms()) certify_unit(c);
      int cfd = g.is_constant() ? 0 : g.total_degree();
      out.push_back(AlgebraicSpecialization{std::move(monic), false, cfd, d - cfd});
    } catch (const ModulusSplit& split) {
      Poly factor = Poly::zero(mctx);
      for (size_t k = 0; k < split.factor.size(); ++k) {
        factor = factor + Poly::monomial(mctx, Monomial{static_cast<int32_t>(k)},
                                         split.factor[k]);
      }
      worklist.push_back(divide_exact(monic, factor));
      worklist.push_back(std::move(factor));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const AlgebraicSpecialization& a, const AlgebraicSpecialization& b) {
              return format_poly(a.modulus) < format_poly(b.modulus);
            });
  return out;
}

std::string format_param_value(const ParamValue& v) {
  if (v.rational) return to_string(*v.rational);
  if (v.minimal_polynomial) return "root of " + format_poly(*v.minimal_polynomial);
  return "?";
}

DropScan drop_locus(const ParamWriting& w, const DropScanOptions& options) {
  if (!is_minimal(w)) {
    fail(ErrorKind::invalid_argument,
         "drop_locus requires a minimal writing (components with gcd 1); "
         "call minimal_writing first");
  }
  if (options.lines < 1) fail(ErrorKind::invalid_argument, "at least one line is required");
  if (options.coefficient_bound < 1) {
    fail(ErrorKind::invalid_argument, "coefficient bound must be positive");
  }

  DropScan scan;
  const int d = writing_degree(w);
  std::ostringstream note;
  note << "random-line scan: seed " << options.seed << ", coefficients in [-"
       << options.coefficient_bound << ", " << options.coefficient_bound << "]";
  if (d == 0) {
    scan.note = note.str() + "; degree-0 writing, nothing to scan";
    return scan;
  }

  std::mt19937_64 rng(options.seed);
  std::vector<std::vector<DropPoint>> runs;
  for (int k = 0; k < options.lines; ++k) {
    runs.push_back(scan_once(w, d, rng, options.coefficient_bound));
  }
  bool agreed = std::all_of(runs.begin(), runs.end(),
                            [&](const std::vector<DropPoint>& r) { return r == runs.front(); });
  if (!agreed) {
    runs.push_back(scan_once(w, d, rng, options.coefficient_bound));
  }

  std::vector<DropPoint> all;
  for (const auto& r : runs) all.insert(all.end(), r.begin(), r.end());
  std::sort(all.begin(), all.end(), drop_point_less);
  all.erase(std::unique(all.begin(), all.end()), all.end());

  scan.points = std::move(all);
  scan.runs = static_cast<int>(runs.size());
  scan.agreed = agreed;
  note << "; " << scan.runs << " independent lines, "
       << (agreed ? "all agreed" : "disagreement adjudicated by an extra line")
       << "; every reported point verified by exact gcd computation";
  scan.note = note.str();
  return scan;
}

DegreeProfile stratify(const ParamWriting& w, const DropScanOptions& options) {
  DegreeProfile profile;
  profile.writing_deg = writing_degree(w);
  profile.common_factor = gcd_many(w.components());
  ParamWriting wmin = minimal_writing(w);
  profile.Deg = writing_degree(wmin);

  DropScan scan = drop_locus(wmin, options);
  profile.drop_points = scan.points;

  ContextPtr pctx = make_context({w.param()});
  Poly content = param_content(w, pctx);
  if (!content.is_constant()) {
    RootSplit roots = split_roots(content, options.seed);
    for (const Rational& r : roots.rational_roots) {
      profile.collapse_points.push_back(ParamValue{r, std::nullopt});
    }
    if (roots.irrational_factor) {
      profile.collapse_points.push_back(ParamValue{std::nullopt, *roots.irrational_factor});
    }
    std::sort(profile.collapse_points.begin(), profile.collapse_points.end(),
              param_value_less);
  }

  // A witness sample attaining the family degree, taken off the finite
  // rational drop and collapse sets.
  std::vector<Rational> excluded;
  for (const DropPoint& p : profile.drop_points) {
    if (p.at.rational) excluded.push_back(*p.at.rational);
  }
  for (const ParamValue& v : profile.collapse_points) {
    if (v.rational) excluded.push_back(*v.rational);
  }
  Rational witness(1);
  while (std::find(excluded.begin(), excluded.end(), witness) != excluded.end()) {
    witness += 1;
  }
  profile.generic_witness_value = witness;
  profile.generic_witness_degree = specialize(wmin, witness).degree;
  if (profile.generic_witness_degree != profile.Deg) {
    fail(ErrorKind::internal_invariant,
         "a sample off the computed drop locus did not attain the family degree "
         "(the randomized scan must have missed a drop point)");
  }
  profile.horizon_note = scan.note;
  return profile;
}

SemicontinuityReport semicontinuity_scan(const ParamWriting& w,
                                         const std::vector<Rational>& samples,
                                         const DropScanOptions& options) {
  ParamWriting wmin = minimal_writing(w);
  SemicontinuityReport report;
  report.Deg = writing_degree(wmin);
  DropScan scan = drop_locus(wmin, options);

  std::map<Rational, int> drop_degrees;
  for (const DropPoint& p : scan.points) {
    if (p.at.rational) drop_degrees.emplace(*p.at.rational, p.degree);
  }
  ContextPtr pctx = make_context({w.param()});
  std::vector<Rational> collapses =
      rational_collapse_values(param_content(w, pctx), options.seed);

  for (const Rational& t0 : samples) {
    SemicontinuitySample s;
    s.value = t0;
    s.degree = specialize(wmin, t0).degree;
    auto it = drop_degrees.find(t0);
    s.at_drop = it != drop_degrees.end();
    s.collapses_writing =
        std::find(collapses.begin(), collapses.end(), t0) != collapses.end();
    if (s.degree > report.Deg) {
      fail(ErrorKind::internal_invariant,
           "semicontinuity violated: degree " + std::to_string(s.degree) + " at " +
               to_string(t0) + " exceeds the family degree " + std::to_string(report.Deg));
    }
    if (s.at_drop && s.degree != it->second) {
      fail(ErrorKind::internal_invariant,
           "specialized degree at " + to_string(t0) + " disagrees with the drop scan");
    }
    if (!s.at_drop && s.degree != report.Deg) {
      fail(ErrorKind::internal_invariant,
           "degree " + std::to_string(s.degree) + " at " + to_string(t0) +
               " is below the family degree but the point is not in the computed "
               "drop locus (the randomized scan must have missed it)");
    }
    report.samples.push_back(std::move(s));
  }
  std::ostringstream note;
  note << report.samples.size() << " samples, all within the semicontinuity envelope; "
       << scan.note;
  report.note = note.str();
  return report;
}

ParamWriting family_compose(const ParamWriting& w1, const ParamWriting& w2) {
  if (!compatible(w1.context(), w2.context())) {
    fail(ErrorKind::context_mismatch,
         "family_compose: writings live on different spaces or parameters");
  }
  const ContextPtr& ctx = w1.context();
  std::vector<std::optional<Poly>> images;
  images.reserve(w2.components().size() + 1);
  for (const auto& c : w2.components()) images.emplace_back(c);
  images.emplace_back(Poly::variable(ctx, param_index(w1)));

  std::vector<Poly> comps;
  comps.reserve(w1.components().size());
  bool any_nonzero = false;
  for (const auto& c : w1.components()) {
    comps.push_back(c.substitute(images, ctx));
    any_nonzero = any_nonzero || !comps.back().is_zero();
  }
  if (!any_nonzero) {
    fail(ErrorKind::composed_to_zero,
         "every component of the composed family vanishes identically");
  }
  return minimal_writing(ParamWriting::make(w1.n(), w1.param(), std::move(comps)));
}

ParamWriting reparameterize(const ParamWriting& w, const Mobius& mobius) {
  if (is_zero(mobius.a * mobius.d - mobius.b * mobius.c)) {
    fail(ErrorKind::degenerate_mobius,
         "a*d - b*c = 0: the substitution is not a change of parameter");
  }
  const ContextPtr& ctx = w.context();
  const int pi = param_index(w);
  Poly t = Poly::variable(ctx, pi);
  Poly numer = Poly::constant(ctx, mobius.a) * t + Poly::constant(ctx, mobius.b);
  Poly denom = Poly::constant(ctx, mobius.c) * t + Poly::constant(ctx, mobius.d);

  int K = 0;
  for (const auto& c : w.components()) {
    if (!c.is_zero()) K = std::max(K, c.degree_in(pi));
  }

  // Each component f(t, x) becomes (c t + d)^K * f((a t + b)/(c t + d), x):
  // one global clearing factor, so every specialization off the pole is the
  // same projective map as before the substitution.
  std::vector<Poly> comps;
  comps.reserve(w.components().size());
  for (const auto& c : w.components()) {
    if (c.is_zero()) {
      comps.push_back(c);
      continue;
    }
    Poly acc = Poly::zero(ctx);
    for (const auto& [e, part] : coefficients_in(c, pi)) {
      acc = acc + part * numer.pow(e) * denom.pow(K - e);
    }
    comps.push_back(std::move(acc));
  }
  comps = normalize_scalars_jointly(std::move(comps));
  return ParamWriting::make(w.n(), w.param(), std::move(comps), w.provenance());
}

ParamWriting nodal_cubic_family(int n) {
  if (n < 2) fail(ErrorKind::invalid_argument, "the nodal-cubic family needs n >= 2");
  ContextPtr ctx = projective_with_param(n, "s");
  Poly s = Poly::variable(ctx, n + 1);
  Poly x0 = Poly::variable(ctx, 0);
  Poly x2 = Poly::variable(ctx, 2);
  Poly one = Poly::constant(ctx, Rational(1));
  Poly shared = x0 + s * x2;
  Poly s3 = s.pow(3);
  Poly fp = s3 * (s * s * x0 + x2) * shared;
  Poly gp = s3 * (s * (one + s) * x0 + x2) * shared;

  std::vector<Poly> comps;
  comps.reserve(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    comps.push_back(Poly::variable(ctx, i) * (i == 1 ? gp : fp));
  }
  return ParamWriting::make(
      n, "s", std::move(comps),
      "pullback of the nodal-cubic writing along the parameterization "
      "(a : b : c) = (s : s^2 : 1 + s^3) of a^3 + b^3 - a*b*c = 0");
}

ParamWriting degeneration_demo() {
  ContextPtr ctx = projective_with_param(2, "t");
  Poly x0 = Poly::variable(ctx, 0);
  Poly x1 = Poly::variable(ctx, 1);
  Poly x2 = Poly::variable(ctx, 2);
  Poly t = Poly::variable(ctx, 3);
  return ParamWriting::make(
      2, "t", {x0 * x0, x0 * x1, x2 * (x0 + t * x1)},
      "a pencil of quadratic maps of P^2 specializing to a linear map at t = 0");
}

ParamWriting constant_family(const RationalMap& f, const std::string& param) {
  if (!compatible(f.context(), projective(f.n()))) {
    fail(ErrorKind::invalid_argument,
         "constant_family needs a map in the standard coordinates x0..xn");
  }
  ContextPtr ctx = projective_with_param(f.n(), param);
  std::vector<Poly> comps;
  comps.reserve(f.components().size());
  for (const auto& c : f.components()) comps.push_back(c.embedded_in(ctx));
  return ParamWriting::make(f.n(), param, std::move(comps),
                            "parameter-independent family");
}

}  // namespace cremona
