// One-parameter families: writings and their validation, minimal writings
// and the family degree, specialization at rational and algebraic
// parameters, drop and collapse loci, stratification, semicontinuity,
// composition, and Möbius reparameterization.

#include <random>
#include <string>
#include <vector>

#include "cremona/birmap.hpp"
#include "cremona/context.hpp"
#include "cremona/errors.hpp"
#include "cremona/family.hpp"
#include "cremona/gcd.hpp"
#include "cremona/poly_format.hpp"
#include "doctest.h"
#include "test_support.hpp"

namespace {

using namespace cremona;
using cremona::testutil::error_kind_of;
using cremona::testutil::P;

ParamWriting writing_of(int n, const std::string& param,
                        const std::vector<std::string>& texts) {
  ContextPtr ctx = projective_with_param(n, param);
  std::vector<Poly> comps;
  comps.reserve(texts.size());
  for (const auto& s : texts) comps.push_back(P(s, ctx));
  return ParamWriting::make(n, param, std::move(comps));
}

ParamWriting identity_family() {
  return writing_of(2, "t", {"x0", "x1", "x2"});
}

// Drops exactly at the two roots of t^2 - 2, where the third component
// becomes divisible by x0.
ParamWriting irrational_drop_family() {
  ContextPtr ctx = projective_with_param(2, "t");
  Poly x0 = P("x0", ctx), x1 = P("x1", ctx), x2 = P("x2", ctx), t = P("t", ctx);
  return ParamWriting::make(
      2, "t", {x0 * x0, x0 * x1, x2 * ((t * t - P("2", ctx)) * x1 + t * x0)});
}

TEST_CASE("writing validation") {
  ContextPtr ctx = projective_with_param(2, "t");
  CHECK(error_kind_of([&] {
          ParamWriting::make(2, "t", {P("x0", ctx), P("x1", ctx)});
        }) == ErrorKind::degree_mismatch);
  CHECK(error_kind_of([&] {
          ParamWriting::make(2, "x1", {P("x0", ctx), P("x1", ctx), P("x2", ctx)});
        }) == ErrorKind::invalid_argument);
  CHECK(error_kind_of([&] {
          ParamWriting::make(2, "t", {P("x0 + x1^2", ctx), P("x1", ctx), P("x2", ctx)});
        }) == ErrorKind::not_homogeneous);
  CHECK(error_kind_of([&] {
          ParamWriting::make(2, "t", {P("x0^2", ctx), P("x1", ctx), P("x2", ctx)});
        }) == ErrorKind::degree_mismatch);
  CHECK(error_kind_of([&] {
          ParamWriting::make(2, "t",
                             {Poly::zero(ctx), Poly::zero(ctx), Poly::zero(ctx)});
        }) == ErrorKind::all_zero);
  ContextPtr other = projective(2);
  CHECK(error_kind_of([&] {
          ParamWriting::make(2, "t", {P("x0", other), P("x1", other), P("x2", other)});
        }) == ErrorKind::context_mismatch);

  // The parameter may appear to any degree, and single zero components are
  // fine; t-degrees need not match across components.
  ParamWriting ok = ParamWriting::make(
      2, "t", {P("t^3*x0^2", ctx), Poly::zero(ctx), P("x2^2 + t*x0*x2", ctx)});
  CHECK(writing_degree(ok) == 2);
}

TEST_CASE("writing degree, minimality, and the minimal writing") {
  ParamWriting nodal = nodal_cubic_family(2);
  CHECK(writing_degree(nodal) == 3);
  CHECK_FALSE(is_minimal(nodal));
  CHECK(family_Deg(nodal) == 2);

  CHECK(writing_degree(identity_family()) == 1);
  CHECK(is_minimal(identity_family()));

  ParamWriting demo = degeneration_demo();
  CHECK(writing_degree(demo) == 2);
  CHECK(is_minimal(demo));
  CHECK(family_Deg(demo) == 2);

  // Pure-parameter content is removed too.
  ParamWriting scaled = writing_of(2, "t", {"t*x0", "t*x1", "t*x2"});
  ParamWriting min = minimal_writing(scaled);
  CHECK(min.components() == identity_family().components());

  // Idempotence.
  ParamWriting nodal_min = minimal_writing(nodal);
  CHECK(minimal_writing(nodal_min).components() == nodal_min.components());
}

TEST_CASE("nodal cubic family: exact degrees, factor, and specializations") {
  ParamWriting w = nodal_cubic_family(2);
  const ContextPtr& ctx = w.context();
  Poly s = P("s", ctx), x0 = P("x0", ctx), x1 = P("x1", ctx), x2 = P("x2", ctx);

  // The components share the pullback of a*x0 + b*x2, times the parameter
  // content s^3.
  Poly factor = gcd_many(w.components());
  CHECK(factor == normalize_scalars(s.pow(3) * (x0 + s * x2)));

  ParamWriting min = minimal_writing(w);
  CHECK(writing_degree(min) == 2);
  std::vector<Poly> expected_raw = {x0 * (s * s * x0 + x2),
                                    x1 * (s * (P("1", ctx) + s) * x0 + x2),
                                    x2 * (s * s * x0 + x2)};
  std::vector<Poly> expected = normalize_scalars_jointly(expected_raw);
  CHECK(min.components() == expected);

  // Exact division certifies the factorization.
  for (size_t i = 0; i < w.components().size(); ++i) {
    CHECK(divide_exact(w.components()[i], factor) * factor == w.components()[i]);
  }

  // The raw writing does not pass through s = 0; the minimal one does, and
  // lands on the identity.
  bool collapse_seen = false;
  try {
    specialize(w, Rational(0));
  } catch (const CremonaError& e) {
    collapse_seen = true;
    CHECK(e.kind() == ErrorKind::collapse_point);
    CHECK(e.detail() == "0");
  }
  CHECK(collapse_seen);

  SpecializedMap at0 = specialize(min, Rational(0));
  CHECK(at0.degree == 1);
  CHECK(is_identity(at0.map));

  CHECK(specialize(min, Rational(-1)).degree == 2);
  CHECK(specialize(min, Rational(2)).degree == 2);
  CHECK(maps_equal(specialize(w, Rational(2)).map, specialize(min, Rational(2)).map));

  // Higher-dimensional variant.
  ParamWriting w3 = nodal_cubic_family(3);
  CHECK(writing_degree(w3) == 3);
  CHECK(family_Deg(w3) == 2);
  CHECK(is_identity(specialize(minimal_writing(w3), Rational(0)).map));
  CHECK(error_kind_of([] { nodal_cubic_family(1); }) == ErrorKind::invalid_argument);
}

TEST_CASE("drop locus: rational points") {
  ParamWriting nodal_min = minimal_writing(nodal_cubic_family(2));
  DropScan scan = drop_locus(nodal_min);
  REQUIRE(scan.points.size() == 1);
  CHECK(scan.points[0].at.rational == Rational(0));
  CHECK(scan.points[0].degree == 1);
  CHECK(scan.runs >= 2);
  CHECK(scan.agreed);
  CHECK(scan.note.find("seed") != std::string::npos);

  DropScan demo_scan = drop_locus(degeneration_demo());
  REQUIRE(demo_scan.points.size() == 1);
  CHECK(demo_scan.points[0].at.rational == Rational(0));
  CHECK(demo_scan.points[0].degree == 1);

  // Results are seed-independent.
  for (uint64_t seed : {1ull, 77ull, 31337ull}) {
    DropScanOptions opts;
    opts.seed = seed;
    CHECK(drop_locus(nodal_min, opts).points == scan.points);
  }

  CHECK(error_kind_of([] { drop_locus(nodal_cubic_family(2)); }) ==
        ErrorKind::invalid_argument);
}

TEST_CASE("drop locus: families with pairwise common factors on every line") {
  // The standard quadratic involution as a constant family: every pair of
  // components shares a coordinate factor, so all pairwise resultants
  // vanish identically and the scan must fall back to random combinations.
  ParamWriting sigma = constant_family(standard_quadratic());
  DropScan scan = drop_locus(sigma);
  CHECK(scan.points.empty());
  CHECK(scan.agreed);

  DropScan id_scan = drop_locus(identity_family());
  CHECK(id_scan.points.empty());
}

TEST_CASE("drop locus: irrational points certified in a quotient ring") {
  ParamWriting w = irrational_drop_family();
  REQUIRE(is_minimal(w));
  DropScan scan = drop_locus(w);
  REQUIRE(scan.points.size() == 1);
  CHECK_FALSE(scan.points[0].at.rational.has_value());
  REQUIRE(scan.points[0].at.minimal_polynomial.has_value());
  ContextPtr pctx = make_context({"t"});
  CHECK(*scan.points[0].at.minimal_polynomial == P("t^2 - 2", pctx));
  CHECK(scan.points[0].degree == 1);

  // Mixed rational and irrational drops: the x1 coefficient of the third
  // component vanishes at t = 0 and at the roots of t^2 - 2.
  ContextPtr ctx = projective_with_param(2, "t");
  Poly x0 = P("x0", ctx), x1 = P("x1", ctx), x2 = P("x2", ctx), t = P("t", ctx);
  ParamWriting mixed = ParamWriting::make(
      2, "t",
      {x0 * x0, x0 * x1, x2 * (t * (t * t - P("2", ctx)) * x1 + x0)});
  REQUIRE(is_minimal(mixed));
  DropScan mixed_scan = drop_locus(mixed);
  REQUIRE(mixed_scan.points.size() == 2);
  CHECK(mixed_scan.points[0].at.rational == Rational(0));
  CHECK(mixed_scan.points[0].degree == 1);
  CHECK(*mixed_scan.points[1].at.minimal_polynomial == P("t^2 - 2", pctx));
  CHECK(mixed_scan.points[1].degree == 1);
}

TEST_CASE("algebraic specialization splits a reducible modulus as needed") {
  ParamWriting w = irrational_drop_family();
  ContextPtr pctx = make_context({"t"});

  // Over Q[t]/((t^2-2)(t^2-3)) the answer is not uniform: the components
  // acquire a common factor at the roots of t^2 - 2 but not at those of
  // t^2 - 3. The computation must split the modulus and answer per factor.
  Poly m = P("t^2 - 2", pctx) * P("t^2 - 3", pctx);
  std::vector<AlgebraicSpecialization> branches = specialize_algebraic(w, m);
  REQUIRE(branches.size() == 2);
  CHECK(branches[0].modulus == P("t^2 - 2", pctx));
  CHECK_FALSE(branches[0].collapsed);
  CHECK(branches[0].common_factor_degree == 1);
  CHECK(branches[0].degree == 1);
  CHECK(branches[1].modulus == P("t^2 - 3", pctx));
  CHECK(branches[1].common_factor_degree == 0);
  CHECK(branches[1].degree == 2);

  // A uniform modulus needs no split.
  std::vector<AlgebraicSpecialization> uniform =
      specialize_algebraic(w, P("t^2 - 2", pctx));
  REQUIRE(uniform.size() == 1);
  CHECK(uniform[0].common_factor_degree == 1);

  // Collapse at an algebraic (here rational, embedded) point is reported
  // per branch rather than thrown.
  ContextPtr lctx = projective_with_param(1, "t");
  ParamWriting collapsing = ParamWriting::make(
      1, "t", {P("t*x0", lctx), P("t*x1", lctx)});
  std::vector<AlgebraicSpecialization> cb =
      specialize_algebraic(collapsing, P("t^2 - t", pctx));
  REQUIRE(cb.size() == 2);
  CHECK(cb[0].modulus == P("t", pctx));
  CHECK(cb[0].collapsed);
  CHECK(cb[1].modulus == P("t - 1", pctx));
  CHECK_FALSE(cb[1].collapsed);
  CHECK(cb[1].degree == 1);

  CHECK(error_kind_of([&] { specialize_algebraic(w, P("5", pctx)); }) ==
        ErrorKind::invalid_argument);
}

TEST_CASE("stratification profiles") {
  DegreeProfile nodal = stratify(nodal_cubic_family(2));
  CHECK(nodal.writing_deg == 3);
  CHECK(nodal.Deg == 2);
  REQUIRE(nodal.drop_points.size() == 1);
  CHECK(nodal.drop_points[0].at.rational == Rational(0));
  CHECK(nodal.drop_points[0].degree == 1);
  REQUIRE(nodal.collapse_points.size() == 1);
  CHECK(nodal.collapse_points[0].rational == Rational(0));
  CHECK(nodal.generic_witness_value == Rational(1));
  CHECK(nodal.generic_witness_degree == 2);
  CHECK_FALSE(nodal.horizon_note.empty());

  DegreeProfile demo = stratify(degeneration_demo());
  CHECK(demo.writing_deg == 2);
  CHECK(demo.Deg == 2);
  REQUIRE(demo.drop_points.size() == 1);
  CHECK(demo.drop_points[0].at.rational == Rational(0));
  CHECK(demo.drop_points[0].degree == 1);
  CHECK(demo.collapse_points.empty());
  REQUIRE(demo.common_factor.has_value());
  CHECK(demo.common_factor->is_constant());

  DegreeProfile id = stratify(identity_family());
  CHECK(id.Deg == 1);
  CHECK(id.drop_points.empty());
  CHECK(id.collapse_points.empty());

  // Irrational collapse points are reported through their minimal
  // polynomial.
  ContextPtr ctx = projective_with_param(2, "t");
  Poly c = P("t^2 - 2", ctx);
  ParamWriting vanishing = ParamWriting::make(
      2, "t", {c * P("x0", ctx), c * P("x1", ctx), c * P("x2", ctx)});
  DegreeProfile vp = stratify(vanishing);
  CHECK(vp.Deg == 1);
  CHECK(vp.drop_points.empty());
  REQUIRE(vp.collapse_points.size() == 1);
  REQUIRE(vp.collapse_points[0].minimal_polynomial.has_value());
  ContextPtr pctx = make_context({"t"});
  CHECK(*vp.collapse_points[0].minimal_polynomial == P("t^2 - 2", pctx));
  CHECK(format_param_value(vp.collapse_points[0]) == "root of t^2 - 2");
  CHECK(format_param_value(ParamValue{Rational(-3), std::nullopt}) == "-3");
}

TEST_CASE("semicontinuity scans") {
  ParamWriting nodal = nodal_cubic_family(2);
  std::vector<Rational> samples = {Rational(-2), Rational(-1), make_rational(1, 2),
                                   Rational(1),  Rational(2),  Rational(3)};
  SemicontinuityReport off = semicontinuity_scan(nodal, samples);
  CHECK(off.Deg == 2);
  for (const auto& s : off.samples) {
    CHECK(s.degree == 2);
    CHECK_FALSE(s.at_drop);
    CHECK_FALSE(s.collapses_writing);
  }

  SemicontinuityReport at0 = semicontinuity_scan(nodal, {Rational(0)});
  REQUIRE(at0.samples.size() == 1);
  CHECK(at0.samples[0].degree == 1);
  CHECK(at0.samples[0].at_drop);
  CHECK(at0.samples[0].collapses_writing);  // the raw writing vanishes at 0

  // A pencil of linear maps: degree 1 off the determinant roots, degree 0
  // where the matrix degenerates to rank one.
  ParamWriting pencil = writing_of(1, "t", {"x0 + t*x1", "t*x0 + x1"});
  SemicontinuityReport lin =
      semicontinuity_scan(pencil, {Rational(0), make_rational(1, 2), Rational(2),
                                   Rational(1), Rational(-1)});
  CHECK(lin.Deg == 1);
  CHECK(lin.samples[0].degree == 1);
  CHECK(lin.samples[1].degree == 1);
  CHECK(lin.samples[2].degree == 1);
  CHECK(lin.samples[3].degree == 0);
  CHECK(lin.samples[3].at_drop);
  CHECK(lin.samples[4].degree == 0);
  CHECK(lin.samples[4].at_drop);
}

TEST_CASE("family composition") {
  ParamWriting demo = degeneration_demo();

  ParamWriting with_id = family_compose(demo, identity_family());
  CHECK(with_id.components() == minimal_writing(demo).components());

  ParamWriting sigma = constant_family(standard_quadratic());
  ParamWriting sigma_sq = family_compose(sigma, sigma);
  CHECK(writing_degree(sigma_sq) == 1);
  CHECK(is_identity(specialize(sigma_sq, Rational(5)).map));

  ParamWriting demo_sq = family_compose(demo, demo);
  for (int t0 : {1, 2, 3}) {
    RationalMap direct = specialize(demo_sq, Rational(t0)).map;
    RationalMap pieces = compose(specialize(demo, Rational(t0)).map,
                                 specialize(demo, Rational(t0)).map);
    CHECK(maps_equal(direct, pieces));
  }

  ParamWriting other_param = writing_of(2, "s", {"x0", "x1", "x2"});
  CHECK(error_kind_of([&] { family_compose(demo, other_param); }) ==
        ErrorKind::context_mismatch);

  // A composition can vanish identically when the right factor lands in
  // the left factor's indeterminacy locus.
  ParamWriting left = writing_of(2, "t", {"x0^2", "x0*x1", "x0*x2"});
  ContextPtr ctx = projective_with_param(2, "t");
  ParamWriting right = ParamWriting::make(
      2, "t", {Poly::zero(ctx), P("x1^2", ctx), P("x2^2", ctx)});
  CHECK(error_kind_of([&] { family_compose(left, right); }) ==
        ErrorKind::composed_to_zero);
}

TEST_CASE("Möbius reparameterization") {
  ParamWriting nodal = nodal_cubic_family(2);

  ParamWriting same = reparameterize(nodal, Mobius{Rational(1), Rational(0),
                                                   Rational(0), Rational(1)});
  CHECK(same.components() == normalize_scalars_jointly(nodal.components()));

  CHECK(error_kind_of([&] {
          reparameterize(nodal, Mobius{Rational(1), Rational(2), Rational(2), Rational(4)});
        }) == ErrorKind::degenerate_mobius);

  // Shift s -> s + 1: the family degree is unchanged and the drop point
  // moves to -1.
  ParamWriting shifted = reparameterize(nodal, Mobius{Rational(1), Rational(1),
                                                      Rational(0), Rational(1)});
  CHECK(family_Deg(shifted) == 2);
  DegreeProfile sp = stratify(shifted);
  REQUIRE(sp.drop_points.size() == 1);
  CHECK(sp.drop_points[0].at.rational == Rational(-1));
  CHECK(sp.drop_points[0].degree == 1);
  for (int s0 : {1, 2}) {
    CHECK(maps_equal(specialize(shifted, Rational(s0)).map,
                     specialize(nodal, Rational(s0 + 1)).map));
  }

  // Inversion t -> 1/s on the degeneration demo: the family degree is
  // unchanged; the drop formerly at t = 0 moves to s = infinity and leaves
  // the chart, while clearing the denominator introduces a genuine new
  // degeneration at s = 0, where the writing specializes to the constant
  // map (0 : 0 : 1).
  ParamWriting demo = degeneration_demo();
  ParamWriting inverted = reparameterize(demo, Mobius{Rational(0), Rational(1),
                                                      Rational(1), Rational(0)});
  CHECK(family_Deg(inverted) == 2);
  CHECK(maps_equal(specialize(inverted, Rational(2)).map,
                   specialize(demo, make_rational(1, 2)).map));
  DegreeProfile ip = stratify(inverted);
  REQUIRE(ip.drop_points.size() == 1);
  CHECK(ip.drop_points[0].at.rational == Rational(0));
  CHECK(ip.drop_points[0].degree == 0);

  // Degree invariance over a batch of random Möbius substitutions.
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> small(-5, 5);
  int checked = 0;
  while (checked < 8) {
    Mobius m{Rational(small(rng)), Rational(small(rng)), Rational(small(rng)),
             Rational(small(rng))};
    if (is_zero(m.a * m.d - m.b * m.c)) continue;
    CHECK(family_Deg(reparameterize(nodal, m)) == 2);
    CHECK(family_Deg(reparameterize(demo, m)) == 2);
    ++checked;
  }
}

TEST_CASE("constant families") {
  ParamWriting sigma = constant_family(standard_quadratic());
  CHECK(sigma.param() == "t");
  CHECK(writing_degree(sigma) == 2);
  CHECK(family_Deg(sigma) == 2);
  CHECK(maps_equal(specialize(sigma, Rational(17)).map, standard_quadratic()));
  DegreeProfile profile = stratify(sigma);
  CHECK(profile.drop_points.empty());
  CHECK(profile.collapse_points.empty());
}

}  // namespace
