// Exact arithmetic with algebraic numbers: residue rings Q[t]/(m), the
// modulus-splitting protocol for squarefree but reducible moduli, certified
// polynomial gcds over such coefficient rings, and exact extraction of the
// rational roots of a univariate rational polynomial.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "cremona/context.hpp"
#include "cremona/errors.hpp"
#include "cremona/gcd.hpp"
#include "cremona/multipoly.hpp"
#include "cremona/quotient.hpp"
#include "cremona/roots.hpp"
#include "doctest.h"
#include "test_support.hpp"

namespace cremona {

inline std::ostream& operator<<(std::ostream& os, const QuotientScalar& c) {
  return os << c.to_string();
}

}  // namespace cremona

namespace {

using namespace cremona;
using cremona::testutil::error_kind_of;
using cremona::testutil::P;

using QPoly = MultiPoly<QuotientScalar>;

ContextPtr tctx() { return make_context({"t"}); }

// The monic linear polynomial encoded by a degree-one split factor has a
// single root; recover it for branch identification.
Rational root_of_linear_factor(const std::vector<Rational>& factor) {
  REQUIRE(factor.size() == 2);
  REQUIRE(factor[1] == Rational(1));
  return -factor[0];
}

TEST_CASE("quotient modulus construction and rendering") {
  auto ctx = tctx();
  ModulusPtr m = make_modulus(P("2*t^2 - 4", ctx));
  CHECK(m->degree() == 2);
  CHECK(m->coeffs() == std::vector<Rational>{Rational(-2), Rational(0), Rational(1)});
  CHECK(modulus_poly(*m, ctx) == P("t^2 - 2", ctx));

  CHECK(error_kind_of([&] { make_modulus(P("7", ctx)); }) == ErrorKind::invalid_argument);
  auto xy = make_context({"x", "y"});
  CHECK(error_kind_of([&] { make_modulus(P("x + y", xy)); }) == ErrorKind::invalid_argument);
  CHECK(error_kind_of([] { QuotientModulus({Rational(3)}); }) == ErrorKind::invalid_argument);

  QuotientModulus trimmed({Rational(1), Rational(1), Rational(0)});
  CHECK(trimmed.degree() == 1);
}

TEST_CASE("arithmetic in Q[t]/(t^2 - 2)") {
  ModulusPtr m = make_modulus(P("t^2 - 2", tctx()));
  QuotientScalar alpha = QuotientScalar::generator(m);
  QuotientScalar one(1);

  CHECK(alpha * alpha == QuotientScalar(2));
  CHECK((one + alpha) * (one - alpha) == QuotientScalar(-1));

  // alpha is invertible with inverse alpha/2.
  QuotientScalar inv = one / alpha;
  CHECK(inv == QuotientScalar::from_coeffs(m, {Rational(0), make_rational(1, 2)}));
  CHECK(inv * alpha == one);

  QuotientScalar b = QuotientScalar::from_coeffs(m, {Rational(3), Rational(-1)});  // 3 - alpha
  QuotientScalar q = (one + alpha) / b;
  CHECK(q * b == one + alpha);

  // Reduction happens on construction: t^2 -> 2, t^3 -> 2t.
  CHECK(QuotientScalar::from_coeffs(m, {Rational(0), Rational(0), Rational(1)}) ==
        QuotientScalar::constant(m, Rational(2)));
  CHECK(QuotientScalar::from_coeffs(m, {Rational(0), Rational(0), Rational(0), Rational(1)}) ==
        QuotientScalar::from_coeffs(m, {Rational(0), Rational(2)}));

  CHECK((-(one + alpha) + (one + alpha)).is_zero());
  CHECK(alpha.to_string() == "1*t");
  CHECK((one + alpha).to_string() == "1 + 1*t");
  CHECK(QuotientScalar().to_string() == "0");
  CHECK(QuotientScalar(5).to_string() == "5");

  // Two separately built copies of the same modulus interoperate.
  ModulusPtr m_again = make_modulus(P("t^2 - 2", tctx()));
  CHECK(QuotientScalar::generator(m_again) + alpha ==
        QuotientScalar::from_coeffs(m, {Rational(0), Rational(2)}));

  // Scalars over genuinely different moduli must never silently combine.
  ModulusPtr other = make_modulus(P("t^2 - 1", tctx()));
  CHECK(error_kind_of([&] { (void)(alpha + QuotientScalar::generator(other)); }) ==
        ErrorKind::internal_invariant);
}

TEST_CASE("zero divisors raise a modulus split with a certified factor") {
  auto ctx = tctx();
  ModulusPtr m = make_modulus(P("t^2 - 1", ctx));
  QuotientScalar alpha = QuotientScalar::generator(m);
  QuotientScalar one(1);
  QuotientScalar zd = alpha - one;  // vanishes at t = 1 only: a zero divisor

  CHECK_NOTHROW(certify_unit(alpha));  // alpha^2 = 1, so alpha is a unit
  CHECK_NOTHROW(certify_unit(QuotientScalar(5)));
  CHECK(error_kind_of([] { certify_unit(QuotientScalar()); }) == ErrorKind::internal_invariant);
  CHECK(error_kind_of([&] { (void)((alpha + one) / QuotientScalar()); }) ==
        ErrorKind::internal_invariant);

  bool split_seen = false;
  std::vector<Rational> factor;
  try {
    certify_unit(zd);
  } catch (const ModulusSplit& split) {
    split_seen = true;
    CHECK(split.modulus == m);
    factor = split.factor;
  }
  REQUIRE(split_seen);
  Rational r = root_of_linear_factor(factor);
  CHECK(r * r == Rational(1));  // the factor really divides t^2 - 1

  // Division by the same zero divisor raises the same kind of split.
  CHECK_THROWS_AS((void)((alpha + one) / zd), ModulusSplit);

  // Dynamic-evaluation retry: refine the modulus by the certified factor and
  // its cofactor. On one branch the ambiguous element becomes genuinely
  // zero, on the other a certified unit, and every computation completes.
  Poly factor_poly = Poly::constant(ctx, factor[0]) + Poly::variable(ctx, 0);
  Poly cofactor = divide_exact(modulus_poly(*m, ctx), factor_poly);
  ModulusPtr branch_a = make_modulus(factor_poly);
  ModulusPtr branch_b = make_modulus(cofactor);
  int zero_branches = 0;
  for (const ModulusPtr& branch : {branch_a, branch_b}) {
    QuotientScalar zb = QuotientScalar::generator(branch) - QuotientScalar(1);
    if (zb.is_zero()) {
      ++zero_branches;
    } else {
      CHECK_NOTHROW(certify_unit(zb));
      QuotientScalar num = QuotientScalar::generator(branch) + QuotientScalar(1);
      CHECK((num / zb) * zb == num);
    }
  }
  CHECK(zero_branches == 1);
}

TEST_CASE("polynomial gcd over an algebraic coefficient field") {
  ModulusPtr m = make_modulus(P("t^2 - 2", tctx()));
  QuotientScalar alpha = QuotientScalar::generator(m);
  auto ctx = projective(1);
  QPoly x0 = QPoly::variable(ctx, 0);
  QPoly x1 = QPoly::variable(ctx, 1);
  QPoly a_const = QPoly::constant(ctx, alpha);
  QPoly planted = x0 + a_const * x1;

  // x0^2 - 2 x1^2 factors as (x0 + alpha x1)(x0 - alpha x1) over Q(alpha).
  QPoly f = x0 * x0 - QPoly::constant(ctx, QuotientScalar(2)) * x1 * x1;
  QPoly g = poly_gcd(f, planted * x1);
  CHECK(g == normalize_scalars(planted));
  CHECK(divide_exact(f, g) * g == f);

  // Common factor with content in one variable.
  QPoly h = poly_gcd(planted * planted * x1, planted * x1 * x1);
  CHECK(h == normalize_scalars(planted * x1));

  // Conjugate factors are coprime over a field.
  QPoly c = poly_gcd(planted, x0 - a_const * x1);
  CHECK(c == QPoly::constant(ctx, QuotientScalar(1)));

  std::vector<QPoly> triple = {planted * x0, planted * x1, planted * (x0 + x1)};
  QPoly many = gcd_many(triple);
  CHECK(many == normalize_scalars(planted));
}

TEST_CASE("gcd that differs between modulus factors raises a split") {
  auto ctx1 = tctx();
  ModulusPtr m = make_modulus(P("t^2 - 1", ctx1));
  auto ctx = projective(1);
  QPoly x0 = QPoly::variable(ctx, 0);
  QPoly x1 = QPoly::variable(ctx, 1);
  QPoly f = x0 + QPoly::constant(ctx, QuotientScalar::generator(m)) * x1;
  QPoly h = x0 + x1;

  // At t = 1 the gcd is x0 + x1; at t = -1 it is 1. No uniform answer
  // exists, so the computation must refuse with a certified factor.
  bool split_seen = false;
  std::vector<Rational> factor;
  try {
    (void)poly_gcd(f, h);
  } catch (const ModulusSplit& split) {
    split_seen = true;
    factor = split.factor;
  }
  REQUIRE(split_seen);
  Rational r = root_of_linear_factor(factor);
  CHECK(r * r == Rational(1));

  // Rerun on both refined branches; each is a field, so both complete.
  Poly factor_poly = Poly::constant(ctx1, factor[0]) + Poly::variable(ctx1, 0);
  Poly cofactor = divide_exact(modulus_poly(*m, ctx1), factor_poly);
  for (const ModulusPtr& branch : {make_modulus(factor_poly), make_modulus(cofactor)}) {
    QuotientScalar gen = QuotientScalar::generator(branch);
    QPoly fb = x0 + QPoly::constant(ctx, gen) * x1;
    QPoly gb = poly_gcd(fb, h);
    if (gen == QuotientScalar(1)) {
      CHECK(gb == normalize_scalars(x0 + x1));
    } else {
      CHECK(gen == QuotientScalar(-1));
      CHECK(gb == QPoly::constant(ctx, QuotientScalar(1)));
    }
  }
}

TEST_CASE("squarefree part") {
  auto ctx = tctx();
  Poly l1 = P("t - 1", ctx);
  CHECK(squarefree_part(l1 * l1 * P("t + 2", ctx)) == P("t^2 + t - 2", ctx));
  CHECK(squarefree_part(P("t^3", ctx)) == P("t", ctx));
  CHECK(squarefree_part(P("2*t^2 - 2", ctx)) == P("t^2 - 1", ctx));
  CHECK(squarefree_part(P("5", ctx)) == P("1", ctx));
}

TEST_CASE("rational root extraction with exact verification") {
  auto ctx = tctx();

  RootSplit s1 = split_roots(P("t^3 + t^2 - 2*t", ctx), 7);
  CHECK(s1.rational_roots == std::vector<Rational>{Rational(-2), Rational(0), Rational(1)});
  CHECK(!s1.irrational_factor.has_value());

  RootSplit s2 = split_roots(P("t^3 - 1/2*t^2 - 2*t + 1", ctx), 7);
  CHECK(s2.rational_roots == std::vector<Rational>{make_rational(1, 2)});
  REQUIRE(s2.irrational_factor.has_value());
  CHECK(*s2.irrational_factor == P("t^2 - 2", ctx));

  // Repeated irrational factors collapse through the squarefree part.
  Poly q2 = P("t^2 - 2", ctx);
  RootSplit s3 = split_roots(q2 * q2 * P("t - 3", ctx), 7);
  CHECK(s3.rational_roots == std::vector<Rational>{Rational(3)});
  REQUIRE(s3.irrational_factor.has_value());
  CHECK(*s3.irrational_factor == q2);

  RootSplit s4 = split_roots(P("t^2 + 1", ctx), 7);
  CHECK(s4.rational_roots.empty());
  REQUIRE(s4.irrational_factor.has_value());
  CHECK(*s4.irrational_factor == P("t^2 + 1", ctx));

  RootSplit s5 = split_roots(P("7*t^2 + 13*t - 110", ctx), 7);
  CHECK(s5.rational_roots == std::vector<Rational>{Rational(-5), make_rational(22, 7)});
  CHECK(!s5.irrational_factor.has_value());

  RootSplit s6 = split_roots(P("t^5", ctx), 7);
  CHECK(s6.rational_roots == std::vector<Rational>{Rational(0)});
  CHECK(!s6.irrational_factor.has_value());

  RootSplit s7 = split_roots(P("5", ctx), 7);
  CHECK(s7.rational_roots.empty());
  CHECK(!s7.irrational_factor.has_value());

  RootSplit s8 = split_roots(P("3*t - 7", ctx), 7);
  CHECK(s8.rational_roots == std::vector<Rational>{make_rational(7, 3)});

  // The seed steers only the internal modular search, never the answer.
  for (uint64_t seed : {0ull, 1ull, 999ull, 0xdeadbeefull}) {
    RootSplit again = split_roots(P("t^3 - 1/2*t^2 - 2*t + 1", ctx), seed);
    CHECK(again.rational_roots == s2.rational_roots);
    CHECK(again.irrational_factor == s2.irrational_factor);
  }

  CHECK(error_kind_of([&] { split_roots(Poly::zero(ctx), 7); }) == ErrorKind::zero_polynomial);
  auto xy = make_context({"x", "y"});
  CHECK(error_kind_of([&] { split_roots(P("x + y", xy), 7); }) == ErrorKind::invalid_argument);

  // Coefficients too large for the single-prime reconstruction window are
  // refused honestly rather than answered heuristically.
  Poly huge =
      Poly::variable(ctx, 0) - Poly::constant(ctx, Rational(Integer("4611686018427387904")));
  CHECK(error_kind_of([&] { split_roots(huge, 7); }) == ErrorKind::bad_reduction_exhausted);
}

TEST_CASE("randomized planted rational roots are recovered exactly") {
  auto ctx = tctx();
  Poly tv = Poly::variable(ctx, 0);
  std::mt19937_64 rng(20260823);
  std::uniform_int_distribution<int> num_dist(-9, 9);
  std::uniform_int_distribution<int> den_dist(1, 5);
  std::uniform_int_distribution<int> count_dist(1, 3);
  std::uniform_int_distribution<int> extra_dist(0, 2);
  std::uniform_int_distribution<int> square_dist(0, 3);

  for (int iter = 0; iter < 40; ++iter) {
    std::set<Rational> roots;
    int want = count_dist(rng);
    while (static_cast<int>(roots.size()) < want) {
      roots.insert(Rational(num_dist(rng)) / Rational(den_dist(rng)));
    }
    Poly f = Poly::constant(ctx, Rational(1));
    for (const Rational& r : roots) {
      Poly lin = tv - Poly::constant(ctx, r);
      f = f * lin;
      if (square_dist(rng) == 0) f = f * lin;  // occasional repeated factor
    }
    Poly extra = Poly::zero(ctx);
    switch (extra_dist(rng)) {
      case 0:
        break;
      case 1:
        extra = P("t^2 + 1", ctx);
        break;
      default:
        extra = P("t^2 - 2", ctx);
        break;
    }
    if (!extra.is_zero()) f = f * extra;

    RootSplit out = split_roots(f, 977 * static_cast<uint64_t>(iter) + 11);
    std::vector<Rational> expected(roots.begin(), roots.end());
    CHECK(out.rational_roots == expected);
    if (extra.is_zero()) {
      CHECK(!out.irrational_factor.has_value());
    } else {
      REQUIRE(out.irrational_factor.has_value());
      CHECK(*out.irrational_factor == extra);
    }
  }
}

}  // namespace
