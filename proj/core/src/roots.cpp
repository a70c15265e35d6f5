#include "cremona/roots.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "cremona/errors.hpp"
#include "cremona/gcd.hpp"
#include "cremona/modp.hpp"

namespace cremona {

namespace {

using Poly = MultiPoly<Rational>;

void require_univariate(const Poly& p, const char* where) {
  if (p.context()->size() != 1) {
    fail(ErrorKind::invalid_argument,
         std::string(where) + ": expected a polynomial on a one-variable context");
  }
  if (p.is_zero()) {
    fail(ErrorKind::zero_polynomial, std::string(where) + ": zero polynomial");
  }
}

// Dense integer coefficients of a primitive integer polynomial, ascending.
std::vector<Integer> dense_integer_coeffs(const Poly& p) {
  std::vector<Integer> out(static_cast<size_t>(p.total_degree()) + 1, Integer(0));
  for (const auto& [m, c] : p.terms()) {
    if (Integer(c.get_den()) != 1) {
      fail(ErrorKind::internal_invariant, "expected integer coefficients");
    }
    out[static_cast<size_t>(m[0])] = Integer(c.get_num());
  }
  return out;
}

// Splits a product of distinct monic linear factors over F_p into its roots.
void collect_modp_roots(modp::DensePoly h, uint64_t p, std::mt19937_64& rng,
                        std::vector<uint64_t>& out) {
  modp::trim(h);
  if (modp::degree(h) <= 0) return;
  if (modp::degree(h) == 1) {
    out.push_back(modp::mul(modp::sub(0, h[0], p), modp::inv(h[1], p), p));
    return;
  }
  for (int attempt = 0; attempt < 64; ++attempt) {
    uint64_t delta = rng() % p;
    modp::DensePoly shifted{delta, 1};
    modp::DensePoly w = modp::powmod(shifted, (p - 1) / 2, h, p);
    if (w.empty()) {
      w = {p - 1};
    } else {
      w[0] = modp::sub(w[0], 1, p);
      modp::trim(w);
    }
    modp::DensePoly g = modp::gcd(h, w, p);
    int dg = modp::degree(g);
    if (dg > 0 && dg < modp::degree(h)) {
      collect_modp_roots(g, p, rng, out);
      collect_modp_roots(modp::quotient(h, g, p), p, rng, out);
      return;
    }
  }
  fail(ErrorKind::bad_reduction_exhausted,
       "modular root splitting failed to separate the roots");
}

// Recover num/den from its residue, with |num| <= N and |den| <= D
// guaranteed findable when p > 2*N*D. The caller verifies exactly, so a
// wrong candidate is harmless.
std::optional<Rational> reconstruct_rational(uint64_t residue, uint64_t p,
                                             const Integer& num_bound,
                                             const Integer& den_bound) {
  Integer r0(static_cast<unsigned long>(p)), t0(0);
  Integer r1(static_cast<unsigned long>(residue)), t1(1);
  while (r1 > num_bound) {
    if (sgn(r1) == 0) return std::nullopt;
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = std::move(r1);
    t0 = std::move(t1);
    r1 = std::move(r2);
    t1 = std::move(t2);
  }
  if (sgn(t1) == 0 || abs(t1) > den_bound) return std::nullopt;
  return make_rational(r1, t1);
}

}  // namespace

MultiPoly<Rational> squarefree_part(const MultiPoly<Rational>& p) {
  require_univariate(p, "squarefree_part");
  Poly g = poly_gcd(p, p.derivative(0));
  return normalize_scalars(divide_exact(p, g));
}

RootSplit split_roots(const MultiPoly<Rational>& p, uint64_t seed) {
  require_univariate(p, "split_roots");
  RootSplit out;
  Poly q = squarefree_part(p);
  if (q.total_degree() < 1) return out;

  const ContextPtr& ctx = q.context();
  Poly tvar = Poly::variable(ctx, 0);
  if (is_zero(q.evaluate({Rational(0)}))) {
    out.rational_roots.push_back(Rational(0));
    q = normalize_scalars(divide_exact(q, tvar));
  }
  if (q.total_degree() < 1) return out;

  // Any rational root a/b (lowest terms) of the primitive integer polynomial
  // has a dividing the constant term and b dividing the leading one, so a
  // prime beyond twice their product recovers every root from one residue.
  std::vector<Integer> coeffs = dense_integer_coeffs(q);
  Integer num_bound = abs(coeffs.front());
  Integer den_bound = abs(coeffs.back());
  Integer required = 2 * num_bound * den_bound + 1;
  const Integer prime_cap("4611686018427387904");  // 2^62
  if (required >= prime_cap) {
    fail(ErrorKind::bad_reduction_exhausted,
         "rational-root search: coefficient bounds exceed 64-bit modular range");
  }
  uint64_t start = std::max<uint64_t>(required.get_ui(), uint64_t(1) << 31);
  uint64_t prime = modp::first_prime_at_least(start);
  int redraws = 0;
  while (modp::reduce(coeffs.back(), prime) == 0) {
    if (++redraws > 32) {
      fail(ErrorKind::bad_reduction_exhausted,
           "rational-root search: no prime of good reduction found");
    }
    prime = modp::first_prime_at_least(prime + 1);
  }

  modp::DensePoly qbar(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) qbar[i] = modp::reduce(coeffs[i], prime);
  modp::trim(qbar);

  // Roots in F_p are exactly the roots of gcd(y^p - y, qbar).
  modp::DensePoly ypow = modp::powmod({0, 1}, prime, qbar, prime);
  modp::DensePoly diff = modp::sub(ypow, {0, 1}, prime);
  modp::DensePoly linear_part = modp::gcd(qbar, diff, prime);

  std::mt19937_64 rng(seed ^ 0x719e35cd1d4b8a27ull);
  std::vector<uint64_t> residues;
  collect_modp_roots(linear_part, prime, rng, residues);

  std::vector<Rational> verified;
  for (uint64_t r : residues) {
    auto candidate = reconstruct_rational(r, prime, num_bound, den_bound);
    if (!candidate) continue;
    if (is_zero(q.evaluate({*candidate}))) verified.push_back(*candidate);
  }
  std::sort(verified.begin(), verified.end());
  verified.erase(std::unique(verified.begin(), verified.end()), verified.end());

  for (const Rational& root : verified) {
    q = normalize_scalars(divide_exact(q, tvar - Poly::constant(ctx, root)));
    out.rational_roots.push_back(root);
  }
  std::sort(out.rational_roots.begin(), out.rational_roots.end());

  if (q.total_degree() == 1) {
    fail(ErrorKind::internal_invariant,
         "split_roots: a linear factor survived the rational-root search");
  }
  if (q.total_degree() >= 2) out.irrational_factor = normalize_scalars(q);
  return out;
}

}  // namespace cremona
