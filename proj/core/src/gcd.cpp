#include "cremona/gcd.hpp"

#include <random>

#include "cremona/modp.hpp"

namespace cremona {
namespace detail {

// Certify gcd(polys) is constant by restricting to a random line over a
// large prime field. Soundness: write the first input f0 = g*h with
// g = gcd (all primitive integer polynomials, by Gauss's lemma). Reduction
// mod p followed by restriction to the line x_j = a_j + b_j*u is a ring
// homomorphism into F_p[u], so the images satisfy deg_u(f0|) =
// deg_u(g|) + deg_u(h|) whenever f0| keeps full degree — forcing g| to keep
// full degree as well. g| divides every restricted input, hence divides
// their univariate gcd; so deg(gcd over Q) <= deg_u(univariate gcd mod p).
// A degree-zero univariate gcd therefore *proves* coprimality; anything
// else is "unknown" and the caller falls back to the exact remainder
// sequence. The seed is fixed, so this is a pure function.
bool certified_coprime(const std::vector<MultiPoly<Rational>>& polys) {
  std::vector<MultiPoly<Rational>> prim;
  prim.reserve(polys.size());
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    if (p.is_constant()) return true;  // a unit divides into the gcd
    prim.push_back(normalize_scalars(p));
  }
  if (prim.size() < 2) return false;

  // Put an input of minimal total degree first; the full-degree condition
  // is checked on it.
  size_t lead = 0;
  for (size_t i = 1; i < prim.size(); ++i) {
    if (prim[i].total_degree() < prim[lead].total_degree()) lead = i;
  }
  std::swap(prim[0], prim[lead]);
  const int d0 = prim[0].total_degree();
  const size_t nv = static_cast<size_t>(prim[0].num_vars());

  constexpr int max_attempts = 3;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    uint64_t p = modp::first_prime_at_least((uint64_t{1} << 62) + 11 +
                                            static_cast<uint64_t>(attempt) * 65536);
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull + static_cast<uint64_t>(attempt));
    std::vector<uint64_t> a(nv), b(nv);
    for (size_t j = 0; j < nv; ++j) {
      a[j] = rng() % p;
      b[j] = rng() % p;
    }
    modp::DensePoly g = modp::restrict_to_line(prim[0], a, b, p);
    if (modp::degree(g) != d0) continue;  // unlucky line/prime: retry
    for (size_t i = 1; i < prim.size() && modp::degree(g) > 0; ++i) {
      g = modp::gcd(std::move(g), modp::restrict_to_line(prim[i], a, b, p), p);
    }
    if (modp::degree(g) == 0) return true;
    // Full-degree restriction with a nontrivial univariate gcd: almost
    // certainly a genuine common factor, so hand over to the exact path.
    return false;
  }
  return false;
}

}  // namespace detail
}  // namespace cremona
