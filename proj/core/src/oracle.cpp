#include "cremona/oracle.hpp"

#include <random>
#include <string>

#include "cremona/errors.hpp"
#include "cremona/gcd.hpp"
#include "cremona/modp.hpp"

namespace cremona {

namespace {

constexpr int kMaxRedrawsPerTrial = 32;

void validate_config(const OracleConfig& cfg) {
  if (cfg.prime_bits < 8 || cfg.prime_bits > 62) {
    fail(ErrorKind::invalid_argument,
         "prime bit-size must lie between 8 and 62, got " +
             std::to_string(cfg.prime_bits));
  }
  if (cfg.trials < 1) {
    fail(ErrorKind::invalid_argument,
         "trial count must be at least 1, got " + std::to_string(cfg.trials));
  }
}

uint64_t draw_prime(std::mt19937_64& rng, int bits) {
  const uint64_t lo = uint64_t{1} << (bits - 1);
  return modp::first_prime_at_least(lo + rng() % lo);
}

}  // namespace

GcdDegreeReport gcd_degree_report(const std::vector<Poly>& polys,
                                  const OracleConfig& cfg) {
  validate_config(cfg);
  if (polys.empty()) {
    fail(ErrorKind::empty_list, "gcd degree estimate needs at least one polynomial");
  }
  for (size_t i = 1; i < polys.size(); ++i) {
    if (!compatible(polys[0].context(), polys[i].context())) {
      fail(ErrorKind::context_mismatch,
           "gcd degree estimate requires one shared variable context");
    }
  }

  // Scale each input to primitive integer coefficients; this changes no
  // gcd degree and lets the restrictions work over Z.
  std::vector<Poly> prim;
  prim.reserve(polys.size());
  for (const auto& p : polys) {
    if (p.is_zero()) {
      fail(ErrorKind::zero_polynomial, "gcd degree estimate requires nonzero inputs");
    }
    prim.push_back(normalize_scalars(p));
  }

  const size_t nv = static_cast<size_t>(prim[0].num_vars());
  std::vector<int> degrees(prim.size());
  for (size_t i = 0; i < prim.size(); ++i) degrees[i] = prim[i].total_degree();

  GcdDegreeReport report;
  report.config = cfg;
  std::mt19937_64 rng(cfg.seed);
  for (int trial = 0; trial < cfg.trials; ++trial) {
    int attempt = 0;
    for (;; ++attempt) {
      if (attempt >= kMaxRedrawsPerTrial) {
        fail(ErrorKind::bad_reduction_exhausted,
             "no good (prime, line) draw in " + std::to_string(kMaxRedrawsPerTrial) +
                 " attempts");
      }
      uint64_t p = draw_prime(rng, cfg.prime_bits);
      std::vector<uint64_t> a(nv), b(nv);
      for (size_t j = 0; j < nv; ++j) {
        a[j] = rng() % p;
        b[j] = rng() % p;
      }
      // Every restriction must keep its total degree; otherwise the draw
      // is bad reduction (a leading form vanished on the line mod p) and
      // the lower bound argument breaks down.
      bool good = true;
      modp::DensePoly g;
      for (size_t i = 0; i < prim.size(); ++i) {
        modp::DensePoly r = modp::restrict_to_line(prim[i], a, b, p);
        if (modp::degree(r) != degrees[i]) {
          good = false;
          break;
        }
        g = (i == 0) ? std::move(r) : modp::gcd(std::move(g), std::move(r), p);
        if (i > 0 && modp::degree(g) == 0) break;
      }
      if (!good) {
        ++report.redraws;
        continue;
      }
      report.trial_degrees.push_back(modp::degree(g));
      report.primes.push_back(p);
      break;
    }
  }

  report.degree = report.trial_degrees[0];
  for (int d : report.trial_degrees) report.degree = std::min(report.degree, d);
  return report;
}

int gcd_degree_estimate(const std::vector<Poly>& polys, const OracleConfig& cfg) {
  return gcd_degree_report(polys, cfg).degree;
}

IdentityCheckReport identity_check_report(const RationalMap& f, const OracleConfig& cfg) {
  validate_config(cfg);

  // One joint scaling clears denominators without changing the projective
  // map the tuple describes.
  std::vector<Poly> comps = normalize_scalars_jointly(f.components());
  const size_t nc = comps.size();
  const int cross_degree = f.written_degree() + 1;

  IdentityCheckReport report;
  report.config = cfg;
  report.identity = true;
  report.false_accept_bound = 1.0;

  std::mt19937_64 rng(cfg.seed);
  for (int trial = 0; trial < cfg.trials && report.identity; ++trial) {
    int attempt = 0;
    for (;; ++attempt) {
      if (attempt >= kMaxRedrawsPerTrial) {
        fail(ErrorKind::bad_reduction_exhausted,
             "no informative point draw in " + std::to_string(kMaxRedrawsPerTrial) +
                 " attempts");
      }
      uint64_t p = draw_prime(rng, cfg.prime_bits);
      std::vector<uint64_t> point(nc);
      for (auto& c : point) c = rng() % p;

      std::vector<uint64_t> values(nc);
      bool any_nonzero = false;
      for (size_t i = 0; i < nc; ++i) {
        values[i] = comps[i].is_zero() ? 0 : modp::eval_at_point(comps[i], point, p);
        any_nonzero = any_nonzero || values[i] != 0;
      }
      if (!any_nonzero) {
        // The point lies on the common zero locus mod p; the cross-products
        // vanish vacuously there, so the draw carries no information.
        ++report.redraws;
        continue;
      }

      report.primes.push_back(p);
      for (size_t i = 0; i < nc && report.identity; ++i) {
        for (size_t j = i + 1; j < nc; ++j) {
          uint64_t lhs = modp::mul(values[i], point[j], p);
          uint64_t rhs = modp::mul(values[j], point[i], p);
          if (lhs != rhs) {
            report.identity = false;
            report.witness_point = point;
            report.witness_prime = p;
            report.false_accept_bound = 0.0;
            break;
          }
        }
      }
      if (report.identity) {
        double per_trial = static_cast<double>(cross_degree) / static_cast<double>(p);
        report.false_accept_bound *= per_trial < 1.0 ? per_trial : 1.0;
      }
      break;
    }
  }
  return report;
}

bool identity_check_modp(const RationalMap& f, const OracleConfig& cfg) {
  return identity_check_report(f, cfg).identity;
}

EmpiricalProfile empirical_degree_profile(const ParamWriting& w, int sample_count,
                                          const OracleConfig& cfg) {
  validate_config(cfg);
  if (sample_count < 0) {
    fail(ErrorKind::invalid_argument, "sample count must be nonnegative");
  }

  ParamWriting min = minimal_writing(w);
  EmpiricalProfile profile;
  profile.config = cfg;
  profile.Deg = family_Deg(w);

  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<long> numerator(-1000, 1000);
  std::uniform_int_distribution<long> denominator(1, 30);
  profile.samples.reserve(static_cast<size_t>(sample_count));
  for (int i = 0; i < sample_count; ++i) {
    Rational t0 = make_rational(numerator(rng), denominator(rng));
    SpecializedMap at = specialize(min, t0);
    if (at.degree > profile.Deg) {
      fail(ErrorKind::internal_invariant,
           "sampled degree " + std::to_string(at.degree) + " exceeds the family degree " +
               std::to_string(profile.Deg) + " at parameter " + to_string(t0));
    }
    profile.samples.push_back({t0, at.degree});
  }
  return profile;
}

}  // namespace cremona
