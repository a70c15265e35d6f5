#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cremona/birmap.hpp"
#include "cremona/family.hpp"
#include "cremona/multipoly.hpp"
#include "cremona/rational.hpp"

namespace cremona {

// Randomized finite-field cross-checks for the exact kernel. The oracle is
// advisory for positive claims and authoritative only for refutations: a
// nonzero evaluation over F_p is a certificate, while agreement is
// probabilistic with an explicit error bound. All randomness flows from the
// seed in the configuration, so every report is bit-reproducible.

struct OracleConfig {
  int prime_bits = 31;  // primes are drawn from [2^(bits-1), 2^bits)
  int trials = 5;       // independent (prime, sample) draws per query
  uint64_t seed = 2026;
};

// --- gcd degree -----------------------------------------------------------
//
// Estimate the total degree of gcd(polys) by restricting every input to a
// random affine line over a random prime field and taking the univariate
// gcd degree; the minimum over trials is reported. Restriction can only
// overestimate the true common-factor degree (the reduction of the gcd
// divides every restricted input, and the full-degree check on the
// restrictions keeps its degree intact), so the estimate decreases toward
// the exact value as trials accumulate. A draw where any input loses
// degree on the line is bad reduction and is redrawn a bounded number of
// times.

struct GcdDegreeReport {
  int degree = 0;                  // min over trials
  std::vector<int> trial_degrees;  // one entry per trial
  std::vector<uint64_t> primes;    // prime used by each trial
  int redraws = 0;                 // bad-reduction redraws, summed over trials
  OracleConfig config;             // resolved configuration, echoed back
};

GcdDegreeReport gcd_degree_report(const std::vector<Poly>& polys,
                                  const OracleConfig& cfg = {});
int gcd_degree_estimate(const std::vector<Poly>& polys, const OracleConfig& cfg = {});

// --- projective identity --------------------------------------------------
//
// Test whether a map is the projective identity by evaluating the
// cross-products x_j*f_i - x_i*f_j at random points over random prime
// fields. Any nonzero evaluation refutes identity with certainty and is
// reported as a witness; if every trial vanishes, the verdict "identity"
// carries a false-accept probability bound (product over trials of
// (written degree + 1)/p). Points where all components vanish are
// uninformative and are redrawn.

struct IdentityCheckReport {
  bool identity = false;
  double false_accept_bound = 0.0;  // meaningful only when identity == true
  std::vector<uint64_t> primes;
  std::optional<std::vector<uint64_t>> witness_point;  // set on refutation
  std::optional<uint64_t> witness_prime;
  int redraws = 0;
  OracleConfig config;
};

IdentityCheckReport identity_check_report(const RationalMap& f,
                                          const OracleConfig& cfg = {});
bool identity_check_modp(const RationalMap& f, const OracleConfig& cfg = {});

// --- empirical degree profile ---------------------------------------------
//
// Degrees of the family's specializations at random rational parameter
// values: an empirical shadow of the degree stratification. Every sampled
// degree is checked against the family degree; a sample exceeding it would
// indicate a kernel bug and raises an internal-invariant error. Samples are
// taken through the minimal writing, so they are defined at every
// parameter value.

struct EmpiricalSample {
  Rational t0;
  int degree = 0;
};

struct EmpiricalProfile {
  int Deg = 0;  // exact family degree, for comparison
  std::vector<EmpiricalSample> samples;
  OracleConfig config;
};

EmpiricalProfile empirical_degree_profile(const ParamWriting& w, int sample_count,
                                          const OracleConfig& cfg = {});

}  // namespace cremona
