#include "cremona/quotient.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "cremona/errors.hpp"

namespace cremona {

namespace {

using Dense = std::vector<Rational>;

void trim(Dense& v) {
  while (!v.empty() && is_zero(v.back())) v.pop_back();
}

int deg(const Dense& v) { return static_cast<int>(v.size()) - 1; }

Dense mul(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

Dense sub(Dense a, const Dense& b) {
  if (b.size() > a.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Remainder of a divided by d; d need not be monic but must be nonzero.
Dense rem(Dense a, const Dense& d) {
  trim(a);
  while (deg(a) >= deg(d)) {
    Rational factor = a.back() / d.back();
    size_t shift = a.size() - d.size();
    for (size_t i = 0; i < d.size(); ++i) a[shift + i] -= factor * d[i];
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

// Monic gcd over Q, with a Bezout cofactor for the second argument:
// returns (g, s) with g monic, g = gcd(m, b), and s*b == g (mod m).
std::pair<Dense, Dense> half_extended_gcd(const Dense& m, const Dense& b) {
  Dense r0 = m, r1 = b;
  Dense s0 = {}, s1 = {Rational(1)};
  while (!r1.empty()) {
    // One full division step: r0 = q*r1 + r, tracked on s.
    Dense r = r0;
    Dense s = s0;
    while (deg(r) >= deg(r1)) {
      Rational factor = r.back() / r1.back();
      size_t shift = r.size() - r1.size();
      Dense q_term(shift + 1, Rational(0));
      q_term[shift] = factor;
      for (size_t i = 0; i < r1.size(); ++i) r[shift + i] -= factor * r1[i];
      trim(r);
      s = sub(std::move(s), mul(q_term, s1));
      if (r.empty()) break;
    }
    r0 = std::move(r1);
    s0 = std::move(s1);
    r1 = std::move(r);
    s1 = std::move(s);
  }
  if (r0.empty()) {
    fail(ErrorKind::internal_invariant, "quotient ring: gcd of zero polynomials");
  }
  Rational lead = r0.back();
  for (auto& c : r0) c /= lead;
  for (auto& c : s0) c /= lead;
  return {std::move(r0), std::move(s0)};
}

void require_same_modulus(const ModulusPtr& a, const ModulusPtr& b) {
  if (a == b) return;
  if (a->coeffs() == b->coeffs()) return;
  fail(ErrorKind::internal_invariant,
       "quotient ring: mixing scalars over different moduli");
}

ModulusPtr combined_modulus(const QuotientScalar& a, const QuotientScalar& b) {
  if (!a.modulus()) return b.modulus();
  if (!b.modulus()) return a.modulus();
  require_same_modulus(a.modulus(), b.modulus());
  return a.modulus();
}

}  // namespace

QuotientModulus::QuotientModulus(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim(coeffs_);
  if (deg(coeffs_) < 1) {
    fail(ErrorKind::invalid_argument, "quotient modulus must have degree >= 1");
  }
  Rational lead = coeffs_.back();
  for (auto& c : coeffs_) c /= lead;
}

ModulusPtr make_modulus(const MultiPoly<Rational>& p) {
  if (p.context()->size() != 1) {
    fail(ErrorKind::invalid_argument,
         "make_modulus: expected a polynomial on a one-variable context");
  }
  if (p.is_zero() || p.total_degree() < 1) {
    fail(ErrorKind::invalid_argument, "make_modulus: modulus must be nonconstant");
  }
  Dense coeffs(static_cast<size_t>(p.total_degree()) + 1, Rational(0));
  for (const auto& [m, c] : p.terms()) coeffs[static_cast<size_t>(m[0])] = c;
  return std::make_shared<const QuotientModulus>(std::move(coeffs));
}

MultiPoly<Rational> modulus_poly(const QuotientModulus& m, const ContextPtr& ctx) {
  if (ctx->size() != 1) {
    fail(ErrorKind::invalid_argument,
         "modulus_poly: expected a one-variable context");
  }
  MultiPoly<Rational> acc = MultiPoly<Rational>::zero(ctx);
  for (size_t k = 0; k < m.coeffs().size(); ++k) {
    if (is_zero(m.coeffs()[k])) continue;
    acc = acc + MultiPoly<Rational>::monomial(ctx, {static_cast<int32_t>(k)},
                                              m.coeffs()[k]);
  }
  return acc;
}

QuotientScalar::QuotientScalar(ModulusPtr m, std::vector<Rational> coeffs)
    : modulus_(std::move(m)), coeffs_(std::move(coeffs)) {}

QuotientScalar::QuotientScalar(int value) : QuotientScalar(Rational(value)) {}

QuotientScalar::QuotientScalar(const Rational& value) {
  if (!cremona::is_zero(value)) coeffs_.push_back(value);
}

QuotientScalar QuotientScalar::constant(ModulusPtr m, const Rational& value) {
  Dense coeffs;
  if (!cremona::is_zero(value)) coeffs.push_back(value);
  return QuotientScalar(std::move(m), std::move(coeffs));
}

QuotientScalar QuotientScalar::generator(ModulusPtr m) {
  return from_coeffs(std::move(m), {Rational(0), Rational(1)});
}

QuotientScalar QuotientScalar::from_coeffs(ModulusPtr m, std::vector<Rational> coeffs) {
  if (!m) fail(ErrorKind::internal_invariant, "from_coeffs: modulus required");
  trim(coeffs);
  if (deg(coeffs) >= m->degree()) coeffs = rem(std::move(coeffs), m->coeffs());
  return QuotientScalar(std::move(m), std::move(coeffs));
}

QuotientScalar operator+(const QuotientScalar& a, const QuotientScalar& b) {
  ModulusPtr m = combined_modulus(a, b);
  Dense out = a.coeffs_;
  if (b.coeffs_.size() > out.size()) out.resize(b.coeffs_.size(), Rational(0));
  for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  trim(out);
  return QuotientScalar(std::move(m), std::move(out));
}

QuotientScalar operator-(const QuotientScalar& a, const QuotientScalar& b) {
  return a + (-b);
}

QuotientScalar operator*(const QuotientScalar& a, const QuotientScalar& b) {
  ModulusPtr m = combined_modulus(a, b);
  Dense out = mul(a.coeffs_, b.coeffs_);
  if (m && deg(out) >= m->degree()) out = rem(std::move(out), m->coeffs());
  return QuotientScalar(std::move(m), std::move(out));
}

QuotientScalar operator/(const QuotientScalar& a, const QuotientScalar& b) {
  if (b.is_zero()) {
    fail(ErrorKind::internal_invariant, "quotient ring: division by zero");
  }
  ModulusPtr m = combined_modulus(a, b);
  if (!m) {
    return QuotientScalar(a.coeffs_.empty() ? Rational(0)
                                            : a.coeffs_[0] / b.coeffs_[0]);
  }
  auto [g, s] = half_extended_gcd(m->coeffs(), b.coeffs_);
  if (deg(g) > 0) {
    if (deg(g) >= m->degree()) {
      fail(ErrorKind::internal_invariant,
           "quotient ring: stored scalar is zero modulo the whole modulus");
    }
    throw ModulusSplit{m, std::move(g)};
  }
  return a * QuotientScalar::from_coeffs(m, std::move(s));
}

QuotientScalar QuotientScalar::operator-() const {
  Dense out = coeffs_;
  for (auto& c : out) c = -c;
  return QuotientScalar(modulus_, std::move(out));
}

bool operator==(const QuotientScalar& a, const QuotientScalar& b) {
  if (a.modulus_ && b.modulus_) require_same_modulus(a.modulus_, b.modulus_);
  return a.coeffs_ == b.coeffs_;
}

std::string QuotientScalar::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (cremona::is_zero(coeffs_[k])) continue;
    if (!first) os << " + ";
    os << cremona::to_string(coeffs_[k]);
    if (k >= 1) os << "*" << var;
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

void certify_unit(const QuotientScalar& c) {
  if (c.is_zero()) {
    fail(ErrorKind::internal_invariant,
         "certify_unit called on a zero scalar (kernel stores no zeros)");
  }
  if (!c.modulus()) return;
  auto [g, s] = half_extended_gcd(c.modulus()->coeffs(), c.coeffs());
  (void)s;
  if (deg(g) == 0) return;
  if (deg(g) >= c.modulus()->degree()) {
    fail(ErrorKind::internal_invariant,
         "quotient ring: stored scalar is zero modulo the whole modulus");
  }
  throw ModulusSplit{c.modulus(), std::move(g)};
}

}  // namespace cremona
