#include "cremona/modp.hpp"

#include <algorithm>

#include "cremona/errors.hpp"

namespace cremona {
namespace modp {

uint64_t pow(uint64_t base, uint64_t exp, uint64_t p) {
  uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = mul(result, base, p);
    base = mul(base, base, p);
    exp >>= 1;
  }
  return result;
}

uint64_t inv(uint64_t a, uint64_t p) {
  a %= p;
  if (a == 0) fail(ErrorKind::internal_invariant, "inverse of 0 mod p");
  return pow(a, p - 2, p);  // p is prime throughout this library
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set decides primality for every 64-bit integer.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mul(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

uint64_t first_prime_at_least(uint64_t n) {
  if (n <= 2) return 2;
  if ((n & 1) == 0) ++n;
  while (!is_prime_u64(n)) n += 2;
  return n;
}

uint64_t reduce(const Integer& z, uint64_t p) {
  // mpz_fdiv_ui returns the non-negative remainder of |floor division|.
  return mpz_fdiv_ui(z.get_mpz_t(), p);
}

std::optional<uint64_t> reduce(const Rational& r, uint64_t p) {
  uint64_t den = reduce(Integer(r.get_den()), p);
  if (den == 0) return std::nullopt;
  uint64_t num = reduce(Integer(r.get_num()), p);
  return mul(num, inv(den, p), p);
}

void trim(DensePoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

DensePoly mul(const DensePoly& f, const DensePoly& g, uint64_t p) {
  if (f.empty() || g.empty()) return {};
  DensePoly out(f.size() + g.size() - 1, 0);
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (size_t j = 0; j < g.size(); ++j) {
      out[i + j] = add(out[i + j], mul(f[i], g[j], p), p);
    }
  }
  trim(out);
  return out;
}

DensePoly add(const DensePoly& f, const DensePoly& g, uint64_t p) {
  DensePoly out(std::max(f.size(), g.size()), 0);
  for (size_t i = 0; i < out.size(); ++i) {
    uint64_t a = i < f.size() ? f[i] : 0;
    uint64_t b = i < g.size() ? g[i] : 0;
    out[i] = add(a, b, p);
  }
  trim(out);
  return out;
}

DensePoly sub(const DensePoly& f, const DensePoly& g, uint64_t p) {
  DensePoly out(std::max(f.size(), g.size()), 0);
  for (size_t i = 0; i < out.size(); ++i) {
    uint64_t a = i < f.size() ? f[i] : 0;
    uint64_t b = i < g.size() ? g[i] : 0;
    out[i] = sub(a, b, p);
  }
  trim(out);
  return out;
}

DensePoly scale(const DensePoly& f, uint64_t c, uint64_t p) {
  c %= p;
  if (c == 0) return {};
  DensePoly out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[i] = mul(f[i], c, p);
  return out;
}

DensePoly rem(const DensePoly& f, const DensePoly& g, uint64_t p) {
  if (g.empty()) fail(ErrorKind::internal_invariant, "remainder by zero polynomial");
  DensePoly r = f;
  uint64_t lg_inv = inv(g.back(), p);
  while (r.size() >= g.size()) {
    uint64_t q = mul(r.back(), lg_inv, p);
    size_t shift = r.size() - g.size();
    for (size_t i = 0; i < g.size(); ++i) {
      r[shift + i] = sub(r[shift + i], mul(q, g[i], p), p);
    }
    trim(r);
    if (r.empty()) break;
  }
  return r;
}

DensePoly quotient(const DensePoly& f, const DensePoly& g, uint64_t p) {
  if (g.empty()) fail(ErrorKind::internal_invariant, "quotient by zero polynomial");
  if (f.size() < g.size()) return {};
  DensePoly r = f;
  DensePoly q(f.size() - g.size() + 1, 0);
  uint64_t lg_inv = inv(g.back(), p);
  while (r.size() >= g.size()) {
    uint64_t c = mul(r.back(), lg_inv, p);
    size_t shift = r.size() - g.size();
    q[shift] = c;
    for (size_t i = 0; i < g.size(); ++i) {
      r[shift + i] = sub(r[shift + i], mul(c, g[i], p), p);
    }
    trim(r);
    if (r.empty()) break;
  }
  trim(q);
  return q;
}

DensePoly powmod(const DensePoly& base, uint64_t exp, const DensePoly& modulus,
                 uint64_t p) {
  if (degree(modulus) < 1) {
    fail(ErrorKind::internal_invariant, "powmod needs a nonconstant modulus");
  }
  DensePoly result{1};
  DensePoly b = rem(base, modulus, p);
  while (exp > 0) {
    if (exp & 1) result = rem(mul(result, b, p), modulus, p);
    exp >>= 1;
    if (exp > 0) b = rem(mul(b, b, p), modulus, p);
  }
  return result;
}

DensePoly gcd(DensePoly f, DensePoly g, uint64_t p) {
  trim(f);
  trim(g);
  while (!g.empty()) {
    DensePoly r = rem(f, g, p);
    f = std::move(g);
    g = std::move(r);
  }
  if (!f.empty()) f = scale(f, inv(f.back(), p), p);
  return f;
}

DensePoly derivative(const DensePoly& f, uint64_t p) {
  if (f.size() <= 1) return {};
  DensePoly out(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) out[i - 1] = mul(f[i], i % p, p);
  trim(out);
  return out;
}

uint64_t eval(const DensePoly& f, uint64_t x, uint64_t p) {
  uint64_t acc = 0;
  for (size_t i = f.size(); i-- > 0;) acc = add(mul(acc, x, p), f[i], p);
  return acc;
}

namespace {

uint64_t integer_coeff_modp(const Rational& c, uint64_t p) {
  if (c.get_den() != 1) {
    fail(ErrorKind::internal_invariant,
         "mod-p line restriction expects integer coefficients");
  }
  return reduce(Integer(c.get_num()), p);
}

}  // namespace

DensePoly restrict_to_line(const MultiPoly<Rational>& f, const std::vector<uint64_t>& a,
                           const std::vector<uint64_t>& b, uint64_t p) {
  const size_t nv = static_cast<size_t>(f.num_vars());
  if (a.size() != nv || b.size() != nv) {
    fail(ErrorKind::internal_invariant, "line coefficient count mismatch");
  }
  // powers[v][e] = (a_v + b_v*u)^e as a dense polynomial in u.
  std::vector<std::vector<DensePoly>> powers(nv);
  for (size_t v = 0; v < nv; ++v) powers[v].push_back(DensePoly{1 % p});
  DensePoly acc;
  for (const auto& [m, c] : f.terms()) {
    DensePoly term{integer_coeff_modp(c, p)};
    trim(term);
    for (size_t v = 0; v < nv && !term.empty(); ++v) {
      int e = m[v];
      if (e == 0) continue;
      auto& cache = powers[v];
      while (static_cast<int>(cache.size()) <= e) {
        DensePoly line{a[v] % p, b[v] % p};
        trim(line);
        cache.push_back(mul(cache.back(), line, p));
      }
      term = mul(term, cache[static_cast<size_t>(e)], p);
    }
    acc = add(acc, term, p);
  }
  return acc;
}

uint64_t eval_at_point(const MultiPoly<Rational>& f, const std::vector<uint64_t>& point,
                       uint64_t p) {
  const size_t nv = static_cast<size_t>(f.num_vars());
  if (point.size() != nv) fail(ErrorKind::internal_invariant, "point size mismatch");
  std::vector<std::vector<uint64_t>> powers(nv, std::vector<uint64_t>{1 % p});
  uint64_t acc = 0;
  for (const auto& [m, c] : f.terms()) {
    uint64_t term = integer_coeff_modp(c, p);
    for (size_t v = 0; v < nv; ++v) {
      int e = m[v];
      if (e == 0) continue;
      auto& cache = powers[v];
      while (static_cast<int>(cache.size()) <= e) cache.push_back(mul(cache.back(), point[v] % p, p));
      term = mul(term, cache[static_cast<size_t>(e)], p);
    }
    acc = add(acc, term, p);
  }
  return acc;
}

}  // namespace modp
}  // namespace cremona
