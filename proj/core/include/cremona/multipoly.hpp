#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cremona/context.hpp"
#include "cremona/errors.hpp"
#include "cremona/rational.hpp"

namespace cremona {

// Exponent tuple, one entry per context variable.
using Monomial = std::vector<int32_t>;

inline int monomial_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0);
}

// Graded lexicographic order: compare total degree first, then exponents
// left to right (so x0 beats x1 at equal degree). std::map sorted with this
// comparator keeps the leading term at rbegin().
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = monomial_degree(a);
    int db = monomial_degree(b);
    if (da != db) return da < db;
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
  }
};

// Pure lexicographic order, used only for the sign convention of primitive
// normalization (see gcd.hpp).
struct LexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
  }
};

inline constexpr int degree_of_zero = -1;  // stands in for "-infinity"

// Field operations the polynomial kernel needs from a scalar type.
// Arithmetic itself goes through the scalar's own operators (+ - * / == unary-).
template <class S>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& r) { return sgn(r) == 0; }
  static std::string str(const Rational& r) { return to_string(r); }
};

// Sparse multivariate polynomial over a field S, exponents indexed by a
// shared VariableContext. Immutable in spirit: every operation returns a
// fresh value, and no stored coefficient is ever zero.
template <class S>
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, S, GrlexLess>;
  using Traits = FieldTraits<S>;

  static MultiPoly zero(ContextPtr ctx) { return MultiPoly(std::move(ctx), TermMap{}); }

  static MultiPoly constant(ContextPtr ctx, S value) {
    TermMap terms;
    if (!Traits::is_zero(value)) {
      terms.emplace(Monomial(static_cast<size_t>(ctx->size()), 0), std::move(value));
    }
    return MultiPoly(std::move(ctx), std::move(terms));
  }

  static MultiPoly variable(ContextPtr ctx, int index) {
    if (index < 0 || index >= ctx->size()) {
      fail(ErrorKind::context_mismatch,
           "variable index " + std::to_string(index) + " out of range");
    }
    Monomial m(static_cast<size_t>(ctx->size()), 0);
    m[static_cast<size_t>(index)] = 1;
    TermMap terms;
    terms.emplace(std::move(m), Traits::one());
    return MultiPoly(std::move(ctx), std::move(terms));
  }

  static MultiPoly variable(const ContextPtr& ctx, const std::string& name) {
    auto idx = ctx->index_of(name);
    if (!idx) fail(ErrorKind::context_mismatch, "no variable named '" + name + "'");
    return variable(ctx, *idx);
  }

  static MultiPoly monomial(ContextPtr ctx, Monomial m, S coeff) {
    check_monomial(*ctx, m);
    TermMap terms;
    if (!Traits::is_zero(coeff)) terms.emplace(std::move(m), std::move(coeff));
    return MultiPoly(std::move(ctx), std::move(terms));
  }

  static MultiPoly from_terms(ContextPtr ctx, TermMap terms) {
    for (auto it = terms.begin(); it != terms.end();) {
      check_monomial(*ctx, it->first);
      if (Traits::is_zero(it->second)) {
        it = terms.erase(it);
      } else {
        ++it;
      }
    }
    return MultiPoly(std::move(ctx), std::move(terms));
  }

  const ContextPtr& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  int num_vars() const { return ctx_->size(); }
  size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0);
  }

  S constant_value() const {
    if (terms_.empty()) return Traits::zero();
    if (!is_constant()) {
      fail(ErrorKind::internal_invariant, "constant_value on non-constant polynomial");
    }
    return terms_.begin()->second;
  }

  const Monomial& leading_monomial() const {
    require_nonzero("leading_monomial");
    return terms_.rbegin()->first;
  }

  const S& leading_coeff() const {
    require_nonzero("leading_coeff");
    return terms_.rbegin()->second;
  }

  // Leading coefficient under plain lex order (sign convention helper).
  const S& lex_leading_coeff() const {
    require_nonzero("lex_leading_coeff");
    const Monomial* best = nullptr;
    const S* coeff = nullptr;
    LexLess less;
    for (const auto& [m, c] : terms_) {
      if (!best || less(*best, m)) {
        best = &m;
        coeff = &c;
      }
    }
    return *coeff;
  }

  int total_degree() const {
    if (terms_.empty()) return degree_of_zero;
    return monomial_degree(terms_.rbegin()->first);
  }

  // Degree counting only the exponents of the listed variables.
  int total_degree(const std::vector<int>& vars) const {
    if (terms_.empty()) return degree_of_zero;
    int best = 0;
    for (const auto& [m, c] : terms_) {
      int d = 0;
      for (int v : vars) d += m[static_cast<size_t>(v)];
      if (d > best) best = d;
    }
    return best;
  }

  int degree_in(int var) const {
    if (terms_.empty()) fail(ErrorKind::zero_polynomial, "degree_in of the zero polynomial");
    int best = 0;
    for (const auto& [m, c] : terms_) best = std::max(best, static_cast<int>(m[static_cast<size_t>(var)]));
    return best;
  }

  bool is_homogeneous(const std::vector<int>& vars) const {
    if (terms_.empty()) return true;
    std::optional<int> common;
    for (const auto& [m, c] : terms_) {
      int d = 0;
      for (int v : vars) d += m[static_cast<size_t>(v)];
      if (!common) {
        common = d;
      } else if (*common != d) {
        return false;
      }
    }
    return true;
  }

  bool is_homogeneous() const { return is_homogeneous(all_variable_indices()); }

  std::vector<int> all_variable_indices() const {
    std::vector<int> vars(static_cast<size_t>(ctx_->size()));
    std::iota(vars.begin(), vars.end(), 0);
    return vars;
  }

  bool depends_on(int var) const {
    for (const auto& [m, c] : terms_) {
      if (m[static_cast<size_t>(var)] > 0) return true;
    }
    return false;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (!compatible(a.ctx_, b.ctx_)) return false;
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    check_contexts(a, b, "+");
    TermMap out = a.terms_;
    for (const auto& [m, c] : b.terms_) add_term(out, m, c);
    return MultiPoly(a.ctx_, std::move(out));
  }

  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    check_contexts(a, b, "-");
    TermMap out = a.terms_;
    for (const auto& [m, c] : b.terms_) add_term(out, m, -c);
    return MultiPoly(a.ctx_, std::move(out));
  }

  MultiPoly operator-() const {
    TermMap out;
    for (const auto& [m, c] : terms_) out.emplace(m, -c);
    return MultiPoly(ctx_, std::move(out));
  }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    check_contexts(a, b, "*");
    if (a.is_zero() || b.is_zero()) return zero(a.ctx_);
    // Iterate over the smaller factor's terms in the outer loop.
    const MultiPoly& small = a.terms_.size() <= b.terms_.size() ? a : b;
    const MultiPoly& large = a.terms_.size() <= b.terms_.size() ? b : a;
    TermMap out;
    const size_t nv = small.terms_.begin()->first.size();
    Monomial prod(nv);
    for (const auto& [ms, cs] : small.terms_) {
      for (const auto& [ml, cl] : large.terms_) {
        for (size_t i = 0; i < nv; ++i) prod[i] = ms[i] + ml[i];
        add_term(out, prod, cs * cl);
      }
    }
    return MultiPoly(a.ctx_, std::move(out));
  }

  friend MultiPoly operator*(const S& c, const MultiPoly& p) {
    if (Traits::is_zero(c)) return zero(p.ctx_);
    TermMap out;
    for (const auto& [m, pc] : p.terms_) {
      S v = c * pc;
      if (!Traits::is_zero(v)) out.emplace(m, std::move(v));
    }
    return MultiPoly(p.ctx_, std::move(out));
  }

  friend MultiPoly operator*(const MultiPoly& p, const S& c) { return c * p; }

  MultiPoly pow(int e) const {
    if (e < 0) fail(ErrorKind::internal_invariant, "negative polynomial power");
    MultiPoly result = constant(ctx_, Traits::one());
    MultiPoly base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

  MultiPoly derivative(int var) const {
    const size_t v = static_cast<size_t>(var);
    TermMap out;
    for (const auto& [m, c] : terms_) {
      if (m[v] == 0) continue;
      Monomial dm = m;
      S dc = c * S(dm[v]);
      --dm[v];
      if (!Traits::is_zero(dc)) out.emplace(std::move(dm), std::move(dc));
    }
    return MultiPoly(ctx_, std::move(out));
  }

  S evaluate(const std::vector<S>& point) const {
    if (static_cast<int>(point.size()) != ctx_->size()) {
      fail(ErrorKind::context_mismatch, "evaluate: wrong number of coordinates");
    }
    // Per-variable power cache keyed by exponent.
    std::vector<std::vector<S>> powers(point.size());
    for (size_t v = 0; v < point.size(); ++v) powers[v].push_back(Traits::one());
    S acc = Traits::zero();
    for (const auto& [m, c] : terms_) {
      S term = c;
      for (size_t v = 0; v < point.size(); ++v) {
        int e = m[v];
        if (e == 0) continue;
        auto& cache = powers[v];
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * point[v]);
        term = term * cache[static_cast<size_t>(e)];
      }
      acc = acc + term;
    }
    return acc;
  }

  // Simultaneous substitution. images[i], when present, replaces variable i;
  // absent entries map the variable to its namesake in the target context
  // (which must exist). All images must live in the target context.
  MultiPoly substitute(const std::vector<std::optional<MultiPoly>>& images,
                       const ContextPtr& target) const {
    if (static_cast<int>(images.size()) != ctx_->size()) {
      fail(ErrorKind::context_mismatch, "substitute: one image slot per variable required");
    }
    std::vector<MultiPoly> resolved;
    resolved.reserve(images.size());
    for (size_t i = 0; i < images.size(); ++i) {
      if (images[i]) {
        if (!compatible(images[i]->context(), target)) {
          fail(ErrorKind::context_mismatch, "substitute: image not in target context");
        }
        resolved.push_back(*images[i]);
      } else {
        auto idx = target->index_of(ctx_->name(static_cast<int>(i)));
        if (!idx) {
          fail(ErrorKind::context_mismatch,
               "substitute: unbound variable '" + ctx_->name(static_cast<int>(i)) +
                   "' missing from target context");
        }
        resolved.push_back(variable(target, *idx));
      }
    }
    std::vector<std::vector<MultiPoly>> powers(resolved.size());
    MultiPoly acc = zero(target);
    for (const auto& [m, c] : terms_) {
      MultiPoly term = constant(target, c);
      for (size_t v = 0; v < resolved.size(); ++v) {
        int e = m[v];
        if (e == 0) continue;
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(constant(target, Traits::one()));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * resolved[v]);
        term = term * cache[static_cast<size_t>(e)];
      }
      acc = acc + term;
    }
    return acc;
  }

  // Substitute one variable (by name) and keep everything else fixed.
  MultiPoly substitute_one(const std::string& name, const MultiPoly& image,
                           const ContextPtr& target) const {
    std::vector<std::optional<MultiPoly>> images(static_cast<size_t>(ctx_->size()));
    auto idx = ctx_->index_of(name);
    if (!idx) fail(ErrorKind::context_mismatch, "no variable named '" + name + "'");
    images[static_cast<size_t>(*idx)] = image;
    return substitute(images, target);
  }

  // Re-express in a context containing (at least) the same variable names.
  MultiPoly embedded_in(const ContextPtr& target) const {
    std::vector<int> where(static_cast<size_t>(ctx_->size()));
    for (int i = 0; i < ctx_->size(); ++i) {
      auto idx = target->index_of(ctx_->name(i));
      if (!idx) {
        fail(ErrorKind::context_mismatch,
             "embedded_in: target lacks variable '" + ctx_->name(i) + "'");
      }
      where[static_cast<size_t>(i)] = *idx;
    }
    TermMap out;
    for (const auto& [m, c] : terms_) {
      Monomial big(static_cast<size_t>(target->size()), 0);
      for (size_t i = 0; i < m.size(); ++i) big[static_cast<size_t>(where[i])] = m[i];
      out.emplace(std::move(big), c);
    }
    return MultiPoly(target, std::move(out));
  }

  // Project onto a smaller context; every term must avoid the dropped
  // variables (i.e. the polynomial genuinely lives in the target).
  MultiPoly restricted_to(const ContextPtr& target) const {
    std::vector<std::optional<int>> where(static_cast<size_t>(ctx_->size()));
    for (int i = 0; i < ctx_->size(); ++i) where[static_cast<size_t>(i)] = target->index_of(ctx_->name(i));
    TermMap out;
    for (const auto& [m, c] : terms_) {
      Monomial small(static_cast<size_t>(target->size()), 0);
      for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!where[i]) {
          fail(ErrorKind::context_mismatch,
               "restricted_to: polynomial depends on dropped variable '" +
                   ctx_->name(static_cast<int>(i)) + "'");
        }
        small[static_cast<size_t>(*where[i])] = m[i];
      }
      out.emplace(std::move(small), c);
    }
    return MultiPoly(target, std::move(out));
  }

 private:
  MultiPoly(ContextPtr ctx, TermMap terms) : ctx_(std::move(ctx)), terms_(std::move(terms)) {}

  static void check_monomial(const VariableContext& ctx, const Monomial& m) {
    if (static_cast<int>(m.size()) != ctx.size()) {
      fail(ErrorKind::context_mismatch, "monomial length does not match context");
    }
    for (int32_t e : m) {
      if (e < 0) fail(ErrorKind::internal_invariant, "negative exponent");
    }
  }

  static void check_contexts(const MultiPoly& a, const MultiPoly& b, const char* op) {
    if (!compatible(a.ctx_, b.ctx_)) {
      fail(ErrorKind::context_mismatch,
           std::string("operands of '") + op + "' come from different variable contexts");
    }
  }

  static void add_term(TermMap& map, const Monomial& m, S c) {
    if (Traits::is_zero(c)) return;
    auto [it, inserted] = map.try_emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (Traits::is_zero(it->second)) map.erase(it);
    }
  }

  void require_nonzero(const char* what) const {
    if (terms_.empty()) {
      fail(ErrorKind::zero_polynomial, std::string(what) + " of the zero polynomial");
    }
  }

  ContextPtr ctx_;
  TermMap terms_;
};

using Poly = MultiPoly<Rational>;

}  // namespace cremona
