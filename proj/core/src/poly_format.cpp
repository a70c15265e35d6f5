#include "cremona/poly_format.hpp"

#include <cctype>
#include <vector>

#include "cremona/errors.hpp"

namespace cremona {

namespace {

struct Lexer {
  std::string_view text;
  size_t pos = 0;
  size_t token_start = 0;  // start of the most recent number/identifier

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool done() {
    skip_space();
    return pos >= text.size();
  }

  char peek() {
    skip_space();
    return pos < text.size() ? text[pos] : '\0';
  }

  [[noreturn]] void error_at(size_t where, const std::string& what) const {
    fail(ErrorKind::parse_error,
         what + " at column " + std::to_string(where + 1) + " of '" + std::string(text) + "'");
  }

  [[noreturn]] void error(const std::string& what) const { error_at(pos, what); }

  bool consume(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  Integer integer() {
    skip_space();
    token_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == token_start) error("expected a number");
    return Integer(std::string(text.substr(token_start, pos - token_start)), 10);
  }

  std::string identifier() {
    skip_space();
    token_start = pos;
    if (pos < text.size() && std::islower(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      while (pos < text.size() &&
             (std::islower(static_cast<unsigned char>(text[pos])) ||
              std::isdigit(static_cast<unsigned char>(text[pos])))) {
        ++pos;
      }
    }
    if (pos == token_start) error("expected a variable name");
    return std::string(text.substr(token_start, pos - token_start));
  }
};

}  // namespace

MultiPoly<Rational> parse_poly(std::string_view text, const ContextPtr& ctx) {
  Lexer lex{text};
  MultiPoly<Rational> acc = MultiPoly<Rational>::zero(ctx);
  if (lex.done()) lex.error("empty polynomial");

  bool first = true;
  while (!lex.done()) {
    bool negative = false;
    if (lex.consume('-')) {
      negative = true;
    } else if (lex.consume('+')) {
      // explicit plus
    } else if (!first) {
      lex.error("expected '+' or '-' between terms");
    }
    if (lex.done()) lex.error("dangling sign");
    first = false;

    // One term: product of `*`-joined factors.
    Rational coeff(1);
    Monomial mono(static_cast<size_t>(ctx->size()), 0);
    bool expect_factor = true;
    while (expect_factor) {
      char c = lex.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        Integer num = lex.integer();
        Integer den(1);
        if (lex.consume('/')) den = lex.integer();
        if (den == 0) lex.error("zero denominator");
        coeff *= make_rational(num, den);
      } else {
        std::string name = lex.identifier();
        auto idx = ctx->index_of(name);
        if (!idx) lex.error_at(lex.token_start, "unknown variable '" + name + "'");
        long exp = 1;
        if (lex.consume('^')) {
          Integer e = lex.integer();
          if (e > 64) lex.error("exponent too large");
          exp = e.get_si();
        }
        mono[static_cast<size_t>(*idx)] += static_cast<int32_t>(exp);
      }
      expect_factor = lex.consume('*');
    }
    if (negative) coeff = -coeff;
    acc = acc + MultiPoly<Rational>::monomial(ctx, std::move(mono), std::move(coeff));
  }
  return acc;
}

std::string format_poly(const MultiPoly<Rational>& p) {
  if (p.is_zero()) return "0";
  const auto& ctx = *p.context();
  std::string out;
  // Reverse iteration prints in descending graded-lex order.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [mono, coeff] = *it;
    bool negative = sgn(coeff) < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    Rational abs_coeff = abs(coeff);
    std::vector<std::string> factors;
    if (monomial_degree(mono) == 0 || !is_one(abs_coeff)) {
      factors.push_back(to_string(abs_coeff));
    }
    for (size_t v = 0; v < mono.size(); ++v) {
      if (mono[v] == 0) continue;
      std::string f = ctx.name(static_cast<int>(v));
      if (mono[v] > 1) f += "^" + std::to_string(mono[v]);
      factors.push_back(std::move(f));
    }
    for (size_t i = 0; i < factors.size(); ++i) {
      if (i) out += "*";
      out += factors[i];
    }
  }
  return out;
}

}  // namespace cremona
