#include "cremona/rational.hpp"

#include <cctype>

#include "cremona/errors.hpp"

namespace cremona {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational rational_from_string(std::string_view s) {
  std::string_view rest = s;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  std::string_view num = rest;
  std::string_view den = "1";
  if (auto slash = rest.find('/'); slash != std::string_view::npos) {
    num = rest.substr(0, slash);
    den = rest.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    fail(ErrorKind::parse_error,
         "expected rational of the form 'a' or 'a/b', got '" + std::string(s) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) {
    fail(ErrorKind::parse_error, "zero denominator in '" + std::string(s) + "'");
  }
  if (negative) n = -n;
  return make_rational(n, d);
}

std::string to_string(const Rational& r) {
  std::string out = r.get_num().get_str();
  if (r.get_den() != 1) {
    out += '/';
    out += r.get_den().get_str();
  }
  return out;
}

}  // namespace cremona
