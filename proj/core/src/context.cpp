#include "cremona/context.hpp"

#include <cctype>
#include <set>

#include "cremona/errors.hpp"

namespace cremona {

namespace {

bool valid_name(const std::string& name) {
  if (name.empty()) return false;
  if (!std::islower(static_cast<unsigned char>(name.front()))) return false;
  for (char c : name) {
    unsigned char u = static_cast<unsigned char>(c);
    if (!std::islower(u) && !std::isdigit(u)) return false;
  }
  return true;
}

}  // namespace

VariableContext::VariableContext(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) {
    fail(ErrorKind::context_mismatch, "a variable context needs at least one variable");
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_name(n)) {
      fail(ErrorKind::parse_error,
           "invalid variable name '" + n + "' (want [a-z][a-z0-9]*)");
    }
    if (!seen.insert(n).second) {
      fail(ErrorKind::context_mismatch, "duplicate variable name '" + n + "'");
    }
  }
}

std::optional<int> VariableContext::index_of(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

ContextPtr make_context(std::vector<std::string> names) {
  return std::make_shared<const VariableContext>(std::move(names));
}

ContextPtr projective(int n) {
  if (n < 1) {
    fail(ErrorKind::context_mismatch, "projective space needs dimension >= 1");
  }
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return make_context(std::move(names));
}

ContextPtr projective_with_param(int n, const std::string& param) {
  std::vector<std::string> names = projective(n)->names();
  names.push_back(param);
  return make_context(std::move(names));
}

ContextPtr extend_context(const ContextPtr& ctx, const std::string& name) {
  if (!ctx) fail(ErrorKind::internal_invariant, "extend_context: null context");
  if (ctx->has(name)) {
    fail(ErrorKind::context_mismatch, "variable '" + name + "' already present");
  }
  std::vector<std::string> names = ctx->names();
  names.push_back(name);
  return make_context(std::move(names));
}

}  // namespace cremona
