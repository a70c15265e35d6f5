#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cremona {

// An ordered list of variable names. Every polynomial carries a shared
// pointer to the context its exponent vectors are indexed against; mixing
// polynomials from different contexts is an error, not a silent coercion.
//
// Contexts are immutable once built and compared by their name lists, so
// two independently constructed projective(2) contexts are interchangeable.
class VariableContext {
 public:
  explicit VariableContext(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(static_cast<size_t>(i)); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<int> index_of(const std::string& name) const;
  bool has(const std::string& name) const { return index_of(name).has_value(); }

  bool same_names(const VariableContext& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

ContextPtr make_context(std::vector<std::string> names);

// Homogeneous coordinates x0..xn of projective n-space: n+1 variables.
ContextPtr projective(int n);

// Same, plus one family parameter appended after the coordinates.
ContextPtr projective_with_param(int n, const std::string& param = "t");

// ctx extended by one fresh variable (appended last). Throws if the name
// is already taken.
ContextPtr extend_context(const ContextPtr& ctx, const std::string& name);

inline bool compatible(const ContextPtr& a, const ContextPtr& b) {
  return a == b || (a && b && a->same_names(*b));
}

}  // namespace cremona
