#include "locmult/ring.hpp"

#include <cctype>
#include <set>

#include "locmult/errors.hpp"
#include "locmult/monomial.hpp"

namespace locmult {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

}  // namespace

Ring::Ring(std::vector<std::string> variables) : variables_(std::move(variables)) {
  if (variables_.empty()) throw HypothesisError("a ring needs at least one variable");
  if (variables_.size() > kMaxVariables) throw ResourceCapError("too many variables (max 8)");
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (!is_identifier(v)) throw ParseError("invalid variable name '" + v + "'", 0);
    if (!seen.insert(v).second) throw ParseError("duplicate variable '" + v + "'", 0);
  }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return i;
  }
  return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> variables) {
  return std::make_shared<const Ring>(std::move(variables));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw RingMismatch("operands belong to different rings");
}

}  // namespace locmult
