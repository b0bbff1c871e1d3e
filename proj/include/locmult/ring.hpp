#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace locmult {

/// Ordered list of variable names. Two rings are compatible iff their
/// name lists are identical.
class Ring {
 public:
  explicit Ring(std::vector<std::string> variables);

  std::size_t size() const { return variables_.size(); }
  const std::string& name(std::size_t i) const { return variables_[i]; }
  const std::vector<std::string>& variables() const { return variables_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.variables_ == b.variables_; }

 private:
  std::vector<std::string> variables_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> variables);

bool same_ring(const RingPtr& a, const RingPtr& b);

/// Throws RingMismatch unless same_ring(a, b).
void require_same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace locmult
