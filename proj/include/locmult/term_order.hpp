#pragma once

#include "locmult/monomial.hpp"

namespace locmult {

enum class OrderKind {
  kGlobalDegRevLex,
  kLocalNegDegRevLex,
};

/// Monomial order with degree-reverse-lexicographic tie-break on the fixed
/// variable indexing. The local kind ranks lower total degree higher, so 1
/// is the largest monomial.
class TermOrder {
 public:
  constexpr explicit TermOrder(OrderKind kind) : kind_(kind) {}

  static constexpr TermOrder global() { return TermOrder(OrderKind::kGlobalDegRevLex); }
  static constexpr TermOrder local() { return TermOrder(OrderKind::kLocalNegDegRevLex); }

  OrderKind kind() const { return kind_; }
  bool is_local() const { return kind_ == OrderKind::kLocalNegDegRevLex; }

  /// Positive when a > b, negative when a < b, zero when equal.
  int compare(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) {
      const bool a_higher = a.degree() > b.degree();
      return (a_higher != is_local()) ? 1 : -1;
    }
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(TermOrder a, TermOrder b) { return a.kind_ == b.kind_; }

 private:
  OrderKind kind_;
};

}  // namespace locmult
