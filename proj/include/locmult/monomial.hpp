#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>

namespace locmult {

inline constexpr std::size_t kMaxVariables = 8;

/// Exponent vector x^a with a fixed number of variables. Stored inline so
/// monomial arithmetic in the reduction loops never allocates.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exponents);
  explicit Monomial(std::span<const unsigned> exponents);

  static Monomial unit(std::size_t nvars, std::size_t var, unsigned power = 1);

  std::size_t size() const { return size_; }
  unsigned operator[](std::size_t i) const { return exp_[i]; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, unsigned value);

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < size_; ++i) {
      if (exp_[i] > other.exp_[i]) return false;
    }
    return true;
  }

  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < size_; ++i) {
      if (exp_[i] != 0 && other.exp_[i] != 0) return false;
    }
    return true;
  }

  /// Index of the variable when this is a pure power x_i^k (k >= 1).
  int pure_power_variable() const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial pow(unsigned k) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.size_ == b.size_ && a.exp_ == b.exp_;
  }

  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVariables> exp_{};
  std::uint32_t degree_ = 0;
  std::uint8_t size_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Componentwise ("lexicographic on the raw vector") order; only for
/// containers that need a total order independent of the term order.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

}  // namespace locmult
