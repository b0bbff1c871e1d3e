#include "locmult/monomial.hpp"

#include <limits>

#include "locmult/errors.hpp"

namespace locmult {

namespace {

Monomial::Exponent checked(unsigned long value) {
  if (value > std::numeric_limits<Monomial::Exponent>::max()) {
    throw ResourceCapError("monomial exponent exceeds 65535");
  }
  return static_cast<Monomial::Exponent>(value);
}

}  // namespace

Monomial::Monomial(std::size_t nvars) : size_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVariables) throw ResourceCapError("too many variables (max 8)");
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const unsigned> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    exp_[i] = checked(exponents[i]);
    degree_ += exp_[i];
  }
}

Monomial Monomial::unit(std::size_t nvars, std::size_t var, unsigned power) {
  Monomial m(nvars);
  m.set(var, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned value) {
  degree_ -= exp_[i];
  exp_[i] = checked(value);
  degree_ += exp_[i];
}

int Monomial::pure_power_variable() const {
  int var = -1;
  for (std::size_t i = 0; i < size_; ++i) {
    if (exp_[i] == 0) continue;
    if (var >= 0) return -1;
    var = static_cast<int>(i);
  }
  return var;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    r.exp_[i] = checked(static_cast<unsigned long>(exp_[i]) + other.exp_[i]);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    r.exp_[i] = static_cast<Exponent>(exp_[i] - other.exp_[i]);
  }
  r.degree_ = degree_ - other.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    r.exp_[i] = exp_[i] > other.exp_[i] ? exp_[i] : other.exp_[i];
    r.degree_ += r.exp_[i];
  }
  return r;
}

Monomial Monomial::pow(unsigned k) const {
  Monomial r(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    r.exp_[i] = checked(static_cast<unsigned long>(exp_[i]) * k);
    r.degree_ += r.exp_[i];
  }
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < size_; ++i) {
    h ^= exp_[i];
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace locmult
