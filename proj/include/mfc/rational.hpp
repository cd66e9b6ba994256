#pragma once
/**
 * @file rational.hpp
 * @brief Small exact rational type for conformal dimensions and phases.
 *
 * Denominators stay tiny (bounded by the search denominator, default 48, and
 * products thereof), so plain int64 arithmetic with gcd reduction is ample.
 */
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "mfc/errors.hpp"

namespace mfc {

class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw InvalidInput("rational with zero denominator");
    reduce();
  }
  // NOLINTNEXTLINE(google-explicit-constructor) — integers convert freely.
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double value() const { return static_cast<double>(num_) / den_; }

  /// Representative in [0, 1).
  Rational mod1() const {
    std::int64_t n = num_ % den_;
    if (n < 0) n += den_;
    return Rational(n, den_);
  }
  /// Representative in [0, m).
  Rational mod(std::int64_t m) const {
    std::int64_t n = num_ % (m * den_);
    if (n < 0) n += m * den_;
    return Rational(n, den_);
  }

  Rational operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  Rational operator-() const { return Rational(-num_, den_); }
  Rational operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw InvalidInput("rational division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
  }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return num_ * o.den_ < o.num_ * den_;
  }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>(const Rational& o) const { return o < *this; }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  void reduce() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace mfc
