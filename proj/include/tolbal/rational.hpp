#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace tolbal {

/// Exact fraction with a positive denominator, always gcd-reduced.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  /// Accepts "a/b", integers, and plain decimals ("0.125" -> 1/8).
  static Rational parse(std::string_view text);

  friend bool operator==(const Rational& l, const Rational& r) noexcept {
    return l.num_ == r.num_ && l.den_ == r.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& l, const Rational& r) noexcept;

  friend Rational operator*(const Rational& l, const Rational& r);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Tolerance parameter beta = num/den with 0 < beta <= 1.
class Tolerance {
 public:
  Tolerance() : Tolerance(1, 1) {}
  Tolerance(std::int64_t num, std::int64_t den);
  explicit Tolerance(const Rational& beta) : Tolerance(beta.num(), beta.den()) {}

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  Rational as_rational() const { return Rational(num_, den_); }
  double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  static Tolerance parse(std::string_view text) { return Tolerance(Rational::parse(text)); }

  friend bool operator==(const Tolerance&, const Tolerance&) = default;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

/// a*b with overflow detection; throws std::overflow_error.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace tolbal
