#include "tolbal/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace tolbal {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t value = 0;
  auto first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || first == s.data() + s.size()) {
    throw std::invalid_argument("not a rational number: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in exact score arithmetic");
  return out;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / (g == 0 ? 1 : g);
  den_ = den / (g == 0 ? 1 : g);
}

std::string Rational::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (frac_part.size() > 15) throw std::invalid_argument("too many decimals: '" + std::string(text) + "'");
    bool negative = !int_part.empty() && int_part.front() == '-';
    std::int64_t whole = (int_part.empty() || int_part == "-" || int_part == "+") ? 0 : parse_int(int_part, text);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    std::int64_t frac = frac_part.empty() ? 0 : parse_int(frac_part, text);
    if (frac < 0) throw std::invalid_argument("malformed decimal: '" + std::string(text) + "'");
    std::int64_t magnitude = checked_mul(whole < 0 ? -whole : whole, scale) + frac;
    return Rational(negative ? -magnitude : magnitude, scale);
  }
  return Rational(parse_int(text, text), 1);
}

std::strong_ordering operator<=>(const Rational& l, const Rational& r) noexcept {
  const __int128 lhs = static_cast<__int128>(l.num_) * r.den_;
  const __int128 rhs = static_cast<__int128>(r.num_) * l.den_;
  return lhs <=> rhs;
}

Rational operator*(const Rational& l, const Rational& r) {
  // cross-reduce first to keep intermediate values small
  const std::int64_t g1 = std::gcd(l.num_, r.den_);
  const std::int64_t g2 = std::gcd(r.num_, l.den_);
  const std::int64_t a = l.num_ / (g1 == 0 ? 1 : g1);
  const std::int64_t d = r.den_ / (g1 == 0 ? 1 : g1);
  const std::int64_t c = r.num_ / (g2 == 0 ? 1 : g2);
  const std::int64_t b = l.den_ / (g2 == 0 ? 1 : g2);
  return Rational(checked_mul(a, c), checked_mul(b, d));
}

Tolerance::Tolerance(std::int64_t num, std::int64_t den) {
  Rational r(num, den);
  if (r.num() <= 0 || r.num() > r.den()) {
    throw std::invalid_argument("tolerance must satisfy 0 < beta <= 1, got " + r.to_string());
  }
  num_ = r.num();
  den_ = r.den();
}

}  // namespace tolbal
