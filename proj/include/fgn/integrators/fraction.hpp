#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fgn {

/// Exact rational stage coefficient p/q in lowest terms, q > 0.
class Fraction {
 public:
  constexpr Fraction() = default;
  constexpr Fraction(std::int64_t num) : num_(num), den_(1) {}  // NOLINT(google-explicit-constructor)
  constexpr Fraction(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("Fraction: zero denominator");
    normalize();
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  constexpr double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend constexpr Fraction operator+(Fraction a, Fraction b) {
    const std::int64_t g = std::gcd(a.den_, b.den_);
    return {a.num_ * (b.den_ / g) + b.num_ * (a.den_ / g), a.den_ / g * b.den_};
  }
  friend constexpr Fraction operator-(Fraction a) { return {-a.num_, a.den_}; }
  friend constexpr Fraction operator-(Fraction a, Fraction b) { return a + (-b); }
  friend constexpr Fraction operator*(Fraction a, Fraction b) {
    const std::int64_t g1 = std::gcd(a.num_, b.den_);
    const std::int64_t g2 = std::gcd(b.num_, a.den_);
    const std::int64_t n1 = g1 ? a.num_ / g1 : 0, d2 = g1 ? b.den_ / g1 : b.den_;
    const std::int64_t n2 = g2 ? b.num_ / g2 : 0, d1 = g2 ? a.den_ / g2 : a.den_;
    return {n1 * n2, d1 * d2};
  }
  friend constexpr Fraction operator/(Fraction a, Fraction b) {
    if (b.num_ == 0) throw std::domain_error("Fraction: division by zero");
    return a * Fraction(b.den_, b.num_);
  }
  Fraction& operator+=(Fraction b) { return *this = *this + b; }

  friend constexpr bool operator==(Fraction, Fraction) = default;
  friend constexpr std::strong_ordering operator<=>(Fraction a, Fraction b) {
    // Cross-multiplication; fine for the small coefficients used in schemes.
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  /// "p/q", or "p" when q = 1.
  std::string str() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses "p", "-p" or "p/q".
  static Fraction parse(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
      std::int64_t v = 0;
      if (!s.empty() && s.front() == '+') s.remove_prefix(1);
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
      return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return {parse_int(text)};
    return {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
  }

 private:
  constexpr void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace fgn
