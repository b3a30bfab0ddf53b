#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace piradiance {

/// Exact rational number with 64-bit numerator and denominator.
///
/// Always held in lowest terms with a positive denominator, so two equal
/// values have identical representations. Every arithmetic operation is
/// exact; results that would not fit in 64 bits raise std::overflow_error
/// instead of wrapping.
class Rational {
 public:
  constexpr Rational() noexcept = default;
  Rational(std::int64_t numerator) noexcept  // NOLINT(google-explicit-constructor)
      : num_(numerator) {}
  Rational(std::int64_t numerator, std::int64_t denominator);

  /// Parses `p` or `p/q` (optional leading sign, no whitespace inside).
  static Rational parse(std::string_view text);

  [[nodiscard]] std::int64_t numerator() const noexcept { return num_; }
  [[nodiscard]] std::int64_t denominator() const noexcept { return den_; }
  [[nodiscard]] bool is_zero() const noexcept { return num_ == 0; }
  [[nodiscard]] bool is_integer() const noexcept { return den_ == 1; }
  [[nodiscard]] double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  /// `p` for integers, `p/q` otherwise.
  [[nodiscard]] std::string to_string() const;

  [[nodiscard]] Rational inverse() const;
  [[nodiscard]] Rational abs() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational&, const Rational&) noexcept = default;
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace piradiance
