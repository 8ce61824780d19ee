#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

namespace contrast {

namespace detail {
struct BigRational;
}

// Exact rational number in canonical form (positive denominator, coprime
// numerator). Values whose numerator and denominator fit in 64 bits are held
// inline; anything larger is promoted to an arbitrary-precision representation
// and demoted again as soon as it fits. The two representations are never used
// for the same value, so equality can compare representations directly.
class Rational {
 public:
  constexpr Rational() noexcept = default;
  constexpr explicit Rational(std::int64_t value) noexcept : num_(value) {}

  // Canonicalizes p/q. Throws Error(kZeroDenominator) when q == 0.
  static Rational of(std::int64_t p, std::int64_t q);

  // Accepts "p/q" or a bare integer, optionally signed, with arbitrarily many
  // digits. Throws Error(kMalformedInput) or Error(kZeroDenominator).
  static Rational parse(std::string_view text);

  bool is_small() const noexcept { return big_ == nullptr; }
  bool is_zero() const noexcept { return is_small() && num_ == 0; }
  int sign() const noexcept;

  // Only meaningful when is_small().
  std::int64_t small_numerator() const noexcept { return num_; }
  std::int64_t small_denominator() const noexcept { return den_; }

  std::string numerator_string() const;
  std::string denominator_string() const;

  // Always "p/q", including "0/1" and "1/1".
  std::string to_string() const;
  double to_double() const;

  Rational abs() const;
  Rational operator-() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  // Throws Error(kZeroDenominator) on division by zero.
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) noexcept;

  std::size_t hash() const noexcept;

 private:
  friend struct detail::BigRational;

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const detail::BigRational> big_;
};

// Free-function form of Rational::of.
Rational rat_normalize(std::int64_t p, std::int64_t q);

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

struct RationalHash {
  std::size_t operator()(const Rational& r) const noexcept { return r.hash(); }
};

}  // namespace contrast

template <>
struct std::hash<contrast::Rational> {
  std::size_t operator()(const contrast::Rational& r) const noexcept {
    return r.hash();
  }
};
