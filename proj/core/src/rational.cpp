#include "contrast/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <ostream>

#include "contrast/error.hpp"

namespace contrast {

namespace mp = boost::multiprecision;

namespace detail {

struct BigRational {
  mp::cpp_rational value;

  static mp::cpp_rational widen(const Rational& r) {
    if (r.big_) return r.big_->value;
    return mp::cpp_rational(mp::cpp_int(r.num_), mp::cpp_int(r.den_));
  }

  // Caller guarantees canonical form.
  static Rational make_small(std::int64_t num, std::int64_t den) {
    Rational out;
    out.num_ = num;
    out.den_ = den;
    return out;
  }

  static Rational narrow(mp::cpp_rational v) {
    static const mp::cpp_int kMin = std::numeric_limits<std::int64_t>::min() + 1;
    static const mp::cpp_int kMax = std::numeric_limits<std::int64_t>::max();
    const mp::cpp_int& n = mp::numerator(v);
    const mp::cpp_int& d = mp::denominator(v);
    Rational out;
    if (n >= kMin && n <= kMax && d <= kMax) {
      out.num_ = static_cast<std::int64_t>(n);
      out.den_ = static_cast<std::int64_t>(d);
    } else {
      out.big_ = std::make_shared<const BigRational>(BigRational{std::move(v)});
    }
    return out;
  }
};

}  // namespace detail

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

constexpr std::int64_t kSmallMin = std::numeric_limits<std::int64_t>::min() + 1;
constexpr std::int64_t kSmallMax = std::numeric_limits<std::int64_t>::max();

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
      return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

mp::cpp_int to_cpp_int(i128 v) {
  bool neg = v < 0;
  u128 u = uabs(v);
  mp::cpp_int out = static_cast<std::uint64_t>(u >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(u);
  return neg ? mp::cpp_int(-out) : out;
}

}  // namespace

// Builds a canonical Rational from a 128-bit fraction with den > 0.
static Rational from_wide(i128 num, i128 den) {
  u128 g = gcd128(uabs(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (num >= kSmallMin && num <= kSmallMax && den <= kSmallMax) {
    return detail::BigRational::make_small(static_cast<std::int64_t>(num),
                                           static_cast<std::int64_t>(den));
  }
  return detail::BigRational::narrow(mp::cpp_rational(to_cpp_int(num), to_cpp_int(den)));
}

Rational Rational::of(std::int64_t p, std::int64_t q) {
  if (q == 0) throw Error(ErrorCode::kZeroDenominator, "zero denominator");
  if (p == std::numeric_limits<std::int64_t>::min() ||
      q == std::numeric_limits<std::int64_t>::min()) {
    i128 n = p, d = q;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    return from_wide(n, d);
  }
  if (q < 0) {
    p = -p;
    q = -q;
  }
  std::int64_t g = std::gcd(p, q);
  return detail::BigRational::make_small(p / g, q / g);
}

Rational rat_normalize(std::int64_t p, std::int64_t q) { return Rational::of(p, q); }

Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> Error {
    return Error(ErrorCode::kMalformedInput, "malformed rational '" + std::string(text) + "'");
  };
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view num_text = text;
  std::string_view den_text = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num_text = text.substr(0, slash);
    den_text = text.substr(slash + 1);
  }
  if (!valid_int(num_text, true) || !valid_int(den_text, false)) throw fail();

  std::string n(num_text);
  if (n.front() == '+') n.erase(0, 1);
  if (n.size() <= 18 && den_text.size() <= 18) {
    return Rational::of(std::stoll(n), std::stoll(std::string(den_text)));
  }
  mp::cpp_int bn(n), bd{std::string(den_text)};
  if (bd == 0) throw Error(ErrorCode::kZeroDenominator, "zero denominator");
  return detail::BigRational::narrow(mp::cpp_rational(bn, bd));
}

int Rational::sign() const noexcept {
  if (big_) return big_->value.sign();
  return (num_ > 0) - (num_ < 0);
}

std::string Rational::numerator_string() const {
  if (big_) return mp::numerator(big_->value).str();
  return std::to_string(num_);
}

std::string Rational::denominator_string() const {
  if (big_) return mp::denominator(big_->value).str();
  return std::to_string(den_);
}

std::string Rational::to_string() const {
  return numerator_string() + "/" + denominator_string();
}

double Rational::to_double() const {
  if (big_) return big_->value.convert_to<double>();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::operator-() const {
  if (big_) return detail::BigRational::narrow(-big_->value);
  Rational out = *this;
  out.num_ = -num_;
  return out;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    return detail::BigRational::narrow(detail::BigRational::widen(a) +
                                       detail::BigRational::widen(b));
  }
  if (a.den_ == b.den_) {
    return from_wide(static_cast<i128>(a.num_) + b.num_, a.den_);
  }
  i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
  i128 d = static_cast<i128>(a.den_) * b.den_;
  return from_wide(n, d);
}

Rational operator-(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    return detail::BigRational::narrow(detail::BigRational::widen(a) -
                                       detail::BigRational::widen(b));
  }
  if (a.den_ == b.den_) {
    return from_wide(static_cast<i128>(a.num_) - b.num_, a.den_);
  }
  i128 n = static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_;
  i128 d = static_cast<i128>(a.den_) * b.den_;
  return from_wide(n, d);
}

Rational operator*(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    return detail::BigRational::narrow(detail::BigRational::widen(a) *
                                       detail::BigRational::widen(b));
  }
  return from_wide(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error(ErrorCode::kZeroDenominator, "division by zero");
  if (a.big_ || b.big_) {
    return detail::BigRational::narrow(detail::BigRational::widen(a) /
                                       detail::BigRational::widen(b));
  }
  i128 n = static_cast<i128>(a.num_) * b.den_;
  i128 d = static_cast<i128>(a.den_) * b.num_;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return from_wide(n, d);
}

bool operator==(const Rational& a, const Rational& b) noexcept {
  if (a.big_ || b.big_) {
    if (!a.big_ || !b.big_) return false;
    return a.big_->value == b.big_->value;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
  if (a.big_ || b.big_) {
    auto wa = detail::BigRational::widen(a);
    auto wb = detail::BigRational::widen(b);
    if (wa < wb) return std::strong_ordering::less;
    if (wb < wa) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  i128 l = static_cast<i128>(a.num_) * b.den_;
  i128 r = static_cast<i128>(b.num_) * a.den_;
  return l <=> r;
}

std::size_t Rational::hash() const noexcept {
  if (big_) return std::hash<std::string>{}(to_string());
  std::uint64_t h = static_cast<std::uint64_t>(num_) * 0x9E3779B97F4A7C15ULL;
  h ^= static_cast<std::uint64_t>(den_) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
  h ^= h >> 29;
  return static_cast<std::size_t>(h);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroDenominator: return "zero_denominator";
    case ErrorCode::kMalformedInput: return "malformed_input";
    case ErrorCode::kOutOfRange: return "out_of_range";
    case ErrorCode::kDuplicateEdge: return "duplicate_edge";
    case ErrorCode::kSelfLoop: return "self_loop";
    case ErrorCode::kDisconnected: return "disconnected";
    case ErrorCode::kInvalidGreyscale: return "invalid_greyscale";
    case ErrorCode::kLengthMismatch: return "length_mismatch";
    case ErrorCode::kImproperColouring: return "improper_colouring";
    case ErrorCode::kNotLightestEdge: return "not_lightest_edge";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kNotBipartite: return "not_bipartite";
    case ErrorCode::kAdjacencyViolation: return "adjacency_violation";
    case ErrorCode::kPreconditionFailed: return "precondition_failed";
    case ErrorCode::kBudgetExceeded: return "budget_exceeded";
  }
  return "unknown";
}

}  // namespace contrast
