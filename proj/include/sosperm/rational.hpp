#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include "sosperm/errors.hpp"

namespace sosperm {

using bigint = boost::multiprecision::cpp_int;

namespace detail {
template <typename T>
std::string integer_str(const T& v) {
  if constexpr (std::is_integral_v<T>)
    return std::to_string(v);
  else
    return v.str();
}
}  // namespace detail

/// Exact rational number in canonical form: den > 0 and gcd(|num|, den) = 1,
/// re-established after every operation. Comparisons and arithmetic are exact;
/// there is no floating-point anywhere in the core.
template <typename I>
class basic_rational {
 public:
  basic_rational() : num_(0), den_(1) {}
  basic_rational(I n) : num_(std::move(n)), den_(1) {}
  basic_rational(I n, I d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw zero_denominator();
    normalize();
  }

  const I& num() const { return num_; }
  const I& den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  friend basic_rational operator-(const basic_rational& x) {
    basic_rational r;
    r.num_ = -x.num_;
    r.den_ = x.den_;
    return r;
  }
  friend basic_rational operator+(const basic_rational& x, const basic_rational& y) {
    return basic_rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }
  friend basic_rational operator-(const basic_rational& x, const basic_rational& y) {
    return basic_rational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
  }
  friend basic_rational operator*(const basic_rational& x, const basic_rational& y) {
    return basic_rational(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend basic_rational operator/(const basic_rational& x, const basic_rational& y) {
    return basic_rational(x.num_ * y.den_, x.den_ * y.num_);
  }
  basic_rational& operator+=(const basic_rational& x) { return *this = *this + x; }
  basic_rational& operator-=(const basic_rational& x) { return *this = *this - x; }
  basic_rational& operator*=(const basic_rational& x) { return *this = *this * x; }
  basic_rational& operator/=(const basic_rational& x) { return *this = *this / x; }

  // Canonical form makes equality fieldwise; ordering cross-multiplies
  // (denominators are positive, so no sign flip).
  friend bool operator==(const basic_rational& x, const basic_rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator!=(const basic_rational& x, const basic_rational& y) {
    return !(x == y);
  }
  friend bool operator<(const basic_rational& x, const basic_rational& y) {
    return x.num_ * y.den_ < y.num_ * x.den_;
  }
  friend bool operator>(const basic_rational& x, const basic_rational& y) { return y < x; }
  friend bool operator<=(const basic_rational& x, const basic_rational& y) { return !(y < x); }
  friend bool operator>=(const basic_rational& x, const basic_rational& y) { return !(x < y); }

  /// Largest integer <= *this.
  I floor() const {
    I q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) --q;
    return q;
  }

  /// Fractional part, always in [0, 1).
  basic_rational frac() const { return *this - basic_rational(floor()); }

  /// "p/q" for proper fractions, "p" for integers.
  std::string str() const {
    std::string s = detail::integer_str(num_);
    if (den_ != 1) s += "/" + detail::integer_str(den_);
    return s;
  }

  /// Always "p/q", integers included ("3/1").
  std::string fraction_str() const {
    return detail::integer_str(num_) + "/" + detail::integer_str(den_);
  }

  /// Exact value of an optional-sign decimal literal: "0.42", ".42", "-7".
  static basic_rational from_decimal(std::string_view s) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
    I mantissa = 0;
    I scale = 1;
    bool any_digit = false;
    bool seen_dot = false;
    for (; i < s.size(); ++i) {
      const char ch = s[i];
      if (ch == '.') {
        if (seen_dot) throw parse_error(std::string(s));
        seen_dot = true;
        continue;
      }
      if (ch < '0' || ch > '9') throw parse_error(std::string(s));
      mantissa = mantissa * 10 + (ch - '0');
      if (seen_dot) scale *= 10;
      any_digit = true;
    }
    if (!any_digit) throw parse_error(std::string(s));
    if (neg) mantissa = -mantissa;
    return basic_rational(mantissa, scale);
  }

  /// Accepts both wire formats: "p/q" and decimal literals.
  static basic_rational parse(std::string_view s) {
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return from_decimal(s);
    return basic_rational(parse_integer(s.substr(0, slash)),
                          parse_integer(s.substr(slash + 1)));
  }

  friend std::ostream& operator<<(std::ostream& os, const basic_rational& x) {
    return os << x.str();
  }

 private:
  static I parse_integer(std::string_view s) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
    if (i == s.size()) throw parse_error(std::string(s));
    I v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw parse_error(std::string(s));
      v = v * 10 + (s[i] - '0');
    }
    return neg ? I(-v) : v;
  }

  void normalize() {
    using boost::multiprecision::gcd;
    using std::gcd;
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    I g = gcd(num_ < 0 ? I(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  I num_;
  I den_;
};

using rational = basic_rational<bigint>;

inline double to_double(const rational& r) {
  return r.num().convert_to<double>() / r.den().convert_to<double>();
}

/// Narrowing helper for serialization; everything this library emits fits.
inline std::int64_t to_int64(const bigint& x) {
  if (x < std::numeric_limits<std::int64_t>::min() ||
      x > std::numeric_limits<std::int64_t>::max())
    throw std::overflow_error("value does not fit in 64 bits: " + x.str());
  return x.convert_to<std::int64_t>();
}

/// A rational reduced modulo 1 into [0, 1). Construction performs the
/// reduction, so the invariant cannot be broken from outside.
class unit_rational {
 public:
  unit_rational() = default;
  explicit unit_rational(rational r) : value_(r.frac()) {}

  const rational& value() const { return value_; }

  friend bool operator==(const unit_rational& x, const unit_rational& y) {
    return x.value_ == y.value_;
  }
  friend bool operator!=(const unit_rational& x, const unit_rational& y) {
    return !(x == y);
  }
  friend bool operator<(const unit_rational& x, const unit_rational& y) {
    return x.value_ < y.value_;
  }
  friend std::ostream& operator<<(std::ostream& os, const unit_rational& x) {
    return os << x.value();
  }

 private:
  rational value_{};
};

/// f(x) = alpha*x + beta mod 1, evaluated exactly.
inline unit_rational frac_eval(const unit_rational& alpha, const unit_rational& beta,
                               std::int64_t x) {
  if (x < 0) throw std::invalid_argument("frac_eval: x must be nonnegative");
  return unit_rational(alpha.value() * rational(bigint(x)) + beta.value());
}

}  // namespace sosperm
