#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "sosperm/errors.hpp"
#include "sosperm/rational.hpp"

namespace sosperm {

/// A reduced fraction a/b with 0 <= a <= b. Members of the Farey sequence
/// F(n) are exactly these with b <= n.
struct farey_fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  farey_fraction() = default;
  farey_fraction(std::int64_t a, std::int64_t b) : num(a), den(b) {
    if (den == 0) throw zero_denominator();
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num < 0 || num > den)
      throw parse_error(std::to_string(a) + "/" + std::to_string(b) +
                        " is not in [0, 1]");
    const std::int64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
  }

  rational to_rational() const { return rational(bigint(num), bigint(den)); }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  friend bool operator==(const farey_fraction& x, const farey_fraction& y) {
    return x.num == y.num && x.den == y.den;
  }
  friend bool operator!=(const farey_fraction& x, const farey_fraction& y) {
    return !(x == y);
  }
  friend bool operator<(const farey_fraction& x, const farey_fraction& y) {
    return static_cast<__int128>(x.num) * y.den < static_cast<__int128>(y.num) * x.den;
  }
  friend std::ostream& operator<<(std::ostream& os, const farey_fraction& x) {
    return os << x.str();
  }
};

/// Euler's totient by trial-division factorization.
inline std::int64_t totient(std::int64_t k) {
  std::int64_t result = k;
  for (std::int64_t p = 2; p * p <= k; ++p) {
    if (k % p == 0) {
      result -= result / p;
      while (k % p == 0) k /= p;
    }
  }
  if (k > 1) result -= result / k;
  return result;
}

/// Sum of totient(k) for k = 1..n; counts the intervals of F(n).
inline std::int64_t totient_partial_sum(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("totient_partial_sum: n must be positive");
  std::int64_t sum = 0;
  for (std::int64_t k = 1; k <= n; ++k) sum += totient(k);
  return sum;
}

/// Successor of `cur` in F(n), given its predecessor. Throws at_end at 1/1.
inline farey_fraction next_farey(const farey_fraction& prev, const farey_fraction& cur,
                                 std::int64_t n) {
  if (cur.num == cur.den) throw at_end();
  const std::int64_t cross = prev.den * cur.num - prev.num * cur.den;
  if (!(prev < cur) || cross != 1 || prev.den > n || cur.den > n ||
      prev.den + cur.den <= n)
    throw std::invalid_argument("next_farey: " + prev.str() + ", " + cur.str() +
                                " are not consecutive in F(" + std::to_string(n) + ")");
  const std::int64_t k = (n + prev.den) / cur.den;
  return farey_fraction(k * cur.num - prev.num, k * cur.den - prev.den);
}

/// F(n) in increasing order, streamed by the neighbor recurrence.
/// Length is 1 + totient_partial_sum(n).
inline std::vector<farey_fraction> farey_sequence(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("farey_sequence: n must be positive");
  std::vector<farey_fraction> seq;
  seq.emplace_back(0, 1);
  farey_fraction prev(0, 1);
  farey_fraction cur(1, n);
  seq.push_back(cur);
  while (cur.num != cur.den) {
    farey_fraction nxt = next_farey(prev, cur, n);
    prev = cur;
    cur = nxt;
    seq.push_back(cur);
  }
  return seq;
}

/// Two consecutive terms lo = a/b < hi = c/d of F(order). The classical
/// adjacency facts hold by construction: bc - ad = 1, b,d <= order < b+d.
class farey_interval {
 public:
  farey_interval(farey_fraction lo, farey_fraction hi, std::int64_t order)
      : lo_(lo), hi_(hi), order_(order) {
    const std::int64_t cross = lo.den * hi.num - lo.num * hi.den;
    if (order < 1 || cross != 1 || lo.den > order || hi.den > order ||
        lo.den + hi.den <= order)
      throw invalid_interval("(" + lo.str() + ", " + hi.str() +
                             ") is not an interval of F(" + std::to_string(order) + ")");
  }

  const farey_fraction& lo() const { return lo_; }
  const farey_fraction& hi() const { return hi_; }
  std::int64_t order() const { return order_; }

  /// Width hi - lo = 1/(b*d).
  rational width() const {
    return rational(bigint(1), bigint(lo_.den) * bigint(hi_.den));
  }

  std::string str() const { return "(" + lo_.str() + ", " + hi_.str() + ")"; }

  friend bool operator==(const farey_interval& x, const farey_interval& y) {
    return x.lo_ == y.lo_ && x.hi_ == y.hi_ && x.order_ == y.order_;
  }
  friend bool operator!=(const farey_interval& x, const farey_interval& y) {
    return !(x == y);
  }
  friend std::ostream& operator<<(std::ostream& os, const farey_interval& x) {
    return os << x.str();
  }

 private:
  farey_fraction lo_;
  farey_fraction hi_;
  std::int64_t order_;
};

/// (a+c)/(b+d); already reduced because bc - ad = 1, and strictly inside.
inline farey_fraction mediant(const farey_interval& iv) {
  return farey_fraction(iv.lo().num + iv.hi().num, iv.lo().den + iv.hi().den);
}

/// The unique interval of F(n) containing alpha strictly inside, found by
/// Stern-Brocot descent with run acceleration (no F(n) materialization).
/// Throws on_boundary when alpha itself has denominator <= n.
inline farey_interval farey_interval_of(const unit_rational& alpha, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("farey_interval_of: n must be positive");
  const rational& r = alpha.value();
  if (r.den() <= n)
    throw on_boundary(to_int64(r.num()), to_int64(r.den()));
  const bigint& p = r.num();
  const bigint& q = r.den();
  std::int64_t a = 0, b = 1, c = 1, d = 1;
  while (b + d <= n) {
    // S = q*(alpha - lo), T = q*(hi - alpha), both positive; alpha is below
    // the mediant exactly when S < T. Runs of same-direction steps collapse
    // into one jump of j steps.
    const bigint S = p * b - q * a;
    const bigint T = q * c - p * d;
    if (S < T) {
      const bigint j_cf = (T - 1) / S;
      const std::int64_t j_den = (n - d) / b;
      const std::int64_t j = j_cf > j_den ? j_den : j_cf.convert_to<std::int64_t>();
      c += j * a;
      d += j * b;
    } else {
      const bigint j_cf = (S - 1) / T;
      const std::int64_t j_den = (n - b) / d;
      const std::int64_t j = j_cf > j_den ? j_den : j_cf.convert_to<std::int64_t>();
      a += j * c;
      b += j * d;
    }
  }
  return farey_interval(farey_fraction(a, b), farey_fraction(c, d), n);
}

namespace detail {
// Inverse of x modulo m (m >= 1, gcd(x, m) = 1), by extended Euclid.
inline std::int64_t mod_inverse(std::int64_t x, std::int64_t m) {
  std::int64_t r0 = m, r1 = ((x % m) + m) % m;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  return ((t0 % m) + m) % m;
}
}  // namespace detail

/// Reconstructs the unique interval (a/b, c/d) of F(n) from its denominators:
/// a is the unique solution of a*d = -1 (mod b) in [0, b), and c = (1+a*d)/b.
inline farey_interval interval_from_denominators(std::int64_t b, std::int64_t d,
                                                 std::int64_t n) {
  const auto reject = [&](const char* why) {
    throw not_adjacent("denominators (" + std::to_string(b) + ", " + std::to_string(d) +
                       ") do not bound an interval of F(" + std::to_string(n) +
                       "): " + why);
  };
  if (b < 1 || d < 1 || b > n || d > n) reject("out of range");
  if (b + d <= n) reject("b + d <= n");
  if (std::gcd(b, d) != 1) reject("not coprime");
  const std::int64_t a = b == 1 ? 0 : b - detail::mod_inverse(d, b);
  const std::int64_t c = (1 + a * d) / b;
  return farey_interval(farey_fraction(a, b), farey_fraction(c, d), n);
}

}  // namespace sosperm
