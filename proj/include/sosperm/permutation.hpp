#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sosperm/errors.hpp"
#include "sosperm/farey.hpp"
#include "sosperm/rational.hpp"

namespace sosperm {

/// A permutation of {0, ..., n} in one-line notation, n >= 1.
class sos_perm {
 public:
  explicit sos_perm(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
    if (entries_.size() < 2)
      throw std::invalid_argument("permutation needs at least two entries");
    std::vector<bool> seen(entries_.size(), false);
    for (const std::int64_t v : entries_) {
      if (v < 0 || v >= static_cast<std::int64_t>(entries_.size()) || seen[v])
        throw std::invalid_argument("entries are not a permutation of 0..n");
      seen[v] = true;
    }
  }

  std::int64_t n() const { return static_cast<std::int64_t>(entries_.size()) - 1; }
  std::int64_t size() const { return static_cast<std::int64_t>(entries_.size()); }
  std::int64_t operator()(std::int64_t i) const { return entries_[i]; }
  const std::vector<std::int64_t>& entries() const { return entries_; }

  /// One-line rendering: contiguous digits up to n = 9, space-separated beyond.
  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (n() >= 10 && i > 0) s += ' ';
      s += std::to_string(entries_[i]);
    }
    return s;
  }

  /// Parses one-line notation; "42075316" and "4 2 0 7 5 3 1 6" both work.
  static sos_perm parse(const std::string& text) {
    std::vector<std::int64_t> entries;
    const bool spaced = text.find_first_of(" \t") != std::string::npos;
    if (!spaced && text.size() >= 2 &&
        std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      for (const char c : text) entries.push_back(c - '0');
    } else {
      std::istringstream in(text);
      std::string token;
      while (in >> token) {
        if (!std::all_of(token.begin(), token.end(),
                         [](char c) { return c >= '0' && c <= '9'; }))
          throw parse_error(text);
        try {
          entries.push_back(std::stoll(token));
        } catch (const std::out_of_range&) {
          throw parse_error(text);
        }
      }
    }
    if (entries.empty()) throw parse_error(text);
    try {
      return sos_perm(std::move(entries));
    } catch (const std::invalid_argument&) {
      throw parse_error(text);
    }
  }

  friend bool operator==(const sos_perm& x, const sos_perm& y) {
    return x.entries_ == y.entries_;
  }
  friend bool operator!=(const sos_perm& x, const sos_perm& y) { return !(x == y); }
  friend bool operator<(const sos_perm& x, const sos_perm& y) {
    return x.entries_ < y.entries_;
  }
  friend std::ostream& operator<<(std::ostream& os, const sos_perm& p) {
    return os << p.str();
  }

 private:
  std::vector<std::int64_t> entries_;
};

/// The permutation sorting f(0..n) for f(x) = alpha*x + beta mod 1, with ties
/// broken toward the smaller index. Sorting by the pair (value, index) yields
/// the lexicographically first sorting permutation, which keeps this total on
/// every input, region boundaries included.
inline sos_perm sos_permutation(const unit_rational& alpha, const unit_rational& beta,
                                std::int64_t n) {
  if (n < 1) throw std::invalid_argument("sos_permutation: n must be positive");
  std::vector<rational> values;
  values.reserve(n + 1);
  for (std::int64_t i = 0; i <= n; ++i) values.push_back(frac_eval(alpha, beta, i).value());
  std::vector<std::int64_t> idx(n + 1);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::int64_t i, std::int64_t j) {
    return values[i] < values[j];
  });
  return sos_perm(std::move(idx));
}

/// Builds the permutation of a Farey interval (a/b, c/d) directly: pi(0) = 0,
/// then each entry steps by +b, +(b-d), or -d according to where the previous
/// entry sits relative to n-b and d.
inline sos_perm sos_recurrence(const farey_interval& iv, std::int64_t n) {
  const farey_interval checked(iv.lo(), iv.hi(), n);
  const std::int64_t b = checked.lo().den;
  const std::int64_t d = checked.hi().den;
  std::vector<std::int64_t> entries;
  entries.reserve(n + 1);
  entries.push_back(0);
  for (std::int64_t k = 0; k < n; ++k) {
    const std::int64_t v = entries.back();
    std::int64_t next;
    if (v <= n - b)
      next = v + b;
    else if (v < d)
      next = v + b - d;
    else
      next = v - d;
    entries.push_back(next);
  }
  return sos_perm(std::move(entries));
}

/// result(i) = p((i - k) mod (n+1)); shifting by 1 is composition with the
/// cycle i -> i-1, the effect of nudging beta upward across one band.
inline sos_perm cyclic_shift(const sos_perm& p, std::int64_t k) {
  const std::int64_t m = p.size();
  std::vector<std::int64_t> entries(m);
  for (std::int64_t i = 0; i < m; ++i) entries[i] = p(((i - k) % m + m) % m);
  return sos_perm(std::move(entries));
}

/// All n+1 permutations reachable from alpha by varying beta: the cyclic-shift
/// orbit of the beta = 0 permutation, in shift order k = 0..n.
inline std::vector<sos_perm> sos_orbit(const unit_rational& alpha, std::int64_t n) {
  const sos_perm base = sos_permutation(alpha, unit_rational(), n);
  std::vector<sos_perm> orbit;
  orbit.reserve(n + 1);
  for (std::int64_t k = 0; k <= n; ++k) orbit.push_back(cyclic_shift(base, k));
  return orbit;
}

/// (n+1) * totient_partial_sum(n), without enumeration.
inline std::int64_t count_sos(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("count_sos: n must be positive");
  return (n + 1) * totient_partial_sum(n);
}

/// Every Sos permutation of {0..n}, in the deterministic order that external
/// output is committed to: Farey intervals left to right, shifts k = 0..n.
inline std::vector<sos_perm> enumerate_sos(std::int64_t n) {
  const std::vector<farey_fraction> seq = farey_sequence(n);
  std::vector<sos_perm> result;
  result.reserve(count_sos(n));
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    const farey_interval iv(seq[i], seq[i + 1], n);
    const sos_perm base = sos_recurrence(iv, n);
    for (std::int64_t k = 0; k <= n; ++k) result.push_back(cyclic_shift(base, k));
  }
  return result;
}

/// The circularly sorted values of f(0..n) with their n+1 gaps: n differences
/// between consecutive sorted values plus the wrap gap closing the circle.
struct gap_profile {
  std::vector<unit_rational> sorted_values;
  std::vector<rational> gaps;
  std::set<rational> distinct_gaps;
};

inline gap_profile gap_profile_of(const unit_rational& alpha, const unit_rational& beta,
                                  std::int64_t n) {
  if (n < 1) throw std::invalid_argument("gap_profile_of: n must be positive");
  gap_profile prof;
  prof.sorted_values.reserve(n + 1);
  for (std::int64_t i = 0; i <= n; ++i) prof.sorted_values.push_back(frac_eval(alpha, beta, i));
  std::sort(prof.sorted_values.begin(), prof.sorted_values.end());
  prof.gaps.reserve(n + 1);
  for (std::int64_t k = 0; k < n; ++k)
    prof.gaps.push_back(prof.sorted_values[k + 1].value() - prof.sorted_values[k].value());
  prof.gaps.push_back(rational(1) - prof.sorted_values[n].value() +
                      prof.sorted_values[0].value());
  prof.distinct_gaps.insert(prof.gaps.begin(), prof.gaps.end());
  return prof;
}

}  // namespace sosperm
