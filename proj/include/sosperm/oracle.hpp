#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sosperm/farey.hpp"
#include "sosperm/geometry.hpp"
#include "sosperm/permutation.hpp"
#include "sosperm/rational.hpp"

namespace sosperm {

struct oracle_failure {
  std::string check;
  std::string witness;
  std::string expected;
  std::string actual;
};

/// Structured result of one brute-force audit. Failures are data, not
/// exceptions, so a single run surfaces every violation at once.
struct oracle_report {
  std::string kind;
  std::int64_t n = 0;
  std::int64_t checks_run = 0;
  std::int64_t skipped = 0;
  std::int64_t intervals = 0;
  std::int64_t permutations = 0;
  std::int64_t domains_total = 0;
  std::int64_t domains_hit = 0;
  std::vector<oracle_failure> failures;

  bool passed() const { return failures.empty(); }
};

/// {(i, j) : i < j, p(i) > p(j)}. A permutation is determined by this set.
inline std::set<std::pair<std::int64_t, std::int64_t>> inversion_set(const sos_perm& p) {
  std::set<std::pair<std::int64_t, std::int64_t>> inv;
  for (std::int64_t i = 0; i < p.size(); ++i)
    for (std::int64_t j = i + 1; j < p.size(); ++j)
      if (p(i) > p(j)) inv.emplace(i, j);
  return inv;
}

namespace detail {
// mt19937_64 output reduced by modulo: fully specified by the standard, so
// identical seeds give identical reports on every platform.
inline std::uint64_t rand_below(std::mt19937_64& gen, std::uint64_t bound) {
  return gen() % bound;
}

inline rational rand_unit_rational(std::mt19937_64& gen, std::uint64_t max_den) {
  const std::uint64_t q = 2 + rand_below(gen, max_den - 1);
  const std::uint64_t p = rand_below(gen, q);
  return rational(bigint(p), bigint(q));
}

inline std::string point_str(const rational& alpha, const rational& beta) {
  return "(" + alpha.fraction_str() + ", " + beta.fraction_str() + ")";
}
}  // namespace detail

/// Samples the whole unit square on the half-step grid ((2i+1)/2g, (2j+1)/2g),
/// compares the definitional sort at each point against the geometric region
/// lookup, and tracks which domains were hit. Points that land exactly on a
/// boundary line are skipped and counted; their assignment is outside the
/// geometric contract. Coverage of every domain is required once g >= 4n^3.
inline oracle_report oracle_partition_check(std::int64_t n, std::int64_t grid) {
  if (n < 1) throw std::invalid_argument("oracle_partition_check: n must be positive");
  if (grid < 2 * n * n)
    throw std::invalid_argument("oracle_partition_check: grid must be at least 2n^2");

  oracle_report rep;
  rep.kind = "partition";
  rep.n = n;

  const square_partition part = partition(n);
  rep.domains_total = static_cast<std::int64_t>(part.domains.size());

  // Strips in left-to-right order; each domain keeps its global index so hits
  // can be recorded against the flat partition.
  std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> strip_of_lo;
  std::vector<std::vector<std::size_t>> strips;
  for (std::size_t g = 0; g < part.domains.size(); ++g) {
    const farey_fraction lo = part.domains[g].interval.lo();
    const auto key = std::make_pair(lo.num, lo.den);
    auto it = strip_of_lo.find(key);
    if (it == strip_of_lo.end()) {
      it = strip_of_lo.emplace(key, strips.size()).first;
      strips.emplace_back();
    }
    strips[it->second].push_back(g);
  }

  std::vector<bool> hit(part.domains.size(), false);
  const bigint two_g = bigint(2) * grid;

  for (std::int64_t u = 0; u < grid; ++u) {
    const rational alpha(bigint(2 * u + 1), two_g);
    std::size_t strip_idx;
    try {
      const farey_interval iv = farey_interval_of(unit_rational(alpha), n);
      strip_idx = strip_of_lo.at({iv.lo().num, iv.lo().den});
    } catch (const on_boundary&) {
      rep.checks_run += grid;
      rep.skipped += grid;
      continue;
    }

    std::vector<rational> alpha_times(n + 1);
    for (std::int64_t i = 0; i <= n; ++i) alpha_times[i] = alpha * rational(i);
    std::vector<std::pair<rational, rational>> bands;  // (bottom, top) per domain
    for (const std::size_t g : strips[strip_idx])
      bands.emplace_back(part.domains[g].bottom_boundary_at(alpha),
                         part.domains[g].top_boundary_at(alpha));

    for (std::int64_t v = 0; v < grid; ++v) {
      ++rep.checks_run;
      const rational beta(bigint(2 * v + 1), two_g);

      std::vector<rational> values(n + 1);
      bool on_line = false;
      for (std::int64_t i = 0; i <= n; ++i) {
        values[i] = (alpha_times[i] + beta).frac();
        if (i > 0 && values[i].num() == 0) on_line = true;
      }
      if (on_line) {
        ++rep.skipped;
        continue;
      }

      std::vector<std::int64_t> idx(n + 1);
      std::iota(idx.begin(), idx.end(), 0);
      std::stable_sort(idx.begin(), idx.end(), [&](std::int64_t i, std::int64_t j) {
        return values[i] < values[j];
      });
      const sos_perm direct(std::move(idx));

      const domain* located = nullptr;
      for (std::size_t s = 0; s < bands.size(); ++s) {
        if (bands[s].first < beta && beta < bands[s].second) {
          located = &part.domains[strips[strip_idx][s]];
          hit[strips[strip_idx][s]] = true;
          break;
        }
      }
      if (located == nullptr) {
        rep.failures.push_back({"containment", detail::point_str(alpha, beta),
                                "one containing domain", "none"});
        continue;
      }
      if (direct != located->perm)
        rep.failures.push_back({"label", detail::point_str(alpha, beta),
                                located->perm.str(), direct.str()});
    }
  }

  for (const bool h : hit) rep.domains_hit += h ? 1 : 0;
  if (grid >= 4 * n * n * n) {
    for (std::size_t g = 0; g < part.domains.size(); ++g)
      if (!hit[g])
        rep.failures.push_back({"coverage", part.domains[g].perm.str(),
                                "at least one grid point", "no grid point"});
  }
  return rep;
}

/// Checks the interval -> permutation map: distinct permutations per interval,
/// one random rational slope per interval reproducing it through the
/// definitional sort at beta = 0, and the enumeration matching the closed
/// count. The sampling seed is fixed (derived from n) so reports are
/// reproducible byte for byte.
inline oracle_report oracle_bijection_check(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("oracle_bijection_check: n must be positive");
  oracle_report rep;
  rep.kind = "bijection";
  rep.n = n;

  std::mt19937_64 gen(0x5eed0000ull ^ static_cast<std::uint64_t>(n));
  const std::vector<farey_fraction> seq = farey_sequence(n);
  rep.intervals = static_cast<std::int64_t>(seq.size()) - 1;

  std::set<std::vector<std::int64_t>> seen;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    const farey_interval iv(seq[i], seq[i + 1], n);
    const sos_perm pi = sos_recurrence(iv, n);
    ++rep.checks_run;
    if (!seen.insert(pi.entries()).second)
      rep.failures.push_back(
          {"injectivity", iv.str(), "a new permutation", pi.str() + " repeats"});

    const std::uint64_t den = std::uint64_t(1) << 30;
    const std::uint64_t t = 1 + detail::rand_below(gen, den - 1);
    const rational alpha =
        iv.lo().to_rational() + iv.width() * rational(bigint(t), bigint(den));
    const sos_perm direct = sos_permutation(unit_rational(alpha), unit_rational(), n);
    ++rep.checks_run;
    if (direct != pi)
      rep.failures.push_back({"beta0_sample", alpha.fraction_str() + " in " + iv.str(),
                              pi.str(), direct.str()});
  }

  const std::vector<sos_perm> all = enumerate_sos(n);
  rep.permutations = static_cast<std::int64_t>(all.size());
  std::set<std::vector<std::int64_t>> all_set;
  for (const sos_perm& p : all) all_set.insert(p.entries());
  ++rep.checks_run;
  if (rep.permutations != count_sos(n) ||
      static_cast<std::int64_t>(all_set.size()) != count_sos(n))
    rep.failures.push_back({"enumeration_count", "n = " + std::to_string(n),
                            std::to_string(count_sos(n)),
                            std::to_string(rep.permutations) + " listed, " +
                                std::to_string(all_set.size()) + " distinct"});
  return rep;
}

/// Randomized audit of the gap structure. Every profile must show at most
/// three distinct gaps, the largest equal to the sum of the other two when
/// three occur; at beta = 0 an interior slope pins the extreme gaps to
/// b*alpha - a and c - d*alpha, and every Farey fraction a/b itself yields
/// gaps inside {0, 1/b}.
inline oracle_report oracle_three_gaps(std::int64_t n, std::int64_t trials,
                                       std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("oracle_three_gaps: n must be positive");
  oracle_report rep;
  rep.kind = "three_gaps";
  rep.n = n;
  std::mt19937_64 gen(seed);

  const auto check_profile = [&](const gap_profile& prof, const rational& alpha,
                                 const rational& beta) {
    rational sum;
    for (const rational& g : prof.gaps) sum += g;
    if (sum != rational(1))
      rep.failures.push_back({"gap_sum", detail::point_str(alpha, beta), "1", sum.str()});
    if (prof.distinct_gaps.size() > 3)
      rep.failures.push_back({"three_gaps", detail::point_str(alpha, beta),
                              "at most 3 distinct gaps",
                              std::to_string(prof.distinct_gaps.size())});
    if (prof.distinct_gaps.size() == 3) {
      auto it = prof.distinct_gaps.begin();
      const rational small = *it++;
      const rational middle = *it++;
      const rational large = *it;
      if (small + middle != large)
        rep.failures.push_back({"largest_is_sum", detail::point_str(alpha, beta),
                                (small + middle).str(), large.str()});
    }
  };

  for (std::int64_t t = 0; t < trials; ++t) {
    const rational alpha = detail::rand_unit_rational(gen, 1000000);
    const rational beta = detail::rand_unit_rational(gen, 1000000);
    ++rep.checks_run;
    check_profile(gap_profile_of(unit_rational(alpha), unit_rational(beta), n), alpha, beta);
  }

  for (std::int64_t t = 0; t < trials; ++t) {
    const rational alpha = detail::rand_unit_rational(gen, 1000000);
    const rational beta;
    const gap_profile prof = gap_profile_of(unit_rational(alpha), unit_rational(), n);
    ++rep.checks_run;
    check_profile(prof, alpha, beta);
    if (alpha.den() > n) {
      const farey_interval iv = farey_interval_of(unit_rational(alpha), n);
      const rational expect_first =
          rational(iv.lo().den) * alpha - rational(iv.lo().num);
      const rational expect_wrap =
          rational(iv.hi().num) - rational(iv.hi().den) * alpha;
      if (prof.gaps.front() != expect_first)
        rep.failures.push_back({"first_gap", detail::point_str(alpha, beta),
                                expect_first.str(), prof.gaps.front().str()});
      if (prof.gaps.back() != expect_wrap)
        rep.failures.push_back({"wrap_gap", detail::point_str(alpha, beta),
                                expect_wrap.str(), prof.gaps.back().str()});
    } else {
      const rational unit(bigint(1), alpha.den());
      for (const rational& g : prof.distinct_gaps)
        if (g != rational(0) && g != unit)
          rep.failures.push_back({"boundary_gaps", detail::point_str(alpha, beta),
                                  "gaps in {0, " + unit.str() + "}", g.str()});
    }
  }

  for (const farey_fraction& f : farey_sequence(n)) {
    if (f.num == f.den) continue;  // 1/1 is 0/1 mod 1
    const rational alpha = f.to_rational();
    const gap_profile prof = gap_profile_of(unit_rational(alpha), unit_rational(), n);
    ++rep.checks_run;
    const rational unit(bigint(1), bigint(f.den));
    for (const rational& g : prof.distinct_gaps)
      if (g != rational(0) && g != unit)
        rep.failures.push_back({"farey_gaps", detail::point_str(alpha, rational(0)),
                                "gaps in {0, " + unit.str() + "}", g.str()});
  }
  return rep;
}

}  // namespace sosperm
