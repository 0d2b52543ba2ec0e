#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "sosperm/farey.hpp"
#include "sosperm/permutation.hpp"

using sosperm::bigint;
using sosperm::count_sos;
using sosperm::cyclic_shift;
using sosperm::enumerate_sos;
using sosperm::farey_fraction;
using sosperm::farey_interval;
using sosperm::farey_sequence;
using sosperm::frac_eval;
using sosperm::gap_profile_of;
using sosperm::mediant;
using sosperm::rational;
using sosperm::sos_orbit;
using sosperm::sos_perm;
using sosperm::sos_permutation;
using sosperm::sos_recurrence;
using sosperm::unit_rational;

namespace {

unit_rational ur(const char* text) { return unit_rational(rational::parse(text)); }

sos_perm perm(const char* text) { return sos_perm::parse(text); }

}  // namespace

TEST_CASE("one-line notation round trip") {
  CHECK(perm("42075316").entries() == std::vector<std::int64_t>{4, 2, 0, 7, 5, 3, 1, 6});
  CHECK(perm("4 2 0 7 5 3 1 6") == perm("42075316"));
  CHECK(perm("42075316").str() == "42075316");
  CHECK(perm("10 2 0 1 3 4 5 6 7 8 9").str() == "10 2 0 1 3 4 5 6 7 8 9");
  CHECK(perm("10").entries() == std::vector<std::int64_t>{1, 0});
  CHECK_THROWS_AS(sos_perm::parse("4207531"), sosperm::parse_error);   // misses 6
  CHECK_THROWS_AS(sos_perm::parse("0 1 1"), sosperm::parse_error);
  CHECK_THROWS_AS(sos_perm::parse("0 2"), sosperm::parse_error);
  CHECK_THROWS_AS(sos_perm::parse(""), sosperm::parse_error);
  CHECK_THROWS_AS(sos_perm::parse("0 -1"), sosperm::parse_error);
  CHECK_THROWS_AS(sos_perm::parse("0 99999999999999999999999"), sosperm::parse_error);
}

TEST_CASE("sorting permutation of the running example") {
  CHECK(sos_permutation(ur("11/25"), ur("8/25"), 7) == perm("42075316"));
  CHECK(sos_permutation(ur("11/25"), ur("9/25"), 7) == perm("64207531"));
  CHECK(sos_permutation(ur("11/25"), ur("0"), 7) == perm("07531642"));
}

TEST_CASE("ties break toward the smaller index") {
  CHECK(sos_permutation(ur("1/2"), ur("0"), 2) == perm("021"));
  CHECK(sos_permutation(ur("0"), ur("0"), 3) == perm("0123"));
  CHECK(sos_permutation(ur("1/3"), ur("0"), 7).entries() ==
        std::vector<std::int64_t>{0, 3, 6, 1, 4, 7, 2, 5});
}

TEST_CASE("recurrence reproduces the worked derivation") {
  const farey_interval iv(farey_fraction(3, 7), farey_fraction(1, 2), 7);
  const sos_perm p = sos_recurrence(iv, 7);
  CHECK(p == perm("07531642"));
  const std::vector<std::int64_t> deltas{7, -2, -2, -2, 5, -2, -2};
  for (std::size_t k = 0; k + 1 < 8; ++k) CHECK(p(k + 1) - p(k) == deltas[k]);
}

TEST_CASE("recurrence worked values") {
  CHECK(sos_recurrence(farey_interval(farey_fraction(0, 1), farey_fraction(1, 1), 1), 1) ==
        perm("01"));
  CHECK(sos_recurrence(farey_interval(farey_fraction(2, 5), farey_fraction(3, 7), 9), 9) ==
        perm("0 5 3 8 1 6 4 9 2 7"));
  CHECK_THROWS_AS(sos_recurrence(farey_interval(farey_fraction(3, 7), farey_fraction(1, 2), 7), 9),
                  sosperm::invalid_interval);
}

TEST_CASE("cyclic shift") {
  CHECK(cyclic_shift(perm("203154"), 1) == perm("420315"));
  CHECK(cyclic_shift(perm("07531642"), 0) == perm("07531642"));
  CHECK(cyclic_shift(perm("07531642"), 3) == perm("64207531"));
  CHECK(cyclic_shift(perm("07531642"), 3) == sos_permutation(ur("11/25"), ur("9/25"), 7));
  const sos_perm p = perm("9 2 7 0 5 3 8 1 6 4");
  CHECK(cyclic_shift(p, p.size()) == p);
  CHECK(cyclic_shift(cyclic_shift(p, 4), 6) == p);
  CHECK(cyclic_shift(p, -3) == cyclic_shift(p, 7));
  sos_perm q = p;
  for (int i = 0; i <= p.n(); ++i) q = cyclic_shift(q, 1);
  CHECK(q == p);
}

TEST_CASE("orbit of the running example") {
  const std::vector<sos_perm> orbit = sos_orbit(ur("11/25"), 7);
  REQUIRE(orbit.size() == 8);
  CHECK(std::count(orbit.begin(), orbit.end(), perm("07531642")) == 1);
  CHECK(std::count(orbit.begin(), orbit.end(), perm("42075316")) == 1);
}

TEST_CASE("orbit basics") {
  const std::vector<sos_perm> tiny = sos_orbit(ur("2/7"), 1);
  REQUIRE(tiny.size() == 2);
  CHECK(tiny[0] == perm("01"));
  CHECK(tiny[1] == perm("10"));

  const std::vector<sos_perm> orbit = sos_orbit(ur("5/12"), 9);
  REQUIRE(orbit.size() == 10);
  const sos_perm base = perm("0 5 3 8 1 6 4 9 2 7");
  std::set<std::vector<std::int64_t>> seen;
  for (std::int64_t k = 0; k <= 9; ++k) {
    CHECK(orbit[k] == cyclic_shift(base, k));
    seen.insert(orbit[k].entries());
  }
  CHECK(seen.size() == 10);
}

TEST_CASE("orbit equals the set of permutations reachable through beta") {
  // One sample inside each beta band: band ends at 1 - f(value) for each
  // sorted value, scanned from below.
  for (const char* alpha_text : {"11/25", "5/12", "21/50"}) {
    const unit_rational alpha = ur(alpha_text);
    const std::int64_t n = 9;
    std::vector<rational> values;
    for (std::int64_t i = 0; i <= n; ++i) values.push_back(frac_eval(alpha, unit_rational(), i).value());
    std::sort(values.begin(), values.end());
    std::vector<rational> cuts;  // ascending band boundaries, ending at 1
    for (std::int64_t i = n; i >= 0; --i) cuts.push_back(rational(1) - values[i]);
    std::set<std::vector<std::int64_t>> sampled;
    rational prev(0);
    for (const rational& cut : cuts) {
      const unit_rational beta((prev + cut) / rational(2));
      sampled.insert(sos_permutation(alpha, beta, n).entries());
      prev = cut;
    }
    std::set<std::vector<std::int64_t>> orbit;
    for (const sos_perm& p : sos_orbit(alpha, n)) orbit.insert(p.entries());
    CHECK(orbit == sampled);
  }
}

TEST_CASE("count formula") {
  const std::vector<std::int64_t> expected{2, 6, 16, 30, 60, 84, 144, 198, 280, 352};
  for (std::int64_t n = 1; n <= 10; ++n) CHECK(count_sos(n) == expected[n - 1]);
  CHECK(count_sos(5) == 60);
}

TEST_CASE("enumeration at small sizes") {
  const std::vector<sos_perm> two = enumerate_sos(2);
  REQUIRE(two.size() == 6);
  const char* fig4[] = {"012", "201", "120", "021", "102", "210"};
  for (std::size_t i = 0; i < 6; ++i) CHECK(two[i] == perm(fig4[i]));

  CHECK(enumerate_sos(3).size() == 16);
  CHECK(enumerate_sos(7).size() == 144);
  for (std::int64_t n = 1; n <= 12; ++n) {
    const std::vector<sos_perm> all = enumerate_sos(n);
    CHECK(static_cast<std::int64_t>(all.size()) == count_sos(n));
    std::set<std::vector<std::int64_t>> distinct;
    for (const sos_perm& p : all) distinct.insert(p.entries());
    CHECK(distinct.size() == all.size());
  }
}

TEST_CASE("recurrence equals the definitional sort at the mediant, up to 40") {
  for (std::int64_t n = 1; n <= 40; ++n) {
    const auto seq = farey_sequence(n);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      const farey_interval iv(seq[i], seq[i + 1], n);
      const unit_rational med(mediant(iv).to_rational());
      CHECK(sos_recurrence(iv, n) == sos_permutation(med, unit_rational(), n));
    }
  }
}

TEST_CASE("mediant values take the modular form") {
  for (std::int64_t n = 1; n <= 30; ++n) {
    const auto seq = farey_sequence(n);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      const farey_interval iv(seq[i], seq[i + 1], n);
      const farey_fraction med = mediant(iv);
      const unit_rational alpha(med.to_rational());
      for (std::int64_t x = 0; x <= n; ++x) {
        const std::int64_t residue = (x * med.num) % med.den;
        CHECK(frac_eval(alpha, unit_rational(), x).value() ==
              rational(bigint(residue), bigint(med.den)));
      }
    }
  }
}

TEST_CASE("first and last entries are the interval denominators") {
  for (std::int64_t n = 2; n <= 40; ++n) {
    const auto seq = farey_sequence(n);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      const sos_perm p = sos_recurrence(farey_interval(seq[i], seq[i + 1], n), n);
      CHECK(p(1) == seq[i].den);
      CHECK(p(n) == seq[i + 1].den);
    }
  }
}

TEST_CASE("the permutation is constant across an interval") {
  std::mt19937_64 gen(5);
  const struct {
    farey_fraction lo, hi;
    std::int64_t n;
  } cases[] = {
      {{3, 7}, {1, 2}, 7},
      {{2, 5}, {3, 7}, 9},
      {{0, 1}, {1, 12}, 12},
  };
  for (const auto& c : cases) {
    const farey_interval iv(c.lo, c.hi, c.n);
    const sos_perm expected = sos_recurrence(iv, c.n);
    for (int trial = 0; trial < 200; ++trial) {
      const std::uint64_t den = std::uint64_t(1) << 40;
      const std::uint64_t t = 1 + gen() % (den - 1);
      const rational alpha =
          iv.lo().to_rational() + iv.width() * rational(bigint(t), bigint(den));
      CHECK(sos_permutation(unit_rational(alpha), unit_rational(), c.n) == expected);
    }
  }
}

TEST_CASE("floor identity inside an interval") {
  for (std::int64_t n = 1; n <= 20; ++n) {
    const auto seq = farey_sequence(n);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      const farey_interval iv(seq[i], seq[i + 1], n);
      const rational a_over_b = iv.lo().to_rational();
      // the mediant plus two skewed interior points stand in for "every alpha"
      for (int part : {1, 2, 3}) {
        const rational alpha = iv.lo().to_rational() +
                               iv.width() * rational(bigint(part), bigint(4));
        for (std::int64_t x = 0; x <= n; ++x) {
          const rational lhs =
              rational(1) - frac_eval(unit_rational(alpha), unit_rational(), x).value();
          const rational floor_term(bigint((a_over_b * rational(x)).floor()));
          CHECK(lhs == rational(1) + floor_term - rational(x) * alpha);
        }
      }
    }
  }
}

TEST_CASE("gap profile of the running example") {
  const sosperm::gap_profile prof = gap_profile_of(ur("11/25"), ur("8/25"), 7);
  const std::set<rational> expected{rational(bigint(2), bigint(25)),
                                    rational(bigint(3), bigint(25)),
                                    rational(bigint(1), bigint(5))};
  CHECK(prof.distinct_gaps == expected);
  CHECK(rational(bigint(2), bigint(25)) + rational(bigint(3), bigint(25)) ==
        rational(bigint(1), bigint(5)));
}

TEST_CASE("gap profile at the mediant of (2/5, 3/7)") {
  const sosperm::gap_profile prof = gap_profile_of(ur("5/12"), ur("0"), 9);
  const std::set<rational> expected{rational(bigint(1), bigint(12)),
                                    rational(bigint(1), bigint(6))};
  CHECK(prof.distinct_gaps == expected);
  std::vector<rational> sorted_gaps = prof.gaps;
  std::sort(sorted_gaps.begin(), sorted_gaps.end());
  CHECK(std::count(sorted_gaps.begin(), sorted_gaps.end(), rational(bigint(1), bigint(12))) == 8);
  CHECK(std::count(sorted_gaps.begin(), sorted_gaps.end(), rational(bigint(1), bigint(6))) == 2);
}

TEST_CASE("gap profile on a Farey fraction") {
  const sosperm::gap_profile prof = gap_profile_of(ur("1/3"), ur("0"), 7);
  for (const rational& g : prof.distinct_gaps)
    CHECK((g == rational(0) || g == rational(bigint(1), bigint(3))));
  std::vector<rational> sorted_gaps = prof.gaps;
  std::sort(sorted_gaps.begin(), sorted_gaps.end());
  CHECK(std::count(sorted_gaps.begin(), sorted_gaps.end(), rational(0)) == 5);
  CHECK(std::count(sorted_gaps.begin(), sorted_gaps.end(), rational(bigint(1), bigint(3))) == 3);
}

TEST_CASE("gap structure over random parameters") {
  std::mt19937_64 gen(314);
  for (int trial = 0; trial < 400; ++trial) {
    const std::int64_t qa = 2 + static_cast<std::int64_t>(gen() % 100000);
    const std::int64_t qb = 2 + static_cast<std::int64_t>(gen() % 100000);
    const unit_rational alpha(rational(bigint(gen() % qa), bigint(qa)));
    const unit_rational beta(rational(bigint(gen() % qb), bigint(qb)));
    const std::int64_t n = 1 + static_cast<std::int64_t>(gen() % 30);
    const sosperm::gap_profile prof = gap_profile_of(alpha, beta, n);
    REQUIRE(prof.gaps.size() == static_cast<std::size_t>(n + 1));
    rational sum;
    for (const rational& g : prof.gaps) sum += g;
    CHECK(sum == rational(1));
    CHECK(prof.distinct_gaps.size() <= 3);
    if (prof.distinct_gaps.size() == 3) {
      auto it = prof.distinct_gaps.begin();
      const rational s0 = *it++;
      const rational s1 = *it++;
      CHECK(s0 + s1 == *it);
    }
    // wrap gap definition
    CHECK(prof.gaps.back() ==
          rational(1) - prof.sorted_values.back().value() + prof.sorted_values.front().value());
  }
}

TEST_CASE("orbits are closed under shifting and pairwise distinct") {
  std::mt19937_64 gen(77);
  for (int trial = 0; trial < 50; ++trial) {
    const std::int64_t q = 2 + static_cast<std::int64_t>(gen() % 10000);
    const unit_rational alpha(rational(bigint(gen() % q), bigint(q)));
    const std::int64_t n = 1 + static_cast<std::int64_t>(gen() % 15);
    const std::vector<sos_perm> orbit = sos_orbit(alpha, n);
    REQUIRE(orbit.size() == static_cast<std::size_t>(n + 1));
    std::set<std::vector<std::int64_t>> members;
    for (const sos_perm& p : orbit) members.insert(p.entries());
    CHECK(members.size() == orbit.size());
    for (const sos_perm& p : orbit)
      CHECK(members.count(cyclic_shift(p, 1).entries()) == 1);
  }
}
