#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sosperm/errors.hpp"
#include "sosperm/farey.hpp"
#include "sosperm/permutation.hpp"
#include "sosperm/rational.hpp"

namespace sosperm {

/// A point of the (alpha, beta) parameter square.
struct param_point {
  rational alpha;
  rational beta;

  friend bool operator==(const param_point& x, const param_point& y) {
    return x.alpha == y.alpha && x.beta == y.beta;
  }
  friend bool operator!=(const param_point& x, const param_point& y) { return !(x == y); }
};

/// Signed shoelace area; positive for counterclockwise vertex order.
inline rational polygon_area(const std::vector<param_point>& vs) {
  rational twice;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const param_point& p = vs[i];
    const param_point& q = vs[(i + 1) % vs.size()];
    twice += p.alpha * q.beta - q.alpha * p.beta;
  }
  return twice / rational(2);
}

enum class region_shape { triangle_left, triangle_right, trapezoid };

inline const char* to_string(region_shape s) {
  switch (s) {
    case region_shape::triangle_left: return "triangle_left";
    case region_shape::triangle_right: return "triangle_right";
    default: return "trapezoid";
  }
}

inline region_shape region_shape_from_string(const std::string& s) {
  if (s == "triangle_left") return region_shape::triangle_left;
  if (s == "triangle_right") return region_shape::triangle_right;
  if (s == "trapezoid") return region_shape::trapezoid;
  throw parse_error(s);
}

/// The parameter region producing one Sos permutation: a vertical strip over
/// a Farey interval, cut below by pi(0)*alpha + beta = j_bot and above by
/// pi(n)*alpha + beta = j_top. The bottom and left/right cuts carry the
/// half-open convention: bottom edge in, top edge out, vertical edges decided
/// only by direct evaluation.
struct domain {
  sos_perm perm;
  farey_interval interval;
  std::int64_t j_bot;
  std::int64_t j_top;
  std::vector<param_point> vertices;  // counterclockwise, 3 or 4 points
  region_shape shape;
  rational area;

  rational bottom_boundary_at(const rational& alpha) const {
    return rational(j_bot) - rational(perm(0)) * alpha;
  }
  rational top_boundary_at(const rational& alpha) const {
    return rational(j_top) - rational(perm(perm.n())) * alpha;
  }
};

/// Reconstructs the full domain of a Sos permutation. The neighbors of the
/// zero entry give the interval denominators; the permutation is then rebuilt
/// from that interval and must match, otherwise the input was never produced
/// by any (alpha, beta) and not_sos_permutation is thrown.
inline domain domain_of(const sos_perm& p) {
  const std::int64_t n = p.n();
  const std::int64_t m = n + 1;
  std::int64_t k = 0;
  while (p(k) != 0) ++k;
  const std::int64_t b = p((k + 1) % m);
  const std::int64_t d = p((k - 1 + m) % m);

  farey_interval iv = [&] {
    try {
      return interval_from_denominators(b, d, n);
    } catch (const error&) {
      throw not_sos_permutation(p.str() + " is not a Sos permutation");
    }
  }();
  if (cyclic_shift(sos_recurrence(iv, n), k) != p)
    throw not_sos_permutation(p.str() + " is not a Sos permutation");

  const std::int64_t a = iv.lo().num;
  const std::int64_t p0 = p(0);
  const std::int64_t pn = p(n);
  const std::int64_t jb = p0 == 0 ? 0 : 1 + (a * p0) / b;
  const std::int64_t jt = 1 + (a * pn) / b;

  const rational lo = iv.lo().to_rational();
  const rational hi = iv.hi().to_rational();
  const auto bottom = [&](const rational& x) { return rational(jb) - rational(p0) * x; };
  const auto top = [&](const rational& x) { return rational(jt) - rational(pn) * x; };
  const param_point bl{lo, bottom(lo)};
  const param_point br{hi, bottom(hi)};
  const param_point tr{hi, top(hi)};
  const param_point tl{lo, top(lo)};

  // The cut lines meet at alpha = (jt - jb)/(pn - p0), never strictly inside
  // the interval; on an endpoint the corner pair collapses to a triangle.
  const rational xstar(bigint(jt - jb), bigint(pn - p0));
  region_shape shape;
  std::vector<param_point> vertices;
  if (xstar == hi) {
    shape = region_shape::triangle_left;
    vertices = {bl, br, tl};
  } else if (xstar == lo) {
    shape = region_shape::triangle_right;
    vertices = {bl, br, tr};
  } else {
    if (lo < xstar && xstar < hi)
      throw std::logic_error("cut lines intersect inside " + iv.str());
    shape = region_shape::trapezoid;
    vertices = {bl, br, tr, tl};
  }

  const rational area =
      iv.width() * (rational(jt - jb) + (lo + hi) * rational(bigint(p0 - pn), bigint(2)));
  for (const param_point& v : vertices)
    if (v.alpha < rational(0) || v.alpha > rational(1) || v.beta < rational(0) ||
        v.beta > rational(1))
      throw std::logic_error("vertex outside the unit square for " + p.str());

  return domain{p, iv, jb, jt, std::move(vertices), shape, area};
}

/// The n+1 domains over one Farey interval, ordered top to bottom (shift
/// index n down to 0, the beta-band order).
inline std::vector<domain> strip_regions(const farey_interval& iv, std::int64_t n) {
  const farey_interval checked(iv.lo(), iv.hi(), n);
  const sos_perm base = sos_recurrence(checked, n);
  std::vector<domain> regions;
  regions.reserve(n + 1);
  for (std::int64_t k = n; k >= 0; --k) regions.push_back(domain_of(cyclic_shift(base, k)));
  return regions;
}

/// The full partition of the unit square at size n: strips left to right,
/// regions top to bottom within each strip.
struct square_partition {
  std::int64_t n;
  std::vector<domain> domains;
};

inline square_partition partition(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("partition: n must be positive");
  const std::vector<farey_fraction> seq = farey_sequence(n);
  square_partition part{n, {}};
  part.domains.reserve(count_sos(n));
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    std::vector<domain> strip = strip_regions(farey_interval(seq[i], seq[i + 1], n), n);
    for (domain& dom : strip) part.domains.push_back(std::move(dom));
  }
  return part;
}

/// The 1, 2, or 3 size-(n+1) permutations whose domains tile the domain of p,
/// in enumeration order. Candidates are the size-(n+1) strips covering p's
/// interval (the interval survives, or splits at its mediant when b+d = n+1);
/// a candidate is kept when all its vertices lie in the closure of p's domain,
/// and the kept areas must add back up to the parent area.
inline std::vector<sos_perm> refine(const sos_perm& p) {
  const domain parent = domain_of(p);
  const std::int64_t n = p.n();
  const farey_fraction lo = parent.interval.lo();
  const farey_fraction hi = parent.interval.hi();

  std::vector<farey_interval> child_intervals;
  if (lo.den + hi.den > n + 1) {
    child_intervals.emplace_back(lo, hi, n + 1);
  } else {
    const farey_fraction med = mediant(parent.interval);
    child_intervals.emplace_back(lo, med, n + 1);
    child_intervals.emplace_back(med, hi, n + 1);
  }

  const rational plo = lo.to_rational();
  const rational phi = hi.to_rational();
  const auto inside_closure = [&](const param_point& v) {
    return plo <= v.alpha && v.alpha <= phi &&
           parent.bottom_boundary_at(v.alpha) <= v.beta &&
           v.beta <= parent.top_boundary_at(v.alpha);
  };

  std::vector<sos_perm> children;
  rational total;
  for (const farey_interval& civ : child_intervals) {
    const sos_perm base = sos_recurrence(civ, n + 1);
    for (std::int64_t k = 0; k <= n + 1; ++k) {
      const domain cand = domain_of(cyclic_shift(base, k));
      bool inside = true;
      for (const param_point& v : cand.vertices)
        if (!inside_closure(v)) {
          inside = false;
          break;
        }
      if (inside) {
        children.push_back(cand.perm);
        total += cand.area;
      }
    }
  }
  if (total != parent.area || children.empty() || children.size() > 3)
    throw std::logic_error("refinement of " + p.str() + " does not tile its domain");
  return children;
}

/// Beta coordinates in (0, 1] where the diagonal lines i*alpha + beta = j
/// (1 <= j <= i <= n) cross the vertical line alpha = a/b; always the evenly
/// spaced set {1/b, 2/b, ..., 1}. The fraction 1/1 is answered through the
/// mod-1 identification with 0/1, where the raw line family degenerates.
inline std::vector<rational> crossing_coordinates(const farey_fraction& edge_alpha,
                                                  std::int64_t n) {
  if (edge_alpha.den > n)
    throw not_in_farey(edge_alpha.str() + " is not in F(" + std::to_string(n) + ")");
  if (edge_alpha.num == edge_alpha.den) return {rational(1)};
  const std::int64_t a = edge_alpha.num;
  const std::int64_t b = edge_alpha.den;
  std::set<rational> coords;
  for (std::int64_t i = 1; i <= n; ++i) {
    const std::int64_t j = (i * a) / b + 1;  // unique candidate with crossing in (0, 1]
    if (j <= i) coords.insert(rational(bigint(j)) - rational(bigint(i * a), bigint(b)));
  }
  return {coords.begin(), coords.end()};
}

/// Exact integral over the interval of the k-th gap as a function of alpha.
/// Each gap is linear there (b*alpha - a, c - d*alpha, or their sum), so the
/// two-point trapezoid rule integrates it exactly. Equals the area of the
/// k-th domain from the top of the strip.
inline rational gap_area_integral(const farey_interval& iv, std::int64_t n,
                                  std::int64_t k) {
  const farey_interval checked(iv.lo(), iv.hi(), n);
  if (k < 0 || k > n) throw std::invalid_argument("gap_area_integral: k out of range");
  const std::int64_t b = checked.lo().den;
  const std::int64_t d = checked.hi().den;
  const sos_perm pi = sos_recurrence(checked, n);

  const rational at_b(bigint(1), bigint(b));   // value of c - d*alpha at the left edge
  const rational at_d(bigint(1), bigint(d));   // value of b*alpha - a at the right edge
  rational value_lo, value_hi;
  const bool wrap = k == n;
  if (!wrap && pi(k) <= n - b) {
    value_lo = rational(0);
    value_hi = at_d;
  } else if (wrap || pi(k) >= d) {
    value_lo = at_b;
    value_hi = rational(0);
  } else {
    value_lo = at_b;
    value_hi = at_d;
  }
  return checked.width() * (value_lo + value_hi) / rational(2);
}

/// Smallest and largest domain areas over the whole partition, with every
/// permutation attaining them, in partition order.
struct area_extremes_result {
  rational min_area;
  std::vector<sos_perm> min_perms;
  rational max_area;
  std::vector<sos_perm> max_perms;
};

inline area_extremes_result area_extremes(std::int64_t n) {
  if (n < 2) throw degenerate_n(n);
  const square_partition part = partition(n);
  area_extremes_result res{part.domains.front().area, {}, part.domains.front().area, {}};
  for (const domain& dom : part.domains) {
    if (dom.area < res.min_area) res.min_area = dom.area;
    if (dom.area > res.max_area) res.max_area = dom.area;
  }
  for (const domain& dom : part.domains) {
    if (dom.area == res.min_area) res.min_perms.push_back(dom.perm);
    if (dom.area == res.max_area) res.max_perms.push_back(dom.perm);
  }
  return res;
}

}  // namespace sosperm
