#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>

#include "sosperm/geometry.hpp"
#include "sosperm/oracle.hpp"
#include "sosperm/rational.hpp"

namespace sosperm {

using ordered_json = nlohmann::ordered_json;

/// Rationals travel as [num, den] integer pairs; never as decimal strings,
/// so every value round-trips losslessly.
inline ordered_json rational_to_json(const rational& r) {
  return ordered_json::array({to_int64(r.num()), to_int64(r.den())});
}

inline rational rational_from_json(const ordered_json& j) {
  if (!j.is_array() || j.size() != 2) throw parse_error(j.dump());
  return rational(bigint(j[0].get<std::int64_t>()), bigint(j[1].get<std::int64_t>()));
}

/// Serialization of one domain. Key order is fixed; output is byte-stable.
inline ordered_json region_record(const domain& dom) {
  ordered_json j;
  j["perm"] = dom.perm.str();
  j["n"] = dom.perm.n();
  ordered_json iv;
  iv["a"] = dom.interval.lo().num;
  iv["b"] = dom.interval.lo().den;
  iv["c"] = dom.interval.hi().num;
  iv["d"] = dom.interval.hi().den;
  j["interval"] = iv;
  j["j_bot"] = dom.j_bot;
  j["j_top"] = dom.j_top;
  j["shape"] = to_string(dom.shape);
  ordered_json vs = ordered_json::array();
  for (const param_point& v : dom.vertices)
    vs.push_back(ordered_json::array({rational_to_json(v.alpha), rational_to_json(v.beta)}));
  j["vertices"] = vs;
  j["area"] = rational_to_json(dom.area);
  return j;
}

/// Rebuilds the domain from a record and verifies every serialized field
/// against the reconstruction, so a tampered or stale record cannot pass.
inline domain domain_from_record(const ordered_json& j) {
  const sos_perm p = sos_perm::parse(j.at("perm").get<std::string>());
  domain dom = domain_of(p);
  const ordered_json expect = region_record(dom);
  if (expect != j) throw parse_error("region record does not match " + p.str());
  return dom;
}

inline ordered_json partition_to_json(const square_partition& part) {
  ordered_json j;
  j["n"] = part.n;
  j["count"] = static_cast<std::int64_t>(part.domains.size());
  ordered_json regions = ordered_json::array();
  for (const domain& dom : part.domains) regions.push_back(region_record(dom));
  j["regions"] = regions;
  return j;
}

/// Strip output: the n+1 records top to bottom plus the three-areas summary.
inline ordered_json strip_to_json(const farey_interval& iv, std::int64_t n) {
  const std::vector<domain> regions = strip_regions(iv, n);
  const std::int64_t b = iv.lo().den;
  const std::int64_t d = iv.hi().den;
  const rational w = iv.width();
  const rational half_w2 = w * w / rational(2);

  ordered_json j;
  j["n"] = n;
  ordered_json ivj;
  ivj["a"] = iv.lo().num;
  ivj["b"] = b;
  ivj["c"] = iv.hi().num;
  ivj["d"] = d;
  j["interval"] = ivj;
  j["width"] = rational_to_json(w);

  ordered_json areas;
  areas["triangle_left"] = rational_to_json(rational(d) * half_w2);
  areas["triangle_right"] = rational_to_json(rational(b) * half_w2);
  areas["trapezoid"] = rational_to_json(rational(b + d) * half_w2);
  std::set<rational> distinct;
  rational total;
  std::int64_t trapezoids = 0;
  for (const domain& dom : regions) {
    distinct.insert(dom.area);
    total += dom.area;
    if (dom.shape == region_shape::trapezoid) ++trapezoids;
  }
  ordered_json dj = ordered_json::array();
  for (const rational& a : distinct) dj.push_back(rational_to_json(a));
  areas["distinct"] = dj;
  areas["trapezoid_count"] = trapezoids;
  areas["trapezoid_is_sum"] =
      rational(b + d) * half_w2 == rational(b) * half_w2 + rational(d) * half_w2;
  areas["total"] = rational_to_json(total);
  j["areas"] = areas;

  ordered_json rj = ordered_json::array();
  for (const domain& dom : regions) rj.push_back(region_record(dom));
  j["regions"] = rj;
  return j;
}

inline ordered_json report_to_json(const oracle_report& rep) {
  ordered_json j;
  j["check"] = rep.kind;
  j["n"] = rep.n;
  j["passed"] = rep.passed();
  j["checks_run"] = rep.checks_run;
  j["skipped"] = rep.skipped;
  j["intervals"] = rep.intervals;
  j["permutations"] = rep.permutations;
  j["domains_total"] = rep.domains_total;
  j["domains_hit"] = rep.domains_hit;
  ordered_json fails = ordered_json::array();
  for (const oracle_failure& f : rep.failures) {
    ordered_json fj;
    fj["check"] = f.check;
    fj["witness"] = f.witness;
    fj["expected"] = f.expected;
    fj["actual"] = f.actual;
    fails.push_back(fj);
  }
  j["failures"] = fails;
  return j;
}

}  // namespace sosperm
