#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "sosperm/farey.hpp"
#include "sosperm/geometry.hpp"
#include "sosperm/json_io.hpp"
#include "sosperm/oracle.hpp"
#include "sosperm/permutation.hpp"
#include "sosperm/rational.hpp"
#include "sosperm/svg.hpp"

namespace sosperm {

namespace detail {

inline unit_rational parse_unit(const std::string& s) {
  return unit_rational(rational::parse(s));
}

inline farey_fraction parse_farey_fraction(const std::string& s) {
  const rational r = rational::parse(s);
  if (r < rational(0) || r > rational(1)) throw parse_error(s);
  return farey_fraction(to_int64(r.num()), to_int64(r.den()));
}

// "a/b,c/d" with witness n.
inline farey_interval parse_interval(const std::string& s, std::int64_t n) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw parse_error(s);
  return farey_interval(parse_farey_fraction(s.substr(0, comma)),
                        parse_farey_fraction(s.substr(comma + 1)), n);
}

inline void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw error("cannot open output file: " + out_path);
  file << text;
}

}  // namespace detail

/// Command dispatch behind the binary; takes argv without the program name and
/// writes to the supplied streams so tests can drive it in-process.
/// Exit codes: 0 ok, 1 oracle failure, 2 malformed input.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sos permutations of f(x) = alpha*x + beta mod 1 and their parameter-space geometry"};
  app.require_subcommand(1);

  std::string alpha_text, beta_text = "0", interval_text, perm_text;
  std::string format = "json", out_path;
  std::int64_t n = 0, grid = 0, trials = 200, width = 800, labels = 40;
  std::uint64_t seed = 42;

  CLI::App* c_perm = app.add_subcommand("perm", "Permutation sorting f(0..n)");
  c_perm->add_option("--alpha", alpha_text)->required();
  c_perm->add_option("--beta", beta_text);
  c_perm->add_option("--n", n)->required()->check(CLI::PositiveNumber);

  CLI::App* c_orbit = app.add_subcommand("orbit", "All n+1 permutations over beta");
  c_orbit->add_option("--alpha", alpha_text)->required();
  c_orbit->add_option("--n", n)->required()->check(CLI::PositiveNumber);

  CLI::App* c_farey = app.add_subcommand("farey", "Farey sequence F(n)");
  c_farey->add_option("--n", n)->required()->check(CLI::PositiveNumber);

  CLI::App* c_rec = app.add_subcommand("recurrence", "Permutation of a Farey interval");
  c_rec->add_option("--interval", interval_text)->required();
  c_rec->add_option("--n", n)->required()->check(CLI::PositiveNumber);

  CLI::App* c_domain = app.add_subcommand("domain", "Region record of a permutation");
  c_domain->add_option("--perm", perm_text)->required();

  CLI::App* c_part = app.add_subcommand("partition", "Full partition of the unit square");
  c_part->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  c_part->add_option("--format", format)->check(CLI::IsMember({"json", "svg"}));
  c_part->add_option("--width", width)->check(CLI::PositiveNumber);
  c_part->add_option("--labels", labels)->check(CLI::NonNegativeNumber);
  c_part->add_option("--out", out_path);

  CLI::App* c_strip = app.add_subcommand("strip", "Regions over one Farey interval");
  c_strip->add_option("--interval", interval_text)->required();
  c_strip->add_option("--n", n)->required()->check(CLI::PositiveNumber);

  CLI::App* c_gaps = app.add_subcommand("gaps", "Sorted values and gap profile");
  c_gaps->add_option("--alpha", alpha_text)->required();
  c_gaps->add_option("--beta", beta_text);
  c_gaps->add_option("--n", n)->required()->check(CLI::PositiveNumber);

  CLI::App* c_refine = app.add_subcommand("refine", "Children at size n+1");
  c_refine->add_option("--perm", perm_text)->required();

  CLI::App* c_count = app.add_subcommand("count", "Number of Sos permutations");
  c_count->add_option("--n", n)->required()->check(CLI::PositiveNumber);

  CLI::App* c_verify = app.add_subcommand("verify", "Run the brute-force oracles");
  c_verify->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  c_verify->add_option("--grid", grid)->check(CLI::PositiveNumber);
  c_verify->add_option("--trials", trials)->check(CLI::PositiveNumber);
  c_verify->add_option("--seed", seed);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*c_perm) {
      out << sos_permutation(detail::parse_unit(alpha_text), detail::parse_unit(beta_text), n).str()
          << "\n";
    } else if (*c_orbit) {
      for (const sos_perm& p : sos_orbit(detail::parse_unit(alpha_text), n))
        out << p.str() << "\n";
    } else if (*c_farey) {
      for (const farey_fraction& f : farey_sequence(n)) out << f.str() << "\n";
    } else if (*c_rec) {
      out << sos_recurrence(detail::parse_interval(interval_text, n), n).str() << "\n";
    } else if (*c_domain) {
      out << region_record(domain_of(sos_perm::parse(perm_text))).dump(2) << "\n";
    } else if (*c_part) {
      const square_partition part = partition(n);
      if (format == "svg")
        detail::emit(render_svg(part, width, labels), out_path, out);
      else
        detail::emit(partition_to_json(part).dump(2) + "\n", out_path, out);
    } else if (*c_strip) {
      out << strip_to_json(detail::parse_interval(interval_text, n), n).dump(2) << "\n";
    } else if (*c_gaps) {
      const gap_profile prof =
          gap_profile_of(detail::parse_unit(alpha_text), detail::parse_unit(beta_text), n);
      out << "values:";
      for (const unit_rational& v : prof.sorted_values) out << " " << v.value().str();
      out << "\ngaps:";
      for (const rational& g : prof.gaps) out << " " << g.str();
      out << "\ndistinct:";
      for (const rational& g : prof.distinct_gaps) out << " " << g.str();
      out << "\n";
    } else if (*c_refine) {
      for (const sos_perm& q : refine(sos_perm::parse(perm_text))) out << q.str() << "\n";
    } else if (*c_count) {
      out << count_sos(n) << "\n";
    } else if (*c_verify) {
      if (grid == 0) grid = 2 * n * n;
      const oracle_report reports[] = {
          oracle_partition_check(n, grid),
          oracle_bijection_check(n),
          oracle_three_gaps(n, trials, seed),
      };
      ordered_json j = ordered_json::array();
      bool ok = true;
      for (const oracle_report& rep : reports) {
        j.push_back(report_to_json(rep));
        ok = ok && rep.passed();
      }
      out << j.dump(2) << "\n";
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace sosperm
