// cqsf: expansions, counts, identity suites and conjecture sweeps.
#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

#include "cqsf/colorings.hpp"
#include "cqsf/formulas.hpp"
#include "cqsf/harness.hpp"
#include "cqsf/orientations.hpp"

using namespace cqsf;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string key(const std::vector<int>& parts, bool composition) {
  return "(" + (composition ? composition_str(parts) : partition_str(parts)) + ")";
}

// coefficient table keyed by "(partition)" or "(composition)"
std::map<std::string, QPoly> expansion(const MarkedDiagram& d, const std::string& kind, const std::string& basis) {
  if (kind == "chromatic" && !d.unmarked()) throw UsageError("chromatic expansion takes an unmarked diagram");
  std::map<std::string, QPoly> out;
  if (basis == "F") {
    ColoringModel m = kind == "chromatic" ? chromatic_model(d.a) : kind == "tutte" ? tutte_model(d.a) : llt_model(d);
    QSymFunc f = qsym_to_fundamental(coloring_sum(m));
    bool shift = kind == "llt-shifted" || kind == "tutte";
    for (const auto& [al, c] : f.coeffs) out[key(al, true)] = shift ? c.shift(1) : c;
    return out;
  }
  SymFunc f;
  if (kind == "chromatic") f = chromatic_qsf(d.a);
  else if (kind == "llt") f = llt_poly(d, false);
  else if (kind == "llt-shifted") f = llt_poly(d, true);
  else f = tutte_mono(d.a);
  f = change_basis(f, parse_basis(basis));
  for (const auto& [la, c] : f.coeffs) out[key(la, false)] = c;
  return out;
}

void print_table(const std::map<std::string, QPoly>& t, const std::string& basis, std::ostream& os) {
  for (const auto& [k, c] : t) os << basis << k << "\t" << c.str() << "\n";
}

int cmd_expand(const std::string& diagram, const std::string& kind, const std::string& basis,
               const std::string& format) {
  MarkedDiagram d = MarkedDiagram::parse(diagram);
  auto t = expansion(d, kind, basis);
  if (format == "json") {
    json j = json::object();
    for (const auto& [k, c] : t) j[k] = c.str();
    std::cout << j.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "diagram,basis,partition,polynomial\n";
    for (const auto& [k, c] : t)
      std::cout << '"' << d.str() << "\"," << basis << ",\"" << k.substr(1, k.size() - 2) << "\"," << c.str() << "\n";
  } else {
    print_table(t, basis, std::cout);
  }
  return 0;
}

int emit_reports(const std::vector<CheckReport>& rs, bool timing) {
  std::cout << reports_json(rs, timing) << "\n";
  bool broken = false;
  for (const auto& r : rs) broken |= r.kind == CheckKind::theorem && !r.failures.empty();
  return broken ? 1 : 0;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(tok);
  return out;
}

int cmd_pexpand(const std::string& diagram, const std::string& side_name) {
  AreaSeq a = AreaSeq::parse(diagram);
  Side side = side_name == "chromatic" ? Side::chromatic : Side::llt;
  SymFunc adm = p_expansion_admissible(a, side);
  SymFunc direct = p_expansion_direct(a, side);
  json j;
  j["diagram"] = a.str();
  j["side"] = side_name;
  j["stat"] = pstat_name(kCalibratedPStat);
  j["matches_direct"] = adm == direct;
  json c = json::object();
  // z-normalized: coefficient of p_la / z_la
  for (const auto& [la, v] : adm.coeffs) c[key(la, false)] = (v * Rational(static_cast<long>(z_of(la)))).str();
  j["coeffs"] = c;
  std::cout << j.dump(2) << "\n";
  return adm == direct ? 0 : 1;
}

int cmd_rook(const std::string& diagram) {
  AreaSeq a = AreaSeq::parse(diagram);
  FerrersBoard b = board_of(a);
  json j;
  j["diagram"] = a.str();
  j["rows"] = b.rows;
  j["placements"] = json::array();
  for (const auto& r : enum_acyclic(a)) {
    RookPlacement p = orientation_to_rook(a, r.theta);
    j["placements"].push_back({{"orientation", orientation_str(a, r.theta)}, {"columns", p.col}, {"inversions", p.inv}});
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_orientations(const std::string& diagram, bool ostar) {
  MarkedDiagram d = MarkedDiagram::parse(diagram);
  json j;
  j["diagram"] = d.str();
  j["orientations"] = json::array();
  if (ostar) {
    for (const auto& r : enum_ostar(d)) {
      std::vector<std::string> asc;
      for (const auto& e : r.ascending) asc.push_back(std::to_string(e.source) + "->" + std::to_string(e.target));
      j["orientations"].push_back({{"ascending", asc},
                                   {"asc", r.asc},
                                   {"half_sinks", r.half_sinks},
                                   {"half_sources", r.half_sources},
                                   {"sectors", r.sectors}});
    }
  } else {
    if (!d.unmarked()) throw UsageError("acyclic orientations take an unmarked diagram");
    for (const auto& r : enum_acyclic(d.a))
      j["orientations"].push_back({{"orientation", orientation_str(d.a, r.theta)},
                                   {"asc", r.asc},
                                   {"sinks", r.sinks},
                                   {"sources", r.sources},
                                   {"sectors", r.sectors}});
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chromatic quasisymmetric functions and LLT polynomials on circular diagrams"};
  app.require_subcommand(1);

  std::string diagram, kind = "chromatic", basis = "e", format = "json";
  auto* expand = app.add_subcommand("expand", "expand X, G, G(q+1) or the Tutte sum in a basis");
  expand->add_option("--diagram", diagram, "area sequence, optionally with ;strict=..;weak=..")->required();
  expand->add_option("--kind", kind)->check(CLI::IsMember({"chromatic", "llt", "llt-shifted", "tutte"}));
  expand->add_option("--basis", basis)->check(CLI::IsMember({"m", "e", "p", "s", "F"}));
  expand->add_option("--format", format)->check(CLI::IsMember({"json", "table", "csv"}));

  std::string family = "dyck";
  int n = 1;
  auto* count = app.add_subcommand("count", "count diagrams in a family");
  count->add_option("--family", family)->required()->check(
      CLI::IsMember({"dyck", "circular", "vstrip", "circular-vstrip", "ribbon"}));
  count->add_option("--n", n)->required()->check(CLI::Range(0, 12));

  std::string suite = "identities";
  int nmax = 4;
  bool timing = false;
  int jobs = 0;
  auto* verify = app.add_subcommand("verify", "run the identity suite");
  verify->add_option("--suite", suite)->check(CLI::IsMember({"identities"}));
  verify->add_option("--nmax", nmax)->check(CLI::Range(1, 7));
  verify->add_option("--jobs", jobs)->check(CLI::NonNegativeNumber);
  verify->add_flag("--timing", timing, "report wall time per check");

  std::string conjectures = "all";
  auto* sweep = app.add_subcommand("sweep", "run conjecture sweeps");
  sweep->add_option("--conjectures", conjectures, "comma-separated check names or all");
  sweep->add_option("--nmax", nmax)->check(CLI::Range(1, 6));
  sweep->add_option("--jobs", jobs)->check(CLI::NonNegativeNumber);
  sweep->add_flag("--timing", timing);

  std::string side = "chromatic";
  auto* pexpand = app.add_subcommand("pexpand", "p-expansion from admissible words next to the direct one");
  pexpand->add_option("--diagram", diagram)->required();
  pexpand->add_option("--side", side)->check(CLI::IsMember({"chromatic", "llt"}));

  auto* rook = app.add_subcommand("rook", "rook placements of the acyclic orientations");
  rook->add_option("--diagram", diagram)->required();

  bool ostar = false;
  auto* orient = app.add_subcommand("orientations", "list acyclic orientations or O* subsets");
  orient->add_option("--diagram", diagram)->required();
  orient->add_flag("--ostar", ostar, "ascending subsets of a marked diagram");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*expand) return cmd_expand(diagram, kind, basis, format);
    if (*count) {
      std::cout << count_diagrams(n, parse_family(family)) << "\n";
      return 0;
    }
    if (*verify) {
      set_jobs(jobs);
      return emit_reports(run_identity_suite(nmax), timing);
    }
    if (*sweep) {
      set_jobs(jobs);
      // conjecture findings are data; only theorem checks can fail the run
      return emit_reports(sweep_conjectures(nmax, split(conjectures)), timing);
    }
    if (*pexpand) return cmd_pexpand(diagram, side);
    if (*rook) return cmd_rook(diagram);
    if (*orient) return cmd_orientations(diagram, ostar);
  } catch (const NotSymmetric& e) {
    std::cout << json{{"error", "NotSymmetric"}, {"witness", e.what()}}.dump() << "\n";
    return 1;
  } catch (const NotDivisible& e) {
    std::cout << json{{"error", "NotDivisible"}, {"witness", e.what()}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
