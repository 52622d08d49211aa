// Acceptance run: one PASS/FAIL line per criterion, notes indented below it.
//
// Exit status is 0 when every criterion has its recorded outcome. Criteria 1
// and 11 compare against printed statements that computation contradicts;
// they are evaluated literally, print FAIL, and are listed in kKnownRed so
// that an unexpected flip in either direction fails the run.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>

#include "cqsf/formulas.hpp"
#include "cqsf/harness.hpp"

using namespace cqsf;

namespace {

// all comparisons are exact; only wall-clock budgets carry tolerances
constexpr double kGoldenXSeconds = 5.0;
constexpr double kSuiteSeconds = 15 * 60.0;
const std::set<int> kKnownRed{1, 11};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void note(const std::string& s) { notes.push_back(s); }
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      note("failed: " + what);
    }
  }
};

// runs the named harness checks for n in their range clipped to n_max
void run_checks(Outcome& o, const std::vector<std::string>& names, int n_max) {
  for (const auto& name : names) {
    const CheckDef& def = find_check(name);
    long tested = 0;
    bool ok = true;
    for (int n = def.min_n; n <= std::min(n_max, def.max_n); ++n) {
      CheckReport r = def.run(n);
      tested += r.tested;
      if (!r.ok()) {
        ok = false;
        std::string w = r.failures.empty() ? "no violation observed" : r.failures.front().diagram + ": " +
                                                                           r.failures.front().witness;
        o.require(false, name + " n=" + std::to_string(n) + " " + r.status() + " (" + w + ")");
      }
    }
    if (ok) o.note(name + ": " + std::to_string(tested) + " cases");
  }
}

SymFunc x_e(const AreaSeq& a) { return change_basis(chromatic_qsf(a), Basis::e); }

std::string expansion_str(const SymFunc& f) {
  std::ostringstream os;
  bool first = true;
  for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) {
    os << (first ? "" : " + ") << "(" << it->second.str() << ")e[" << partition_str(it->first) << "]";
    first = false;
  }
  return os.str();
}

Outcome criterion1() {
  Outcome o;
  const QPoly first = QPoly::parse("1+4*q+8*q^2+11*q^3+12*q^4+11*q^5+8*q^6+4*q^7+q^8");
  const QPoly second = QPoly::parse("q^2+3*q^3+4*q^4+3*q^5+q^6");
  auto t0 = Clock::now();
  SymFunc x = x_e(AreaSeq::validate({2, 2, 3, 2, 1, 0}));
  double secs = seconds_since(t0);
  o.require(secs < kGoldenXSeconds, "runtime " + std::to_string(secs) + " s");
  // the printed labels e_11111 and e_21110 read as partitions (1,1,1,1,1) and (2,1,1,1)
  o.require(x.coeff({1, 1, 1, 1, 1}) == first, "coefficient of e[1,1,1,1,1] is " + x.coeff({1, 1, 1, 1, 1}).str());
  o.require(x.coeff({2, 1, 1, 1}) == second, "coefficient of e[2,1,1,1] is " + x.coeff({2, 1, 1, 1}).str());
  bool appears = false;
  for (const auto& [la, c] : x.coeffs) appears |= c == first || c == second;
  o.require(appears, "neither printed polynomial occurs as any e-coefficient");
  o.note("computed X(2,2,3,2,1,0) = " + expansion_str(x) + " in " + std::to_string(secs) + " s");
  o.note("printed polynomials have degree 8 and sum to [2][3][4][3][3], an area-8 product;");
  for (const char* alt : {"3,2,2,1,0", "2,3,2,1,0"}) {
    SymFunc y = x_e(AreaSeq::parse(alt));
    bool match = y.coeff({5}) == first && y.coeff({4, 1}) == second;
    o.note(std::string("  X(") + alt + ") has them as e[5], e[4,1]: " + (match ? "yes" : "no"));
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  const QPoly printed =
      QPoly::parse("5*q^10+25*q^9+75*q^8+175*q^7+325*q^6+500*q^5+600*q^4+550*q^3+450*q^2+300*q+120");
  auto t = g_series_and_tildec(5, 5);
  o.require(t.tildec_log[5] == printed, "formal log gives " + t.tildec_log[5].str());
  o.require(t.tildec_recurrence[5] == printed, "recurrence gives " + t.tildec_recurrence[5].str());
  o.require(t.tildec_hn[5] == printed, "H_5 route gives " + t.tildec_hn[5].str());
  o.note("tilde c_5 = " + printed.str() + " by formal log, recurrence and H_5");
  return o;
}

Outcome criterion3() {
  Outcome o;
  o.require(count_diagrams(3, Family::circular) == 18, "circular n=3");
  const long long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 1; n <= 8; ++n) o.require(count_diagrams(n, Family::dyck) == catalan[n], "dyck n=" + std::to_string(n));
  for (int n = 1; n <= 7; ++n) {
    long long b = 1;
    for (int i = 1; i <= n - 1; ++i) b = b * (n + i) / i;  // binom(2n-1, n-1)
    o.require(count_diagrams(n, Family::circular) == (n + 2) * b - (1LL << (2 * n - 1)),
              "circular n=" + std::to_string(n));
  }
  const long long cvs[] = {1, 9, 65, 449, 3009, 19721};
  for (int n = 1; n <= 6; ++n)
    o.require(count_diagrams(n, Family::circular_vstrip) == cvs[n - 1], "circular vstrip n=" + std::to_string(n));
  const long long schroeder[] = {1, 3, 11, 45, 197, 903};
  for (int n = 1; n <= 6; ++n)
    o.require(count_diagrams(n, Family::vstrip) == schroeder[n - 1], "vstrip n=" + std::to_string(n));
  o.note("circular vstrip n=1..6: 1, 9, 65, 449, 3009, 19721; vstrip n=1..6: 1, 3, 11, 45, 197, 903");
  return o;
}

Outcome criterion4() {
  Outcome o;
  run_checks(o,
             {"sink_sum_product", "unique_sink_product", "cn_coefficient", "sink_identity", "half_sink_identity",
              "e1n_coefficient", "d_sum", "bounce_vanishing", "palindromic", "symmetry_chromatic", "symmetry_llt",
              "symmetry_llt_ribbon"},
             7);
  return o;
}

Outcome criterion5() {
  Outcome o;
  run_checks(o, {"classical_oracle"}, 5);
  return o;
}

Outcome criterion6() {
  Outcome o;
  run_checks(o, {"pleth_identity", "omega_transpose", "hatc_equals_c"}, 5);
  return o;
}

Outcome criterion7() {
  Outcome o;
  run_checks(o, {"p_expansion_chromatic", "p_expansion_llt"}, 5);
  o.require(kCalibratedPStat == PStat::desc_inverse, "pinned statistic changed");
  for (PStat s : {PStat::asc_inverse, PStat::asc_direct, PStat::desc_direct}) {
    bool differs = false;
    for (int n = 1; n <= 4 && !differs; ++n)
      for (const auto& a : enumerate_area_seqs(n, false))
        differs |= p_expansion_admissible(a, Side::chromatic, s) != p_expansion_direct(a, Side::chromatic);
    o.require(differs, pstat_name(s) + " also reproduces the expansion");
  }
  o.note("statistic: " + pstat_name(kCalibratedPStat) + " (the other three readings fail for n <= 4)");
  return o;
}

Outcome criterion8() {
  Outcome o;
  run_checks(o, {"gf_path_chromatic", "gf_path_llt", "gf_cycle_chromatic", "gf_cycle_llt", "kn_recurrence",
                 "sector_sums"},
             7);
  return o;
}

Outcome criterion9() {
  Outcome o;
  run_checks(o, {"eulerian_path", "eulerian_cycle"}, 7);
  return o;
}

Outcome criterion10() {
  Outcome o;
  run_checks(o, {"decode_bijection", "rook_bijection"}, 6);
  return o;
}

Outcome criterion11() {
  Outcome o;
  run_checks(o, {"parking_cayley", "parking_reflection"}, 6);
  auto t = g_series_and_tildec(6, 0);
  for (int n = 1; n <= 6; ++n) {
    ParkingChecks c = parking_suite(n, t.tildec_log[n]);
    o.require(c.printed_tildec, "q^n tilde c_n = n [n] f_n at n=" + std::to_string(n));
    if (n <= 5) o.require(c.printed_connected, "I_n(q+1) = sum q^(e-n) at n=" + std::to_string(n));
  }
  o.note("as stated, both identities fail from n=1 (tilde c_1 = 1 but q f_1 = q)");
  Outcome shifted;
  run_checks(shifted, {"parking_tildec_shifted", "parking_connected_shifted"}, 6);
  o.note(std::string("index-shifted forms tilde c_n = n [n] f_(n-1) and f_(n-1)(q+1) = sum q^(e-n+1): ") +
         (shifted.pass ? "hold for all tested n" : "FAIL"));
  for (const auto& s : shifted.notes) o.note("  " + s);
  return o;
}

Outcome criterion12() {
  Outcome o;
  for (const char* name : {"path_formula_21", "cycle_formula_3"}) {
    CheckReport r = find_check(name).run(3);
    o.require(r.status() == "reproduced", std::string(name) + " " + r.status());
    if (!r.failures.empty()) o.note(std::string(name) + ": " + r.failures.front().witness);
  }
  return o;
}

Outcome criterion13() {
  Outcome o;
  auto rs = sweep_conjectures(5, {"all"});
  std::map<std::string, long> tested;
  for (const auto& r : rs) {
    tested[r.check] += r.tested;
    if (r.kind == CheckKind::expected_failure) {
      o.require(r.ok(), r.check + " " + r.status());
      if (!r.failures.empty()) o.note(r.check + ": " + r.failures.front().witness + " (expected)");
    } else if (!r.failures.empty()) {
      // a counterexample is a finding; it stays loud and fails the criterion
      o.require(false, "FINDING " + r.check + " n=" + std::to_string(r.n) + " at " + r.failures.front().diagram +
                           ": " + r.failures.front().witness);
    }
  }
  for (const auto& [name, k] : tested) o.note(name + ": " + std::to_string(k) + " cases");
  return o;
}

}  // namespace

int main() {
  auto t0 = Clock::now();
  Outcome (*criteria[])() = {criterion1, criterion2,  criterion3,  criterion4,  criterion5,  criterion6, criterion7,
                             criterion8, criterion9, criterion10, criterion11, criterion12, criterion13};
  bool as_recorded = true;
  for (int i = 0; i < 13; ++i) {
    auto ti = Clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note(std::string("exception: ") + e.what());
    }
    int id = i + 1;
    std::printf("criterion %2d: %s (%.1f s)%s\n", id, o.pass ? "PASS" : "FAIL", seconds_since(ti),
                kKnownRed.count(id) ? "  [known red]" : "");
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
    as_recorded &= o.pass != (kKnownRed.count(id) != 0);
  }
  double total = seconds_since(t0);
  std::printf("total %.1f s (budget %.0f s)\n", total, kSuiteSeconds);
  as_recorded &= total < kSuiteSeconds;
  return as_recorded ? 0 : 1;
}
