// Closed forms and structural identities: sector sums, path/cycle
// e-coefficients, generating functions, the complete-graph recurrence,
// p-expansions, the double-complete tower and parking functions.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cqsf/colorings.hpp"
#include "cqsf/diagrams.hpp"
#include "cqsf/symfunc.hpp"

namespace cqsf {

enum class Side { chromatic, llt };

// chromatic: sum over acyclic orientations of q^asc e_mu(sinks);
// llt: sum over O* of q^asc e_mu(half-sinks), comparable with G(q+1)
SymFunc e_expansion_by_sectors(const AreaSeq& a, Side side);

// the printed explicit formulas, evaluated as written
QPoly path_e_coeff(const Partition& mu);
QPoly cycle_e_coeff(const Partition& mu);

// truncated power series in z with e-basis coefficients
class ESeries {
 public:
  explicit ESeries(int order) : terms_(order + 1) {}
  int order() const { return static_cast<int>(terms_.size()) - 1; }
  void add(int zpow, const Partition& la, const QPoly& c);
  const std::map<Partition, QPoly>& at(int zpow) const { return terms_[zpow]; }
  SymFunc coefficient(int zpow) const;
  ESeries operator+(const ESeries& o) const;
  ESeries operator*(const ESeries& o) const;
  // 1 / (1 - *this); requires a zero constant term
  ESeries geometric() const;

 private:
  std::vector<std::map<Partition, QPoly>> terms_;
};

enum class GraphKind { path, cycle };
ESeries gf_expand(GraphKind kind, Side side, int order);
// the direct counterpart of the z^n coefficient: X or G(q+1) of P_n or C_n
SymFunc gf_direct(GraphKind kind, Side side, int n);
AreaSeq path_seq(int n);
AreaSeq cycle_seq(int n);  // n >= 2
AreaSeq complete_seq(int n);
AreaSeq double_complete_seq(int n);

// G_{K_n}(q+1) in the e-basis from the row-by-row recurrence
SymFunc kn_llt_via_recurrence(int n);

// which statistic on the admissible word enters the p-expansion
enum class PStat { asc_inverse, asc_direct, desc_inverse, desc_direct };
std::string pstat_name(PStat s);
constexpr PStat kCalibratedPStat = PStat::desc_inverse;
bool admissible(const NaturalPoset& p, const std::vector<int>& word, const Partition& mu);
int pstat(const AreaSeq& a, const std::vector<int>& word, PStat s);
// p-basis, coefficients already divided by z_mu
SymFunc p_expansion_admissible(const AreaSeq& a, Side side, PStat s = kCalibratedPStat);
SymFunc p_expansion_direct(const AreaSeq& a, Side side);

// hat-c coefficients of omega G for any diagram; throws NotDivisible
std::map<Partition, QPoly> hatc_coefficients(const MarkedDiagram& d);
// chromatic p-coefficients c_la (z-normalized) of omega X
std::map<Partition, QPoly> chromatic_c(const AreaSeq& a);
// d_la prod(q^la_i - 1) == c_la (q-1)^n; returns a failing partition if any
std::optional<Partition> pleth_identity_check(const AreaSeq& a);
// omega G(a,s,w) == q^|a| G(a^T, w^T, s^T)(1/q); returns a failing partition
std::optional<Partition> omega_transpose_check(const MarkedDiagram& d);

struct DoubleCompleteTower {
  std::vector<QPoly> g;                 // g[r], r = 1..nmax (g[0] unused)
  std::vector<QPoly> tildec_log;        // from g_n
  std::vector<QPoly> tildec_recurrence;
  std::vector<QPoly> tildec_hn;         // from the p-coefficient of omega H_n
};
DoubleCompleteTower g_series_and_tildec(int nmax, int hn_max);

struct ParkingData {
  int n = 0;
  long long count = 0;
  QPoly f;  // area enumerator
  QPoly I;  // sum of preferences
};
ParkingData parking_functions(int n);
// generating polynomial of connected graphs on [n] by edge count
QPoly connected_graphs_by_edges(int n);

struct ParkingChecks {
  bool cayley = false;             // |PF(n)| = (n+1)^(n-1)
  bool reflection = false;         // q^C(n+1,2) I_n(1/q) = f_n
  bool printed_tildec = false;     // q^n c~_n = n [n]_q f_n
  bool shifted_tildec = false;     // c~_n = n [n]_q f_{n-1}
  bool printed_connected = false;  // I_n(q+1) = sum_G q^(e-n)
  bool shifted_connected = false;  // f_{n-1}(q+1) = sum_G q^(e-n+1)
};
ParkingChecks parking_suite(int n, const QPoly& tildec_n);

QPoly eulerian_specialization(GraphKind kind, int n);

// Removing an inner corner u -> v: G_a = G_b + q^(dist-1)(q-1) x1 x2 G_c in
// two variables. Returns false with a message on mismatch.
struct RecursionCheck {
  bool ok = true;
  std::string detail;
};
RecursionCheck two_variable_recursion_check(const AreaSeq& a);
// e-coefficients of G(q+1) surviving the specialization to two variables
SymFunc two_variable_e_part(const AreaSeq& a);

}  // namespace cqsf
