// Identity suites, conjecture sweeps and machine-readable reports.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cqsf/diagrams.hpp"
#include "cqsf/symfunc.hpp"

namespace cqsf {

// theorem: a violation is a bug. conjecture: a violation is a finding.
// expected_failure: a stated negative result, reproduced when violated.
// discrepancy: a printed statement known to disagree with computation.
enum class CheckKind { theorem, conjecture, expected_failure, discrepancy };
std::string kind_name(CheckKind k);

struct Failure {
  std::string diagram;
  std::string witness;
};

struct CheckReport {
  std::string check;
  std::string family;
  int n = 0;
  CheckKind kind = CheckKind::theorem;
  long tested = 0;
  std::vector<Failure> failures;
  double ms = 0;

  // theorem/conjecture: no violations; the other kinds: violations observed
  bool ok() const;
  std::string status() const;
};

// One check evaluated on one n. `run` returns a witness per violating item.
struct CheckDef {
  std::string name;
  std::string family;
  CheckKind kind;
  int max_n;  // largest n the check is meant for
  int min_n;
  std::function<CheckReport(int n)> run;
};

const std::vector<CheckDef>& identity_checks();
const std::vector<CheckDef>& conjecture_checks();
const CheckDef& find_check(const std::string& name);

// runs every check for min_n <= n <= min(n_max, check.max_n)
std::vector<CheckReport> run_identity_suite(int n_max);
// which: check names, or {"all"}
std::vector<CheckReport> sweep_conjectures(int n_max, const std::vector<std::string>& which);

// Evaluates fn(i) for i < count in parallel; failures keep index order.
// fn returns a witness for a violating item, nullopt otherwise.
CheckReport check_each(const std::string& name, const std::string& family, int n, CheckKind kind,
                       std::size_t count, const std::function<std::string(std::size_t)>& label,
                       const std::function<std::optional<std::string>(std::size_t)>& fn);

// caps the worker threads of every sweep; 0 restores the default
void set_jobs(int jobs);

std::string label_of(const MarkedDiagram& d);

// JSON with sorted keys; timing is reported only when asked for, so that
// repeated runs are byte-identical by default
std::string report_json(const CheckReport& r, bool timing = false);
std::string reports_json(const std::vector<CheckReport>& rs, bool timing = false);
// diagram,basis,partition,polynomial
std::string coefficient_csv(const std::string& diagram, const SymFunc& f);

// the weak chain F(1) >= F(2) >= F(3) on the 3-cycle, with q shifted
QSymFunc weak_chain_example();

}  // namespace cqsf
