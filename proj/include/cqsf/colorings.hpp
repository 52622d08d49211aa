// Coloring sums: chromatic quasisymmetric functions, LLT polynomials from
// marked diagrams, the classical tuple definition, Tutte-type specializations
// and poset functions.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cqsf/diagrams.hpp"
#include "cqsf/symfunc.hpp"

namespace cqsf {

// A coloring problem: colorings F of vertices 1..n, constrained and weighted
// by pairwise rules. The weight of F is q^(number of rules whose weight
// predicate holds).
enum class Constraint : std::uint8_t { none, distinct, less, leq, geq };
enum class Weight : std::uint8_t { none, ascent, descent, mono };

struct Rule {
  int u = 0, v = 0;
  Constraint c = Constraint::none;
  Weight w = Weight::none;
};

struct ColoringModel {
  int n = 0;
  std::vector<Rule> rules;
};

enum class Exec { reference, parallel };

// Monomial-quasisymmetric expansion using colors 1..max_colors (default n).
// Only compositions with at most max_colors parts are populated.
QSymFunc coloring_sum(const ColoringModel& m, Exec exec = Exec::parallel, int max_colors = 0);

ColoringModel chromatic_model(const AreaSeq& a);
ColoringModel llt_model(const MarkedDiagram& d);
ColoringModel tutte_model(const AreaSeq& a);

SymFunc chromatic_qsf(const AreaSeq& a, Exec exec = Exec::parallel);
SymFunc llt_poly(const MarkedDiagram& d, bool shifted, Exec exec = Exec::parallel);
SymFunc tutte_mono(const AreaSeq& a);
SymFunc h_double_complete(int n);
QSymFunc poset_xp(const NaturalPoset& p);

// m-coefficients for partitions with at most k parts (the polynomial in k
// variables); used where the full alphabet would be too expensive.
std::map<Partition, QPoly> llt_poly_truncated(const MarkedDiagram& d, int k);

// SSYT-tuple definition evaluated by brute force over all fillings
SymFunc classical_llt_oracle(const LLTTuple& t);
std::map<Partition, QPoly> classical_llt_truncated(const LLTTuple& t, int k);

// sum over O* of q^asc X_{P(theta)} (e basis) next to G(q+1) (e basis)
struct OrientationSumCheck {
  SymFunc orientation_sum;
  SymFunc shifted_llt;
};
OrientationSumCheck coeff_qt_orientation_sum(const MarkedDiagram& d);

}  // namespace cqsf
