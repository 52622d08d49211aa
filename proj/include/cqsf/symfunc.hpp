// Partitions, compositions and homogeneous (quasi)symmetric functions with
// exact QPoly coefficients.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "cqsf/qalgebra.hpp"

namespace cqsf {

using Partition = std::vector<int>;    // weakly decreasing, positive parts
using Composition = std::vector<int>;  // positive parts

enum class Basis { m, e, p, s };
enum class QBasis { M, F };

struct NotSymmetric : std::runtime_error {
  Composition a, b;
  NotSymmetric(Composition x, Composition y);
};

struct SymFunc {
  int degree = 0;
  Basis basis = Basis::m;
  std::map<Partition, QPoly> coeffs;

  QPoly coeff(const Partition& la) const;
  void add(const Partition& la, const QPoly& c);
  bool operator==(const SymFunc& o) const {
    return degree == o.degree && basis == o.basis && coeffs == o.coeffs;
  }
  bool operator!=(const SymFunc& o) const { return !(*this == o); }
};

struct QSymFunc {
  int degree = 0;
  QBasis basis = QBasis::M;
  std::map<Composition, QPoly> coeffs;

  QPoly coeff(const Composition& al) const;
  void add(const Composition& al, const QPoly& c);
  bool operator==(const QSymFunc& o) const {
    return degree == o.degree && basis == o.basis && coeffs == o.coeffs;
  }
};

// -- combinatorics of indices
std::vector<Partition> partitions(int n);  // reverse lexicographic: (n) first
std::vector<Composition> compositions(int n);
bool is_partition(const Partition& la);
int size(const std::vector<int>& parts);
Partition sorted_partition(std::vector<int> parts);
Partition conjugate(const Partition& la);
long long z_of(const Partition& la);
// Composition <-> subset of {1..n-1} (bit i-1 set iff i is a partial sum)
unsigned composition_to_mask(const Composition& al);
Composition mask_to_composition(unsigned mask, int n);

std::string partition_str(const Partition& la);      // "3,2,1"
std::string composition_str(const Composition& al);  // "1|2|1"
Partition parse_partition(const std::string& s);
std::string basis_name(Basis b);
Basis parse_basis(const std::string& s);

// -- arithmetic
SymFunc operator+(const SymFunc& a, const SymFunc& b);
SymFunc operator-(const SymFunc& a, const SymFunc& b);
SymFunc scale(const SymFunc& f, const QPoly& c);
// applies g to every coefficient
template <class G>
SymFunc map_coeffs(const SymFunc& f, G g) {
  SymFunc r{f.degree, f.basis, {}};
  for (const auto& [la, c] : f.coeffs) r.add(la, g(c));
  return r;
}
// product in the multiplicative e- or p-basis (concatenation of indices)
SymFunc multiplicative_product(const SymFunc& a, const SymFunc& b);

// -- conversions
SymFunc to_symmetric(const QSymFunc& f);
QSymFunc to_quasisymmetric(const SymFunc& f_m);
SymFunc change_basis(const SymFunc& f, Basis target);
QSymFunc qsym_to_fundamental(const QSymFunc& f);
QSymFunc qsym_to_monomial(const QSymFunc& f);
SymFunc omega(const SymFunc& f);
TPoly phi_stanley(const QSymFunc& f_F, int n);
QPoly coeff_squarefree(const SymFunc& f);
QPoly coeff_squarefree(const QSymFunc& f);

// transition matrix entries: coefficient of m_mu in b_lambda
long long to_m_entry(Basis b, const Partition& la, const Partition& mu);

// coefficient-wise predicates
bool all_nonnegative(const SymFunc& f);
bool all_unimodal(const SymFunc& f);

std::string sym_json(const SymFunc& f);

}  // namespace cqsf
