#include <doctest.h>

#include <algorithm>
#include <random>

#include "cqsf/symfunc.hpp"

using namespace cqsf;

namespace {

QPoly P(const std::string& s) { return QPoly::parse(s); }

SymFunc one(Basis b, const Partition& la, const QPoly& c = QPoly(1)) {
  SymFunc f{size(la), b, {}};
  f.add(la, c);
  return f;
}

// ---- independent oracle: explicit polynomials in n commuting variables
using Mono = std::vector<int>;
using Poly = std::map<Mono, QPoly>;

void add_to(Poly& p, const Mono& m, const QPoly& c) {
  auto& slot = p[m];
  slot += c;
  if (slot.is_zero()) p.erase(m);
}

Poly mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Mono m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      add_to(r, m, ca * cb);
    }
  return r;
}

Poly unit(int n) { return {{Mono(n, 0), QPoly(1)}}; }

Poly elem(int k, int n) {
  Poly r;
  for (unsigned s = 0; s < (1U << n); ++s)
    if (__builtin_popcount(s) == k) {
      Mono m(n);
      for (int i = 0; i < n; ++i) m[i] = (s >> i) & 1;
      add_to(r, m, 1);
    }
  return r;
}

Poly power(int k, int n) {
  Poly r;
  for (int i = 0; i < n; ++i) {
    Mono m(n, 0);
    m[i] = k;
    add_to(r, m, 1);
  }
  return r;
}

Poly monomial_sym(const Partition& la, int n) {
  Mono m(n, 0);
  std::copy(la.begin(), la.end(), m.begin());
  std::sort(m.begin(), m.end());
  Poly r;
  do add_to(r, m, 1);
  while (std::next_permutation(m.begin(), m.end()));
  return r;
}

// semistandard fillings with entries in [n]
Poly schur(const Partition& la, int n) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < static_cast<int>(la.size()); ++r)
    for (int c = 0; c < la[r]; ++c) cells.emplace_back(r, c);
  std::map<std::pair<int, int>, int> T;
  Poly out;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      Mono m(n, 0);
      for (const auto& [cell, v] : T) ++m[v - 1];
      add_to(out, m, 1);
      return;
    }
    auto [r, c] = cells[k];
    int lo = 1;
    if (c > 0) lo = std::max(lo, T[{r, c - 1}]);
    if (r > 0) lo = std::max(lo, T[{r - 1, c}] + 1);
    for (int v = lo; v <= n; ++v) {
      T[{r, c}] = v;
      self(self, k + 1);
    }
    T.erase({r, c});
  };
  rec(rec, 0);
  return out;
}

Poly basis_element(Basis b, const Partition& la, int n) {
  if (b == Basis::m) return monomial_sym(la, n);
  if (b == Basis::s) return schur(la, n);
  Poly r = unit(n);
  for (int part : la) r = mul(r, b == Basis::e ? elem(part, n) : power(part, n));
  return r;
}

Poly evaluate(const SymFunc& f) {
  int n = f.degree;
  Poly r;
  for (const auto& [la, c] : f.coeffs)
    for (const auto& [m, v] : basis_element(f.basis, la, n)) add_to(r, m, c * v);
  return r;
}

SymFunc random_sym(std::mt19937& rng, int n, Basis b) {
  std::uniform_int_distribution<int> coef(-3, 3);
  SymFunc f{n, b, {}};
  for (const auto& la : partitions(n)) f.add(la, QPoly(coef(rng)) + QPoly::monomial(1, coef(rng)));
  return f;
}

}  // namespace

TEST_CASE("partition bookkeeping") {
  CHECK(z_of({1, 1, 1}) == 6);
  CHECK(z_of({2, 1}) == 2);
  CHECK(z_of({3}) == 3);
  CHECK(partitions(4).size() == 5);
  CHECK(partitions(4).front() == Partition{4});
  CHECK(compositions(4).size() == 8);
  CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
  CHECK(mask_to_composition(composition_to_mask({1, 2, 1}), 4) == Composition{1, 2, 1});
  CHECK(partition_str({3, 2, 1}) == "3,2,1");
  CHECK(composition_str({1, 2, 1}) == "1|2|1");
  CHECK(parse_partition("3,2,1") == Partition{3, 2, 1});
}

TEST_CASE("symmetrization") {
  QSymFunc f{3, QBasis::M, {}};
  f.add({2, 1}, 1);
  f.add({1, 2}, 1);
  CHECK(to_symmetric(f) == one(Basis::m, {2, 1}));
  QSymFunc g{3, QBasis::M, {}};
  g.add({2, 1}, 1);
  CHECK_THROWS_AS(to_symmetric(g), NotSymmetric);
}

TEST_CASE("small basis changes") {
  CHECK(change_basis(one(Basis::e, {2}), Basis::m) == one(Basis::m, {1, 1}));
  SymFunc e2p = change_basis(one(Basis::e, {2}), Basis::p);
  CHECK(e2p.coeff({1, 1}) == QPoly(Rational(1, 2)));
  CHECK(e2p.coeff({2}) == QPoly(Rational(-1, 2)));
  SymFunc s21 = change_basis(one(Basis::s, {2, 1}), Basis::m);
  CHECK(s21.coeff({2, 1}) == QPoly(1));
  CHECK(s21.coeff({1, 1, 1}) == QPoly(2));
  CHECK(s21.coeffs.size() == 2);
}

TEST_CASE("basis changes agree with the explicit monomial oracle") {
  std::mt19937 rng(3);
  for (int n = 1; n <= 4; ++n)
    for (Basis from : {Basis::m, Basis::e, Basis::p, Basis::s}) {
      SymFunc f = random_sym(rng, n, from);
      Poly truth = evaluate(f);
      for (Basis to : {Basis::m, Basis::e, Basis::p, Basis::s}) {
        CAPTURE(n);
        CHECK(evaluate(change_basis(f, to)) == truth);
      }
    }
}

TEST_CASE("round trips through every basis, n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& la : partitions(n)) {
      SymFunc m = one(Basis::m, la, P("1+q"));
      for (Basis b : {Basis::e, Basis::p, Basis::s}) CHECK(change_basis(change_basis(m, b), Basis::m) == m);
    }
}

TEST_CASE("fundamental basis") {
  QSymFunc m2{2, QBasis::M, {{Composition{2}, QPoly(1)}}};
  QSymFunc f2 = qsym_to_fundamental(m2);
  CHECK(f2.coeff({2}) == QPoly(1));
  CHECK(f2.coeff({1, 1}) == QPoly(-1));
  QSymFunc m11{2, QBasis::M, {{Composition{1, 1}, QPoly(1)}}};
  CHECK(qsym_to_fundamental(m11).coeff({1, 1}) == QPoly(1));
  std::mt19937 rng(5);
  for (int n = 1; n <= 5; ++n) {
    QSymFunc f{n, QBasis::M, {}};
    for (const auto& al : compositions(n)) f.add(al, QPoly(static_cast<long>(rng() % 7) - 3));
    CHECK(qsym_to_monomial(qsym_to_fundamental(f)) == f);
  }
}

TEST_CASE("omega") {
  SymFunc p2 = one(Basis::p, {2});
  CHECK(omega(p2) == one(Basis::p, {2}, QPoly(-1)));
  SymFunc h2 = change_basis(omega(one(Basis::e, {2})), Basis::m);
  CHECK(h2.coeff({2}) == QPoly(1));
  CHECK(h2.coeff({1, 1}) == QPoly(1));
  std::mt19937 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    Basis b = static_cast<Basis>(rng() % 4);
    SymFunc f = random_sym(rng, n, b);
    CHECK(change_basis(omega(omega(f)), b) == f);
  }
}

TEST_CASE("phi on elementary functions is t^length") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& la : partitions(n)) {
      QSymFunc e = to_quasisymmetric(change_basis(one(Basis::e, la), Basis::m));
      CHECK(phi_stanley(qsym_to_fundamental(e), n) == TPoly::monomial(static_cast<int>(la.size()), QPoly(1)));
    }
}

TEST_CASE("squarefree coefficient") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(coeff_squarefree(one(Basis::e, {n})) == QPoly(1));
    if (n >= 2) CHECK(coeff_squarefree(one(Basis::p, {n})).is_zero());
  }
}

TEST_CASE("json form") {
  SymFunc f = one(Basis::e, {2, 1}, P("1+q"));
  CHECK(sym_json(f) == R"({"degree":3,"basis":"e","coeffs":{"2,1":"1+q"}})");
}
