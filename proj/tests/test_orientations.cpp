#include <doctest.h>

#include <set>

#include "cqsf/colorings.hpp"
#include "cqsf/orientations.hpp"

using namespace cqsf;

namespace {

AreaSeq A(const std::string& s) { return AreaSeq::parse(s); }

// sum of q^asc t^count over records
template <class R, class F>
TPoly qt_sum(const std::vector<R>& rs, F count) {
  TPoly out;
  for (const auto& r : rs) out += TPoly::monomial(count(r), QPoly::monomial(r.asc));
  return out;
}

// t-graded e-coefficients: sum over mu of c_mu(q) t^len(mu)
TPoly e_by_length(const SymFunc& f) {
  TPoly out;
  for (const auto& [la, c] : change_basis(f, Basis::e).coeffs) out += TPoly::monomial(static_cast<int>(la.size()), c);
  return out;
}

QPoly qint_product(const std::vector<int>& xs) {
  QPoly p(1);
  for (int x : xs) p *= q_int(x);
  return p;
}

}  // namespace

TEST_CASE("acyclic orientations") {
  CHECK(enum_acyclic(A("2,1,0")).size() == 6);
  auto rs = enum_acyclic(A("1,0"));
  CHECK(qt_sum(rs, [](const AcyclicRecord& r) { return static_cast<int>(r.sinks.size()); }) ==
        TPoly::monomial(1, QPoly::parse("1+q")));
  auto cyc = enum_acyclic(A("1,1,1"));
  CHECK(cyc.size() == 6);
  QPoly s;
  for (const auto& r : cyc) s += QPoly::monomial(r.asc);
  CHECK(s == QPoly::parse("3*q+3*q^2"));
  for (const auto& r : enum_acyclic(A("2,2,3,2,1,0"))) {
    CHECK(static_cast<int>(r.topo.size()) == 6);
    CHECK(topological_order(6, r.theta.arcs).size() == 6);
  }
}

TEST_CASE("sector shapes") {
  CHECK(sector_shape(A("1,1,1,1,1,1,1,1"), {2, 4, 7}) == Partition{3, 3, 2});
  CHECK(sector_shape(A("1,1,1,1,1,1,1,0"), {2, 4, 7}) == Partition{3, 3, 2});
  CHECK(sector_shape(A("1,0"), {1}) == Partition{2});
  CHECK(sector_shape(A("0"), {1}) == Partition{1});
  CHECK_THROWS_AS(sector_shape(A("1,1,1"), {}), NoDividers);
  // an orientation of C_8 with sinks 2, 4, 7 carries the same shape
  bool seen = false;
  for (const auto& r : enum_acyclic(A("1,1,1,1,1,1,1,1")))
    if (r.sinks == std::vector<int>{2, 4, 7}) {
      CHECK(r.sectors == Partition{3, 3, 2});
      seen = true;
    }
  CHECK(seen);
}

TEST_CASE("sink expansion of the chromatic e-coefficients") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& a : enumerate_area_seqs(n, true)) {
      auto rs = enum_acyclic(a);
      CHECK(e_by_length(chromatic_qsf(a)) ==
            qt_sum(rs, [](const AcyclicRecord& r) { return static_cast<int>(r.sinks.size()); }));
    }
}

TEST_CASE("ascending subsets") {
  CHECK(enum_ostar(MarkedDiagram::parse("1,1,1")).size() == 7);
  auto rs = enum_ostar(MarkedDiagram::parse("1,0"));
  CHECK(rs.size() == 2);
  TPoly want = TPoly::monomial(2, 1) + TPoly::monomial(1, QPoly::q());
  CHECK(qt_sum(rs, [](const OStarRecord& r) { return static_cast<int>(r.half_sinks.size()); }) == want);
  // non-circular: every subset of the non-strict edges qualifies
  for (const auto& d : enumerate_diagrams(4, Family::vstrip)) {
    int free = 0;
    for (const auto& e : d.a.edges()) free += d.strict.count(e) ? 0 : 1;
    CHECK(enum_ostar(d).size() == (std::size_t{1} << free));
  }
  // half-sink and half-source sums both give the shifted LLT e-coefficients
  for (const auto& d : enumerate_diagrams(4, Family::circular_vstrip)) {
    auto os = enum_ostar(d);
    TPoly g = e_by_length(llt_poly(d, true));
    CHECK(g == qt_sum(os, [](const OStarRecord& r) { return static_cast<int>(r.half_sinks.size()); }));
    CHECK(g == qt_sum(os, [](const OStarRecord& r) { return static_cast<int>(r.half_sources.size()); }));
  }
}

TEST_CASE("decoding row ascents") {
  auto a = A("2,1,0");
  auto down = decode_acyclic(a, {0, 0, 0});
  CHECK(ascents(a, down) == 0);
  auto up = decode_acyclic(a, {2, 1, 0});
  CHECK(ascents(a, up) == 3);
  CHECK_THROWS_AS(decode_acyclic(a, {3, 0, 0}), BadRange);

  for (int n = 1; n <= 5; ++n)
    for (const auto& b : enumerate_area_seqs(n, false)) {
      std::set<std::string> decoded;
      std::vector<int> v(n, 0);
      while (true) {
        auto o = decode_acyclic(b, v);
        CHECK(row_ascents(b, o) == v);
        CHECK(topological_order(n, o.arcs).size() == static_cast<std::size_t>(n));
        decoded.insert(orientation_str(b, o));
        int i = 0;
        while (i < n && v[i] == b[i + 1]) v[i++] = 0;
        if (i == n) break;
        ++v[i];
      }
      std::set<std::string> all;
      for (const auto& r : enum_acyclic(b)) all.insert(orientation_str(b, r.theta));
      CHECK(decoded == all);
    }
}

TEST_CASE("rook placements") {
  auto b = board_of(A("1,0"));
  CHECK(b.rows == std::vector<int>{2, 2});
  auto ps = enum_rooks(b);
  CHECK(ps.size() == 2);
  QPoly s;
  for (const auto& p : ps) s += QPoly::monomial(p.inversions());
  CHECK(s == QPoly::parse("1+q"));

  auto a = A("2,2,3,2,1,0");
  QPoly total;
  for (const auto& p : enum_rooks(board_of(a))) total += QPoly::monomial(p.inversions());
  CHECK(total == qint_product({3, 3, 4, 3, 2, 1}));

  auto zero = rook_decode(board_of(a), {0, 0, 0, 0, 0, 0});
  CHECK(zero.inversions() == 0);
  int free_count = 0;
  for (const auto& p : enum_rooks(board_of(a))) free_count += p.inversions() == 0;
  CHECK(free_count == 1);
}

TEST_CASE("orientations to rook placements") {
  // the pictured pair: row ascents 2,2,1,0,1,0 and rooks in columns 6,5,2,1,4,3
  auto a = A("2,2,3,2,1,0");
  std::vector<int> v{2, 2, 1, 0, 1, 0};
  auto theta = decode_acyclic(a, v);
  CHECK(orientation_str(a, theta) == "1<2,1<3,2<3,2<4,3<4,3>5,3>6,4>5,4>6,5<6");
  auto p = orientation_to_rook(a, theta);
  CHECK(p.col == std::vector<int>{6, 5, 2, 1, 4, 3});
  CHECK(p.inv == v);
  CHECK(count_inversions(board_of(a), p.col) == v);

  for (int n = 1; n <= 5; ++n)
    for (const auto& c : enumerate_area_seqs(n, false)) {
      std::set<std::vector<int>> cols;
      for (const auto& r : enum_acyclic(c)) {
        auto rp = orientation_to_rook(c, r.theta);
        CHECK(rp.inv == row_ascents(c, r.theta));
        cols.insert(rp.col);
      }
      CHECK(cols.size() == enum_rooks(board_of(c)).size());
    }
}
