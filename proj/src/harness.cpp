#include "cqsf/harness.hpp"

#include <omp.h>

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "cqsf/colorings.hpp"
#include "cqsf/formulas.hpp"
#include "cqsf/orientations.hpp"

namespace cqsf {

std::string kind_name(CheckKind k) {
  switch (k) {
    case CheckKind::theorem: return "theorem";
    case CheckKind::conjecture: return "conjecture";
    case CheckKind::expected_failure: return "expected_failure";
    case CheckKind::discrepancy: return "discrepancy";
  }
  return "?";
}

bool CheckReport::ok() const {
  bool clean = failures.empty();
  return kind == CheckKind::theorem || kind == CheckKind::conjecture ? clean : !clean;
}

std::string CheckReport::status() const {
  switch (kind) {
    case CheckKind::theorem: return failures.empty() ? "pass" : "fail";
    case CheckKind::conjecture: return failures.empty() ? "pass" : "finding";
    default: return failures.empty() ? "not-reproduced" : "reproduced";
  }
}

namespace {
int g_jobs = 0;
}

void set_jobs(int jobs) { g_jobs = std::max(jobs, 0); }

CheckReport check_each(const std::string& name, const std::string& family, int n, CheckKind kind,
                       std::size_t count, const std::function<std::string(std::size_t)>& label,
                       const std::function<std::optional<std::string>(std::size_t)>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::optional<std::string>> res(count);
  int threads = g_jobs > 0 ? g_jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::size_t i = 0; i < count; ++i) {
    try {
      res[i] = fn(i);
    } catch (const std::exception& e) {
      res[i] = std::string("exception: ") + e.what();
    }
  }
  CheckReport r;
  r.check = name;
  r.family = family;
  r.n = n;
  r.kind = kind;
  r.tested = static_cast<long>(count);
  for (std::size_t i = 0; i < count; ++i)
    if (res[i]) r.failures.push_back({label(i), *res[i]});
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string label_of(const MarkedDiagram& d) { return d.str(); }

namespace {

using Witness = std::optional<std::string>;

QPoly qp(int k) { return QPoly::monomial(k); }

std::string poly_diff(const std::string& what, const QPoly& got, const QPoly& want) {
  return what + ": got " + got.str() + ", expected " + want.str();
}

// first partition where two functions disagree
Witness sym_diff(const SymFunc& got, const SymFunc& want) {
  std::set<Partition> keys;
  for (const auto& [la, c] : got.coeffs) keys.insert(la);
  for (const auto& [la, c] : want.coeffs) keys.insert(la);
  for (const auto& la : keys)
    if (got.coeff(la) != want.coeff(la))
      return poly_diff(basis_name(got.basis) + "[" + partition_str(la) + "]", got.coeff(la), want.coeff(la));
  return std::nullopt;
}

QPoly product_qint(const std::vector<int>& xs, int offset) {
  QPoly p(1);
  for (int x : xs) p *= q_int(x + offset);
  return p;
}

QPoly sum_coeffs(const SymFunc& f) {
  QPoly s;
  for (const auto& [la, c] : f.coeffs) s += c;
  return s;
}

SymFunc x_e(const AreaSeq& a) { return change_basis(chromatic_qsf(a), Basis::e); }
SymFunc g1_e(const MarkedDiagram& d) { return change_basis(llt_poly(d, true), Basis::e); }

QSymFunc shift_qsym(QSymFunc f) {
  for (auto& [al, c] : f.coeffs) c = c.shift(1);
  return f;
}

bool connected_dyck(const AreaSeq& a) {
  for (int i = 1; i < a.n(); ++i)
    if (a[i] == 0) return false;
  return !a.circular();
}

Witness first_negative(const SymFunc& f) {
  for (const auto& [la, c] : f.coeffs)
    if (!c.nonnegative()) return basis_name(f.basis) + "[" + partition_str(la) + "] = " + c.str();
  return std::nullopt;
}

// e-positivity plus unimodality of every coefficient
Witness epos_unimodal(const SymFunc& f) {
  if (auto w = first_negative(f)) return w;
  for (const auto& [la, c] : f.coeffs)
    if (!c.integral() || !is_unimodal(c)) return "not unimodal: e[" + partition_str(la) + "] = " + c.str();
  return std::nullopt;
}

std::vector<std::size_t> pick(std::size_t total, std::size_t cap, unsigned seed) {
  std::vector<std::size_t> idx(total);
  for (std::size_t i = 0; i < total; ++i) idx[i] = i;
  if (cap == 0 || total <= cap) return idx;
  std::vector<std::size_t> out;
  std::sample(idx.begin(), idx.end(), std::back_inserter(out), cap, std::mt19937(seed));
  return out;
}

// runs fn over a diagram family, optionally over a fixed-seed sample
CheckReport over(const std::string& name, Family fam, int n, CheckKind kind,
                 const std::function<Witness(const MarkedDiagram&)>& fn, std::size_t cap = 0,
                 const std::function<bool(const MarkedDiagram&)>& keep = {}) {
  auto all = enumerate_diagrams(n, fam);
  std::vector<MarkedDiagram> ds;
  for (auto& d : all)
    if (!keep || keep(d)) ds.push_back(std::move(d));
  if (cap) {
    std::vector<MarkedDiagram> s;
    for (auto i : pick(ds.size(), cap, 20240611U + n)) s.push_back(ds[i]);
    ds = std::move(s);
  }
  return check_each(
      name, family_name(fam), n, kind, ds.size(), [&](std::size_t i) { return label_of(ds[i]); },
      [&](std::size_t i) { return fn(ds[i]); });
}

CheckReport single(const std::string& name, const std::string& family, int n, CheckKind kind,
                   const std::string& label, const std::function<Witness()>& fn) {
  return check_each(
      name, family, n, kind, 1, [&](std::size_t) { return label; }, [&](std::size_t) { return fn(); });
}

CheckDef diagram_check(const std::string& name, Family fam, CheckKind kind, int min_n, int max_n,
                       std::function<Witness(const MarkedDiagram&)> fn, std::size_t cap = 0,
                       std::function<bool(const MarkedDiagram&)> keep = {}) {
  return {name, family_name(fam), kind, max_n, min_n,
          [=](int n) { return over(name, fam, n, kind, fn, cap, keep); }};
}

TPoly t_of(const SymFunc& e) {
  TPoly t;
  for (const auto& [la, c] : e.coeffs) t += TPoly::monomial(static_cast<int>(la.size()), c);
  return t;
}

// ---- individual theorem checks

Witness symmetry_chromatic(const MarkedDiagram& d) {
  chromatic_qsf(d.a);
  return std::nullopt;
}

Witness symmetry_llt(const MarkedDiagram& d) {
  llt_poly(d, false);
  return std::nullopt;
}

Witness sink_sum_product(const MarkedDiagram& d) {
  QPoly s = sum_coeffs(x_e(d.a));
  QPoly pa = product_qint(d.a.values(), 1);
  QPoly pb = product_qint(column_area(d.a), 1);
  if (s != pa) return poly_diff("sum c", s, pa);
  if (s != pb) return poly_diff("sum c vs columns", s, pb);
  return std::nullopt;
}

QPoly prod_rows_but_last(const AreaSeq& a) {
  std::vector<int> rows(a.values().begin(), a.values().end() - 1);
  return product_qint(rows, 0);
}

Witness unique_sink(const MarkedDiagram& d) {
  QPoly s;
  for (const auto& r : enum_acyclic(d.a))
    if (r.sinks == std::vector<int>{1}) s += qp(r.asc);
  QPoly want = prod_rows_but_last(d.a);
  if (s != want) return poly_diff("unique sink at 1", s, want);
  return std::nullopt;
}

Witness cn_coefficient(const MarkedDiagram& d) {
  int n = d.n();
  QPoly got = x_e(d.a).coeff({n});
  QPoly want = q_int(n) * prod_rows_but_last(d.a);
  if (got != want) return poly_diff("c_(n)", got, want);
  return std::nullopt;
}

Witness sink_identity(const MarkedDiagram& d) {
  TPoly lhs = t_of(x_e(d.a)), rhs;
  for (const auto& r : enum_acyclic(d.a))
    rhs += TPoly::monomial(static_cast<int>(r.sinks.size()), qp(r.asc));
  if (lhs != rhs) return "e-side " + lhs.str() + " vs orientations " + rhs.str();
  return std::nullopt;
}

Witness half_sink_identity(const MarkedDiagram& d) {
  TPoly lhs = t_of(g1_e(d)), sinks, sources;
  for (const auto& r : enum_ostar(d)) {
    sinks += TPoly::monomial(static_cast<int>(r.half_sinks.size()), qp(r.asc));
    sources += TPoly::monomial(static_cast<int>(r.half_sources.size()), qp(r.asc));
  }
  if (lhs != sinks) return "e-side " + lhs.str() + " vs half-sinks " + sinks.str();
  if (lhs != sources) return "e-side " + lhs.str() + " vs half-sources " + sources.str();
  return std::nullopt;
}

Witness e1n_coefficient(const MarkedDiagram& d) {
  QPoly c = g1_e(d).coeff(Partition(d.n(), 1));
  if (c != QPoly(1)) return poly_diff("e[1^n]", c, QPoly(1));
  return std::nullopt;
}

Witness d_sum(const MarkedDiagram& d) {
  QPoly s = sum_coeffs(g1_e(d));
  QPoly want = (QPoly(1) + QPoly::q()).pow(static_cast<unsigned>(d.a.edges().size()));
  if (s != want) return poly_diff("sum d", s, want);
  return std::nullopt;
}

Witness bounce_vanishing(const MarkedDiagram& d) {
  std::size_t r = bounce_blocks(d.a).size();
  QPoly s;
  for (const auto& [la, c] : x_e(d.a).coeffs)
    if (la.size() > r) s += c;
  if (!s.is_zero()) return "sum over more than " + std::to_string(r) + " parts = " + s.str();
  return std::nullopt;
}

Witness palindromic(const MarkedDiagram& d) {
  Rational center(d.a.area(), 2);
  for (const auto& [la, c] : x_e(d.a).coeffs)
    if (!is_palindromic(c, center)) return "e[" + partition_str(la) + "] = " + c.str();
  return std::nullopt;
}

bool fully_adjacent(const MarkedDiagram& d) {
  const auto& v = d.a.values();
  int n = d.n();
  bool half = std::all_of(v.begin(), v.end(), [n](int x) { return 2 * x >= n; });
  return half || *std::max_element(v.begin(), v.end()) == n - 1;
}

Witness full_adjacency(const MarkedDiagram& d) {
  int n = d.n();
  SymFunc x = x_e(d.a);
  for (const auto& [la, c] : x.coeffs)
    if (la != Partition{n}) return "e[" + partition_str(la) + "] = " + c.str();
  QPoly c = x.coeff({n});
  if (!c.nonnegative() || !c.integral()) return "e[n] = " + c.str();
  return std::nullopt;
}

Witness fundamental_positivity(const MarkedDiagram& d) {
  QSymFunc f = shift_qsym(qsym_to_fundamental(coloring_sum(llt_model(d))));
  for (const auto& [al, c] : f.coeffs)
    if (!c.nonnegative()) return "F[" + composition_str(al) + "] = " + c.str();
  return std::nullopt;
}

Witness two_variable_recursion(const MarkedDiagram& d) {
  auto r = two_variable_recursion_check(d.a);
  if (!r.ok) return r.detail;
  return std::nullopt;
}

Witness two_variable_epos(const MarkedDiagram& d) { return first_negative(two_variable_e_part(d.a)); }

Witness weak_elimination(const MarkedDiagram& d) {
  SymFunc g = llt_poly(d, false);
  for (const auto& e : d.weak) {
    MarkedDiagram without = d, strict = d;
    without.weak.erase(e);
    strict.weak.erase(e);
    strict.strict.insert(e);
    SymFunc rhs = llt_poly(without, false) - llt_poly(strict, false);
    if (auto w = sym_diff(g, rhs)) return "edge " + std::to_string(e.source) + "-" + std::to_string(e.target) + ": " + *w;
  }
  return std::nullopt;
}

Witness classical_oracle(const MarkedDiagram& d) {
  return sym_diff(llt_poly(d, false), classical_llt_oracle(marked_to_llt_tuple(d)));
}

Witness orientation_sum(const MarkedDiagram& d) {
  auto r = coeff_qt_orientation_sum(d);
  return sym_diff(r.orientation_sum, r.shifted_llt);
}

Witness phi_law(const MarkedDiagram& d) {
  int n = d.n();
  for (const auto& o : enum_ostar(d)) {
    TPoly got = phi_stanley(poset_xp(ostar_poset(d, o)), n);
    TPoly want = TPoly::monomial(static_cast<int>(o.half_sources.size()), QPoly(1));
    if (got != want) return "phi = " + got.str() + ", expected " + want.str();
  }
  return std::nullopt;
}

Witness pleth(const MarkedDiagram& d) {
  if (auto la = pleth_identity_check(d.a)) return "p[" + partition_str(*la) + "]";
  return std::nullopt;
}

Witness omega_transpose(const MarkedDiagram& d) {
  if (auto la = omega_transpose_check(d)) return "m[" + partition_str(*la) + "]";
  return std::nullopt;
}

Witness hatc_is_c(const MarkedDiagram& d) {
  auto h = hatc_coefficients(d);
  auto c = chromatic_c(d.a);
  for (const auto& [la, v] : h)
    if (v != c[la]) return poly_diff("p[" + partition_str(la) + "]", v, c[la]);
  return std::nullopt;
}

Witness pexp(const MarkedDiagram& d, Side side) {
  return sym_diff(p_expansion_admissible(d.a, side), p_expansion_direct(d.a, side));
}

Witness decode_bijection(const MarkedDiagram& d) {
  const AreaSeq& a = d.a;
  int n = a.n();
  std::set<std::vector<DirEdge>> seen;
  std::vector<int> v(n, 0);
  while (true) {
    Orientation o = decode_acyclic(a, v);
    if (topological_order(n, o.arcs).empty()) return "cyclic decode";
    if (row_ascents(a, o) != v) return "row ascents differ from the input vector";
    if (!seen.insert(o.arcs).second) return "decode is not injective";
    int i = n - 1;
    while (i >= 0 && v[i] == a[i + 1]) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
  }
  std::size_t total = enum_acyclic(a).size();
  if (seen.size() != total)
    return "decoded " + std::to_string(seen.size()) + " of " + std::to_string(total) + " orientations";
  return std::nullopt;
}

Witness rook_bijection(const MarkedDiagram& d) {
  const AreaSeq& a = d.a;
  std::set<std::vector<int>> seen;
  for (const auto& r : enum_acyclic(a)) {
    RookPlacement p = orientation_to_rook(a, r.theta);
    if (p.inv != row_ascents(a, r.theta)) return "row weights differ for " + orientation_str(a, r.theta);
    if (!seen.insert(p.col).second) return "not injective at " + orientation_str(a, r.theta);
  }
  auto rooks = enum_rooks(board_of(a));
  if (seen.size() != rooks.size())
    return std::to_string(seen.size()) + " images for " + std::to_string(rooks.size()) + " placements";
  QPoly s;
  for (const auto& r : rooks) s += qp(r.inversions());
  QPoly want = product_qint(a.values(), 1);
  if (s != want) return poly_diff("rook product", s, want);
  return std::nullopt;
}

// ---- checks over single objects

QPoly golden_tildec5() {
  QPoly p;
  const long c[] = {120, 300, 450, 550, 600, 500, 325, 175, 75, 25, 5};
  for (int i = 0; i <= 10; ++i) p.add_term(i, c[i]);
  return p;
}

// the printed example attaches these two polynomials to e_11111 and e_21110
QPoly printed_x_first() {
  QPoly p;
  const long c[] = {1, 4, 8, 11, 12, 11, 8, 4, 1};
  for (int i = 0; i <= 8; ++i) p.add_term(i, c[i]);
  return p;
}

QPoly printed_x_second() {
  QPoly p;
  const long c[] = {1, 3, 4, 3, 1};
  for (int i = 0; i <= 4; ++i) p.add_term(i + 2, c[i]);
  return p;
}

Witness golden_x() {
  AreaSeq a = AreaSeq::validate({2, 2, 3, 2, 1, 0});
  SymFunc x = x_e(a);
  std::ostringstream w;
  bool bad = false;
  // the printed labels name five parts, one short of the six vertices
  for (const auto& [label, want] : {std::pair{Partition{1, 1, 1, 1, 1}, printed_x_first()},
                                    std::pair{Partition{2, 1, 1, 1}, printed_x_second()}}) {
    QPoly got = x.coeff(label);
    if (got != want) {
      bad = true;
      w << "e[" << partition_str(label) << "]: printed " << want.str() << ", computed " << got.str() << "; ";
    }
  }
  if (!bad) return std::nullopt;
  w << "computed X =";
  for (const auto& [la, c] : x.coeffs) w << " (" << c.str() << ")e[" << partition_str(la) << "]";
  return w.str();
}

std::vector<CheckDef> build_identity_checks() {
  using K = CheckKind;
  std::vector<CheckDef> v;
  v.push_back(diagram_check("symmetry_chromatic", Family::circular, K::theorem, 1, 6, symmetry_chromatic));
  v.push_back(diagram_check("symmetry_llt", Family::circular_vstrip, K::theorem, 1, 6, symmetry_llt));
  v.push_back(diagram_check("symmetry_llt_ribbon", Family::ribbon, K::theorem, 1, 5, symmetry_llt));
  v.push_back(diagram_check("sink_sum_product", Family::dyck, K::theorem, 1, 7, sink_sum_product));
  v.push_back(diagram_check("unique_sink_product", Family::dyck, K::theorem, 1, 6, unique_sink, 0,
                            [](const MarkedDiagram& d) { return connected_dyck(d.a); }));
  v.push_back(diagram_check("cn_coefficient", Family::dyck, K::theorem, 1, 6, cn_coefficient, 0,
                            [](const MarkedDiagram& d) { return connected_dyck(d.a); }));
  v.push_back(diagram_check("sink_identity", Family::circular, K::theorem, 1, 6, sink_identity));
  v.push_back(diagram_check("half_sink_identity", Family::circular_vstrip, K::theorem, 1, 5, half_sink_identity));
  v.push_back(diagram_check("e1n_coefficient", Family::circular, K::theorem, 1, 6, e1n_coefficient));
  v.push_back(diagram_check("d_sum", Family::vstrip, K::theorem, 1, 6, d_sum));
  v.push_back(diagram_check("bounce_vanishing", Family::circular, K::theorem, 1, 6, bounce_vanishing));
  v.push_back(diagram_check("palindromic", Family::circular, K::theorem, 1, 6, palindromic));
  v.push_back(diagram_check("full_adjacency", Family::circular, K::theorem, 1, 6, full_adjacency, 0, fully_adjacent));
  v.push_back(diagram_check("fundamental_positivity", Family::vstrip, K::theorem, 1, 5, fundamental_positivity));
  v.push_back(diagram_check("two_variable_recursion", Family::circular, K::theorem, 1, 5, two_variable_recursion));
  // the n = 6 recursion runs on a fixed-seed sample of 50 diagrams
  v.push_back(diagram_check("two_variable_recursion_sample", Family::circular, K::theorem, 6, 6,
                            two_variable_recursion, 50));
  v.push_back(diagram_check("two_variable_epos", Family::circular, K::theorem, 1, 6, two_variable_epos));
  v.push_back(diagram_check("weak_elimination", Family::ribbon, K::theorem, 1, 5, weak_elimination, 0,
                            [](const MarkedDiagram& d) { return !d.weak.empty(); }));
  v.push_back(diagram_check("classical_oracle", Family::ribbon, K::theorem, 1, 5, classical_oracle));
  v.push_back(diagram_check("orientation_sum", Family::circular_vstrip, K::theorem, 1, 4, orientation_sum));
  v.push_back(diagram_check("orientation_sum_sample", Family::circular_vstrip, K::theorem, 5, 5, orientation_sum, 30));
  v.push_back(diagram_check("phi_law", Family::circular_vstrip, K::theorem, 1, 4, phi_law));
  v.push_back(diagram_check("phi_law_sample", Family::circular_vstrip, K::theorem, 5, 5, phi_law, 30));
  v.push_back(diagram_check("pleth_identity", Family::dyck, K::theorem, 1, 5, pleth));
  v.push_back(diagram_check("omega_transpose", Family::ribbon, K::theorem, 1, 5, omega_transpose));
  v.push_back(diagram_check("hatc_equals_c", Family::dyck, K::theorem, 1, 5, hatc_is_c));
  v.push_back(diagram_check("p_expansion_chromatic", Family::dyck, K::theorem, 1, 5,
                            [](const MarkedDiagram& d) { return pexp(d, Side::chromatic); }));
  v.push_back(diagram_check("p_expansion_llt", Family::dyck, K::theorem, 1, 5,
                            [](const MarkedDiagram& d) { return pexp(d, Side::llt); }));
  v.push_back(diagram_check("decode_bijection", Family::dyck, K::theorem, 1, 6, decode_bijection));
  v.push_back(diagram_check("rook_bijection", Family::dyck, K::theorem, 1, 6, rook_bijection));

  v.push_back({"tutte_double_complete", "double_complete", K::theorem, 5, 1, [](int n) {
                 return single("tutte_double_complete", "double_complete", n, K::theorem,
                               double_complete_seq(n).str(), [n]() -> Witness {
                                 SymFunc h = change_basis(h_double_complete(n), Basis::m);
                                 SymFunc g = change_basis(llt_poly(MarkedDiagram::make(double_complete_seq(n)), false),
                                                          Basis::m);
                                 QLaurent shift = QLaurent::monomial(n * (n - 1) / 2);
                                 for (const auto& la : partitions(n))
                                   if (QLaurent(h.coeff(la)) != shift * QLaurent(g.coeff(la)).invert())
                                     return "m[" + partition_str(la) + "]";
                                 return std::nullopt;
                               });
               }});

  for (auto kind : {GraphKind::path, GraphKind::cycle})
    for (auto side : {Side::chromatic, Side::llt}) {
      std::string fam = kind == GraphKind::path ? "path" : "cycle";
      std::string name = "gf_" + fam + (side == Side::chromatic ? "_chromatic" : "_llt");
      v.push_back({name, fam, K::theorem, 7, 1, [=](int n) {
                     return single(name, fam, n, K::theorem, fam + std::to_string(n), [=]() -> Witness {
                       return sym_diff(gf_expand(kind, side, n).coefficient(n), gf_direct(kind, side, n));
                     });
                   }});
    }

  v.push_back({"kn_recurrence", "complete", K::theorem, 6, 1, [](int n) {
                 return single("kn_recurrence", "complete", n, K::theorem, complete_seq(n).str(), [n]() -> Witness {
                   return sym_diff(kn_llt_via_recurrence(n), g1_e(MarkedDiagram::make(complete_seq(n))));
                 });
               }});

  v.push_back({"sector_sums", "special", K::theorem, 6, 1, [](int n) {
                 struct Case {
                   std::string label;
                   AreaSeq a;
                   Side side;
                 };
                 std::vector<Case> cases;
                 std::vector<std::pair<std::string, AreaSeq>> graphs{
                     {"P", path_seq(n)}, {"K", complete_seq(n)}, {"B", double_complete_seq(n)}};
                 if (n >= 2) graphs.push_back({"C", cycle_seq(n)});
                 if (n >= 2) {
                   // a path next to a complete graph
                   int k = n / 2;
                   std::vector<int> u = path_seq(k).values();
                   AreaSeq kk = complete_seq(n - k);
                   u.insert(u.end(), kk.values().begin(), kk.values().end());
                   graphs.push_back({"P+K", AreaSeq::validate(u)});
                 }
                 for (const auto& [name, a] : graphs) {
                   cases.push_back({"chromatic " + name + " " + a.str(), a, Side::chromatic});
                   if (name == "P" || name == "C" || name == "K")
                     cases.push_back({"llt " + name + " " + a.str(), a, Side::llt});
                 }
                 return check_each(
                     "sector_sums", "special", n, K::theorem, cases.size(),
                     [cases](std::size_t i) { return cases[i].label; },
                     [cases](std::size_t i) -> Witness {
                       const auto& c = cases[i];
                       SymFunc direct = c.side == Side::chromatic ? x_e(c.a) : g1_e(MarkedDiagram::make(c.a));
                       return sym_diff(e_expansion_by_sectors(c.a, c.side), direct);
                     });
               }});

  v.push_back({"eulerian_path", "path", K::theorem, 7, 1, [](int n) {
                 return single("eulerian_path", "path", n, K::theorem, path_seq(n).str(), [n]() -> Witness {
                   QPoly got = eulerian_specialization(GraphKind::path, n), want = eulerian_poly(n);
                   if (got != want) return poly_diff("squarefree", got, want);
                   return std::nullopt;
                 });
               }});
  v.push_back({"eulerian_cycle", "cycle", K::theorem, 7, 2, [](int n) {
                 return single("eulerian_cycle", "cycle", n, K::theorem, cycle_seq(n).str(), [n]() -> Witness {
                   QPoly got = eulerian_specialization(GraphKind::cycle, n);
                   QPoly want = QPoly::q() * eulerian_poly(n - 1) * Rational(n);
                   if (got != want) return poly_diff("squarefree", got, want);
                   return std::nullopt;
                 });
               }});

  v.push_back({"tildec_routes", "double_complete", K::theorem, 7, 1, [](int n) {
                 return single("tildec_routes", "double_complete", n, K::theorem, "n=" + std::to_string(n),
                               [n]() -> Witness {
                                 auto t = g_series_and_tildec(n, std::min(n, 5));
                                 if (t.tildec_log[n] != t.tildec_recurrence[n])
                                   return poly_diff("log vs recurrence", t.tildec_log[n], t.tildec_recurrence[n]);
                                 if (n <= 5 && t.tildec_log[n] != t.tildec_hn[n])
                                   return poly_diff("log vs H_n", t.tildec_log[n], t.tildec_hn[n]);
                                 return std::nullopt;
                               });
               }});

  v.push_back({"golden_tildec5", "double_complete", K::theorem, 5, 5, [](int n) {
                 return single("golden_tildec5", "double_complete", n, K::theorem, "n=5", []() -> Witness {
                   auto t = g_series_and_tildec(5, 5);
                   QPoly want = golden_tildec5();
                   for (const auto& [route, p] : {std::pair{"log", t.tildec_log[5]},
                                                   std::pair{"recurrence", t.tildec_recurrence[5]},
                                                   std::pair{"H_5", t.tildec_hn[5]}})
                     if (p != want) return poly_diff(route, p, want);
                   return std::nullopt;
                 });
               }});

  v.push_back({"golden_x_223210", "dyck", K::discrepancy, 6, 6, [](int n) {
                 return single("golden_x_223210", "dyck", n, K::discrepancy, "2,2,3,2,1,0", golden_x);
               }});

  auto parking = [&v](const std::string& name, CheckKind kind, int max_n, bool ParkingChecks::*field) {
    v.push_back({name, "parking", kind, max_n, 1, [=](int n) {
                   return single(name, "parking", n, kind, "n=" + std::to_string(n), [=]() -> Witness {
                     auto t = g_series_and_tildec(n, 0);
                     ParkingChecks c = parking_suite(n, t.tildec_log[n]);
                     if (!(c.*field)) {
                       ParkingData pf = parking_functions(n);
                       return "f_n = " + pf.f.str() + ", I_n = " + pf.I.str() + ", tilde c_n = " + t.tildec_log[n].str();
                     }
                     return std::nullopt;
                   });
                 }});
  };
  parking("parking_cayley", K::theorem, 6, &ParkingChecks::cayley);
  parking("parking_reflection", K::theorem, 6, &ParkingChecks::reflection);
  parking("parking_tildec_shifted", K::theorem, 6, &ParkingChecks::shifted_tildec);
  parking("parking_connected_shifted", K::theorem, 5, &ParkingChecks::shifted_connected);
  parking("parking_tildec_printed", K::discrepancy, 6, &ParkingChecks::printed_tildec);
  parking("parking_connected_printed", K::discrepancy, 5, &ParkingChecks::printed_connected);

  v.push_back({"path_formula_21", "path", K::discrepancy, 3, 3, [](int n) {
                 return single("path_formula_21", "path", n, K::discrepancy, "mu=2,1", []() -> Witness {
                   QPoly printed = path_e_coeff({2, 1}), truth = x_e(path_seq(3)).coeff({2, 1});
                   if (printed != truth) return poly_diff("formula vs coloring sum", printed, truth);
                   return std::nullopt;
                 });
               }});
  v.push_back({"cycle_formula_3", "cycle", K::discrepancy, 3, 3, [](int n) {
                 return single("cycle_formula_3", "cycle", n, K::discrepancy, "mu=3", []() -> Witness {
                   QPoly printed = cycle_e_coeff({3}), truth = x_e(cycle_seq(3)).coeff({3});
                   if (printed != truth) return poly_diff("formula vs coloring sum", printed, truth);
                   return std::nullopt;
                 });
               }});
  return v;
}

// ---- conjectures

Witness chromatic_conj(const MarkedDiagram& d) {
  SymFunc x = x_e(d.a);
  if (auto w = epos_unimodal(x)) return w;
  return palindromic(d);
}

Witness vstrip_epos(const MarkedDiagram& d) { return epos_unimodal(g1_e(d)); }

Witness vstrip_ppos(const MarkedDiagram& d) {
  SymFunc p = change_basis(omega(llt_poly(d, true)), Basis::p);
  for (const auto& [la, c] : p.coeffs) {
    QPoly z = c * Rational(static_cast<long>(z_of(la)));
    if (!z.nonnegative() || !z.integral() || !is_unimodal(z)) return "p[" + partition_str(la) + "] = " + z.str();
  }
  return std::nullopt;
}

Witness schur_difference(const MarkedDiagram& d) {
  SymFunc diff = change_basis(llt_poly(d, true) - chromatic_qsf(d.a), Basis::s);
  return first_negative(diff);
}

// Gamma carries the marked cells as ordinary edges; H turns them into strict
// corner edges
std::optional<AreaSeq> unmarked_parent(const MarkedDiagram& d) {
  std::vector<int> a = d.a.values();
  for (const auto& e : d.strict) ++a[e.source - 1];
  try {
    AreaSeq g = AreaSeq::validate(a);
    for (const auto& e : d.strict)
      if (!g.has_edge(e.source, e.target)) return std::nullopt;
    return g;
  } catch (const DiagramError&) {
    return std::nullopt;
  }
}

Witness strict_difference(const MarkedDiagram& d) {
  auto gamma = unmarked_parent(d);
  if (!gamma) return "marked cells do not extend to a diagram";
  auto k = static_cast<int>(d.strict.size());
  SymFunc g = llt_poly(MarkedDiagram::make(*gamma), true);
  SymFunc h = scale(llt_poly(d, true), QPoly::monomial(k));
  return first_negative(change_basis(g - h, Basis::e));
}

Witness hatc_conj(const MarkedDiagram& d) {
  auto h = hatc_coefficients(d);
  auto c = chromatic_c(d.a);
  for (const auto& [la, v] : h) {
    std::string at = "[" + partition_str(la) + "] ";
    if (!v.integral() || !v.nonnegative() || !is_unimodal(v)) return "hat c" + at + v.str();
    QPoly diff = v - c[la];
    if (!diff.nonnegative()) return "hat c - c" + at + diff.str();
  }
  return std::nullopt;
}

std::vector<CheckDef> build_conjecture_checks() {
  using K = CheckKind;
  std::vector<CheckDef> v;
  v.push_back(diagram_check("chromatic_epos", Family::circular, K::conjecture, 1, 6, chromatic_conj));
  v.push_back(diagram_check("vstrip_llt_epos", Family::circular_vstrip, K::conjecture, 1, 6, vstrip_epos));
  v.push_back(diagram_check("vstrip_ppos", Family::circular_vstrip, K::conjecture, 1, 6, vstrip_ppos));
  v.push_back(diagram_check("schur_difference", Family::circular, K::conjecture, 1, 4, schur_difference));
  v.push_back(diagram_check("strict_difference", Family::circular_vstrip, K::conjecture, 1, 4, strict_difference,
                            0, [](const MarkedDiagram& d) { return !d.strict.empty(); }));
  v.push_back(diagram_check("hatc", Family::circular, K::conjecture, 1, 6, hatc_conj));
  v.push_back({"weak_chain_fpos", "ribbon", K::expected_failure, 3, 3, [](int n) {
                 return single("weak_chain_fpos", "ribbon", n, K::expected_failure, "1,1,1;weak=1-2,2-3",
                               []() -> Witness {
                                 for (const auto& [al, c] : weak_chain_example().coeffs)
                                   if (!c.nonnegative()) return "F[" + composition_str(al) + "] = " + c.str();
                                 return std::nullopt;
                               });
               }});
  return v;
}

std::vector<CheckReport> run_defs(const std::vector<const CheckDef*>& defs, int n_max) {
  std::vector<CheckReport> out;
  for (const CheckDef* d : defs)
    for (int n = d->min_n; n <= std::min(n_max, d->max_n); ++n) out.push_back(d->run(n));
  return out;
}

}  // namespace

QSymFunc weak_chain_example() {
  // weak marks sit on the cycle edges 1->2 and 2->3, so only 3->1 can ascend
  ColoringModel m{3,
                  {{1, 2, Constraint::geq, Weight::none},
                   {2, 3, Constraint::geq, Weight::none},
                   {3, 1, Constraint::none, Weight::ascent}}};
  return shift_qsym(qsym_to_fundamental(coloring_sum(m)));
}

const std::vector<CheckDef>& identity_checks() {
  static const std::vector<CheckDef> v = build_identity_checks();
  return v;
}

const std::vector<CheckDef>& conjecture_checks() {
  static const std::vector<CheckDef> v = build_conjecture_checks();
  return v;
}

const CheckDef& find_check(const std::string& name) {
  for (const auto* list : {&identity_checks(), &conjecture_checks()})
    for (const auto& d : *list)
      if (d.name == name) return d;
  throw std::invalid_argument("unknown check: " + name);
}

std::vector<CheckReport> run_identity_suite(int n_max) {
  std::vector<const CheckDef*> defs;
  for (const auto& d : identity_checks()) defs.push_back(&d);
  return run_defs(defs, n_max);
}

std::vector<CheckReport> sweep_conjectures(int n_max, const std::vector<std::string>& which) {
  bool all = std::find(which.begin(), which.end(), "all") != which.end();
  std::vector<const CheckDef*> defs;
  if (all) {
    for (const auto& d : conjecture_checks()) defs.push_back(&d);
  } else {
    for (const auto& w : which) defs.push_back(&find_check(w));
  }
  return run_defs(defs, n_max);
}

namespace {

nlohmann::json to_json(const CheckReport& r, bool timing) {
  nlohmann::json j;
  j["schema"] = 1;
  j["check"] = r.check;
  j["family"] = r.family;
  j["n"] = r.n;
  j["tested"] = r.tested;
  j["kind"] = kind_name(r.kind);
  j["status"] = r.status();
  j["ms"] = timing ? static_cast<long>(r.ms) : 0L;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : r.failures) j["failures"].push_back({{"diagram", f.diagram}, {"witness", f.witness}});
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string report_json(const CheckReport& r, bool timing) { return to_json(r, timing).dump(); }

std::string reports_json(const std::vector<CheckReport>& rs, bool timing) {
  nlohmann::json j;
  j["schema"] = 1;
  j["reports"] = nlohmann::json::array();
  for (const auto& r : rs) j["reports"].push_back(to_json(r, timing));
  return j.dump(2);
}

std::string coefficient_csv(const std::string& diagram, const SymFunc& f) {
  std::ostringstream os;
  os << "diagram,basis,partition,polynomial\n";
  for (const auto& [la, c] : f.coeffs)
    os << csv_field(diagram) << ',' << basis_name(f.basis) << ',' << csv_field(partition_str(la)) << ','
       << csv_field(c.str()) << '\n';
  return os.str();
}

}  // namespace cqsf
