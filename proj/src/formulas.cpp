#include "cqsf/formulas.hpp"

#include <algorithm>
#include <numeric>

#include "cqsf/orientations.hpp"

namespace cqsf {

namespace {

QPoly qpow(int k) { return QPoly::monomial(k); }

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long factorial(int n) {
  long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// elementary symmetric polynomial e_j of a list of QPolys
QPoly elementary_of(const std::vector<QPoly>& xs, int j) {
  std::vector<QPoly> dp(j + 1);
  if (j < 0) return QPoly();
  dp[0] = QPoly(1);
  for (const auto& x : xs)
    for (int t = j; t >= 1; --t) dp[t] += dp[t - 1] * x;
  return dp[j];
}

long multiplicity_factorials(const Partition& mu) {
  std::map<int, int> m;
  for (int p : mu) ++m[p];
  long r = 1;
  for (auto [part, k] : m) r *= factorial(k);
  return r;
}

Rational zr(const Partition& la) { return Rational(static_cast<long>(z_of(la))); }

SymFunc single_e(int n) { return SymFunc{n, Basis::e, {{Partition{n}, QPoly(1)}}}; }

}  // namespace

SymFunc e_expansion_by_sectors(const AreaSeq& a, Side side) {
  SymFunc f{a.n(), Basis::e, {}};
  if (side == Side::chromatic) {
    for (const auto& r : enum_acyclic(a)) f.add(r.sectors, qpow(r.asc));
  } else {
    for (const auto& r : enum_ostar(MarkedDiagram::make(a))) f.add(r.sectors, qpow(r.asc));
  }
  return f;
}

QPoly path_e_coeff(const Partition& mu) {
  int k = static_cast<int>(mu.size());
  std::vector<QPoly> nu;
  for (int p : mu) nu.push_back(q_int(p - 1));
  QPoly s = qpow(k - 1) * elementary_of(nu, k - 1) + qpow(k) * elementary_of(nu, k);
  return s * Rational(factorial(k), multiplicity_factorials(mu));
}

QPoly cycle_e_coeff(const Partition& mu) {
  int k = static_cast<int>(mu.size());
  std::vector<int> distinct(mu.begin(), mu.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  QPoly total;
  for (int j : distinct) {
    Partition rest = mu;
    rest.erase(std::find(rest.begin(), rest.end(), j));
    std::vector<QPoly> xs;
    for (int p : rest) xs.push_back(q_int(p - 1));
    QPoly term = qpow(k) * elementary_of(xs, k - 1) * Rational(factorial(k - 1) * j);
    total += term * Rational(1, multiplicity_factorials(rest));
  }
  return total;
}

// ---- ESeries

void ESeries::add(int zpow, const Partition& la, const QPoly& c) {
  if (zpow > order() || c.is_zero()) return;
  auto& slot = terms_[zpow][la];
  slot += c;
  if (slot.is_zero()) terms_[zpow].erase(la);
}

SymFunc ESeries::coefficient(int zpow) const {
  SymFunc f{zpow, Basis::e, {}};
  for (const auto& [la, c] : terms_.at(zpow)) f.add(la, c);
  return f;
}

ESeries ESeries::operator+(const ESeries& o) const {
  ESeries r(std::min(order(), o.order()));
  for (int z = 0; z <= r.order(); ++z) {
    for (const auto& [la, c] : terms_[z]) r.add(z, la, c);
    for (const auto& [la, c] : o.terms_[z]) r.add(z, la, c);
  }
  return r;
}

ESeries ESeries::operator*(const ESeries& o) const {
  ESeries r(std::min(order(), o.order()));
  for (int i = 0; i <= r.order(); ++i)
    for (int j = 0; i + j <= r.order(); ++j)
      for (const auto& [la, c] : terms_[i])
        for (const auto& [mu, d] : o.terms_[j]) {
          Partition nu = la;
          nu.insert(nu.end(), mu.begin(), mu.end());
          r.add(i + j, sorted_partition(nu), c * d);
        }
  return r;
}

ESeries ESeries::geometric() const {
  if (!terms_[0].empty()) throw std::invalid_argument("geometric series needs a zero constant term");
  ESeries sum(order()), power(order());
  sum.add(0, {}, QPoly(1));
  power.add(0, {}, QPoly(1));
  for (int k = 1; k <= order(); ++k) {
    power = power * *this;
    sum = sum + power;
  }
  return sum;
}

ESeries gf_expand(GraphKind kind, Side side, int order) {
  ESeries num(order), den(order);
  if (side == Side::chromatic) {
    for (int i = 2; i <= order; ++i) den.add(i, {i}, QPoly::q() * q_int(i - 1));
    if (kind == GraphKind::path) {
      num.add(0, {}, QPoly(1));
      for (int i = 1; i <= order; ++i) num.add(i, {i}, QPoly(1));
    } else {
      for (int i = 2; i <= order; ++i) num.add(i, {i}, QPoly::q() * q_int(i - 1) * Rational(i));
    }
  } else {
    for (int i = 1; i <= order; ++i) den.add(i, {i}, qpow(i - 1));
    if (kind == GraphKind::path) {
      num.add(0, {}, QPoly(1));
    } else {
      for (int i = 1; i <= order; ++i) num.add(i, {i}, qpow(i - 1) * Rational(i));
    }
  }
  return num * den.geometric();
}

AreaSeq path_seq(int n) {
  std::vector<int> a(n, 1);
  a.back() = 0;
  return AreaSeq::validate(a);
}

AreaSeq cycle_seq(int n) {
  if (n < 2) throw std::invalid_argument("cycle needs two vertices");
  return AreaSeq::validate(std::vector<int>(n, 1));
}

AreaSeq complete_seq(int n) {
  std::vector<int> a(n);
  for (int i = 0; i < n; ++i) a[i] = n - 1 - i;
  return AreaSeq::validate(a);
}

AreaSeq double_complete_seq(int n) {
  if (n == 1) return AreaSeq::validate({0});
  return AreaSeq::validate(std::vector<int>(n, n - 1));
}

SymFunc gf_direct(GraphKind kind, Side side, int n) {
  if (kind == GraphKind::cycle && n == 1) {
    // a single vertex with a loop: no proper colorings, one never-ascending edge
    return side == Side::chromatic ? SymFunc{1, Basis::e, {}} : single_e(1);
  }
  AreaSeq a = kind == GraphKind::path ? path_seq(n) : cycle_seq(n);
  if (side == Side::chromatic) return change_basis(chromatic_qsf(a), Basis::e);
  return change_basis(llt_poly(MarkedDiagram::make(a), true), Basis::e);
}

SymFunc kn_llt_via_recurrence(int n) {
  std::vector<SymFunc> g;
  g.push_back(SymFunc{0, Basis::e, {{Partition{}, QPoly(1)}}});
  QPoly qp1 = QPoly(1) + QPoly::q();
  for (int m = 1; m <= n; ++m) {
    SymFunc total{m, Basis::e, {}};
    for (int i = 0; i < m; ++i) {
      QPoly w(1);
      for (int k = i + 1; k <= m - 1; ++k) w *= qp1.pow(k) - QPoly(1);
      total = total + scale(multiplicative_product(g[i], single_e(m - i)), w);
    }
    g.push_back(total);
  }
  return g[n];
}

// ---- p-expansions

std::string pstat_name(PStat s) {
  switch (s) {
    case PStat::asc_inverse: return "asc(pi^-1)";
    case PStat::asc_direct: return "asc(pi)";
    case PStat::desc_inverse: return "desc(pi^-1)";
    case PStat::desc_direct: return "desc(pi)";
  }
  return "?";
}

bool admissible(const NaturalPoset& p, const std::vector<int>& word, const Partition& mu) {
  std::size_t start = 0;
  for (int len : mu) {
    int last = word[start + len - 1];
    for (int i = 0; i + 1 < len; ++i) {
      int x = word[start + i], y = word[start + i + 1];
      if (p.lt(x, y)) return false;
      if (x >= last) return false;
    }
    start += len;
  }
  return true;
}

int pstat(const AreaSeq& a, const std::vector<int>& word, PStat s) {
  int n = a.n();
  std::vector<int> f(n + 1);
  bool inverse = s == PStat::asc_inverse || s == PStat::desc_inverse;
  for (int pos = 1; pos <= n; ++pos) {
    if (inverse)
      f[word[pos - 1]] = pos;
    else
      f[pos] = word[pos - 1];
  }
  bool asc = s == PStat::asc_inverse || s == PStat::asc_direct;
  int k = 0;
  for (const auto& e : a.edges()) k += asc ? f[e.source] < f[e.target] : f[e.source] > f[e.target];
  return k;
}

SymFunc p_expansion_admissible(const AreaSeq& a, Side side, PStat s) {
  if (a.circular()) throw CircularNotSupported();
  int n = a.n();
  NaturalPoset p = poset_of(a);
  SymFunc out{n, Basis::p, {}};
  QPoly qp1 = QPoly(1) + QPoly::q();
  for (const auto& mu : partitions(n)) {
    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 1);
    QPoly sum;
    do {
      if (!admissible(p, word, mu)) continue;
      int st = pstat(a, word, s);
      sum += side == Side::chromatic ? qpow(st) : qp1.pow(st);
    } while (std::next_permutation(word.begin(), word.end()));
    QPoly c = sum;
    if (side == Side::chromatic) {
      for (int part : mu) c *= q_int(part);
    } else {
      c *= qpow(n - static_cast<int>(mu.size()));
    }
    out.add(mu, c * (Rational(1) / zr(mu)));
  }
  return out;
}

SymFunc p_expansion_direct(const AreaSeq& a, Side side) {
  SymFunc f = side == Side::chromatic ? chromatic_qsf(a) : llt_poly(MarkedDiagram::make(a), true);
  return change_basis(omega(f), Basis::p);
}

std::map<Partition, QPoly> hatc_coefficients(const MarkedDiagram& d) {
  int n = d.n();
  SymFunc wp = change_basis(omega(llt_poly(d, false)), Basis::p);
  QPoly den = (QPoly::q() - QPoly(1)).pow(n);
  std::map<Partition, QPoly> out;
  for (const auto& la : partitions(n)) {
    QPoly num = wp.coeff(la) * zr(la);
    for (int part : la) num *= qpow(part) - QPoly(1);
    out[la] = exact_div(num, den);
  }
  return out;
}

std::map<Partition, QPoly> chromatic_c(const AreaSeq& a) {
  SymFunc wp = change_basis(omega(chromatic_qsf(a)), Basis::p);
  std::map<Partition, QPoly> out;
  for (const auto& la : partitions(a.n())) out[la] = wp.coeff(la) * zr(la);
  return out;
}

std::optional<Partition> pleth_identity_check(const AreaSeq& a) {
  if (a.circular()) throw CircularNotSupported();
  int n = a.n();
  SymFunc gp = change_basis(llt_poly(MarkedDiagram::make(a), false), Basis::p);
  SymFunc xp = change_basis(chromatic_qsf(a), Basis::p);
  QPoly qm1n = (QPoly::q() - QPoly(1)).pow(n);
  for (const auto& la : partitions(n)) {
    QPoly lhs = gp.coeff(la) * zr(la);
    for (int part : la) lhs *= qpow(part) - QPoly(1);
    QPoly rhs = xp.coeff(la) * zr(la) * qm1n;
    if (lhs != rhs) return la;
  }
  return std::nullopt;
}

std::optional<Partition> omega_transpose_check(const MarkedDiagram& d) {
  SymFunc lhs = change_basis(omega(llt_poly(d, false)), Basis::m);
  SymFunc rhs = change_basis(llt_poly(transpose_marked(d), false), Basis::m);
  QLaurent shift = QLaurent::monomial(d.a.area());
  for (const auto& la : partitions(d.n())) {
    QLaurent l(lhs.coeff(la));
    QLaurent r = shift * QLaurent(rhs.coeff(la)).invert();
    if (l != r) return la;
  }
  return std::nullopt;
}

// ---- double-complete tower

DoubleCompleteTower g_series_and_tildec(int nmax, int hn_max) {
  DoubleCompleteTower t;
  // u = sum_{j>=1} q^C(j,2) x^j / j!, truncated at x^nmax
  std::vector<QPoly> u(nmax + 1);
  for (int j = 1; j <= nmax; ++j) u[j] = qpow(static_cast<int>(binom(j, 2))) * Rational(1, factorial(j));
  auto mul = [nmax](const std::vector<QPoly>& x, const std::vector<QPoly>& y) {
    std::vector<QPoly> r(nmax + 1);
    for (int i = 0; i <= nmax; ++i)
      for (int j = 0; i + j <= nmax; ++j) r[i + j] += x[i] * y[j];
    return r;
  };
  std::vector<QPoly> log(nmax + 1), power = u;
  for (int k = 1; k <= nmax; ++k) {
    Rational c(k % 2 ? 1 : -1, k);
    for (int i = 0; i <= nmax; ++i) log[i] += power[i] * c;
    power = mul(power, u);
  }
  QPoly qm1 = QPoly::q() - QPoly(1);
  t.g.assign(nmax + 1, QPoly());
  t.tildec_log.assign(nmax + 1, QPoly());
  t.tildec_recurrence.assign(nmax + 1, QPoly());
  t.tildec_hn.assign(nmax + 1, QPoly());
  for (int r = 1; r <= nmax; ++r) {
    t.g[r] = log[r] * Rational(factorial(r));
    t.tildec_log[r] = exact_div(t.g[r] * (qpow(r) - QPoly(1)) * Rational(r), qm1.pow(r));
  }

  std::vector<QPoly> scaled(nmax + 1);  // (q-1)^r c~_r / (r (q^r - 1))
  for (int m = 1; m <= nmax; ++m) {
    if (m == 1) {
      t.tildec_recurrence[1] = QPoly(1);
    } else {
      QPoly bracket = qpow(static_cast<int>(binom(m, 2)));
      for (int r = 1; r < m; ++r)
        bracket -= scaled[r] * qpow(static_cast<int>(binom(m - r, 2))) * Rational(binom(m - 1, r - 1));
      t.tildec_recurrence[m] = exact_div((qpow(m) - QPoly(1)) * bracket, qm1.pow(m)) * Rational(m);
    }
    scaled[m] = exact_div(qm1.pow(m) * t.tildec_recurrence[m], (qpow(m) - QPoly(1)) * Rational(m));
  }

  QPoly one_minus_q = QPoly(1) - QPoly::q();
  for (int n = 1; n <= std::min(hn_max, nmax); ++n) {
    SymFunc wp = change_basis(omega(h_double_complete(n)), Basis::p);
    QPoly num = wp.coeff({n}) * zr({n}) * (QPoly(1) - qpow(n));
    t.tildec_hn[n] = exact_div(num, one_minus_q.pow(n));
  }
  return t;
}

// ---- parking functions

ParkingData parking_functions(int n) {
  ParkingData d;
  d.n = n;
  std::vector<int> a(n, 1);
  int full = static_cast<int>(binom(n + 1, 2));
  while (true) {
    std::vector<int> cnt(n + 2, 0);
    for (int x : a) ++cnt[x];
    bool ok = true;
    int below = 0;
    for (int j = 1; j <= n && ok; ++j) {
      below += cnt[j];
      ok = below >= j;
    }
    if (ok) {
      int s = std::accumulate(a.begin(), a.end(), 0);
      ++d.count;
      d.f += qpow(full - s);
      d.I += qpow(s);
    }
    int i = n - 1;
    while (i >= 0 && a[i] == n) a[i--] = 1;
    if (i < 0) break;
    ++a[i];
  }
  return d;
}

QPoly connected_graphs_by_edges(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  QPoly out;
  int m = static_cast<int>(pairs.size());
  for (long mask = 0; mask < (1L << m); ++mask) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int comps = n;
    for (int e = 0; e < m; ++e)
      if ((mask >> e) & 1) {
        int x = find(pairs[e].first), y = find(pairs[e].second);
        if (x != y) {
          parent[x] = y;
          --comps;
        }
      }
    if (comps == 1) out += qpow(__builtin_popcountl(mask));
  }
  return out;
}

ParkingChecks parking_suite(int n, const QPoly& tildec_n) {
  ParkingChecks c;
  ParkingData pf = parking_functions(n);
  QPoly f_prev = n >= 2 ? parking_functions(n - 1).f : QPoly(1);
  long long cayley = 1;
  for (int i = 0; i < n - 1; ++i) cayley *= n + 1;
  c.cayley = pf.count == cayley;
  c.reflection = QLaurent::monomial(static_cast<int>(binom(n + 1, 2))) * QLaurent(pf.I).invert() == QLaurent(pf.f);
  QPoly nqn = q_int(n) * Rational(n);
  c.printed_tildec = qpow(n) * tildec_n == nqn * pf.f;
  c.shifted_tildec = tildec_n == nqn * f_prev;
  QLaurent conn(connected_graphs_by_edges(n));
  c.printed_connected = QLaurent(pf.I.shift(1)) == conn * QLaurent::monomial(-n);
  c.shifted_connected = QLaurent(f_prev.shift(1)) == conn * QLaurent::monomial(-(n - 1));
  return c;
}

QPoly eulerian_specialization(GraphKind kind, int n) {
  AreaSeq a = kind == GraphKind::path ? path_seq(n) : cycle_seq(n);
  return coeff_squarefree(chromatic_qsf(a));
}

// ---- two variables

namespace {

using TwoVar = std::map<Partition, QPoly>;

TwoVar two_var(const AreaSeq& a) {
  if (a.n() == 0) return {{Partition{}, QPoly(1)}};
  return llt_poly_truncated(MarkedDiagram::make(a), 2);
}

std::optional<AreaSeq> induced_any_rotation(const AreaSeq& a, std::vector<int> keep) {
  for (std::size_t r = 0; r < std::max<std::size_t>(keep.size(), 1); ++r) {
    try {
      return induced(a, keep);
    } catch (const std::exception&) {
      std::rotate(keep.begin(), keep.begin() + 1, keep.end());
    }
  }
  return std::nullopt;
}

}  // namespace

RecursionCheck two_variable_recursion_check(const AreaSeq& a) {
  RecursionCheck res;
  int n = a.n();
  TwoVar ga = two_var(a);
  for (int u = 1; u <= n; ++u) {
    int prev = u == 1 ? n : u - 1;
    if (a[u] == 0 || a[prev] > a[u]) continue;
    int v = (u - 1 + a[u]) % n + 1;
    std::vector<int> bv = a.values();
    --bv[u - 1];
    AreaSeq b = AreaSeq::validate(bv);
    std::vector<int> keep;
    for (int w = 1; w <= n; ++w)
      if (w != u && w != v) keep.push_back(w);
    auto c = induced_any_rotation(a, keep);
    if (!c) {
      res.ok = false;
      res.detail = "corner " + std::to_string(u) + "->" + std::to_string(v) + ": removal is not a diagram";
      return res;
    }
    TwoVar gb = two_var(b), gc = two_var(*c);
    QPoly factor = qpow(a[u] - 1) * (QPoly::q() - QPoly(1));
    for (const auto& la : partitions(n)) {
      if (la.size() > 2) continue;
      QPoly rhs = gb.count(la) ? gb.at(la) : QPoly();
      if (la.size() == 2) {
        Partition mu;
        for (int p : la)
          if (p > 1) mu.push_back(p - 1);
        if (gc.count(mu)) rhs += factor * gc.at(mu);
      }
      QPoly lhs = ga.count(la) ? ga.at(la) : QPoly();
      if (lhs != rhs) {
        res.ok = false;
        res.detail = "corner " + std::to_string(u) + "->" + std::to_string(v) + " at m" + partition_str(la);
        return res;
      }
    }
  }
  return res;
}

SymFunc two_variable_e_part(const AreaSeq& a) {
  SymFunc g = change_basis(llt_poly(MarkedDiagram::make(a), true), Basis::e);
  SymFunc out{g.degree, Basis::e, {}};
  for (const auto& [la, c] : g.coeffs)
    if (la.empty() || la.front() <= 2) out.add(la, c);
  return out;
}

}  // namespace cqsf
