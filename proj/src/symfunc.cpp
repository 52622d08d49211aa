#include "cqsf/symfunc.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace cqsf {

NotSymmetric::NotSymmetric(Composition x, Composition y)
    : std::runtime_error("not symmetric: M[" + composition_str(x) + "] != M[" + composition_str(y) + "]"),
      a(std::move(x)),
      b(std::move(y)) {}

QPoly SymFunc::coeff(const Partition& la) const {
  auto it = coeffs.find(la);
  return it == coeffs.end() ? QPoly() : it->second;
}

void SymFunc::add(const Partition& la, const QPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = coeffs.try_emplace(la, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

QPoly QSymFunc::coeff(const Composition& al) const {
  auto it = coeffs.find(al);
  return it == coeffs.end() ? QPoly() : it->second;
}

void QSymFunc::add(const Composition& al, const QPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = coeffs.try_emplace(al, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

// ---- indices

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Composition> compositions(int n) {
  std::vector<Composition> out;
  if (n == 0) return {Composition{}};
  for (unsigned mask = 0; mask < (1U << (n - 1)); ++mask) out.push_back(mask_to_composition(mask, n));
  return out;
}

bool is_partition(const Partition& la) {
  for (size_t i = 0; i < la.size(); ++i) {
    if (la[i] <= 0) return false;
    if (i && la[i] > la[i - 1]) return false;
  }
  return true;
}

int size(const std::vector<int>& parts) { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition sorted_partition(std::vector<int> parts) {
  parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return parts;
}

Partition conjugate(const Partition& la) {
  Partition c;
  if (la.empty()) return c;
  for (int j = 1; j <= la[0]; ++j) {
    int cnt = 0;
    for (int p : la) cnt += p >= j;
    c.push_back(cnt);
  }
  return c;
}

long long z_of(const Partition& la) {
  std::map<int, int> mult;
  for (int p : la) ++mult[p];
  long long z = 1;
  for (auto [i, m] : mult)
    for (int k = 1; k <= m; ++k) z *= static_cast<long long>(i) * k;
  return z;
}

unsigned composition_to_mask(const Composition& al) {
  unsigned mask = 0;
  int s = 0;
  for (size_t i = 0; i + 1 < al.size(); ++i) {
    s += al[i];
    mask |= 1U << (s - 1);
  }
  return mask;
}

Composition mask_to_composition(unsigned mask, int n) {
  Composition al;
  int last = 0;
  for (int i = 1; i < n; ++i)
    if (mask & (1U << (i - 1))) {
      al.push_back(i - last);
      last = i;
    }
  al.push_back(n - last);
  return al;
}

namespace {
std::string join(const std::vector<int>& v, char sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}
}  // namespace

std::string partition_str(const Partition& la) { return join(la, ','); }
std::string composition_str(const Composition& al) { return join(al, '|'); }

Partition parse_partition(const std::string& s) {
  Partition la;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    la.push_back(std::stoi(tok));
  }
  if (!is_partition(la)) throw std::invalid_argument("not a partition: " + s);
  return la;
}

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::m: return "m";
    case Basis::e: return "e";
    case Basis::p: return "p";
    case Basis::s: return "s";
  }
  return "?";
}

Basis parse_basis(const std::string& s) {
  if (s == "m") return Basis::m;
  if (s == "e") return Basis::e;
  if (s == "p") return Basis::p;
  if (s == "s") return Basis::s;
  throw std::invalid_argument("unknown basis: " + s);
}

// ---- arithmetic

SymFunc operator+(const SymFunc& a, const SymFunc& b) {
  if (a.basis != b.basis) return a + change_basis(b, a.basis);
  SymFunc r = a;
  for (const auto& [la, c] : b.coeffs) r.add(la, c);
  return r;
}

SymFunc operator-(const SymFunc& a, const SymFunc& b) {
  if (a.basis != b.basis) return a - change_basis(b, a.basis);
  SymFunc r = a;
  for (const auto& [la, c] : b.coeffs) r.add(la, -c);
  return r;
}

SymFunc scale(const SymFunc& f, const QPoly& c) {
  return map_coeffs(f, [&](const QPoly& x) { return x * c; });
}

SymFunc multiplicative_product(const SymFunc& a, const SymFunc& b) {
  if (a.basis != b.basis || (a.basis != Basis::e && a.basis != Basis::p))
    throw std::invalid_argument("multiplicative_product needs matching e or p bases");
  SymFunc r{a.degree + b.degree, a.basis, {}};
  for (const auto& [la, ca] : a.coeffs)
    for (const auto& [mu, cb] : b.coeffs) {
      Partition nu = la;
      nu.insert(nu.end(), mu.begin(), mu.end());
      r.add(sorted_partition(nu), ca * cb);
    }
  return r;
}

// ---- transition matrices to m

namespace {

// number of 0-1 matrices with row sums la and column sums mu
long long count_01(const Partition& la, std::vector<int>& cols, size_t row) {
  if (row == la.size()) {
    for (int c : cols)
      if (c) return 0;
    return 1;
  }
  long long total = 0;
  int k = static_cast<int>(cols.size());
  std::function<void(int, int)> choose = [&](int start, int need) {
    if (need == 0) {
      total += count_01(la, cols, row + 1);
      return;
    }
    for (int j = start; j <= k - need; ++j) {
      if (cols[j] == 0) continue;
      --cols[j];
      choose(j + 1, need - 1);
      ++cols[j];
    }
  };
  choose(0, la[row]);
  return total;
}

// ways to distribute parts of la into bins of sizes mu exactly
long long count_p(const Partition& la, std::vector<int>& bins, size_t i) {
  if (i == la.size()) return 1;
  long long total = 0;
  for (auto& b : bins) {
    if (b < la[i]) continue;
    b -= la[i];
    total += count_p(la, bins, i + 1);
    b += la[i];
  }
  return total;
}

// SSYT of shape la with content mu: add horizontal strips of sizes mu_1, mu_2, ...
long long kostka(const Partition& la, const Partition& mu) {
  std::map<std::pair<Partition, size_t>, long long> memo;
  std::function<long long(const Partition&, size_t)> rec = [&](const Partition& cur, size_t step) -> long long {
    if (step == mu.size()) return cur == la ? 1 : 0;
    auto key = std::make_pair(cur, step);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    long long total = 0;
    // grow cur by a horizontal strip of size mu[step] staying inside la
    Partition nxt = cur;
    nxt.resize(la.size(), 0);
    std::function<void(size_t, int)> strip = [&](size_t r, int left) {
      if (r == la.size()) {
        if (left == 0) total += rec(sorted_partition(nxt), step + 1);
        return;
      }
      int base = r < cur.size() ? cur[r] : 0;
      int cap = la[r] - base;
      if (r > 0) {
        int above = r - 1 < cur.size() ? cur[r - 1] : 0;
        cap = std::min(cap, above - base);
      }
      for (int add = 0; add <= std::min(cap, left); ++add) {
        nxt[r] = base + add;
        strip(r + 1, left - add);
      }
      nxt[r] = base;
    };
    strip(0, mu[step]);
    memo[key] = total;
    return total;
  };
  return rec(Partition{}, 0);
}

}  // namespace

long long to_m_entry(Basis b, const Partition& la, const Partition& mu) {
  switch (b) {
    case Basis::m: return la == mu ? 1 : 0;
    case Basis::e: {
      std::vector<int> cols(mu.begin(), mu.end());
      return count_01(la, cols, 0);
    }
    case Basis::p: {
      std::vector<int> bins(mu.begin(), mu.end());
      return count_p(la, bins, 0);
    }
    case Basis::s: return kostka(la, mu);
  }
  return 0;
}

namespace {

using RMatrix = std::vector<std::vector<Rational>>;

RMatrix invert(RMatrix a) {
  size_t n = a.size();
  RMatrix inv(n, std::vector<Rational>(n, 0));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular transition matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational d = a[col][col];
    for (size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

struct Transition {
  std::vector<Partition> parts;
  RMatrix to_m;    // to_m[i][j] = [m_{parts[j]}] b_{parts[i]}
  RMatrix from_m;  // coefficients c = from_m applied to m-coefficients
};

const Transition& transition(Basis b, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, Transition> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(b), n);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  Transition t;
  t.parts = partitions(n);
  size_t k = t.parts.size();
  t.to_m.assign(k, std::vector<Rational>(k, 0));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) t.to_m[i][j] = Rational(static_cast<long>(to_m_entry(b, t.parts[i], t.parts[j])));
  // f_mu = sum_la c_la A[la][mu]  =>  c = (A^T)^{-1} f
  RMatrix at(k, std::vector<Rational>(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) at[i][j] = t.to_m[j][i];
  t.from_m = invert(at);
  return cache.emplace(key, std::move(t)).first->second;
}

SymFunc to_m(const SymFunc& f) {
  if (f.basis == Basis::m) return f;
  const Transition& t = transition(f.basis, f.degree);
  SymFunc r{f.degree, Basis::m, {}};
  for (size_t i = 0; i < t.parts.size(); ++i) {
    auto it = f.coeffs.find(t.parts[i]);
    if (it == f.coeffs.end()) continue;
    for (size_t j = 0; j < t.parts.size(); ++j)
      if (t.to_m[i][j] != 0) r.add(t.parts[j], it->second * t.to_m[i][j]);
  }
  return r;
}

SymFunc from_m(const SymFunc& f, Basis target) {
  if (target == Basis::m) return f;
  const Transition& t = transition(target, f.degree);
  SymFunc r{f.degree, target, {}};
  for (size_t i = 0; i < t.parts.size(); ++i) {
    QPoly c;
    for (size_t j = 0; j < t.parts.size(); ++j) {
      if (t.from_m[i][j] == 0) continue;
      auto it = f.coeffs.find(t.parts[j]);
      if (it != f.coeffs.end()) c += it->second * t.from_m[i][j];
    }
    r.add(t.parts[i], c);
  }
  return r;
}

}  // namespace

SymFunc change_basis(const SymFunc& f, Basis target) {
  if (f.basis == target) return f;
  for (const auto& [la, c] : f.coeffs)
    if (size(la) != f.degree || !is_partition(la)) throw std::invalid_argument("inhomogeneous SymFunc");
  return from_m(to_m(f), target);
}

SymFunc omega(const SymFunc& f) {
  SymFunc p = change_basis(f, Basis::p);
  SymFunc r{f.degree, Basis::p, {}};
  for (const auto& [la, c] : p.coeffs) {
    bool odd = (f.degree - static_cast<int>(la.size())) % 2 != 0;
    r.add(la, odd ? -c : c);
  }
  return change_basis(r, f.basis);
}

// ---- quasisymmetric

SymFunc to_symmetric(const QSymFunc& f) {
  if (f.basis != QBasis::M) return to_symmetric(qsym_to_monomial(f));
  // every composition of each partition class must carry the same coefficient
  std::map<Partition, std::pair<Composition, QPoly>> seen;
  for (const auto& al : compositions(f.degree)) {
    Partition la = sorted_partition(al);
    QPoly c = f.coeff(al);
    auto [it, fresh] = seen.try_emplace(la, al, c);
    if (!fresh && it->second.second != c) throw NotSymmetric(it->second.first, al);
  }
  SymFunc r{f.degree, Basis::m, {}};
  for (const auto& [la, v] : seen) r.add(la, v.second);
  return r;
}

QSymFunc to_quasisymmetric(const SymFunc& f) {
  SymFunc fm = change_basis(f, Basis::m);
  QSymFunc r{f.degree, QBasis::M, {}};
  for (const auto& al : compositions(f.degree)) r.add(al, fm.coeff(sorted_partition(al)));
  return r;
}

QSymFunc qsym_to_fundamental(const QSymFunc& f) {
  if (f.basis == QBasis::F) return f;
  // M_S = sum_{T superset S} (-1)^{|T-S|} F_T
  int n = f.degree;
  unsigned full = n >= 1 ? (1U << (n - 1)) - 1 : 0;
  QSymFunc r{n, QBasis::F, {}};
  for (const auto& [al, c] : f.coeffs) {
    unsigned s = composition_to_mask(al);
    unsigned free = full & ~s;
    for (unsigned sub = free;; sub = (sub - 1) & free) {
      bool neg = std::popcount(sub) % 2 != 0;
      r.add(mask_to_composition(s | sub, n), neg ? -c : c);
      if (sub == 0) break;
    }
  }
  return r;
}

QSymFunc qsym_to_monomial(const QSymFunc& f) {
  if (f.basis == QBasis::M) return f;
  // F_S = sum_{T superset S} M_T
  int n = f.degree;
  unsigned full = n >= 1 ? (1U << (n - 1)) - 1 : 0;
  QSymFunc r{n, QBasis::M, {}};
  for (const auto& [al, c] : f.coeffs) {
    unsigned s = composition_to_mask(al);
    unsigned free = full & ~s;
    for (unsigned sub = free;; sub = (sub - 1) & free) {
      r.add(mask_to_composition(s | sub, n), c);
      if (sub == 0) break;
    }
  }
  return r;
}

TPoly phi_stanley(const QSymFunc& f, int n) {
  QSymFunc fF = qsym_to_fundamental(f);
  // F_S with S = {i+1, ..., n-1} maps to t(t-1)^i; everything else to 0
  TPoly t1 = TPoly::monomial(1, QPoly(1));
  TPoly tm1 = TPoly::monomial(1, QPoly(1)) + TPoly::monomial(0, QPoly(-1));
  TPoly out;
  unsigned full = n >= 1 ? (1U << (n - 1)) - 1 : 0;
  for (int i = 0; i <= n - 1; ++i) {
    unsigned s = full & ~((1U << i) - 1);
    QPoly c = fF.coeff(mask_to_composition(s, n));
    if (c.is_zero()) continue;
    TPoly term = t1;
    for (int k = 0; k < i; ++k) term *= tm1;
    for (const auto& [e, tc] : term.terms()) out.add_term(e, tc * c);
  }
  return out;
}

QPoly coeff_squarefree(const SymFunc& f) {
  return change_basis(f, Basis::m).coeff(Partition(f.degree, 1));
}

QPoly coeff_squarefree(const QSymFunc& f) {
  return qsym_to_monomial(f).coeff(Composition(f.degree, 1));
}

bool all_nonnegative(const SymFunc& f) {
  return std::all_of(f.coeffs.begin(), f.coeffs.end(), [](const auto& kv) { return kv.second.nonnegative(); });
}

bool all_unimodal(const SymFunc& f) {
  return std::all_of(f.coeffs.begin(), f.coeffs.end(), [](const auto& kv) { return is_unimodal(kv.second); });
}

std::string sym_json(const SymFunc& f) {
  nlohmann::ordered_json j;
  j["degree"] = f.degree;
  j["basis"] = basis_name(f.basis);
  nlohmann::ordered_json c = nlohmann::ordered_json::object();
  for (const auto& [la, poly] : f.coeffs) c[partition_str(la)] = poly.str();
  j["coeffs"] = c;
  return j.dump();
}

}  // namespace cqsf
