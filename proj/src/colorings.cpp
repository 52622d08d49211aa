#include "cqsf/colorings.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>

#include "cqsf/orientations.hpp"

namespace cqsf {

namespace {

inline bool holds(Constraint c, int fu, int fv) {
  switch (c) {
    case Constraint::none: return true;
    case Constraint::distinct: return fu != fv;
    case Constraint::less: return fu < fv;
    case Constraint::leq: return fu <= fv;
    case Constraint::geq: return fu >= fv;
  }
  return false;
}

inline bool fires(Weight w, int fu, int fv) {
  switch (w) {
    case Weight::none: return false;
    case Weight::ascent: return fu < fv;
    case Weight::descent: return fu > fv;
    case Weight::mono: return fu == fv;
  }
  return false;
}

// counts[mask * stride + weight]
struct Table {
  int n = 0, stride = 0;
  std::vector<std::int64_t> counts;
  Table(int n_, int stride_) : n(n_), stride(stride_), counts((std::size_t{1} << std::max(n_ - 1, 0)) * stride_, 0) {}
  void add(const Table& o) {
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += o.counts[i];
  }
};

int max_weight(const ColoringModel& m) {
  return static_cast<int>(std::count_if(m.rules.begin(), m.rules.end(), [](const Rule& r) { return r.w != Weight::none; }));
}

unsigned content_mask(const int* cnt, int used_max) {
  unsigned mask = 0;
  int s = 0;
  for (int c = 1; c < used_max; ++c) {
    s += cnt[c];
    mask |= 1U << (s - 1);
  }
  return mask;
}

QSymFunc to_qsym(const Table& t) {
  QSymFunc f{t.n, QBasis::M, {}};
  std::size_t masks = t.counts.size() / t.stride;
  for (std::size_t mask = 0; mask < masks; ++mask) {
    QPoly p;
    for (int w = 0; w < t.stride; ++w)
      if (auto c = t.counts[mask * t.stride + w]) p.add_term(w, Rational(static_cast<long>(c)));
    f.add(mask_to_composition(static_cast<unsigned>(mask), t.n), p);
  }
  return f;
}

// Brute force over all k^n color vectors in lexicographic order. Kept simple
// on purpose: it is the yardstick for the pruned parallel kernel.
Table reference_kernel(const ColoringModel& m, int k) {
  int n = m.n;
  Table t(n, max_weight(m) + 1);
  std::vector<int> f(n + 1, 1);
  while (true) {
    bool ok = true;
    int w = 0;
    for (const auto& r : m.rules) {
      if (!holds(r.c, f[r.u], f[r.v])) {
        ok = false;
        break;
      }
      w += fires(r.w, f[r.u], f[r.v]);
    }
    if (ok) {
      std::vector<int> cnt(k + 2, 0);
      for (int v = 1; v <= n; ++v) ++cnt[f[v]];
      int top = 0;
      while (top < k && cnt[top + 1]) ++top;
      bool packed = true;
      for (int c = top + 1; c <= k; ++c) packed &= cnt[c] == 0;
      if (packed) t.counts[content_mask(cnt.data(), top) * t.stride + w] += 1;
    }
    int i = n;
    while (i >= 1 && f[i] == k) f[i--] = 1;
    if (i < 1) break;
    ++f[i];
  }
  return t;
}

// Depth-first over vertices 1..n. Rules are checked as soon as both ends are
// colored; branches that can no longer use a gap-free set of colors are cut.
struct Search {
  const ColoringModel& m;
  int n, k;
  std::vector<std::vector<const Rule*>> at;  // rules whose later endpoint is v
  std::vector<int> f, cnt;
  int used_max = 0, distinct = 0;
  Table& out;

  Search(const ColoringModel& model, int colors, Table& t)
      : m(model), n(model.n), k(colors), at(model.n + 1), f(model.n + 1, 0), cnt(colors + 2, 0), out(t) {
    for (const auto& r : m.rules) at[std::max(r.u, r.v)].push_back(&r);
  }

  bool place(int v, int c, int& w) {
    f[v] = c;
    for (const Rule* r : at[v]) {
      if (!holds(r->c, f[r->u], f[r->v])) return false;
      w += fires(r->w, f[r->u], f[r->v]);
    }
    return true;
  }

  void run(int v, int w) {
    if (v > n) {
      if (distinct == used_max) out.counts[content_mask(cnt.data(), used_max) * out.stride + w] += 1;
      return;
    }
    int remaining = n - v;  // vertices after v
    for (int c = 1; c <= k; ++c) {
      int w2 = w;
      if (!place(v, c, w2)) continue;
      int saved_max = used_max, saved_distinct = distinct;
      if (cnt[c]++ == 0) ++distinct;
      used_max = std::max(used_max, c);
      if (used_max - distinct <= remaining) run(v + 1, w2);
      --cnt[c];
      used_max = saved_max;
      distinct = saved_distinct;
    }
    f[v] = 0;
  }

  // colors the first `depth` vertices from a prefix code; false if pruned
  bool seed(long code, int depth, int& w) {
    std::vector<int> colors(depth);
    for (int i = depth - 1; i >= 0; --i, code /= k) colors[i] = static_cast<int>(code % k) + 1;
    for (int v = 1; v <= depth; ++v) {
      if (!place(v, colors[v - 1], w)) return false;
      if (cnt[colors[v - 1]]++ == 0) ++distinct;
      used_max = std::max(used_max, colors[v - 1]);
    }
    return used_max - distinct <= n - depth;
  }
};

Table parallel_kernel(const ColoringModel& m, int k) {
  int n = m.n;
  int stride = max_weight(m) + 1;
  Table total(n, stride);
  if (n == 0) {
    total.counts[0] = 1;
    return total;
  }
  int depth = std::min(n, 2);
  long tasks = 1;
  for (int i = 0; i < depth; ++i) tasks *= k;
  std::vector<Table> partial;
#pragma omp parallel
  {
#pragma omp single
    partial.assign(omp_get_num_threads(), Table(n, stride));
    Table& mine = partial[omp_get_thread_num()];
#pragma omp for schedule(dynamic)
    for (long code = 0; code < tasks; ++code) {
      Search s(m, k, mine);
      int w = 0;
      if (s.seed(code, depth, w)) s.run(depth + 1, w);
    }
  }
  // integer sums: the reduction order cannot change the result
  for (const auto& p : partial) total.add(p);
  return total;
}

}  // namespace

QSymFunc coloring_sum(const ColoringModel& m, Exec exec, int max_colors) {
  int k = max_colors > 0 ? max_colors : m.n;
  for (const auto& r : m.rules)
    if (r.u < 1 || r.v < 1 || r.u > m.n || r.v > m.n) throw std::invalid_argument("rule vertex out of range");
  if (m.n == 0) return QSymFunc{0, QBasis::M, {{Composition{}, QPoly(1)}}};
  Table t = exec == Exec::reference ? reference_kernel(m, k) : parallel_kernel(m, k);
  return to_qsym(t);
}

ColoringModel chromatic_model(const AreaSeq& a) {
  ColoringModel m{a.n(), {}};
  for (const auto& e : a.edges()) m.rules.push_back({e.source, e.target, Constraint::distinct, Weight::ascent});
  return m;
}

ColoringModel llt_model(const MarkedDiagram& d) {
  ColoringModel m{d.n(), {}};
  for (const auto& e : d.a.edges()) m.rules.push_back({e.source, e.target, Constraint::none, Weight::ascent});
  for (const auto& e : d.strict) m.rules.push_back({e.source, e.target, Constraint::less, Weight::none});
  for (const auto& e : d.weak) m.rules.push_back({e.source, e.target, Constraint::geq, Weight::none});
  return m;
}

ColoringModel tutte_model(const AreaSeq& a) {
  ColoringModel m{a.n(), {}};
  for (const auto& e : a.edges()) m.rules.push_back({e.source, e.target, Constraint::none, Weight::mono});
  return m;
}

SymFunc chromatic_qsf(const AreaSeq& a, Exec exec) { return to_symmetric(coloring_sum(chromatic_model(a), exec)); }

SymFunc llt_poly(const MarkedDiagram& d, bool shifted, Exec exec) {
  SymFunc g = to_symmetric(coloring_sum(llt_model(d), exec));
  if (!shifted) return g;
  return map_coeffs(g, [](const QPoly& p) { return p.shift(1); });
}

SymFunc tutte_mono(const AreaSeq& a) {
  SymFunc g = to_symmetric(coloring_sum(tutte_model(a)));
  return map_coeffs(g, [](const QPoly& p) { return p.shift(1); });
}

SymFunc h_double_complete(int n) {
  ColoringModel m{n, {}};
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) m.rules.push_back({u, v, Constraint::none, Weight::mono});
  return to_symmetric(coloring_sum(m));
}

QSymFunc poset_xp(const NaturalPoset& p) {
  ColoringModel m{p.n, {}};
  for (auto [i, j] : p.less) m.rules.push_back({i, j, Constraint::less, Weight::none});
  return coloring_sum(m);
}

namespace {

std::map<Partition, QPoly> truncate_to_partitions(const QSymFunc& f, int k) {
  std::map<Partition, QPoly> out;
  for (const auto& la : partitions(f.degree)) {
    if (static_cast<int>(la.size()) > k) continue;
    QPoly c = f.coeff(la);
    if (!c.is_zero()) out[la] = c;
  }
  return out;
}

struct TupleCell {
  int shape;
  Cell cell;
};

// all fillings in [k]^N; returns M-coefficients on compositions with <= k parts
QSymFunc classical_fill(const LLTTuple& t, int k) {
  std::vector<TupleCell> cells;
  for (int s = 0; s < static_cast<int>(t.shapes.size()); ++s)
    for (const auto& c : t.shapes[s]) cells.push_back({s, c});
  int N = static_cast<int>(cells.size());
  ColoringModel m{N, {}};
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) {
      if (x == y) continue;
      const auto& cx = cells[x];
      const auto& cy = cells[y];
      if (cx.shape == cy.shape) {
        // semistandard: rows weakly increase to the right, columns strictly downward
        if (cx.cell.row == cy.cell.row && cx.cell.col < cy.cell.col)
          m.rules.push_back({x + 1, y + 1, Constraint::leq, Weight::none});
        if (cx.cell.col == cy.cell.col && cx.cell.row < cy.cell.row)
          m.rules.push_back({x + 1, y + 1, Constraint::less, Weight::none});
        continue;
      }
      int c1 = cx.cell.content(), c2 = cy.cell.content();
      bool attack = (cx.shape < cy.shape && c1 == c2) || (cx.shape > cy.shape && c1 == c2 + 1);
      if (attack) m.rules.push_back({x + 1, y + 1, Constraint::none, Weight::descent});
    }
  return coloring_sum(m, Exec::reference, k);
}

}  // namespace

std::map<Partition, QPoly> llt_poly_truncated(const MarkedDiagram& d, int k) {
  return truncate_to_partitions(coloring_sum(llt_model(d), Exec::parallel, k), k);
}

SymFunc classical_llt_oracle(const LLTTuple& t) { return to_symmetric(classical_fill(t, t.size())); }

std::map<Partition, QPoly> classical_llt_truncated(const LLTTuple& t, int k) {
  return truncate_to_partitions(classical_fill(t, k), k);
}

OrientationSumCheck coeff_qt_orientation_sum(const MarkedDiagram& d) {
  if (!d.weak.empty()) throw std::invalid_argument("orientation sum is defined for vertical strips");
  int n = d.n();
  // each X_theta is only quasisymmetric; the sum is symmetric
  QSymFunc total{n, QBasis::M, {}};
  for (const auto& o : enum_ostar(d)) {
    QPoly w = QPoly::monomial(o.asc);
    for (const auto& [al, c] : poset_xp(ostar_poset(d, o)).coeffs) total.add(al, c * w);
  }
  return {change_basis(to_symmetric(total), Basis::e), change_basis(llt_poly(d, true), Basis::e)};
}

}  // namespace cqsf
