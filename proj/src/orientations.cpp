#include "cqsf/orientations.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace cqsf {

bool Orientation::directed(int u, int v) const {
  return std::find(arcs.begin(), arcs.end(), DirEdge{u, v}) != arcs.end();
}

std::vector<std::pair<int, int>> adjacent_pairs(const AreaSeq& a) {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= a.n(); ++u)
    for (int v = u + 1; v <= a.n(); ++v)
      if (a.adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

int ascents(const AreaSeq& a, const Orientation& o) {
  int k = 0;
  for (const auto& e : o.arcs) k += a.has_edge(e.source, e.target);
  return k;
}

std::vector<int> row_ascents(const AreaSeq& a, const Orientation& o) {
  std::vector<int> r(a.n(), 0);
  for (const auto& e : o.arcs)
    if (a.has_edge(e.source, e.target)) ++r[e.source - 1];
  return r;
}

std::vector<int> topological_order(int n, const std::vector<DirEdge>& arcs) {
  std::vector<int> indeg(n + 1, 0);
  std::vector<std::vector<int>> out(n + 1);
  for (const auto& e : arcs) {
    out[e.source].push_back(e.target);
    ++indeg[e.target];
  }
  std::vector<int> order, ready;
  for (int v = n; v >= 1; --v)
    if (!indeg[v]) ready.push_back(v);
  while (!ready.empty()) {
    // smallest ready vertex first, so the certificate is canonical
    std::sort(ready.begin(), ready.end(), std::greater<>());
    int v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (int w : out[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  if (static_cast<int>(order.size()) != n) return {};
  return order;
}

Partition sector_shape(const AreaSeq& a, const std::vector<int>& dividers) {
  return sector_shape(components(a), dividers);
}

Partition sector_shape(const std::vector<std::vector<int>>& comps, const std::vector<int>& dividers) {
  if (dividers.empty()) throw NoDividers();
  int n = 0;
  for (const auto& c : comps) n += static_cast<int>(c.size());
  std::vector<bool> is_div(n + 1, false);
  for (int d : dividers) is_div.at(d) = true;
  Partition shape;
  for (const auto& comp : comps) {
    int m = static_cast<int>(comp.size());
    std::vector<int> pos;
    for (int i = 0; i < m; ++i)
      if (is_div[comp[i]]) pos.push_back(i);
    if (pos.empty()) throw NoDividers();
    // divider at pos[k] owns everything down to the previous divider
    for (std::size_t k = 0; k < pos.size(); ++k) {
      int prev = pos[(k + pos.size() - 1) % pos.size()];
      int len = ((pos[k] - prev) % m + m) % m;
      shape.push_back(len == 0 ? m : len);
    }
  }
  return sorted_partition(shape);
}

namespace {

using Mask = std::uint32_t;

std::vector<int> sinks_of(int n, const std::vector<DirEdge>& arcs, bool out_side) {
  std::vector<bool> hit(n + 1, false);
  for (const auto& e : arcs) hit[out_side ? e.source : e.target] = true;
  std::vector<int> r;
  for (int v = 1; v <= n; ++v)
    if (!hit[v]) r.push_back(v);
  return r;
}

// reach[u] holds every vertex reachable from u, u included
struct Reach {
  std::vector<Mask> r;
  explicit Reach(int n) : r(n + 1, 0) {
    for (int v = 1; v <= n; ++v) r[v] = Mask{1} << v;
  }
  bool closes_cycle(int u, int v) const { return (r[v] >> u) & 1U; }
  void add(int u, int v) {
    for (auto& m : r)
      if ((m >> u) & 1U) m |= r[v];
  }
};

}  // namespace

std::vector<AcyclicRecord> enum_acyclic(const AreaSeq& a) {
  int n = a.n();
  auto pairs = adjacent_pairs(a);
  std::vector<AcyclicRecord> out;
  std::vector<DirEdge> arcs;
  auto rec = [&](auto&& self, std::size_t k, const Reach& reach) -> void {
    if (k == pairs.size()) {
      AcyclicRecord r;
      r.theta.arcs = arcs;
      r.asc = ascents(a, r.theta);
      r.sinks = sinks_of(n, arcs, true);
      r.sources = sinks_of(n, arcs, false);
      r.topo = topological_order(n, arcs);
      r.sectors = sector_shape(a, r.sinks);
      out.push_back(std::move(r));
      return;
    }
    auto [u, v] = pairs[k];
    for (auto [s, t] : {std::pair{u, v}, std::pair{v, u}}) {
      if (reach.closes_cycle(s, t)) continue;
      Reach next = reach;
      next.add(s, t);
      arcs.push_back({s, t});
      self(self, k + 1, next);
      arcs.pop_back();
    }
  };
  rec(rec, 0, Reach(n));
  return out;
}

std::vector<OStarRecord> enum_ostar(const MarkedDiagram& d) {
  int n = d.n();
  auto edges = d.a.edges();
  // strict marks may join components of the digraph
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges) parent[find(e.source)] = find(e.target);
  for (const auto& e : d.strict) parent[find(e.source)] = find(e.target);
  std::map<int, std::vector<int>> groups;
  for (int v = 1; v <= n; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> comps;
  for (auto& [root, vs] : groups) comps.push_back(vs);
  std::sort(comps.begin(), comps.end());
  Reach base(n);
  std::vector<DirEdge> strict(d.strict.begin(), d.strict.end());
  for (const auto& e : strict) {
    if (base.closes_cycle(e.source, e.target)) return {};
    base.add(e.source, e.target);
  }
  std::vector<OStarRecord> out;
  std::vector<DirEdge> chosen;
  auto rec = [&](auto&& self, std::size_t k, const Reach& reach) -> void {
    if (k == edges.size()) {
      OStarRecord r;
      r.ascending = chosen;
      r.asc = static_cast<int>(chosen.size());
      std::vector<DirEdge> all = chosen;
      all.insert(all.end(), strict.begin(), strict.end());
      r.half_sinks = sinks_of(n, all, true);
      r.half_sources = sinks_of(n, all, false);
      r.sectors = sector_shape(comps, r.half_sinks);
      out.push_back(std::move(r));
      return;
    }
    self(self, k + 1, reach);
    const auto& e = edges[k];
    if (reach.closes_cycle(e.source, e.target)) return;
    Reach next = reach;
    next.add(e.source, e.target);
    chosen.push_back(e);
    self(self, k + 1, next);
    chosen.pop_back();
  };
  rec(rec, 0, base);
  return out;
}

NaturalPoset ostar_poset(const MarkedDiagram& d, const OStarRecord& o) {
  int n = d.n();
  Reach reach(n);
  for (const auto& e : o.ascending) reach.add(e.source, e.target);
  for (const auto& e : d.strict) reach.add(e.source, e.target);
  NaturalPoset p{n, {}};
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v)
      if (u != v && ((reach.r[u] >> v) & 1U)) p.less.insert({u, v});
  return p;
}

Orientation decode_acyclic(const AreaSeq& a, const std::vector<int>& v) {
  int n = a.n();
  if (a.circular()) throw CircularNotSupported();
  if (static_cast<int>(v.size()) != n) throw BadRange(static_cast<int>(v.size()));
  for (int i = 1; i <= n; ++i)
    if (v[i - 1] < 0 || v[i - 1] > a[i]) throw BadRange(i);
  // order[k] = vertex at rank k, lowest first; arcs point from lower to higher rank
  std::vector<int> order;
  for (int i = n; i >= 1; --i) {
    std::vector<int> rank_of(n + 1, -1);
    for (int k = 0; k < static_cast<int>(order.size()); ++k) rank_of[order[k]] = k;
    std::vector<int> nbr_ranks;
    for (int j = i + 1; j <= i + a[i]; ++j) nbr_ranks.push_back(rank_of[j]);
    std::sort(nbr_ranks.begin(), nbr_ranks.end());
    int below = a[i] - v[i - 1];  // neighbours that stay under i
    int at = below == 0 ? 0 : nbr_ranks[below - 1] + 1;
    order.insert(order.begin() + at, i);
  }
  std::vector<int> rank_of(n + 1);
  for (int k = 0; k < n; ++k) rank_of[order[k]] = k;
  Orientation o;
  for (auto [x, y] : adjacent_pairs(a)) o.arcs.push_back(rank_of[x] < rank_of[y] ? DirEdge{x, y} : DirEdge{y, x});
  return o;
}

int RookPlacement::inversions() const {
  int s = 0;
  for (int x : inv) s += x;
  return s;
}

FerrersBoard board_of(const AreaSeq& a) {
  if (a.circular()) throw CircularNotSupported();
  FerrersBoard b{a.n(), {}};
  for (int i = 1; i <= a.n(); ++i) b.rows.push_back(a[i] + i);
  return b;
}

std::vector<int> count_inversions(const FerrersBoard& b, const std::vector<int>& col) {
  std::vector<int> inv(b.n, 0);
  for (int i = 1; i <= b.n; ++i)
    for (int c = b.first_col(i); c <= b.n; ++c) {
      if (c == col[i - 1]) continue;
      bool rook_above = false;
      for (int r = 1; r < i; ++r) rook_above |= col[r - 1] == c;
      bool rook_left = col[i - 1] < c;
      if (!rook_above && !rook_left) ++inv[i - 1];
    }
  return inv;
}

std::vector<RookPlacement> enum_rooks(const FerrersBoard& b) {
  std::vector<RookPlacement> out;
  std::vector<int> col;
  std::vector<bool> used(b.n + 1, false);
  auto rec = [&](auto&& self, int i) -> void {
    if (i > b.n) {
      out.push_back({col, count_inversions(b, col)});
      return;
    }
    for (int c = b.first_col(i); c <= b.n; ++c) {
      if (used[c]) continue;
      used[c] = true;
      col.push_back(c);
      self(self, i + 1);
      col.pop_back();
      used[c] = false;
    }
  };
  rec(rec, 1);
  return out;
}

RookPlacement rook_decode(const FerrersBoard& b, const std::vector<int>& v) {
  if (static_cast<int>(v.size()) != b.n) throw BadRange(static_cast<int>(v.size()));
  std::vector<bool> used(b.n + 1, false);
  std::vector<int> col;
  for (int i = 1; i <= b.n; ++i) {
    std::vector<int> free;
    for (int c = b.first_col(i); c <= b.n; ++c)
      if (!used[c]) free.push_back(c);
    if (v[i - 1] < 0 || v[i - 1] >= static_cast<int>(free.size())) throw BadRange(i);
    int c = free[v[i - 1]];
    used[c] = true;
    col.push_back(c);
  }
  return {col, count_inversions(b, col)};
}

RookPlacement orientation_to_rook(const AreaSeq& a, const Orientation& o) {
  return rook_decode(board_of(a), row_ascents(a, o));
}

std::string orientation_str(const AreaSeq& a, const Orientation& o) {
  std::ostringstream os;
  bool first = true;
  for (const auto& e : o.arcs) {
    int u = e.source, v = e.target;
    bool agrees = a.has_edge(u, v);
    // name the pair by the source of a digraph edge
    int i = agrees ? u : v, j = agrees ? v : u;
    if (!first) os << ',';
    first = false;
    os << i << (agrees ? '<' : '>') << j;
  }
  return os.str();
}

}  // namespace cqsf
