#include "cqsf/diagrams.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace cqsf {

namespace {

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw DiagramError("bad integer: " + tok);
    out.push_back(v);
  }
  return out;
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

// ---- AreaSeq

AreaSeq AreaSeq::validate(const std::vector<int>& a) {
  int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i)
    if (a[i] < 0 || a[i] > n - 1) throw OutOfRange(i + 1);
  for (int i = 0; i < n; ++i)
    if (a[i] - 1 > a[(i + 1) % n]) throw SlopeViolation(i + 1);
  AreaSeq s;
  s.a_ = a;
  return s;
}

AreaSeq AreaSeq::parse(const std::string& s) {
  try {
    return validate(parse_ints(s));
  } catch (const std::invalid_argument& e) {
    if (dynamic_cast<const DiagramError*>(&e)) throw;
    throw DiagramError("bad area sequence: " + s);
  }
}

int AreaSeq::area() const { return std::accumulate(a_.begin(), a_.end(), 0); }

int AreaSeq::dist(int u, int v) const { return ((v - u) % n() + n()) % n(); }

bool AreaSeq::has_edge(int u, int v) const {
  if (u == v) return false;
  return dist(u, v) <= (*this)[u];
}

std::vector<DirEdge> AreaSeq::edges() const {
  std::vector<DirEdge> out;
  for (int s = 1; s <= n(); ++s)
    for (int d = 1; d <= (*this)[s]; ++d) out.push_back({s, (s - 1 + d) % n() + 1});
  return out;
}

std::string AreaSeq::str() const {
  std::string s;
  for (size_t i = 0; i < a_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(a_[i]);
  }
  return s;
}

std::vector<DirEdge> corner_edges(const AreaSeq& a, bool wrap) {
  std::vector<DirEdge> out;
  int n = a.n();
  for (int i = 1; i <= n; ++i) {
    int d = a[i] + 1;
    if (d > n - 1) continue;
    if (!wrap && i + d > n) continue;
    int next = i % n + 1;
    if (a[next] < a[i]) continue;
    out.push_back({i, (i - 1 + d) % n + 1});
  }
  return out;
}

bool is_corner(const AreaSeq& a, const DirEdge& e) {
  auto c = corner_edges(a, true);
  return std::find(c.begin(), c.end(), e) != c.end();
}

// ---- MarkedDiagram

MarkedDiagram MarkedDiagram::make(const AreaSeq& a, std::set<DirEdge> strict, std::set<DirEdge> weak) {
  for (const auto& e : strict) {
    if (!is_corner(a, e))
      throw DiagramError("not a corner edge: " + std::to_string(e.source) + "-" + std::to_string(e.target));
    if (weak.count(e)) throw DiagramError("edge marked both strict and weak");
  }
  for (const auto& e : weak)
    if (!is_corner(a, e))
      throw DiagramError("not a corner edge: " + std::to_string(e.source) + "-" + std::to_string(e.target));
  return MarkedDiagram{a, std::move(strict), std::move(weak)};
}

MarkedDiagram MarkedDiagram::parse(const std::string& s) {
  std::stringstream ss(s);
  std::string part;
  std::getline(ss, part, ';');
  AreaSeq a = AreaSeq::parse(part);
  std::set<DirEdge> strict, weak;
  while (std::getline(ss, part, ';')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw DiagramError("bad marking: " + part);
    std::string key = part.substr(0, eq), rest = part.substr(eq + 1);
    std::set<DirEdge>* dst = key == "strict" ? &strict : key == "weak" ? &weak : nullptr;
    if (!dst) throw DiagramError("bad marking key: " + key);
    std::stringstream es(rest);
    std::string tok;
    while (std::getline(es, tok, ',')) {
      if (tok.empty()) continue;
      auto dash = tok.find('-');
      if (dash == std::string::npos) throw DiagramError("bad edge: " + tok);
      dst->insert({std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1))});
    }
  }
  return make(a, strict, weak);
}

std::string MarkedDiagram::str() const {
  if (unmarked()) return a.str();
  auto list = [](const std::set<DirEdge>& es) {
    std::string s;
    for (const auto& e : es) {
      if (!s.empty()) s += ',';
      s += std::to_string(e.source) + "-" + std::to_string(e.target);
    }
    return s;
  };
  return a.str() + ";strict=" + list(strict) + ";weak=" + list(weak);
}

// ---- structure

NaturalPoset poset_of(const AreaSeq& a) {
  if (a.circular()) throw CircularNotSupported();
  NaturalPoset p;
  p.n = a.n();
  for (int i = 1; i <= p.n; ++i)
    for (int j = i + 1; j <= p.n; ++j)
      if (j - i > a[i]) p.less.insert({i, j});
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto [i, j] : std::vector<std::pair<int, int>>(p.less.begin(), p.less.end()))
      for (int k = 1; k <= p.n; ++k)
        if (p.lt(j, k) && !p.lt(i, k)) {
          p.less.insert({i, k});
          grew = true;
        }
  }
  return p;
}

AreaSeq transpose(const AreaSeq& a) {
  if (a.circular()) throw CircularNotSupported();
  int n = a.n();
  std::vector<int> t(n, 0);
  for (const auto& e : a.edges()) ++t[(n + 1 - e.target) - 1];
  return AreaSeq::validate(t);
}

MarkedDiagram transpose_marked(const MarkedDiagram& d) {
  if (d.a.circular()) throw CircularNotSupported();
  int n = d.n();
  auto flip = [n](const std::set<DirEdge>& es) {
    std::set<DirEdge> out;
    for (const auto& e : es) {
      if (e.target < e.source) throw CircularNotSupported();
      out.insert({n + 1 - e.target, n + 1 - e.source});
    }
    return out;
  };
  return MarkedDiagram::make(transpose(d.a), flip(d.weak), flip(d.strict));
}

std::vector<std::vector<int>> bounce_blocks(const AreaSeq& a) {
  std::vector<std::vector<int>> blocks;
  int v = 1;
  while (v <= a.n()) {
    std::vector<int> block{v++};
    while (v <= a.n() &&
           std::all_of(block.begin(), block.end(), [&](int u) { return a.adjacent(u, v); }))
      block.push_back(v++);
    blocks.push_back(std::move(block));
  }
  return blocks;
}

std::vector<int> column_area(const AreaSeq& a) {
  std::vector<int> b(a.n(), 0);
  for (int j = 1; j <= a.n(); ++j)
    for (int i = 1; i < j; ++i)
      if (j - i <= a[i]) ++b[j - 1];
  return b;
}

std::vector<std::vector<int>> components(const AreaSeq& a) {
  UnionFind uf(a.n() + 1);
  for (const auto& e : a.edges()) uf.unite(e.source, e.target);
  std::map<int, std::vector<int>> groups;
  for (int v = 1; v <= a.n(); ++v) groups[uf.find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, vs] : groups) out.push_back(std::move(vs));
  std::sort(out.begin(), out.end());
  return out;
}

AreaSeq induced(const AreaSeq& a, const std::vector<int>& keep) {
  int k = static_cast<int>(keep.size());
  std::vector<int> b(k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (a.has_edge(keep[i], keep[j])) ++b[i];
  AreaSeq r = AreaSeq::validate(b);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (r.has_edge(i + 1, j + 1) != a.has_edge(keep[i], keep[j]))
        throw std::logic_error("induced subgraph is not a circular arc digraph");
  return r;
}

// ---- enumeration

Family parse_family(const std::string& s) {
  if (s == "dyck") return Family::dyck;
  if (s == "circular") return Family::circular;
  if (s == "vstrip") return Family::vstrip;
  if (s == "circular-vstrip" || s == "circular_vstrip") return Family::circular_vstrip;
  if (s == "ribbon") return Family::ribbon;
  throw std::invalid_argument("unknown family: " + s);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::dyck: return "dyck";
    case Family::circular: return "circular";
    case Family::vstrip: return "vstrip";
    case Family::circular_vstrip: return "circular-vstrip";
    case Family::ribbon: return "ribbon";
  }
  return "?";
}

std::vector<AreaSeq> enumerate_area_seqs(int n, bool circular) {
  std::vector<std::vector<int>> raw;
  std::vector<int> cur(n);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      if (n > 0 && cur[n - 1] - 1 > cur[0]) return;
      if (!circular && n > 0 && cur[n - 1] != 0) return;
      raw.push_back(cur);
      return;
    }
    int lo = i == 0 ? 0 : std::max(0, cur[i - 1] - 1);
    int hi = circular ? n - 1 : n - 1 - i;
    for (int v = lo; v <= hi; ++v) {
      cur[i] = v;
      self(self, i + 1);
    }
  };
  if (n >= 1) rec(rec, 0);
  // colex: compare from the last entry
  std::sort(raw.begin(), raw.end(), [](const auto& x, const auto& y) {
    return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
  });
  std::vector<AreaSeq> out;
  out.reserve(raw.size());
  for (const auto& v : raw) out.push_back(AreaSeq::validate(v));
  return out;
}

std::vector<MarkedDiagram> enumerate_diagrams(int n, Family f) {
  bool circ = f == Family::circular || f == Family::circular_vstrip;
  std::vector<MarkedDiagram> out;
  for (const auto& a : enumerate_area_seqs(n, circ)) {
    if (f == Family::dyck || f == Family::circular) {
      out.push_back(MarkedDiagram{a, {}, {}});
      continue;
    }
    auto corners = corner_edges(a, f == Family::circular_vstrip);
    int k = static_cast<int>(corners.size());
    if (f == Family::ribbon) {
      int total = 1;
      for (int i = 0; i < k; ++i) total *= 3;
      for (int code = 0; code < total; ++code) {
        MarkedDiagram d{a, {}, {}};
        int c = code;
        for (int i = 0; i < k; ++i, c /= 3) {
          if (c % 3 == 1) d.strict.insert(corners[i]);
          if (c % 3 == 2) d.weak.insert(corners[i]);
        }
        out.push_back(std::move(d));
      }
      continue;
    }
    for (unsigned mask = 0; mask < (1U << k); ++mask) {
      MarkedDiagram d{a, {}, {}};
      for (int i = 0; i < k; ++i)
        if (mask & (1U << i)) d.strict.insert(corners[i]);
      out.push_back(std::move(d));
    }
  }
  return out;
}

long long count_diagrams(int n, Family f) {
  bool circ = f == Family::circular || f == Family::circular_vstrip;
  long long total = 0;
  for (const auto& a : enumerate_area_seqs(n, circ)) {
    if (f == Family::dyck || f == Family::circular) {
      ++total;
      continue;
    }
    auto k = corner_edges(a, f == Family::circular_vstrip).size();
    long long mult = 1;
    for (size_t i = 0; i < k; ++i) mult *= f == Family::ribbon ? 3 : 2;
    total += mult;
  }
  return total;
}

// ---- skew shapes

int LLTTuple::size() const {
  int s = 0;
  for (const auto& sh : shapes) s += static_cast<int>(sh.size());
  return s;
}

bool is_skew_shape(const std::vector<Cell>& cells) {
  std::set<Cell> in(cells.begin(), cells.end());
  if (in.size() != cells.size()) return false;
  for (const auto& x : cells)
    for (const auto& y : cells) {
      if (x.row > y.row || x.col > y.col) continue;
      for (int r = x.row; r <= y.row; ++r)
        for (int c = x.col; c <= y.col; ++c)
          if (!in.count({r, c})) return false;
    }
  return true;
}

bool is_ribbon(const std::vector<Cell>& cells) {
  if (!is_skew_shape(cells)) return false;
  std::set<Cell> in(cells.begin(), cells.end());
  for (const auto& c : cells)
    if (in.count({c.row + 1, c.col}) && in.count({c.row, c.col + 1}) && in.count({c.row + 1, c.col + 1}))
      return false;
  // connectivity
  if (cells.empty()) return true;
  std::set<Cell> seen{cells[0]};
  std::vector<Cell> stack{cells[0]};
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    for (Cell nb : {Cell{c.row + 1, c.col}, Cell{c.row - 1, c.col}, Cell{c.row, c.col + 1}, Cell{c.row, c.col - 1}})
      if (in.count(nb) && seen.insert(nb).second) stack.push_back(nb);
  }
  return seen.size() == in.size();
}

// ---- marked diagram -> tuple of ribbons
//
// Conventions: content(cell) = row - col. The tuple's reading order sorts
// cells by increasing content, then by decreasing shape index; under it the
// potential-inversion pairs are exactly the edges of the digraph, a strict
// corner edge is a column-adjacent pair (top read first) and a weak corner
// edge a row-adjacent pair (right cell read first).

std::pair<LLTTuple, std::vector<PlacedVertex>> marked_to_llt_tuple_placed(const MarkedDiagram& d) {
  const AreaSeq& a = d.a;
  int n = a.n();
  if (a.circular()) throw CircularNotSupported();
  for (const auto* marks : {&d.strict, &d.weak})
    for (const auto& e : *marks)
      if (e.target < e.source) throw CircularNotSupported();

  auto blocks = bounce_blocks(a);
  std::vector<int> blk(n + 1);
  for (size_t k = 0; k < blocks.size(); ++k)
    for (int v : blocks[k]) blk[v] = static_cast<int>(k);

  UnionFind uf(n + 1);
  for (const auto* marks : {&d.strict, &d.weak})
    for (const auto& e : *marks) uf.unite(e.source, e.target);
  std::map<int, int> node_of_root;
  std::vector<int> node(n + 1);
  for (int v = 1; v <= n; ++v) {
    auto [it, fresh] = node_of_root.try_emplace(uf.find(v), static_cast<int>(node_of_root.size()));
    node[v] = it->second;
  }
  int nodes = static_cast<int>(node_of_root.size());

  // arc x -> y: shape index of x is smaller than that of y
  std::vector<std::set<int>> succ(nodes);
  auto before = [&](int lo, int hi) {
    if (node[lo] == node[hi]) throw std::logic_error("marked chain conflicts with inversion pattern");
    succ[node[lo]].insert(node[hi]);
  };
  for (int x = 1; x <= n; ++x)
    for (int y = x + 1; y <= n; ++y) {
      int gap = blk[y] - blk[x];
      if (gap > 1) continue;
      bool marked = d.strict.count({x, y}) || d.weak.count({x, y});
      if (marked) continue;
      if (gap == 0) before(y, x);
      else if (a.has_edge(x, y)) before(x, y);
      else before(y, x);
    }

  std::vector<int> indeg(nodes, 0);
  for (int u = 0; u < nodes; ++u)
    for (int w : succ[u]) ++indeg[w];
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int u = 0; u < nodes; ++u)
    if (!indeg[u]) ready.push(u);
  std::vector<int> rank(nodes, -1);
  int next = 0;
  while (!ready.empty()) {
    int u = ready.top();
    ready.pop();
    rank[u] = next++;
    for (int w : succ[u])
      if (--indeg[w] == 0) ready.push(w);
  }
  if (next != nodes) throw std::logic_error("no consistent shape order for " + d.str());

  // place each chain starting from its unmarked-in vertex
  std::map<int, DirEdge> out_mark;
  std::set<int> has_in;
  for (const auto* marks : {&d.strict, &d.weak})
    for (const auto& e : *marks) {
      out_mark[e.source] = e;
      has_in.insert(e.target);
    }
  LLTTuple t;
  t.shapes.resize(nodes);
  std::vector<PlacedVertex> placed(n + 1);
  for (int v = 1; v <= n; ++v) {
    if (has_in.count(v)) continue;
    Cell c{blk[v], 0};
    int u = v;
    while (true) {
      int s = rank[node[u]];
      t.shapes[s].push_back(c);
      placed[u] = {s, c};
      auto it = out_mark.find(u);
      if (it == out_mark.end()) break;
      bool strict = d.strict.count(it->second) != 0;
      c = strict ? Cell{c.row + 1, c.col} : Cell{c.row, c.col - 1};
      u = it->second.target;
    }
  }
  for (auto& sh : t.shapes) {
    std::sort(sh.begin(), sh.end());
    if (!is_ribbon(sh)) throw std::logic_error("constructed shape is not a ribbon");
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    int cx = placed[x].cell.content(), cy = placed[y].cell.content();
    if (cx != cy) return cx < cy;
    return placed[x].shape > placed[y].shape;
  });
  for (int i = 0; i < n; ++i)
    if (order[i] != i + 1) throw std::logic_error("reading order does not recover vertex order");
  return {t, placed};
}

LLTTuple marked_to_llt_tuple(const MarkedDiagram& d) { return marked_to_llt_tuple_placed(d).first; }

}  // namespace cqsf
