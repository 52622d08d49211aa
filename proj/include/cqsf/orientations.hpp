// Acyclic orientations, O* ascending subsets, the row-ascent decoder and
// rook placements on Ferrers boards.
#pragma once

#include <string>
#include <vector>

#include "cqsf/diagrams.hpp"
#include "cqsf/symfunc.hpp"

namespace cqsf {

struct NoDividers : std::invalid_argument {
  NoDividers() : std::invalid_argument("NoDividers") {}
};
struct BadRange : std::invalid_argument {
  int index;
  explicit BadRange(int i) : std::invalid_argument("BadRange(" + std::to_string(i) + ")"), index(i) {}
};

// One arc per unordered adjacent pair, listed in increasing (min, max) order.
struct Orientation {
  std::vector<DirEdge> arcs;
  bool directed(int u, int v) const;
};

// adjacent pairs {u, v}, u < v, in increasing order
std::vector<std::pair<int, int>> adjacent_pairs(const AreaSeq& a);

// directed edges of the digraph that agree with the orientation
int ascents(const AreaSeq& a, const Orientation& o);
// ascents whose source is row i (1-based index i-1)
std::vector<int> row_ascents(const AreaSeq& a, const Orientation& o);
// a topological order, empty if the orientation has a cycle
std::vector<int> topological_order(int n, const std::vector<DirEdge>& arcs);

// Each divider owns itself and the vertices cyclically below it down to the
// previous divider, inside its connected component.
Partition sector_shape(const AreaSeq& a, const std::vector<int>& dividers);
// same, over explicitly given components (sorted vertex lists)
Partition sector_shape(const std::vector<std::vector<int>>& comps, const std::vector<int>& dividers);

struct AcyclicRecord {
  Orientation theta;
  int asc = 0;
  std::vector<int> sinks, sources;
  std::vector<int> topo;
  Partition sectors;
};
std::vector<AcyclicRecord> enum_acyclic(const AreaSeq& a);

struct OStarRecord {
  std::vector<DirEdge> ascending;  // the chosen subset, in edge order
  int asc = 0;
  std::vector<int> half_sinks, half_sources;
  Partition sectors;  // cut by the half-sinks
};
// subsets of the digraph's edges whose union with the strict marks is acyclic
std::vector<OStarRecord> enum_ostar(const MarkedDiagram& d);
// strict order generated by the ascending subset and the strict marks
NaturalPoset ostar_poset(const MarkedDiagram& d, const OStarRecord& o);

Orientation decode_acyclic(const AreaSeq& a, const std::vector<int>& v);

struct FerrersBoard {
  int n = 0;
  std::vector<int> rows;  // row lengths, top to bottom, right-justified in n columns
  int first_col(int i) const { return n - rows[i - 1] + 1; }
};
struct RookPlacement {
  std::vector<int> col;  // 1-based column per row
  std::vector<int> inv;  // inversion cells per row
  int inversions() const;
  auto operator<=>(const RookPlacement&) const = default;
};

FerrersBoard board_of(const AreaSeq& a);
// per-row inversion counts from the cell rule: a board cell with no rook
// above in its column and none to its left in its row
std::vector<int> count_inversions(const FerrersBoard& b, const std::vector<int>& col);
std::vector<RookPlacement> enum_rooks(const FerrersBoard& b);
RookPlacement rook_decode(const FerrersBoard& b, const std::vector<int>& v);
RookPlacement orientation_to_rook(const AreaSeq& a, const Orientation& o);

// "1<2,1>3": i<j when the arc agrees with the digraph edge leaving i
std::string orientation_str(const AreaSeq& a, const Orientation& o);

}  // namespace cqsf
