// Circular area sequences, their digraphs, corner-edge markings and the
// correspondence with tuples of skew shapes.
#pragma once

#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cqsf {

struct DiagramError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// validation failures carry the 1-based index
struct OutOfRange : DiagramError {
  int index;
  explicit OutOfRange(int i) : DiagramError("OutOfRange(" + std::to_string(i) + ")"), index(i) {}
};
struct SlopeViolation : DiagramError {
  int index;
  explicit SlopeViolation(int i) : DiagramError("SlopeViolation(" + std::to_string(i) + ")"), index(i) {}
};
struct CircularNotSupported : DiagramError {
  CircularNotSupported() : DiagramError("CircularNotSupported") {}
};

// 1-based vertices throughout
struct DirEdge {
  int source = 0;
  int target = 0;
  auto operator<=>(const DirEdge&) const = default;
};

class AreaSeq {
 public:
  AreaSeq() = default;
  static AreaSeq validate(const std::vector<int>& a);  // throws OutOfRange / SlopeViolation
  static AreaSeq parse(const std::string& s);          // "2,2,3,2,1,0"

  int n() const { return static_cast<int>(a_.size()); }
  int operator[](int i) const { return a_[i - 1]; }  // 1-based
  const std::vector<int>& values() const { return a_; }
  int area() const;
  bool circular() const { return !a_.empty() && a_.back() != 0; }

  // cyclic successor distance from u to v in 1..n-1 (0 when u == v)
  int dist(int u, int v) const;
  bool has_edge(int u, int v) const;
  bool adjacent(int u, int v) const { return has_edge(u, v) || has_edge(v, u); }
  std::vector<DirEdge> edges() const;

  std::string str() const;
  auto operator<=>(const AreaSeq&) const = default;

 private:
  std::vector<int> a_;
};

// corner edges: i -> i + a_i + 1 whenever that is a non-edge, a_{i+1} >= a_i,
// and the target differs from i. The diagonal counts as present for the two
// shadow edges. With wrap = false, only targets j > i are kept.
std::vector<DirEdge> corner_edges(const AreaSeq& a, bool wrap = true);
bool is_corner(const AreaSeq& a, const DirEdge& e);

struct MarkedDiagram {
  AreaSeq a;
  std::set<DirEdge> strict;
  std::set<DirEdge> weak;

  static MarkedDiagram make(const AreaSeq& a, std::set<DirEdge> strict = {}, std::set<DirEdge> weak = {});
  static MarkedDiagram parse(const std::string& s);  // "2,2,3,2,1,0;strict=1-4,2-5;weak="
  int n() const { return a.n(); }
  bool unmarked() const { return strict.empty() && weak.empty(); }
  std::string str() const;
  auto operator<=>(const MarkedDiagram&) const = default;
};

struct NaturalPoset {
  int n = 0;
  std::set<std::pair<int, int>> less;  // (i, j) means i <_P j
  bool lt(int i, int j) const { return less.count({i, j}) != 0; }
};

NaturalPoset poset_of(const AreaSeq& a);
AreaSeq transpose(const AreaSeq& a);
MarkedDiagram transpose_marked(const MarkedDiagram& d);
std::vector<std::vector<int>> bounce_blocks(const AreaSeq& a);
// cells of the inner region per column; column j counts rows i < j reaching j
std::vector<int> column_area(const AreaSeq& a);
// connected components as sorted vertex lists
std::vector<std::vector<int>> components(const AreaSeq& a);
// induced subdiagram on the kept vertices (relabelled in increasing order)
AreaSeq induced(const AreaSeq& a, const std::vector<int>& keep);

enum class Family { dyck, circular, vstrip, circular_vstrip, ribbon };
Family parse_family(const std::string& s);
std::string family_name(Family f);

std::vector<AreaSeq> enumerate_area_seqs(int n, bool circular);
std::vector<MarkedDiagram> enumerate_diagrams(int n, Family f);
long long count_diagrams(int n, Family f);

struct Cell {
  int row = 0;
  int col = 0;
  int content() const { return row - col; }
  auto operator<=>(const Cell&) const = default;
};

// shapes in tuple order; each shape is a skew diagram given by its cells
struct LLTTuple {
  std::vector<std::vector<Cell>> shapes;
  int size() const;
};

bool is_skew_shape(const std::vector<Cell>& cells);
bool is_ribbon(const std::vector<Cell>& cells);

struct PlacedVertex {
  int shape = 0;  // index into LLTTuple::shapes
  Cell cell;
};

// returns the tuple and, per vertex 1..n, where it was placed
std::pair<LLTTuple, std::vector<PlacedVertex>> marked_to_llt_tuple_placed(const MarkedDiagram& d);
LLTTuple marked_to_llt_tuple(const MarkedDiagram& d);

}  // namespace cqsf
