#pragma once

#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "gcov/presentation.hpp"
#include "gcov/relations.hpp"

namespace gcov {

struct ComplexError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One undirected edge, stored in its normal direction: `move` applied at
// vertex `from` (canonical ids) gives vertex `to`.
struct Edge {
  int from = -1, to = -1;
  Move move;
};

// A 2-cell: its base vertex and the boundary as signed edge indices
// (+e = traverse edge e forwards, -e = backwards; edges are 1-based here).
struct Cell {
  std::string schema;
  int base = -1;
  std::vector<int> boundary;
};

class TwoComplex {
 public:
  explicit TwoComplex(const Group& G) : G_(&G) {}

  const Group& group() const { return *G_; }
  int vertex_count() const { return static_cast<int>(keys_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int cell_count() const { return static_cast<int>(cells_.size()); }
  const std::string& key(int v) const { return keys_[v]; }
  const Param& vertex(int v) const { return params_[v]; }
  const Edge& edge(int e) const { return edges_[e]; }  // 0-based
  const Cell& cell(int c) const { return cells_[c]; }
  int basepoint() const { return 0; }
  int find(const std::string& key) const;  // -1 when absent
  // vertices reached by the move BFS; later ones only appear on cells
  int bfs_vertex_count() const { return bfs_vertices_; }

  // Adds (or finds) the vertex of canonical parameterization p.
  int add_vertex(const Param& canonical_p, const std::string& key);
  // Resolves one step (move at vertex v, canonical ids) to a signed edge,
  // creating the edge and its far vertex if needed.  0 for identity steps.
  int step(int v, const Move& m, int* next = nullptr);
  bool add_cell(Cell c);  // false for a duplicate boundary
  void mark_bfs_done() { bfs_vertices_ = vertex_count(); }

  // Drops every edge whose move kind is in `kinds` together with the cells using it.
  TwoComplex without(const std::set<MoveKind>& kinds) const;

  // V/E/C line dump, deterministic
  std::string dump() const;

 private:
  const Group* G_;
  std::vector<std::string> keys_;
  std::vector<Param> params_;
  std::unordered_map<std::string, int> index_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, int> edge_index_;  // normal descriptor -> edge
  std::vector<Cell> cells_;
  std::set<std::vector<int>> cell_words_;
  int bfs_vertices_ = 0;

  std::string descriptor(int v, const Move& m) const;
};

struct BuildStats {
  long instances = 0;
  long cells_out_of_bounds = 0;
  long cells_failed = 0;
  long cells_duplicate = 0;
};

TwoComplex build_bounded(const Group& G, const TargetCover& t, const Bounds& bounds, BuildStats* stats = nullptr);

// The 1-skeleton of the move BFS only (no cells).
TwoComplex build_graph(const Group& G, const TargetCover& t, const Bounds& bounds);

// Direct enumeration (no moves) of every valid parameterization of t with at
// most bounds.max_cuts cuts in the seed's cover class.
std::set<std::string> enumerate_valid_vertices(const Group& G, const TargetCover& t, const Bounds& bounds);

// Every labelling of the skeleton of `shape` over G in the seed's cover class,
// canonical and sorted by key.
std::vector<Param> cover_labelings(const Group& G, const TargetCover& t, const Param& shape);

struct Connectivity {
  bool connected = false;
  std::vector<std::string> unreached;  // keys of valid vertices not in the complex
  int components = 0;                  // of the complex's 1-skeleton
};

Connectivity check_connected(const TwoComplex& c, const std::set<std::string>& all_valid);

Presentation pi1_presentation(const TwoComplex& c);

}  // namespace gcov
