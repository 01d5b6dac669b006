#pragma once

#include <map>
#include <string>
#include <vector>

#include "gcov/block.hpp"

namespace gcov {

struct ParamError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Slot {
  int block = -1;
  int index = 0;  // 1-based
  auto operator<=>(const Slot&) const = default;
};

struct Cut {
  Slot a, b;
  bool operator==(const Cut&) const = default;
};

// What hangs off one slot: an external boundary (flattened, 0-based) or a cut id.
struct Att {
  int ext = -1;
  int cut = -1;
  bool operator==(const Att&) const = default;
};

struct Node {
  Block lab;
  std::vector<Att> att;
  int arity() const { return lab.arity(); }
  bool operator==(const Node&) const = default;
};

// Boundary monodromies per connected component.  Boundaries are numbered
// globally in component order; boundary 0 of component 0 is the basepoint.
struct TargetCover {
  std::vector<std::vector<Elem>> components;

  int component_count() const { return static_cast<int>(components.size()); }
  int boundary_count() const;
  int first_boundary(int comp) const;
  int component_of(int boundary) const;
  Elem monodromy(int boundary) const;
};

struct Param {
  std::map<int, Node> blocks;
  std::map<int, Cut> cuts;
  std::vector<Slot> external;     // boundary -> slot
  std::vector<int> comp_size;     // boundaries per target component
  std::vector<int> closed;        // component -> S0 block id, -1 if the component has boundaries
  std::vector<Elem> global_lift;  // component -> lift of a closed component

  int cut_count() const { return static_cast<int>(cuts.size()); }
  int next_block_id() const { return blocks.empty() ? 1 : blocks.rbegin()->first + 1; }
  int next_cut_id() const { return cuts.empty() ? 1 : cuts.rbegin()->first + 1; }
  const Node& node(int id) const;
  Node& node(int id);
  int component_count() const { return static_cast<int>(comp_size.size()); }
  int first_boundary(int comp) const;
  int root_block(int comp) const;
  // the block on the other side of cut `c` from `block`, and the slots involved
  const Slot& side(int c, int block) const;
  const Slot& far_side(int c, int block) const;
  bool operator==(const Param&) const = default;
};

// Rewrites the external/cut back-references of every slot of `block` from its att list.
void refresh_slots(Param& p, int block);

// Component (target index) of every block, via the forest.  Throws on a
// block not connected to any boundary or closed marker.
std::map<int, int> block_components(const Param& p);

struct Canonical {
  std::string key;
  Param param;                     // ids renumbered 1.. in DFS order
  std::map<int, int> block_map;    // old id -> new id
  std::map<int, int> cut_map;
};

// Blocks numbered by DFS from the block holding the first boundary of each
// component (components in order, slots in index order).  Cut sides are
// oriented parent (a) -> child (b).
Canonical canonicalize(const Param& p);
std::string canonical_key(const Param& p);
std::string key_hex(const std::string& key);

struct Report {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

// Structure only: coverage, cut admissibility, forest shape, block products.
Report check_structure(const Group& G, const Param& p, const TargetCover* t = nullptr);

struct BoundaryInvariant {
  Elem monodromy;  // transported: iota^-1 m iota
  Elem iota;       // marked lift in the trivialisation of the component's root block
  bool operator==(const BoundaryInvariant&) const = default;
};

struct CoverInvariant {
  std::vector<std::vector<BoundaryInvariant>> components;
  std::vector<Elem> closed_lift;
};

CoverInvariant cover_invariant(const Group& G, const Param& p, const TargetCover& t);
bool cover_equivalent(const Group& G, const CoverInvariant& a, const CoverInvariant& b);

Report validate(const Group& G, const Param& p, const TargetCover& t);

bool realizable(const Group& G, const TargetCover& t);
Param seed_parameterization(const Group& G, const TargetCover& t);

std::string to_text(const Group& G, const Param& p);
Param parse_param(const Group& G, const TargetCover& t, const std::string& text);
std::string to_dot(const Group& G, const Param& p);

}  // namespace gcov
