#pragma once

#include <string>
#include <vector>

#include "gcov/moves.hpp"

namespace gcov {

// A closed edge loop.  Each move is addressed in the canonical ids of the
// vertex it is applied at (see canonicalize), so loops replay from the base
// vertex's canonical form without any id bookkeeping.
struct RelationInstance {
  std::string schema;
  std::string base;  // canonical key
  std::vector<Move> loop;
};

// R2 .. R17 in order.  R6 is the corrected mixed-side P-F relation (an extra
// P_t edge); "R6literal" is available separately for diagnostics.
const std::vector<std::string>& schema_names();

// Builds paths on raw parameterizations while recording canonical steps.
class Walk {
 public:
  Walk(const Group& G, Param start);
  void step(const Move& m);  // m in raw ids of the current state
  void steps(const std::vector<Move>& ms) {
    for (auto& m : ms) step(m);
  }
  const Param& state() const { return state_; }
  const std::vector<Move>& forward() const { return fwd_; }
  // the walk run backwards from its end, canonical ids
  std::vector<Move> backward() const;

 private:
  const Group* G_;
  Param state_;
  std::vector<Move> fwd_;
  std::vector<Move> inv_;
};

// Translates a move's block/cut ids through a canonical relabelling.
Move relabel_move(const Move& m, const Canonical& c);

// Loop = lhs followed by rhs reversed.  Both start at p.
RelationInstance make_loop(const Group& G, const Param& p, const std::string& schema,
                           const std::vector<Move>& lhs, const std::vector<Move>& rhs);

// `p` must be canonical (ids as produced by canonicalize).
std::vector<RelationInstance> enumerate_instances(const Group& G, const Param& p, const std::string& schema,
                                                  const Bounds& bounds);
std::vector<RelationInstance> enumerate_all_instances(const Group& G, const Param& p, const Bounds& bounds);

struct ClosureResult {
  bool ok = false;
  std::string error;
  std::vector<std::string> visited;  // keys along the loop, base first
  int max_cuts = 0;
};

ClosureResult replay_loop(const Group& G, const Param& base, const std::vector<Move>& loop);
bool verify_closure(const Group& G, const Param& base, const RelationInstance& inst);

// The instance of the same schema at `fiber_vertex` whose projection is
// `base_cell`.  Throws when none exists.
RelationInstance lift_base_relation(const Group& base_group, const Param& base_vertex,
                                    const RelationInstance& base_cell, const Group& G,
                                    const Param& fiber_vertex, const Bounds& bounds);

// Label erasure onto the trivial group.
Param erase_labels(const Param& p);
// nullopt for P and T (degenerate downstairs)
std::optional<Move> project_move(const Move& m);

}  // namespace gcov
