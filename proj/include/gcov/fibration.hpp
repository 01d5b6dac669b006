#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gcov/complex.hpp"

namespace gcov {

// Label erasure onto the trivial group: the canonical marking underneath p.
// Edges project with project_move.
Param project(const Param& p);

struct Fiber {
  Param base;  // canonical, over the trivial group
  std::string base_key;
  std::vector<std::string> members;  // canonical keys, sorted
  std::unique_ptr<TwoComplex> complex;  // members, P/T edges, fiber cells
};

struct FiberOptions {
  bool with_T = true;  // diagnostic: drop T edges (and cells using them)
};

Fiber compute_fiber(const Group& G, const TargetCover& t, const Param& base, const Bounds& bounds,
                    FiberOptions opt = {});

struct FiberReport {
  int size = 0;
  bool connected = false;
  int components = 0;
  TrivialityVerdict pi1;  // Unknown when disconnected
  std::string line(const Fiber& f) const;
};

FiberReport check_fiber(const Fiber& f, long coset_budget);

struct SquareReport {
  std::string edge;
  long lifts = 0;
  long no_lift = 0;
  long pairs = 0;
  long recipe_ok = 0;  // transported path closes the square
  long ok = 0;         // recipe or another normal-form path closes it
  long fail = 0;
  std::string line() const;
};

// `base_edge` is a Z, B or F move in the canonical ids of `base_vertex`.
SquareReport check_lifting_squares(const Group& G, const TargetCover& t, const Param& base_vertex,
                                   const Move& base_edge, const Bounds& bounds);

// P's on blocks then T's on cuts (or T's then P's) taking u to v, when one
// exists.  u and v share their skeleton and ids.
std::optional<std::vector<Move>> fiber_normal_path(const Group& G, const Param& u, const Param& v);
// The normal path when one exists, else a shortest P/T path.
std::optional<std::vector<Move>> fiber_path(const Group& G, const Param& u, const Param& v);

}  // namespace gcov
