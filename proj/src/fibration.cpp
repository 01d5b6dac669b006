#include "gcov/fibration.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>

namespace gcov {

Param project(const Param& p) { return canonicalize(erase_labels(p)).param; }

namespace {

bool only_fiber_moves(const std::vector<Move>& loop, bool with_T) {
  return std::all_of(loop.begin(), loop.end(), [&](const Move& m) {
    return m.kind == MoveKind::P || (with_T && m.kind == MoveKind::T);
  });
}

bool matched(const Param& p, const Cut& c) {
  return p.node(c.a.block).lab.h[c.a.index - 1] == p.node(c.b.block).lab.h[c.b.index - 1];
}

// Loops among P and T moves at one fiber vertex.
std::vector<RelationInstance> fiber_loops(const Group& G, const Param& p, const Bounds& bounds) {
  std::vector<RelationInstance> out;
  for (const char* schema : {"R5", "R12"})
    for (auto& inst : enumerate_instances(G, p, schema, bounds)) out.push_back(std::move(inst));
  for (auto& [cid, c] : p.cuts) {
    if (!matched(p, c)) continue;
    const Elem y = p.node(c.a.block).lab.h[c.a.index - 1];
    for (Elem z = 0; z < G.order(); ++z)
      for (Elem w = 0; w < G.order(); ++w)
        if (z != y && w != z) out.push_back(make_loop(G, p, "Tcomp", {Move::t(cid, z), Move::t(cid, w)}, {Move::t(cid, w)}));
    for (Elem x = 0; x < G.order(); ++x) {
      if (x == G.id()) continue;
      const Move pa = Move::p(c.a.block, x), pb = Move::p(c.b.block, x);
      for (Elem z = 0; z < G.order(); ++z) {
        if (z == y) continue;
        // P acts on lifts from the right: the cut label z becomes z x^-1
        out.push_back(make_loop(G, p, "PT", {pa, pb, Move::t(cid, G.mul(z, G.inv(x)))}, {Move::t(cid, z), pa, pb}));
      }
    }
  }
  return out;
}

}  // namespace

Fiber compute_fiber(const Group& G, const TargetCover& t, const Param& base, const Bounds& bounds, FiberOptions opt) {
  Fiber f;
  f.base = project(base);
  f.base_key = canonical_key(f.base);
  auto members = cover_labelings(G, t, f.base);
  if (static_cast<long>(members.size()) > bounds.vertex_budget) throw ComplexError("fiber exceeds the vertex budget");
  f.complex = std::make_unique<TwoComplex>(G);
  TwoComplex& c = *f.complex;
  for (auto& m : members) {
    std::string k = canonical_key(m);
    f.members.push_back(k);
    c.add_vertex(m, k);
  }
  const int n = c.vertex_count();
  auto step_inside = [&](int v, const Move& m, int* next) {
    int e = c.step(v, m, next);
    if (c.vertex_count() != n) throw ComplexError("a P/T move left the fiber of " + key_hex(f.base_key));
    return e;
  };
  for (int v = 0; v < n; ++v) {
    const Param p = c.vertex(v);
    for (auto& [id, nd] : p.blocks)
      for (Elem x = 0; x < G.order(); ++x)
        if (x != G.id()) step_inside(v, Move::p(id, x), nullptr);
    if (!opt.with_T) continue;
    for (auto& [cid, cut] : p.cuts) {
      if (!matched(p, cut)) continue;
      for (Elem z = 0; z < G.order(); ++z) step_inside(v, Move::t(cid, z), nullptr);
    }
  }
  for (int v = 0; v < n; ++v) {
    const Param p = c.vertex(v);
    for (auto& inst : fiber_loops(G, p, bounds)) {
      if (!only_fiber_moves(inst.loop, opt.with_T)) continue;
      Cell cell{inst.schema, v, {}};
      int cur = v;
      for (auto& m : inst.loop)
        if (int e = step_inside(cur, m, &cur)) cell.boundary.push_back(e);
      if (cur != v) throw ComplexError(inst.schema + " loop does not close in the fiber");
      c.add_cell(std::move(cell));
    }
  }
  c.mark_bfs_done();
  return f;
}

std::string FiberReport::line(const Fiber& f) const {
  std::ostringstream o;
  o << "fiber " << key_hex(f.base_key) << ": size=" << size << " connected=" << (connected ? "true" : "false")
    << " pi1=" << (connected ? status_name(pi1.status) : "n/a");
  return o.str();
}

FiberReport check_fiber(const Fiber& f, long coset_budget) {
  FiberReport r;
  r.size = static_cast<int>(f.members.size());
  auto conn = check_connected(*f.complex, std::set<std::string>(f.members.begin(), f.members.end()));
  r.connected = conn.connected;
  r.components = conn.components;
  if (r.connected) r.pi1 = prove_trivial(pi1_presentation(*f.complex), coset_budget);
  return r;
}

namespace {

// Sets the cut labels of q to those of v where they differ; false when a
// cut that needs a change is unmatched on either side.
bool retarget_cuts(const Group& G, Param& q, const Param& v, std::vector<Move>& path) {
  std::vector<int> ids;
  for (auto& [cid, c] : q.cuts) ids.push_back(cid);
  for (int cid : ids) {
    const Cut c = q.cuts.at(cid);
    Elem want = v.node(c.a.block).lab.h[c.a.index - 1];
    if (q.node(c.a.block).lab.h[c.a.index - 1] == want && matched(q, c)) continue;
    if (!matched(q, c) || !matched(v, c)) return false;
    path.push_back(Move::t(cid, want));
    q = apply_T(G, q, cid, want);
  }
  return true;
}

void apply_ps(const Group& G, Param& q, const std::vector<int>& blocks, const std::vector<Elem>& x,
              std::vector<Move>& path) {
  for (size_t i = 0; i < blocks.size(); ++i)
    if (x[i] != G.id()) {
      path.push_back(Move::p(blocks[i], x[i]));
      q = apply_P(G, q, blocks[i], x[i]);
    }
}

bool next_digits(std::vector<Elem>& d, int base) {
  size_t i = 0;
  while (i < d.size() && d[i] == base - 1) d[i++] = 0;
  if (i == d.size()) return false;
  ++d[i];
  return true;
}

}  // namespace

std::optional<std::vector<Move>> fiber_normal_path(const Group& G, const Param& u, const Param& v) {
  const std::string target = canonical_key(v);
  std::vector<int> blocks;
  for (auto& [id, n] : u.blocks) blocks.push_back(id);
  // P's then T's
  std::vector<Elem> x(blocks.size(), G.id());
  do {
    std::vector<Move> path;
    Param q = u;
    apply_ps(G, q, blocks, x, path);
    if (retarget_cuts(G, q, v, path) && canonical_key(q) == target) return path;
  } while (next_digits(x, G.order()));
  // T's then P's: relabel matched cuts first, then translate blocks
  std::vector<int> cuts;
  for (auto& [cid, c] : u.cuts)
    if (matched(u, c)) cuts.push_back(cid);
  std::vector<Elem> z(cuts.size(), G.id());
  do {
    std::vector<Move> tpath;
    Param qt = u;
    for (size_t i = 0; i < cuts.size(); ++i) {
      const Cut& c = qt.cuts.at(cuts[i]);
      if (qt.node(c.a.block).lab.h[c.a.index - 1] == z[i]) continue;
      tpath.push_back(Move::t(cuts[i], z[i]));
      qt = apply_T(G, qt, cuts[i], z[i]);
    }
    std::fill(x.begin(), x.end(), G.id());
    do {
      std::vector<Move> path = tpath;
      Param q = qt;
      apply_ps(G, q, blocks, x, path);
      if (canonical_key(q) == target) return path;
    } while (next_digits(x, G.order()));
  } while (next_digits(z, G.order()));
  return std::nullopt;
}

std::optional<std::vector<Move>> fiber_path(const Group& G, const Param& u, const Param& v) {
  if (auto n = fiber_normal_path(G, u, v)) return n;
  const std::string target = canonical_key(v);
  std::map<std::string, std::pair<std::string, Move>> prev;
  std::map<std::string, Param> at;
  std::deque<std::string> queue;
  const std::string start = canonical_key(u);
  prev[start] = {"", Move{}};
  at[start] = u;
  queue.push_back(start);
  while (!queue.empty()) {
    std::string k = queue.front();
    queue.pop_front();
    if (k == target) {
      std::vector<Move> path;
      for (std::string cur = k; cur != start; cur = prev[cur].first) path.push_back(prev[cur].second);
      std::reverse(path.begin(), path.end());
      return path;
    }
    const Param p = at[k];
    std::vector<Move> moves;
    for (auto& [id, n] : p.blocks)
      for (Elem x = 1; x < G.order(); ++x) moves.push_back(Move::p(id, x));
    for (auto& [cid, c] : p.cuts)
      if (matched(p, c))
        for (Elem z = 0; z < G.order(); ++z)
          if (z != p.node(c.a.block).lab.h[c.a.index - 1]) moves.push_back(Move::t(cid, z));
    for (auto& m : moves) {
      Param q = apply_move(G, p, m);
      std::string kq = canonical_key(q);
      if (prev.count(kq)) continue;
      prev[kq] = {k, m};
      at[kq] = std::move(q);
      queue.push_back(kq);
    }
  }
  return std::nullopt;
}

std::string SquareReport::line() const {
  std::ostringstream o;
  o << "square " << edge << ": pairs=" << pairs << " ok=" << ok << " fail=" << fail;
  return o.str();
}

SquareReport check_lifting_squares(const Group& G, const TargetCover& t, const Param& base_vertex,
                                   const Move& base_edge, const Bounds& bounds) {
  SquareReport r;
  r.edge = format_move(Group::cyclic(1), base_edge);
  if (base_edge.kind != MoveKind::Z && base_edge.kind != MoveKind::B && base_edge.kind != MoveKind::F)
    throw ComplexError("lifting squares need a Z, B or F base edge");
  const Param base = project(base_vertex);
  auto members = cover_labelings(G, t, base);
  if (static_cast<long>(members.size()) > bounds.vertex_budget) throw ComplexError("fiber exceeds the vertex budget");
  std::vector<std::pair<const Param*, Param>> lifts;
  for (auto& u : members) {
    try {
      lifts.push_back({&u, apply_move(G, u, base_edge)});
    } catch (const MoveError&) {
      ++r.no_lift;
    }
  }
  r.lifts = static_cast<long>(lifts.size());
  // under F the cut disappears together with the right-hand block
  int dropped_cut = -1, dropped_block = -1;
  if (base_edge.kind == MoveKind::F) {
    dropped_cut = base_edge.cut;
    const Cut& c = base.cuts.at(base_edge.cut);
    Param merged = apply_move(Group::cyclic(1), base, base_edge);
    dropped_block = merged.blocks.count(c.a.block) ? c.b.block : c.a.block;
  }
  for (auto& [u1, w1] : lifts)
    for (auto& [u2, w2] : lifts) {
      if (u1 == u2) continue;
      ++r.pairs;
      auto e1 = fiber_path(G, *u1, *u2);
      if (!e1) {
        ++r.fail;
        continue;
      }
      std::vector<Move> e2;
      for (auto& m : *e1) {
        if (m.kind == MoveKind::T && m.cut == dropped_cut) continue;
        if (m.kind == MoveKind::P && m.block == dropped_block) continue;
        e2.push_back(m);
      }
      const std::string want = canonical_key(w2);
      bool recipe = false;
      try {
        recipe = canonical_key(apply_path(G, w1, e2)) == want;
      } catch (const MoveError&) {
      }
      if (recipe) {
        ++r.recipe_ok;
        ++r.ok;
      } else if (fiber_path(G, canonicalize(w1).param, canonicalize(w2).param)) {
        ++r.ok;
      } else {
        ++r.fail;
      }
    }
  return r;
}

}  // namespace gcov
