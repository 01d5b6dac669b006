#include "gcov/relations.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>

namespace gcov {

const std::vector<std::string>& schema_names() {
  static const std::vector<std::string> names = {"R2",  "R3",  "R4",  "R5",  "R6",  "R7",  "R8",  "R9",
                                                 "R10", "R11", "R12", "R13", "R14", "R15", "R16", "R17"};
  return names;
}

Move relabel_move(const Move& m, const Canonical& c) {
  Move r = m;
  if (r.block >= 0) r.block = c.block_map.at(r.block);
  if (r.cut >= 0) r.cut = c.cut_map.at(r.cut);
  return r;
}

Walk::Walk(const Group& G, Param start) : G_(&G), state_(std::move(start)) {}

void Walk::step(const Move& m) {
  Canonical before = canonicalize(state_);
  Param next = apply_move(*G_, state_, m);
  Move back = inverse_move(*G_, state_, m);
  Canonical after = canonicalize(next);
  fwd_.push_back(relabel_move(m, before));
  inv_.push_back(relabel_move(back, after));
  state_ = std::move(next);
}

std::vector<Move> Walk::backward() const { return {inv_.rbegin(), inv_.rend()}; }

RelationInstance make_loop(const Group& G, const Param& p, const std::string& schema,
                           const std::vector<Move>& lhs, const std::vector<Move>& rhs) {
  Walk l(G, p), r(G, p);
  l.steps(lhs);
  r.steps(rhs);
  RelationInstance inst{schema, canonical_key(p), l.forward()};
  auto back = r.backward();
  inst.loop.insert(inst.loop.end(), back.begin(), back.end());
  return inst;
}

namespace {

std::vector<Elem> elements(const Group& G, const Bounds& b, bool with_identity) {
  std::vector<Elem> all;
  for (Elem x = 0; x < G.order(); ++x)
    if (with_identity || x != G.id()) all.push_back(x);
  if (G.order() <= 6) return all;
  std::mt19937 rng(b.sampling_seed);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(6);
  std::sort(all.begin(), all.end());
  return all;
}

// cut between a last slot (left) and a first slot (right)?
bool in_f_position(const Param& p, const Cut& c, Slot& left, Slot& right) {
  const Node& na = p.node(c.a.block);
  const Node& nb = p.node(c.b.block);
  if (c.a.index == na.arity() && c.b.index == 1) {
    left = c.a;
    right = c.b;
    return true;
  }
  if (c.b.index == nb.arity() && c.a.index == 1) {
    left = c.b;
    right = c.a;
    return true;
  }
  return false;
}

Elem hat(const Param& p, const Slot& s) { return p.node(s.block).lab.h[s.index - 1]; }
Elem gat(const Param& p, const Slot& s) { return p.node(s.block).lab.g[s.index - 1]; }

bool matched(const Param& p, const Cut& c) { return hat(p, c.a) == hat(p, c.b); }

struct Builder {
  const Group& G;
  const Param& p;
  std::string schema;
  std::vector<RelationInstance> out;
  std::set<std::string> seen;

  void add(const std::vector<Move>& lhs, const std::vector<Move>& rhs) {
    try {
      RelationInstance inst = make_loop(G, p, schema, lhs, rhs);
      std::string sig = format_path(G, inst.loop);
      if (seen.insert(sig).second) out.push_back(std::move(inst));
    } catch (const MoveError&) {
      // some edge is not applicable: not an instance at this vertex
    }
  }
};

using Moves = std::vector<Move>;

Moves repeat(const Move& m, int n) { return Moves(std::max(n, 0), m); }

Moves cat(Moves a, const Moves& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Blocks and cuts whose data a primitive move rewrites.
std::set<std::pair<char, int>> support(const Param& p, const Move& m) {
  std::set<std::pair<char, int>> s;
  switch (m.kind) {
    case MoveKind::Z:
    case MoveKind::B:
    case MoveKind::P:
    case MoveKind::Finv: s.insert({'b', m.block}); break;
    case MoveKind::F:
    case MoveKind::T: {
      const Cut& c = p.cuts.at(m.cut);
      s.insert({'c', m.cut});
      s.insert({'b', c.a.block});
      s.insert({'b', c.b.block});
      break;
    }
    default: break;
  }
  return s;
}

bool disjoint(const std::set<std::pair<char, int>>& a, const std::set<std::pair<char, int>>& b) {
  for (auto& x : a)
    if (b.count(x)) return false;
  return true;
}

// Merge the cylinder `cyl` into its neighbour across `cut`, keeping the
// neighbour's slot order and id.
Moves cylinder_merge(const Param& p, int cyl, int cut) {
  const Slot& cs = p.side(cut, cyl);
  const Slot& js = p.far_side(cut, cyl);
  const int nj = p.node(js.block).arity();
  const int a = (nj - js.index) % nj;
  Moves m = repeat(Move::z(js.block), a);
  if (cs.index != 1) m.push_back(Move::z(cyl));
  m.push_back(Move::f(cut));
  Moves back = repeat(Move::z(js.block, true), a);
  return cat(m, back);
}

void r2(Builder& b, const Bounds& bd) {
  for (auto& [id, n] : b.p.blocks) {
    if (n.arity() < 2) continue;
    for (Elem x : elements(b.G, bd, false)) b.add({Move::z(id), Move::p(id, x)}, {Move::p(id, x), Move::z(id)});
  }
}

void r3(Builder& b, const Bounds& bd) {
  for (auto& [id, n] : b.p.blocks)
    for (int i = 1; i < n.arity(); ++i)
      for (Elem x : elements(b.G, bd, false))
        b.add({Move::braid(id, i), Move::p(id, x)}, {Move::p(id, x), Move::braid(id, i)});
}

void r4(Builder& b, const Bounds& bd) {
  for (auto& [cid, c] : b.p.cuts) {
    Slot L, R;
    if (!in_f_position(b.p, c, L, R)) continue;
    for (Elem x : elements(b.G, bd, false))
      b.add({Move::f(cid), Move::p(L.block, x)}, {Move::p(L.block, x), Move::p(R.block, x), Move::f(cid)});
  }
}

void r5(Builder& b, const Bounds& bd) {
  for (auto& [id, n] : b.p.blocks)
    for (Elem x : elements(b.G, bd, true))
      for (Elem y : elements(b.G, bd, true))
        b.add({Move::p(id, y), Move::p(id, x)}, {Move::p(id, b.G.mul(x, y))});
}

void r6(Builder& b, bool literal) {
  const Group& G = b.G;
  for (auto& [cid, c] : b.p.cuts) {
    Slot L, R;
    if (!in_f_position(b.p, c, L, R)) continue;
    Elem y = hat(b.p, L), w = hat(b.p, R);
    if (y == w) continue;
    Elem t = G.mul(G.inv(w), y);
    Moves rhs = {Move::p(R.block, G.inv(t)), Move::f(cid)};
    if (!literal) rhs.push_back(Move::p(L.block, t));
    b.add({Move::p(L.block, t), Move::f(cid)}, rhs);
  }
}

void r7(Builder& b) {
  for (auto& [id, n] : b.p.blocks)
    for (int i = 1; i + 1 < n.arity(); ++i)
      b.add({Move::braid(id, i), Move::z(id)}, {Move::z(id), Move::braid(id, i + 1)});
}

void r8_r9(Builder& b, const Bounds& bd, bool braid) {
  for (auto& [cid, c] : b.p.cuts) {
    if (!matched(b.p, c)) continue;
    Elem y = hat(b.p, c.a);
    for (int j : {c.a.block, c.b.block}) {
      const int n = b.p.node(j).arity();
      if (n < 2) continue;
      for (Elem z : elements(b.G, bd, true)) {
        if (z == y) continue;
        if (!braid) {
          b.add({Move::t(cid, z), Move::z(j)}, {Move::z(j), Move::t(cid, z)});
        } else {
          for (int i = 1; i < n; ++i)
            b.add({Move::t(cid, z), Move::braid(j, i)}, {Move::braid(j, i), Move::t(cid, z)});
        }
      }
    }
  }
}

void r10(Builder& b, const Bounds& bd) {
  const Group& G = b.G;
  for (auto& [cid, c] : b.p.cuts) {
    if (!matched(b.p, c) || G.mul(gat(b.p, c.a), gat(b.p, c.b)) != G.id()) continue;
    Elem y = hat(b.p, c.a);
    GfPlan g = gf_plan(G, b.p, cid);
    Moves gf = gf_path(G, b.p, cid);
    const int k = b.p.node(g.left).arity() - 1;
    const int fresh = apply_path(G, b.p, gf).next_block_id();
    for (Elem z : elements(G, bd, true)) {
      if (z == y) continue;
      Moves rhs = gf;
      rhs.push_back(Move::finv(g.left, k, z));
      rhs = cat(rhs, repeat(Move::z(g.left, true), g.a));
      rhs = cat(rhs, repeat(Move::z(fresh, true), g.b));
      b.add({Move::t(cid, z)}, rhs);
    }
  }
}

void r11(Builder& b) {
  for (auto& [id, n] : b.p.blocks)
    if (n.arity() >= 2) b.add(repeat(Move::z(id), n.arity()), {});
}

std::vector<Move> nontrivial_moves(const Group& G, const Param& p, const Bounds& bd) {
  std::vector<Move> out;
  for (auto& m : enumerate_moves(G, p, bd))
    if (!is_identity_move(G, p, m)) out.push_back(m);
  return out;
}

void r12(Builder& b, const Bounds& bd) {
  auto moves = nontrivial_moves(b.G, b.p, bd);
  std::vector<std::set<std::pair<char, int>>> sup;
  for (auto& m : moves) sup.push_back(support(b.p, m));
  for (size_t i = 0; i < moves.size(); ++i)
    for (size_t j = i + 1; j < moves.size(); ++j)
      if (disjoint(sup[i], sup[j])) b.add({moves[i], moves[j]}, {moves[j], moves[i]});
}

void r13(Builder& b) {
  for (auto& [cid, c] : b.p.cuts) {
    Slot L, R;
    if (!in_f_position(b.p, c, L, R)) continue;
    const int l = b.p.node(R.block).arity() - 1;
    b.add(cat({Move::f(cid)}, repeat(Move::z(L.block), l)),
          {Move::z(L.block), Move::z(R.block, true), Move::f(cid)});
  }
}

void r14(Builder& b) {
  std::vector<int> fc;
  for (auto& [cid, c] : b.p.cuts) {
    Slot L, R;
    if (in_f_position(b.p, c, L, R)) fc.push_back(cid);
  }
  for (size_t i = 0; i < fc.size(); ++i)
    for (size_t j = i + 1; j < fc.size(); ++j)
      b.add({Move::f(fc[i]), Move::f(fc[j])}, {Move::f(fc[j]), Move::f(fc[i])});
}

void r15(Builder& b, const Bounds& bd) {
  const Group& G = b.G;
  auto moves = nontrivial_moves(G, b.p, bd);
  for (auto& [cyl, n] : b.p.blocks) {
    if (n.arity() != 2) continue;
    for (int s = 0; s < 2; ++s) {
      int cid = n.att[s].cut;
      if (cid < 0) continue;
      const Slot& js = b.p.far_side(cid, cyl);
      const int j = js.block;
      if (!f_applicable(G, n.lab, s + 1, b.p.node(j).lab, js.index)) continue;
      Moves merge = cylinder_merge(b.p, cyl, cid);
      for (auto& e : moves) {
        bool on_j = false;
        switch (e.kind) {
          case MoveKind::Z:
          case MoveKind::B:
          case MoveKind::P:
          case MoveKind::Finv: on_j = e.block == j; break;
          case MoveKind::F:
          case MoveKind::T: {
            const Cut& c = b.p.cuts.at(e.cut);
            on_j = e.cut != cid && (c.a.block == j || c.b.block == j);
            break;
          }
          default: break;
        }
        if (!on_j) continue;
        Moves rhs = {e};
        try {
          Param after = apply_move(G, b.p, e);
          // the cylinder keeps its id and its cut; locate the merge anew
          rhs = cat(rhs, cylinder_merge(after, cyl, cid));
        } catch (const std::exception&) {
          continue;
        }
        b.add(cat(merge, {e}), rhs);
      }
    }
  }
}

void r16(Builder& b) {
  for (auto& [id, n] : b.p.blocks)
    for (int i = 1; i + 1 < n.arity(); ++i) {
      try {
        b.add({Move::braid(id, i), Move::braid(id, i + 1)}, gb_path(b.G, b.p, id, i, i, i + 1, i + 2));
        b.add({Move::braid(id, i + 1), Move::braid(id, i)}, gb_path(b.G, b.p, id, i, i + 1, i + 2, i + 2));
      } catch (const MoveError&) {
      }
    }
}

void r17(Builder& b, bool with_p) {
  for (auto& [id, n] : b.p.blocks) {
    if (n.arity() != 2) continue;
    Moves rhs = {Move::z(id), Move::braid(id, 1)};
    if (with_p) rhs.push_back(Move::p(id, n.lab.g[0]));
    b.add({Move::braid(id, 1), Move::z(id)}, rhs);
  }
}

}  // namespace

std::vector<RelationInstance> enumerate_instances(const Group& G, const Param& p, const std::string& schema,
                                                  const Bounds& bounds) {
  Builder b{G, p, schema, {}, {}};
  if (schema == "R2") r2(b, bounds);
  else if (schema == "R3") r3(b, bounds);
  else if (schema == "R4") r4(b, bounds);
  else if (schema == "R5") r5(b, bounds);
  else if (schema == "R6") r6(b, false);
  else if (schema == "R6literal") r6(b, true);
  else if (schema == "R7") r7(b);
  else if (schema == "R8") r8_r9(b, bounds, false);
  else if (schema == "R9") r8_r9(b, bounds, true);
  else if (schema == "R10") r10(b, bounds);
  else if (schema == "R11") r11(b);
  else if (schema == "R12") r12(b, bounds);
  else if (schema == "R13") r13(b);
  else if (schema == "R14") r14(b);
  else if (schema == "R15") r15(b, bounds);
  else if (schema == "R16") r16(b);
  else if (schema == "R17") r17(b, true);
  else if (schema == "R17noP") r17(b, false);
  else throw std::invalid_argument("unknown relation schema '" + schema + "'");
  return std::move(b.out);
}

std::vector<RelationInstance> enumerate_all_instances(const Group& G, const Param& p, const Bounds& bounds) {
  std::vector<RelationInstance> all;
  for (auto& s : schema_names()) {
    auto v = enumerate_instances(G, p, s, bounds);
    std::move(v.begin(), v.end(), std::back_inserter(all));
  }
  return all;
}

ClosureResult replay_loop(const Group& G, const Param& base, const std::vector<Move>& loop) {
  ClosureResult r;
  Canonical c = canonicalize(base);
  r.visited.push_back(c.key);
  r.max_cuts = base.cut_count();
  Param cur = c.param;
  for (size_t i = 0; i < loop.size(); ++i) {
    try {
      cur = canonicalize(apply_move(G, cur, loop[i])).param;
    } catch (const std::exception& e) {
      r.error = "step " + std::to_string(i + 1) + " (" + format_move(G, loop[i]) + "): " + e.what();
      return r;
    }
    r.max_cuts = std::max(r.max_cuts, cur.cut_count());
    r.visited.push_back(canonical_key(cur));
  }
  r.ok = r.visited.back() == r.visited.front();
  if (!r.ok) r.error = "loop ends at a different vertex";
  return r;
}

bool verify_closure(const Group& G, const Param& base, const RelationInstance& inst) {
  return replay_loop(G, base, inst.loop).ok;
}

Param erase_labels(const Param& p) {
  Param q = p;
  for (auto& [id, n] : q.blocks) {
    std::fill(n.lab.g.begin(), n.lab.g.end(), 0);
    std::fill(n.lab.h.begin(), n.lab.h.end(), 0);
  }
  std::fill(q.global_lift.begin(), q.global_lift.end(), 0);
  return q;
}

std::optional<Move> project_move(const Move& m) {
  if (m.kind == MoveKind::P || m.kind == MoveKind::T) return std::nullopt;
  Move r = m;
  if (r.kind == MoveKind::Finv) r.x = 0;
  r.y = -1;
  return r;
}

namespace {

std::vector<Move> projected(const Group& G, const Param& base, const std::vector<Move>& loop) {
  std::vector<Move> out;
  Param cur = canonicalize(base).param;
  for (auto& m : loop) {
    bool trivial = is_identity_move(G, cur, m);
    cur = canonicalize(apply_move(G, cur, m)).param;
    if (trivial) continue;
    if (auto pm = project_move(m)) out.push_back(*pm);
  }
  return out;
}

}  // namespace

RelationInstance lift_base_relation(const Group& base_group, const Param& base_vertex,
                                    const RelationInstance& base_cell, const Group& G,
                                    const Param& fiber_vertex, const Bounds& bounds) {
  Param fv = canonicalize(fiber_vertex).param;
  if (canonical_key(erase_labels(fv)) != canonical_key(erase_labels(base_vertex)))
    throw std::invalid_argument("fiber vertex does not project onto the cell's base vertex");
  auto want = projected(base_group, base_vertex, base_cell.loop);
  for (auto& inst : enumerate_instances(G, fv, base_cell.schema, bounds))
    if (projected(G, fv, inst.loop) == want) return inst;
  throw std::runtime_error("no lift of the " + base_cell.schema + " cell at this fiber vertex");
}

}  // namespace gcov
