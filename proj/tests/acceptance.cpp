// One line per acceptance criterion; exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "gcov/fibration.hpp"

using namespace gcov;
using Status = TrivialityVerdict::Status;
using Clock = std::chrono::steady_clock;

namespace {

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " FAILED[" << what << "]";
    }
  }
};

// Vertices met by a seeded random walk of the moves, stratified by cut count.
std::vector<Param> sample_vertices(const Group& G, const TargetCover& t, int max_cuts, size_t per_level,
                                   unsigned seed) {
  std::vector<Param> out;
  std::mt19937 rng(seed);
  for (int k = 0; k <= max_cuts; ++k) {
    Bounds b;
    b.max_cuts = k;
    Param p = canonicalize(seed_parameterization(G, t)).param;
    std::map<std::string, Param> level;
    for (int step = 0; step < 200000 && level.size() < per_level; ++step) {
      auto moves = enumerate_moves(G, p, b);
      if (moves.empty()) break;
      p = canonicalize(apply_move(G, p, moves[rng() % moves.size()])).param;
      if (p.cut_count() == k) level.emplace(canonical_key(p), p);
    }
    for (auto& [key, q] : level) out.push_back(q);
  }
  return out;
}

std::vector<Param> bfs_vertices(const Group& G, const TargetCover& t, int max_cuts) {
  Bounds b;
  b.max_cuts = max_cuts;
  TwoComplex g = build_graph(G, t, b);
  std::vector<Param> out;
  for (int v = 0; v < g.vertex_count(); ++v) out.push_back(g.vertex(v));
  return out;
}

Param single_block(const Group& G, const std::vector<Elem>& g, const std::vector<Elem>& h, TargetCover& t) {
  Param p;
  Node n;
  n.lab.g = g;
  n.lab.h = h;
  const int k = static_cast<int>(g.size());
  std::vector<Elem> m;
  for (int i = 0; i < k; ++i) {
    Att a;
    a.ext = i;
    n.att.push_back(a);
    p.external.push_back({1, i + 1});
    m.push_back(monodromy(G, n.lab, i + 1));
  }
  p.blocks.emplace(1, std::move(n));
  p.comp_size = {k};
  p.closed = {-1};
  p.global_lift = {G.id()};
  t = TargetCover{{m}};
  return p;
}

// every labelled block of arity 2..max_arity with product of g equal to 1
void for_each_block(const Group& G, int max_arity, const std::function<void(const Param&, int)>& fn) {
  for (int k = 2; k <= max_arity; ++k) {
    std::vector<Elem> digits(2 * k - 1, 0);
    while (true) {
      std::vector<Elem> g(digits.begin(), digits.begin() + (k - 1)), h(digits.begin() + (k - 1), digits.end());
      Elem prod = G.id();
      for (Elem x : g) prod = G.mul(prod, x);
      g.push_back(G.inv(prod));
      TargetCover t;
      fn(single_block(G, g, h, t), k);
      size_t d = 0;
      while (d < digits.size() && digits[d] == G.order() - 1) digits[d++] = 0;
      if (d == digits.size()) break;
      ++digits[d];
    }
  }
}

Outcome ac1() {
  Outcome o;
  for (auto G : {Group::cyclic(2), Group::cyclic(3), Group::symmetric(3)}) {
    auto t0 = Clock::now();
    TargetCover t{{{}}};
    Bounds b;
    TwoComplex c = build_bounded(G, t, b);
    auto conn = check_connected(c, enumerate_valid_vertices(G, t, b));
    auto v = prove_trivial(pi1_presentation(c), b.coset_budget);
    const double s = since(t0);
    o.detail << " |G|=" << G.order() << ":V=" << c.vertex_count() << ",conn=" << conn.connected
             << ",pi1=" << status_name(v.status) << "," << s << "s";
    o.require(c.vertex_count() == G.order(), "vertex count");
    o.require(conn.connected, "connected");
    o.require(v.status == Status::ProvenTrivial, "pi1");
    o.require(s < 1.0, "runtime");
  }
  return o;
}

struct ClosureTally {
  long instances = 0, failures = 0, vertices = 0;
  void run(const Group& G, const std::vector<Param>& vs) {
    Bounds b;
    for (auto& p : vs) {
      ++vertices;
      for (auto& inst : enumerate_all_instances(G, p, b)) {
        ++instances;
        if (!verify_closure(G, p, inst)) ++failures;
      }
    }
  }
};

Outcome ac2() {
  Outcome o;
  auto t0 = Clock::now();
  ClosureTally z2, s3;
  auto Z2 = Group::cyclic(2);
  for (auto& t : {TargetCover{{{1, 1, 0}}}, TargetCover{{{0, 0, 0}}}, TargetCover{{{1, 1}}}, TargetCover{{{}}},
                  TargetCover{{{1, 1}, {}}}})
    z2.run(Z2, bfs_vertices(Z2, t, 1));
  // four boundaries: all cut-free vertices plus a stratified sample at one cut
  const TargetCover four{{{1, 1, 1, 1}}};
  z2.run(Z2, bfs_vertices(Z2, four, 0));
  z2.run(Z2, sample_vertices(Z2, four, 1, 1500, 0));
  auto S3 = Group::symmetric(3);
  const Elem s = S3.parse("[2,1,3]"), r = S3.parse("[2,3,1]"), ri = S3.inv(r);
  for (auto& t : {TargetCover{{{s, s, S3.id()}}}, TargetCover{{{r, r, r}}}, TargetCover{{{s, s, s, s}}},
                  TargetCover{{{r, ri, r, ri}}}})
    s3.run(S3, sample_vertices(S3, t, 2, 40, 0));
  const double sec = since(t0);
  o.detail << " Z/2: vertices=" << z2.vertices << " instances=" << z2.instances << " failures=" << z2.failures
           << "; S3: vertices=" << s3.vertices << " instances=" << s3.instances << " failures=" << s3.failures
           << "; " << sec << "s";
  o.require(z2.failures == 0 && s3.failures == 0, "closure");
  o.require(z2.instances + s3.instances >= 500, "instance count");
  o.require(sec < 60, "runtime");
  return o;
}

struct MoveTally {
  long moves = 0, structure = 0, monodromy = 0, slots = 0, cover = 0;
};

void check_moves(const Group& G, const TargetCover& t, const std::vector<Param>& vs,
                 std::map<std::string, MoveTally>& per) {
  Bounds b;
  for (auto& p : vs) {
    const CoverInvariant before = cover_invariant(G, p, t);
    for (auto& m : enumerate_moves(G, p, b)) {
      Param q = apply_move(G, p, m);
      MoveTally& k = per[kind_name(m.kind)];
      ++k.moves;
      if (!check_structure(G, q, &t).ok()) ++k.structure;
      for (int e = 0; e < t.boundary_count(); ++e) {
        const Slot& s = q.external[e];
        if (monodromy(G, q.node(s.block).lab, s.index) != t.monodromy(e)) {
          ++k.monodromy;
          break;
        }
      }
      if (m.kind == MoveKind::Z || m.kind == MoveKind::B) {
        const Block& x = p.node(m.block).lab;
        const Block& y = q.node(m.block).lab;
        const int n = x.arity();
        std::vector<Elem> mx(n), my(n);
        for (int i = 0; i < n; ++i) {
          mx[i] = monodromy(G, x, i + 1);
          my[i] = monodromy(G, y, i + 1);
        }
        if (m.kind == MoveKind::Z && m.inverse)
          std::rotate(mx.begin(), mx.begin() + 1, mx.end());
        else if (m.kind == MoveKind::Z)
          std::rotate(mx.rbegin(), mx.rbegin() + 1, mx.rend());
        else if (m.inverse)
          std::swap(mx[m.i - 1], mx[m.i]);  // inverse braid swaps the same pair
        else
          std::swap(mx[m.i - 1], mx[m.i]);
        if (mx != my) ++k.slots;
      }
      if (!cover_equivalent(G, before, cover_invariant(G, q, t))) ++k.cover;
    }
  }
}

Outcome ac3() {
  Outcome o;
  auto t0 = Clock::now();
  std::map<std::string, MoveTally> per;
  auto Z2 = Group::cyclic(2), Z3 = Group::cyclic(3), S3 = Group::symmetric(3);
  TargetCover a{{{1, 1, 0}}}, b{{{1, 2, 0}}}, c{{{1, 1, 1}}};
  check_moves(Z2, a, bfs_vertices(Z2, a, 2), per);
  for (auto& t : {b, c}) {
    check_moves(Z3, t, bfs_vertices(Z3, t, 1), per);
    check_moves(Z3, t, sample_vertices(Z3, t, 2, 200, 0), per);
  }
  const Elem s = S3.parse("[2,1,3]"), r = S3.parse("[2,3,1]");
  for (auto& t : {TargetCover{{{s, s, S3.id()}}}, TargetCover{{{r, r, r}}}, TargetCover{{{s, s, s, s}}}})
    check_moves(S3, t, sample_vertices(S3, t, 2, 100, 1), per);
  const double sec = since(t0);
  long structure = 0, mono = 0, slots = 0, cover = 0;
  for (auto& [kind, k] : per) {
    o.detail << " " << kind << ":n=" << k.moves;
    if (k.structure + k.monodromy + k.slots + k.cover)
      o.detail << "(prod/struct=" << k.structure << ",mono=" << k.monodromy << ",slots=" << k.slots
               << ",cover=" << k.cover << ")";
    structure += k.structure;
    mono += k.monodromy;
    slots += k.slots;
    cover += k.cover;
  }
  o.detail << "; " << sec << "s";
  o.require(structure == 0, "product/structure");
  o.require(mono == 0, "boundary monodromy");
  o.require(slots == 0, "slot monodromy permutation");
  o.require(cover == 0, "cover invariant");
  o.require(sec < 120, "runtime");
  return o;
}

Outcome ac4() {
  Outcome o;
  auto t0 = Clock::now();
  Bounds b;
  auto Z2 = Group::cyclic(2);
  TargetCover t{{{1, 1, 1, 1}}};
  Param base = apply_Finv(Z2, canonicalize(seed_parameterization(Z2, t)).param, 1, 2, Z2.id());
  Fiber f = compute_fiber(Z2, t, base, b);
  FiberReport r = check_fiber(f, b.coset_budget);
  bool only_pt = true;
  for (int e = 0; e < f.complex->edge_count(); ++e) {
    auto k = f.complex->edge(e).move.kind;
    only_pt = only_pt && (k == MoveKind::P || k == MoveKind::T);
  }
  o.detail << " two-block fiber: size=" << r.size << ",conn=" << r.connected << ",pi1=" << status_name(r.pi1.status);
  o.require(r.size == 8, "fiber size 8");
  o.require(r.connected && only_pt, "connected by P/T");
  o.require(r.pi1.status == Status::ProvenTrivial, "fiber pi1");
  // single-block fibers against the P-orbit of the seed
  int checked = 0;
  auto S3 = Group::symmetric(3);
  const Elem s = S3.parse("[2,1,3]"), rr = S3.parse("[2,3,1]");
  std::vector<std::pair<Group, TargetCover>> cases = {
      {Z2, TargetCover{{{1, 1, 0}}}},       {Z2, TargetCover{{{1, 1, 1, 1}}}},  {Group::cyclic(3), TargetCover{{{1, 2, 0}}}},
      {Group::cyclic(3), TargetCover{{{1, 1, 1}}}}, {Group::cyclic(4), TargetCover{{{1, 3, 2, 2}}}},
      {Group::cyclic(5), TargetCover{{{1, 4, 0}}}}, {Group::cyclic(6), TargetCover{{{2, 3, 1}}}},
      {S3, TargetCover{{{s, s, S3.id()}}}},   {S3, TargetCover{{{rr, rr, rr}}}},  {S3, TargetCover{{{s, s, s, s}}}}};
  for (auto& [G, tc] : cases) {
    Param seed = canonicalize(seed_parameterization(G, tc)).param;
    std::set<std::string> orbit;
    for (Elem x = 0; x < G.order(); ++x) orbit.insert(canonical_key(apply_P(G, seed, 1, x)));
    Fiber sf = compute_fiber(G, tc, seed, b);
    FiberReport sr = check_fiber(sf, b.coset_budget);
    bool same = std::set<std::string>(sf.members.begin(), sf.members.end()) == orbit;
    o.require(same && sr.size == static_cast<int>(orbit.size()), "single-block fiber = P-orbit");
    o.require(sr.connected && sr.pi1.status == Status::ProvenTrivial, "single-block fiber pi1");
    ++checked;
  }
  const double sec = since(t0);
  o.detail << "; single-block fibers checked=" << checked << "; " << sec << "s";
  o.require(sec < 30, "runtime");
  return o;
}

Outcome ac5() {
  Outcome o;
  auto t0 = Clock::now();
  auto Z2 = Group::cyclic(2);
  TargetCover t{{{1, 1, 0}}};
  Bounds b;
  b.max_cuts = 2;
  b.slack = 3;
  BuildStats st;
  TwoComplex c = build_bounded(Z2, t, b, &st);
  auto valid = enumerate_valid_vertices(Z2, t, b);
  // independent oracle: BFS vertices that pass validate
  std::set<std::string> filtered;
  for (int v = 0; v < c.bfs_vertex_count(); ++v)
    if (validate(Z2, c.vertex(v), t).ok()) filtered.insert(c.key(v));
  auto conn = check_connected(c, valid);
  auto verdict = prove_trivial(pi1_presentation(c), b.coset_budget);
  const double sec = since(t0);
  o.detail << " V=" << c.vertex_count() << " bfsV=" << c.bfs_vertex_count() << " E=" << c.edge_count()
           << " C=" << c.cell_count() << " valid=" << valid.size() << " conn=" << conn.connected
           << " pi1=" << verdict.describe().substr(0, 160) << "; " << sec << "s";
  o.require(valid == filtered, "valid set = validated BFS vertices");
  o.require(conn.connected, "connectivity");
  o.require(st.cells_failed == 0, "cells close");
  // goldens, frozen from the first run once the valid-set oracle agreed
  o.require(c.vertex_count() == 194224 && c.bfs_vertex_count() == 19632 && c.edge_count() == 495688 &&
                c.cell_count() == 800584 && valid.size() == 4908,
            "golden counts");
  o.require(verdict.status == Status::ProvenTrivial, "pi1 ProvenTrivial");
  o.require(sec < 600, "runtime");
  return o;
}

Outcome ac6() {
  Outcome o;
  auto Z2 = Group::cyclic(2);
  TargetCover t{{{1, 1}}};
  Param p = canonicalize(seed_parameterization(Z2, t)).param;
  Bounds b;
  int open = 0, closed_with_p = 0, total = 0;
  for (auto& inst : enumerate_instances(Z2, p, "R17noP", b)) {
    ++total;
    if (!verify_closure(Z2, p, inst)) ++open;
  }
  for (auto& inst : enumerate_instances(Z2, p, "R17", b))
    if (verify_closure(Z2, p, inst)) ++closed_with_p;
  o.detail << " g=" << Z2.format(p.node(1).lab.g[0]) << " R17-without-P open=" << open << "/" << total
           << " R17 closed=" << closed_with_p;
  o.require(p.node(1).lab.g[0] == 1, "g = 1");
  o.require(total > 0 && open == total, "loop without P stays open");
  o.require(closed_with_p > 0, "loop with P closes");
  return o;
}

Outcome ac7() {
  Outcome o;
  auto t0 = Clock::now();
  auto E = Group::cyclic(1), Z2 = Group::cyclic(2);
  TargetCover t{{{0, 0, 0}}};
  Bounds b;
  b.max_cuts = 1;
  b.slack = 3;
  TwoComplex c = build_bounded(E, t, b);
  bool no_pt = true;
  for (int e = 0; e < c.edge_count(); ++e) {
    auto k = c.edge(e).move.kind;
    no_pt = no_pt && k != MoveKind::P && k != MoveKind::T;
  }
  // the base complex is the label erasure of any cover's complex
  TargetCover up{{{1, 1, 0}}};
  TwoComplex cu = build_graph(Z2, up, b);
  TwoComplex cb = build_graph(E, t, b);
  std::set<std::string> image, base;
  for (int v = 0; v < cu.vertex_count(); ++v) image.insert(canonical_key(project(cu.vertex(v))));
  for (int v = 0; v < cb.vertex_count(); ++v) base.insert(cb.key(v));
  std::set<std::string> edge_image, base_edges;
  auto edge_sig = [&](const TwoComplex& cx, int e, bool proj) -> std::string {
    const Edge& ed = cx.edge(e);
    auto m = proj ? project_move(ed.move) : std::optional<Move>(ed.move);
    if (!m) return "";
    Param a = proj ? project(cx.vertex(ed.from)) : cx.vertex(ed.from);
    Param z = proj ? project(cx.vertex(ed.to)) : cx.vertex(ed.to);
    std::string ka = canonical_key(a), kz = canonical_key(z);
    if (kz < ka) std::swap(ka, kz);  // edges are undirected
    return ka + "|" + kz;
  };
  for (int e = 0; e < cu.edge_count(); ++e)
    if (auto s = edge_sig(cu, e, true); !s.empty()) edge_image.insert(s);
  for (int e = 0; e < cb.edge_count(); ++e) base_edges.insert(edge_sig(cb, e, false));
  auto conn = check_connected(c, enumerate_valid_vertices(E, t, b));
  auto verdict = conn.connected ? prove_trivial(pi1_presentation(c), b.coset_budget) : TrivialityVerdict{};
  const double sec = since(t0);
  o.detail << " V=" << c.vertex_count() << " E=" << c.edge_count() << " C=" << c.cell_count()
           << " P/T-free=" << no_pt << " vertex image=" << (image == base) << " edge image=" << (edge_image == base_edges)
           << " conn=" << conn.connected << " pi1=" << verdict.describe().substr(0, 120) << "; " << sec << "s";
  o.require(no_pt, "P and T degenerate");
  o.require(image == base, "vertex projection onto base complex");
  o.require(edge_image == base_edges, "edge projection onto base complex");
  o.require(conn.connected, "connected");
  o.require(verdict.status == Status::ProvenTrivial, "pi1 ProvenTrivial");
  o.require(sec < 10, "runtime");
  return o;
}

Outcome ac8() {
  Outcome o;
  long gb = 0, gb_bad = 0, tt = 0, tt_bad = 0;
  for (auto G : {Group::cyclic(2), Group::cyclic(4)}) {
    for_each_block(G, 4, [&](const Param& p, int n) {
      for (int i = 1; i < n; ++i) {
        ++gb;
        try {
          if (canonical_key(apply_GB(G, p, 1, i, i, i + 1, i + 1)) != canonical_key(apply_Bi(G, p, 1, i))) ++gb_bad;
        } catch (const std::exception&) {
          ++gb_bad;
        }
      }
      for (int k = 1; k < n; ++k)
        for (Elem y = 0; y < G.order(); ++y) {
          Param cut = apply_Finv(G, p, 1, k, y);
          const int c = cut.cuts.begin()->first;
          for (Elem z = 0; z < G.order(); ++z) {
            ++tt;
            Param via = apply_Finv(G, apply_F(G, cut, c), 1, k, z);
            if (canonical_key(apply_T(G, cut, c, z)) != canonical_key(via)) ++tt_bad;
          }
        }
    });
  }
  o.detail << " GB=B: " << gb - gb_bad << "/" << gb << "; T=Finv*F: " << tt - tt_bad << "/" << tt;
  o.require(gb_bad == 0, "GB with singletons");
  o.require(tt_bad == 0, "T via F and Finv");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string only = argc > 1 ? argv[1] : "";
  std::vector<std::pair<const char*, std::function<Outcome()>>> acs = {
      {"AC1 closed-component complexes", ac1}, {"AC2 relation closure", ac2},
      {"AC3 move invariants", ac3},           {"AC4 fiber properties", ac4},
      {"AC5 bounded complex", ac5},      {"AC6 twist needs its P edge", ac6},
      {"AC7 trivial-group reduction", ac7},   {"AC8 composite consistency", ac8}};
  int failed = 0;
  for (auto& [name, fn] : acs) {
    if (!only.empty() && std::string(name).rfind(only + " ", 0) != 0) continue;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " exception: " << e.what();
    }
    std::printf("%s %s:%s\n", o.pass ? "PASS" : "FAIL", name, o.detail.str().c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
