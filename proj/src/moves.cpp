#include "gcov/moves.hpp"

#include <algorithm>
#include <cctype>

namespace gcov {

const char* kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::Z: return "Z";
    case MoveKind::B: return "B";
    case MoveKind::F: return "F";
    case MoveKind::Finv: return "Finv";
    case MoveKind::P: return "P";
    case MoveKind::T: return "T";
    case MoveKind::GF: return "GF";
    case MoveKind::GB: return "GB";
  }
  return "?";
}

namespace {

const Node& need_block(const Param& p, int b) {
  auto it = p.blocks.find(b);
  if (it == p.blocks.end()) throw MoveError("no block b" + std::to_string(b));
  return it->second;
}

const Cut& need_cut(const Param& p, int c) {
  auto it = p.cuts.find(c);
  if (it == p.cuts.end()) throw MoveError("no cut c" + std::to_string(c));
  return it->second;
}

// left side = slot at the end of its block, right side = slot 1 of the other
bool f_orientation(const Param& p, const Cut& c, Slot& left, Slot& right) {
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

void check_f(const Group& G, const Param& p, const Slot& s, const Slot& t, int cut) {
  const Node& a = p.node(s.block);
  const Node& b = p.node(t.block);
  if (G.mul(a.lab.g[s.index - 1], b.lab.g[t.index - 1]) != G.id())
    throw MoveError("cut c" + std::to_string(cut) + ": g labels are not inverse");
  if (a.lab.h[s.index - 1] != b.lab.h[t.index - 1])
    throw MoveError("cut c" + std::to_string(cut) + ": h-mismatch (" + G.format(a.lab.h[s.index - 1]) +
                    " vs " + G.format(b.lab.h[t.index - 1]) + ")");
}

int closed_component(const Param& p, int b) {
  for (size_t c = 0; c < p.closed.size(); ++c)
    if (p.closed[c] == b) return static_cast<int>(c);
  return -1;
}

}  // namespace

Param apply_Z(const Group& G, const Param& p, int block, bool inverse) {
  (void)G;
  need_block(p, block);
  Param q = p;
  Node& n = q.node(block);
  const int a = n.arity();
  if (a <= 1) return q;
  auto rot = [&](auto& v) {
    if (inverse)
      std::rotate(v.begin(), v.begin() + 1, v.end());
    else
      std::rotate(v.begin(), v.end() - 1, v.end());
  };
  rot(n.lab.g);
  rot(n.lab.h);
  rot(n.att);
  refresh_slots(q, block);
  return q;
}

Param apply_Bi(const Group& G, const Param& p, int block, int i, bool inverse) {
  const Node& src = need_block(p, block);
  const int n = src.arity();
  if (n < 2 || i < 1 || i > n - 1)
    throw MoveError("B: index " + std::to_string(i) + " invalid for arity " + std::to_string(n));
  Param q = p;
  Node& nd = q.node(block);
  auto& g = nd.lab.g;
  auto& h = nd.lab.h;
  const int a = i - 1, b = i;
  Elem ga = g[a], gb = g[b], ha = h[a], hb = h[b];
  if (!inverse) {
    g[a] = G.mul(G.mul(ga, gb), G.inv(ga));
    h[a] = G.mul(hb, G.inv(ga));
    g[b] = ga;
    h[b] = ha;
  } else {
    Elem gi = gb, hi = hb;  // old slot i
    g[a] = gi;
    h[a] = hi;
    g[b] = G.mul(G.mul(G.inv(gi), ga), gi);
    h[b] = G.mul(ha, gi);
  }
  std::swap(nd.att[a], nd.att[b]);
  refresh_slots(q, block);
  return q;
}

Param apply_F(const Group& G, const Param& p, int cut) {
  const Cut& c = need_cut(p, cut);
  Slot L, R;
  if (!f_orientation(p, c, L, R))
    throw MoveError("F: cut c" + std::to_string(cut) + " is not between a last slot and a first slot (use GF)");
  check_f(G, p, L, R, cut);
  Param q = p;
  Node right = q.node(R.block);
  Node& left = q.node(L.block);
  left.lab.g.pop_back();
  left.lab.h.pop_back();
  left.att.pop_back();
  left.lab.g.insert(left.lab.g.end(), right.lab.g.begin() + 1, right.lab.g.end());
  left.lab.h.insert(left.lab.h.end(), right.lab.h.begin() + 1, right.lab.h.end());
  left.att.insert(left.att.end(), right.att.begin() + 1, right.att.end());
  q.blocks.erase(R.block);
  q.cuts.erase(cut);
  refresh_slots(q, L.block);
  return q;
}

Param apply_Finv(const Group& G, const Param& p, int block, int k, Elem y) {
  const Node& src = need_block(p, block);
  const int n = src.arity();
  if (n < 2 || k < 1 || k > n - 1)
    throw MoveError("Finv: split k=" + std::to_string(k) + " invalid for arity " + std::to_string(n));
  if (!G.valid(y)) throw MoveError("Finv: bad label");
  Param q = p;
  const int nb = q.next_block_id(), nc = q.next_cut_id();
  Node left, right;
  Elem prod = G.id();
  for (int j = 0; j < k; ++j) prod = G.mul(prod, src.lab.g[j]);
  Elem x = G.inv(prod);
  for (int j = 0; j < k; ++j) {
    left.lab.g.push_back(src.lab.g[j]);
    left.lab.h.push_back(src.lab.h[j]);
    left.att.push_back(src.att[j]);
  }
  left.lab.g.push_back(x);
  left.lab.h.push_back(y);
  left.att.push_back({-1, nc});
  right.lab.g.push_back(G.inv(x));
  right.lab.h.push_back(y);
  right.att.push_back({-1, nc});
  for (int j = k; j < n; ++j) {
    right.lab.g.push_back(src.lab.g[j]);
    right.lab.h.push_back(src.lab.h[j]);
    right.att.push_back(src.att[j]);
  }
  q.cuts[nc] = Cut{{block, k + 1}, {nb, 1}};
  q.node(block) = std::move(left);
  q.blocks.emplace(nb, std::move(right));
  refresh_slots(q, block);
  refresh_slots(q, nb);
  return q;
}

Param apply_P(const Group& G, const Param& p, int block, Elem x) {
  need_block(p, block);
  if (!G.valid(x)) throw MoveError("P: bad element");
  Param q = p;
  Node& n = q.node(block);
  if (n.arity() == 0) {
    int c = closed_component(q, block);
    if (c < 0) throw MoveError("P: S0 block b" + std::to_string(block) + " is not a closed component");
    q.global_lift[c] = G.mul(x, q.global_lift[c]);
    return q;
  }
  Elem xi = G.inv(x);
  for (int j = 0; j < n.arity(); ++j) {
    n.lab.g[j] = G.mul(G.mul(x, n.lab.g[j]), xi);
    n.lab.h[j] = G.mul(n.lab.h[j], xi);
  }
  return q;
}

Param apply_T(const Group& G, const Param& p, int cut, Elem z) {
  const Cut& c = need_cut(p, cut);
  if (!G.valid(z)) throw MoveError("T: bad element");
  Elem ya = p.node(c.a.block).lab.h[c.a.index - 1];
  Elem yb = p.node(c.b.block).lab.h[c.b.index - 1];
  if (ya != yb)
    throw MoveError("T: cut c" + std::to_string(cut) + " is unmatched (h-mismatch " + G.format(ya) + " vs " +
                    G.format(yb) + ")");
  Param q = p;
  q.node(c.a.block).lab.h[c.a.index - 1] = z;
  q.node(c.b.block).lab.h[c.b.index - 1] = z;
  return q;
}

GfPlan gf_plan(const Group& G, const Param& p, int cut) {
  const Cut& c = need_cut(p, cut);
  check_f(G, p, c.a, c.b, cut);
  auto bm = canonicalize(p).block_map;
  Slot A = c.a, B = c.b;
  if (bm.at(B.block) < bm.at(A.block)) std::swap(A, B);
  const int na = p.node(A.block).arity(), nb = p.node(B.block).arity();
  return {A.block, B.block, (na - A.index) % na, (nb - B.index + 1) % nb};
}

std::vector<Move> gf_path(const Group& G, const Param& p, int cut) {
  GfPlan g = gf_plan(G, p, cut);
  std::vector<Move> path(g.a, Move::z(g.left));
  path.insert(path.end(), g.b, Move::z(g.right));
  path.push_back(Move::f(cut));
  return path;
}

Param apply_path(const Group& G, Param p, const std::vector<Move>& path) {
  for (auto& m : path) p = apply_move(G, p, m);
  return p;
}

Param apply_GF(const Group& G, const Param& p, int cut) { return apply_path(G, p, gf_path(G, p, cut)); }

namespace {

void check_gb(const Param& p, int block, int s2, int e2, int s3, int e3) {
  const Node& n = need_block(p, block);
  if (!(1 <= s2 && s2 <= e2 && e2 + 1 == s3 && s3 <= e3 && e3 <= n.arity()))
    throw MoveError("GB: I2=" + std::to_string(s2) + ".." + std::to_string(e2) + ", I3=" + std::to_string(s3) +
                    ".." + std::to_string(e3) + " are not adjacent contiguous ranges of an arity-" +
                    std::to_string(n.arity()) + " block");
}

struct GbRun {
  std::vector<Move> path;
  Param state;
  int final_block = -1;
};

GbRun run_gb(const Group& G, const Param& p, int block, int s2, int e2, int s3, int e3) {
  check_gb(p, block, s2, e2, s3, e3);
  GbRun r;
  r.state = p;
  auto run = [&](const Move& m) {
    r.path.push_back(m);
    r.state = apply_move(G, r.state, m);
  };
  auto run_all = [&](const std::vector<Move>& ms) {
    for (auto& m : ms) run(m);
  };
  // split [s..e] off blk: blk keeps the rest with the new slot at position s
  auto split = [&](int blk, int s, int e) {
    const int M = r.state.node(blk).arity();
    const int L = e - s + 1;
    for (int k = 0; k < (M - e) % M; ++k) run(Move::z(blk));
    Elem y = r.state.node(blk).lab.h[M - L];
    int nc = r.state.next_cut_id(), nb = r.state.next_block_id();
    run(Move::finv(blk, M - L, y));
    const int M2 = M - L + 1;
    for (int k = 0; k < s % M2; ++k) run(Move::z(blk));
    return std::pair{nc, nb};
  };
  const Node& orig = p.node(block);
  Elem z = G.id();
  for (int j = s2; j <= e2; ++j) z = G.mul(z, orig.lab.g[j - 1]);
  Att anchor = orig.att[s2 > 1 ? 0 : s3 - 1];

  auto [c3, p3] = split(block, s3, e3);
  auto [c2, p2] = split(block, s2, e2);
  int cm = -1;
  if (r.state.node(block).arity() > 2) {
    auto [c, t] = split(block, s2, s2 + 1);
    cm = c;
    run(Move::braid(t, 2));
  } else {
    run(Move::braid(block, 1));
  }
  (void)p2;
  run(Move::p(p3, z));
  run_all(gf_path(G, r.state, c3));
  run_all(gf_path(G, r.state, c2));
  if (cm >= 0) run_all(gf_path(G, r.state, cm));
  // rotate so the anchor's slot comes first
  // the anchor may be a cut whose far side lives on an untouched neighbour
  for (auto& [id, n] : r.state.blocks) {
    if (id != block && p.blocks.count(id)) continue;
    for (int j = 0; j < n.arity(); ++j)
      if (n.att[j] == anchor) r.final_block = id;
  }
  const Node& fin = r.state.node(r.final_block);
  int pos = 0;
  while (!(fin.att[pos] == anchor)) ++pos;
  const int M = fin.arity();
  const int fb = r.final_block;
  for (int k = 0; k < (M - pos) % M; ++k) run(Move::z(fb));
  return r;
}

}  // namespace

std::vector<Move> gb_path(const Group& G, const Param& p, int block, int s2, int e2, int s3, int e3) {
  return run_gb(G, p, block, s2, e2, s3, e3).path;
}

Param apply_GB(const Group& G, const Param& p, int block, int s2, int e2, int s3, int e3) {
  GbRun r = run_gb(G, p, block, s2, e2, s3, e3);
  return rename_block(r.state, r.final_block, block);
}

Param gb_closed_form(const Group& G, const Param& p, int block, int s2, int e2, int s3, int e3) {
  check_gb(p, block, s2, e2, s3, e3);
  Param q = p;
  const Node src = p.node(block);
  Node& n = q.node(block);
  Elem z = G.id();
  for (int j = s2; j <= e2; ++j) z = G.mul(z, src.lab.g[j - 1]);
  Elem zi = G.inv(z);
  std::vector<int> order;
  for (int j = 1; j < s2; ++j) order.push_back(j);
  for (int j = s3; j <= e3; ++j) order.push_back(j);
  for (int j = s2; j <= e2; ++j) order.push_back(j);
  for (int j = e3 + 1; j <= src.arity(); ++j) order.push_back(j);
  for (int pos = 0; pos < src.arity(); ++pos) {
    int j = order[pos] - 1;
    bool moved = order[pos] >= s3 && order[pos] <= e3;
    n.lab.g[pos] = moved ? G.mul(G.mul(z, src.lab.g[j]), zi) : src.lab.g[j];
    n.lab.h[pos] = moved ? G.mul(src.lab.h[j], zi) : src.lab.h[j];
    n.att[pos] = src.att[j];
  }
  refresh_slots(q, block);
  return q;
}

Param rename_block(const Param& p, int from, int to) {
  if (from == to) return p;
  if (p.blocks.count(to)) throw MoveError("rename: block id b" + std::to_string(to) + " in use");
  Param q = p;
  auto nh = q.blocks.extract(from);
  nh.key() = to;
  q.blocks.insert(std::move(nh));
  for (auto& s : q.external)
    if (s.block == from) s.block = to;
  for (auto& [id, c] : q.cuts) {
    if (c.a.block == from) c.a.block = to;
    if (c.b.block == from) c.b.block = to;
  }
  for (auto& b : q.closed)
    if (b == from) b = to;
  return q;
}

Param apply_move(const Group& G, const Param& p, const Move& m) {
  switch (m.kind) {
    case MoveKind::Z: return apply_Z(G, p, m.block, m.inverse);
    case MoveKind::B: return apply_Bi(G, p, m.block, m.i, m.inverse);
    case MoveKind::F: return apply_F(G, p, m.cut);
    case MoveKind::Finv: {
      if (!m.inverse) return apply_Finv(G, p, m.block, m.i, m.x);
      const Node& n = need_block(p, m.block);
      if (n.arity() != m.i + 1 || n.att.back().cut < 0)
        throw MoveError("Finv!: b" + std::to_string(m.block) + " does not end in a cut at slot " +
                        std::to_string(m.i + 1));
      if (n.lab.h.back() != m.x) throw MoveError("Finv!: cut label differs from y");
      return apply_F(G, p, n.att.back().cut);
    }
    case MoveKind::P: return apply_P(G, p, m.block, m.x);
    case MoveKind::T: {
      if (m.y >= 0) {
        const Cut& c = need_cut(p, m.cut);
        if (p.node(c.a.block).lab.h[c.a.index - 1] != m.y)
          throw MoveError("T: cut c" + std::to_string(m.cut) + " does not carry " + G.format(m.y));
      }
      return apply_T(G, p, m.cut, m.x);
    }
    case MoveKind::GF: return apply_GF(G, p, m.cut);
    case MoveKind::GB: return apply_GB(G, p, m.block, m.s2, m.e2, m.s3, m.e3);
  }
  throw MoveError("unknown move");
}

Move inverse_move(const Group& G, const Param& p, const Move& m) {
  switch (m.kind) {
    case MoveKind::Z: return Move::z(m.block, !m.inverse);
    case MoveKind::B: return Move::braid(m.block, m.i, !m.inverse);
    case MoveKind::P: return Move::p(m.block, G.inv(m.x));
    case MoveKind::T: {
      const Cut& c = need_cut(p, m.cut);
      return Move::t(m.cut, p.node(c.a.block).lab.h[c.a.index - 1], m.x);
    }
    case MoveKind::F: {
      const Cut& c = need_cut(p, m.cut);
      Slot L, R;
      if (!f_orientation(p, c, L, R)) throw MoveError("F: cut not in position");
      return Move::finv(L.block, L.index - 1, p.node(L.block).lab.h[L.index - 1]);
    }
    case MoveKind::Finv:
      if (m.inverse) return Move::finv(m.block, m.i, m.x);
      return Move::f(p.next_cut_id());
    case MoveKind::GF:
    case MoveKind::GB: break;
  }
  throw MoveError(std::string("no primitive inverse for ") + kind_name(m.kind));
}

bool is_identity_move(const Group& G, const Param& p, const Move& m) {
  if (m.kind == MoveKind::Z) return need_block(p, m.block).arity() <= 1;
  if (m.kind == MoveKind::P) return m.x == G.id();
  if (m.kind == MoveKind::T) {
    const Cut& c = need_cut(p, m.cut);
    return p.node(c.a.block).lab.h[c.a.index - 1] == m.x;
  }
  return false;
}

std::vector<Move> enumerate_moves(const Group& G, const Param& p, const Bounds& bounds) {
  std::vector<Move> out;
  const int q = G.order();
  for (auto& [id, n] : p.blocks)
    if (n.arity() >= 1) out.push_back(Move::z(id));
  for (auto& [id, n] : p.blocks)
    for (int i = 1; i < n.arity(); ++i) out.push_back(Move::braid(id, i));
  for (auto& [cid, c] : p.cuts) {
    Slot L, R;
    if (!f_orientation(p, c, L, R)) continue;
    const Node& a = p.node(L.block);
    const Node& b = p.node(R.block);
    if (!f_applicable(G, a.lab, L.index, b.lab, R.index)) continue;
    if (a.arity() + b.arity() - 2 > bounds.max_block_size) continue;
    out.push_back(Move::f(cid));
  }
  if (p.cut_count() < bounds.max_cuts)
    for (auto& [id, n] : p.blocks)
      for (int k = 1; k < n.arity(); ++k)
        for (Elem y = 0; y < q; ++y) out.push_back(Move::finv(id, k, y));
  for (auto& [id, n] : p.blocks)
    for (Elem x = 0; x < q; ++x) out.push_back(Move::p(id, x));
  for (auto& [cid, c] : p.cuts) {
    Elem ya = p.node(c.a.block).lab.h[c.a.index - 1];
    Elem yb = p.node(c.b.block).lab.h[c.b.index - 1];
    if (ya != yb) continue;
    for (Elem z = 0; z < q; ++z) out.push_back(Move::t(cid, z));
  }
  return out;
}

std::string format_move(const Group& G, const Move& m) {
  std::string s = kind_name(m.kind);
  s += "@";
  switch (m.kind) {
    case MoveKind::Z: s += "b" + std::to_string(m.block); break;
    case MoveKind::B: s += "b" + std::to_string(m.block) + "#" + std::to_string(m.i); break;
    case MoveKind::F:
    case MoveKind::GF: s += "c" + std::to_string(m.cut); break;
    case MoveKind::Finv:
      s += "b" + std::to_string(m.block) + "#k=" + std::to_string(m.i) + ",y=" + G.format(m.x);
      break;
    case MoveKind::P: s += "b" + std::to_string(m.block) + ",x=" + G.format(m.x); break;
    case MoveKind::T:
      s += "c" + std::to_string(m.cut) + ",z=" + G.format(m.x);
      if (m.y >= 0) s += ",y=" + G.format(m.y);
      break;
    case MoveKind::GB:
      s += "b" + std::to_string(m.block) + ",I2=" + std::to_string(m.s2) + ".." + std::to_string(m.e2) +
           ",I3=" + std::to_string(m.s3) + ".." + std::to_string(m.e3);
      break;
  }
  if (m.inverse) s += "!";
  return s;
}

namespace {

std::string strip(const std::string& s) {
  std::string r;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) r += c;
  return r;
}

std::vector<std::string> split_params(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int to_int(const std::string& s, const std::string& ctx) {
  try {
    size_t pos;
    int v = std::stoi(s, &pos);
    if (pos == s.size()) return v;
  } catch (...) {
  }
  throw MoveError("bad number '" + s + "' in '" + ctx + "'");
}

std::pair<int, int> to_range(const std::string& s, const std::string& ctx) {
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    int v = to_int(s, ctx);
    return {v, v};
  }
  return {to_int(s.substr(0, dots), ctx), to_int(s.substr(dots + 2), ctx)};
}

}  // namespace

Move parse_move(const Group& G, const std::string& text) {
  std::string s = strip(text);
  if (s.empty()) throw MoveError("empty move");
  bool inv = false;
  if (s.back() == '!') {
    inv = true;
    s.pop_back();
  }
  auto at = s.find('@');
  if (at == std::string::npos) throw MoveError("move '" + text + "' lacks '@'");
  std::string kind = s.substr(0, at), rest = s.substr(at + 1);
  if (!kind.empty() && kind.back() == '!') {  // "Z!@b1" spelled with the mark on the kind
    if (inv) throw MoveError("move '" + text + "' has two inverse marks");
    inv = true;
    kind.pop_back();
  }
  auto sep = rest.find_first_of("#,");
  std::string target = rest.substr(0, sep);
  std::vector<std::string> params;
  if (sep != std::string::npos) params = split_params(rest.substr(sep + 1));
  auto id_of = [&](char prefix) {
    if (target.empty() || target[0] != prefix)
      throw MoveError("move '" + text + "' needs a " + (prefix == 'b' ? "block" : "cut") + " target");
    return to_int(target.substr(1), text);
  };
  auto param = [&](const std::string& key) -> std::string {
    for (auto& p : params)
      if (p.rfind(key + "=", 0) == 0) return p.substr(key.size() + 1);
    return {};
  };
  auto need = [&](const std::string& key) {
    std::string v = param(key);
    if (v.empty()) throw MoveError("move '" + text + "' needs " + key + "=");
    return v;
  };
  auto elem = [&](const std::string& v) {
    try {
      return G.parse(v);
    } catch (const GroupError& e) {
      throw MoveError(std::string(e.what()) + " in '" + text + "'");
    }
  };
  Move m;
  if (kind == "Z") {
    m = Move::z(id_of('b'), inv);
  } else if (kind == "B") {
    if (params.size() != 1) throw MoveError("move '" + text + "' needs a slot index after '#'");
    m = Move::braid(id_of('b'), to_int(params[0], text), inv);
  } else if (kind == "F") {
    if (inv) throw MoveError("'" + text + "': undo F with Finv@<block>#k=..,y=..");
    m = Move::f(id_of('c'));
  } else if (kind == "Finv") {
    m = Move::finv(id_of('b'), to_int(need("k"), text), elem(need("y")));
    m.inverse = inv;
  } else if (kind == "P") {
    Elem x = elem(need("x"));
    m = Move::p(id_of('b'), inv ? G.inv(x) : x);
  } else if (kind == "T") {
    Elem z = elem(need("z"));
    std::string yv = param("y");
    Elem y = yv.empty() ? -1 : elem(yv);
    if (inv) {
      if (y < 0) throw MoveError("'" + text + "': inverse T needs y=");
      std::swap(y, z);
    }
    m = Move::t(id_of('c'), z, y);
  } else if (kind == "GF") {
    if (inv) throw MoveError("'" + text + "': GF has no inverse form");
    m = Move::gf(id_of('c'));
  } else if (kind == "GB") {
    if (inv) throw MoveError("'" + text + "': GB has no inverse form");
    auto [s2, e2] = to_range(need("I2"), text);
    auto [s3, e3] = to_range(need("I3"), text);
    m = Move::gb(id_of('b'), s2, e2, s3, e3);
  } else {
    throw MoveError("unknown move kind '" + kind + "'");
  }
  return m;
}

std::vector<Move> parse_path(const Group& G, const std::string& text) {
  std::vector<Move> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t semi = text.find(';', start);
    std::string piece = text.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
    if (!strip(piece).empty()) out.push_back(parse_move(G, piece));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

std::string format_path(const Group& G, const std::vector<Move>& path) {
  std::string s;
  for (size_t i = 0; i < path.size(); ++i) s += (i ? ";" : "") + format_move(G, path[i]);
  return s;
}

}  // namespace gcov
