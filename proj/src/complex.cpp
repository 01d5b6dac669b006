#include "gcov/complex.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>

namespace gcov {

int TwoComplex::find(const std::string& key) const {
  auto it = index_.find(key);
  return it == index_.end() ? -1 : it->second;
}

int TwoComplex::add_vertex(const Param& canonical_p, const std::string& key) {
  auto [it, fresh] = index_.emplace(key, vertex_count());
  if (fresh) {
    keys_.push_back(key);
    params_.push_back(canonical_p);
  }
  return it->second;
}

namespace {

// F at the block's last slot, spelled as F on that cut
Move normal_move(const Param& p, const Move& m) {
  Move r = m;
  if (r.kind == MoveKind::T) r.y = -1;
  if (r.kind == MoveKind::Finv && r.inverse) {
    const Node& n = p.node(r.block);
    if (n.arity() == 0 || n.att.back().cut < 0) throw MoveError("Finv!: last slot of b" + std::to_string(r.block) + " is not a cut");
    r = Move::f(n.att.back().cut);
  }
  if (r.kind != MoveKind::Finv) r.i = r.kind == MoveKind::B ? r.i : 0;
  return r;
}

}  // namespace

std::string TwoComplex::descriptor(int v, const Move& m) const {
  std::ostringstream o;
  o << v << '|' << static_cast<int>(m.kind) << '|' << m.inverse << '|' << m.block << '|' << m.cut << '|' << m.i
    << '|' << m.x;
  return o.str();
}

int TwoComplex::step(int v, const Move& move, int* next) {
  const Param& p = params_[v];
  if (is_identity_move(*G_, p, move)) {
    if (next) *next = v;
    return 0;
  }
  Move m = normal_move(p, move);
  std::string d1 = descriptor(v, m);
  auto it = edge_index_.find(d1);
  if (it != edge_index_.end()) {
    int e = it->second;
    if (next) *next = e > 0 ? edges_[e - 1].to : edges_[-e - 1].from;
    return e;
  }
  Param raw = apply_move(*G_, p, m);
  Move back = inverse_move(*G_, p, m);
  Canonical c = canonicalize(raw);
  int w = add_vertex(c.param, c.key);
  Move mb = normal_move(params_[w], relabel_move(back, c));
  std::string d2 = descriptor(w, mb);
  int e = edge_count() + 1;
  edges_.push_back({v, w, m});
  edge_index_.emplace(d1, e);
  edge_index_.emplace(d2, -e);
  if (next) *next = w;
  return e;
}

bool TwoComplex::add_cell(Cell c) {
  Word w = normal_cyclic_form(c.boundary);
  if (w.empty()) return false;
  if (!cell_words_.insert(w).second) return false;
  cells_.push_back(std::move(c));
  return true;
}

TwoComplex TwoComplex::without(const std::set<MoveKind>& kinds) const {
  TwoComplex out(*G_);
  out.keys_ = keys_;
  out.params_ = params_;
  out.index_ = index_;
  out.bfs_vertices_ = bfs_vertices_;
  std::vector<int> renum(edges_.size() + 1, 0);
  for (size_t e = 0; e < edges_.size(); ++e) {
    if (kinds.count(edges_[e].move.kind)) continue;
    out.edges_.push_back(edges_[e]);
    renum[e + 1] = out.edge_count();
  }
  for (auto& [d, e] : edge_index_) {
    int ne = renum[std::abs(e)];
    if (ne) out.edge_index_.emplace(d, e > 0 ? ne : -ne);
  }
  for (auto& c : cells_) {
    Cell nc{c.schema, c.base, {}};
    bool keep = true;
    for (int e : c.boundary) {
      int ne = renum[std::abs(e)];
      if (!ne) {
        keep = false;
        break;
      }
      nc.boundary.push_back(e > 0 ? ne : -ne);
    }
    if (keep) out.add_cell(std::move(nc));
  }
  return out;
}

std::string TwoComplex::dump() const {
  std::ostringstream o;
  for (int v = 0; v < vertex_count(); ++v) {
    std::string text = to_text(*G_, params_[v]);
    std::replace(text.begin(), text.end(), '\n', ';');
    o << "V " << key_hex(keys_[v]) << " " << text << "\n";
  }
  for (auto& e : edges_) {
    std::string f = format_move(*G_, e.move);
    auto at = f.find('@');
    o << "E " << f.substr(0, at) << " " << f.substr(at + 1) << " " << key_hex(keys_[e.from]) << " "
      << key_hex(keys_[e.to]) << "\n";
  }
  for (auto& c : cells_) {
    o << "C " << c.schema << " " << key_hex(keys_[c.base]);
    for (size_t i = 0; i < c.boundary.size(); ++i) o << (i ? "," : " ") << c.boundary[i];
    o << "\n";
  }
  return o.str();
}

namespace {

void bfs(TwoComplex& c, const Bounds& bounds) {
  const Group& G = c.group();
  for (int v = 0; v < c.vertex_count(); ++v) {
    // copy: step() may grow the vertex store
    const Param p = c.vertex(v);
    for (auto& m : enumerate_moves(G, p, bounds)) {
      c.step(v, m);
      if (c.vertex_count() > bounds.vertex_budget)
        throw ComplexError("vertex budget of " + std::to_string(bounds.vertex_budget) + " exceeded");
    }
  }
  c.mark_bfs_done();
}

int seed_into(TwoComplex& c, const Group& G, const TargetCover& t) {
  if (!realizable(G, t)) throw ComplexError("target is not realizable");
  Canonical s = canonicalize(seed_parameterization(G, t));
  return c.add_vertex(s.param, s.key);
}

// Highest cut count reached along a loop of primitive moves.
int loop_peak_cuts(int start, const std::vector<Move>& loop) {
  int cur = start, peak = start;
  for (auto& m : loop) {
    if (m.kind == MoveKind::Finv && !m.inverse) ++cur;
    if (m.kind == MoveKind::F || (m.kind == MoveKind::Finv && m.inverse)) --cur;
    peak = std::max(peak, cur);
  }
  return peak;
}

}  // namespace

TwoComplex build_graph(const Group& G, const TargetCover& t, const Bounds& bounds) {
  TwoComplex c(G);
  seed_into(c, G, t);
  bfs(c, bounds);
  return c;
}

TwoComplex build_bounded(const Group& G, const TargetCover& t, const Bounds& bounds, BuildStats* stats) {
  TwoComplex c = build_graph(G, t, bounds);
  BuildStats local;
  BuildStats& st = stats ? *stats : local;
  const int limit = bounds.max_cuts + bounds.slack;
  const int n = c.bfs_vertex_count();
  for (int v = 0; v < n; ++v) {
    const Param p = c.vertex(v);
    for (auto& inst : enumerate_all_instances(G, p, bounds)) {
      ++st.instances;
      if (loop_peak_cuts(p.cut_count(), inst.loop) > limit) {
        ++st.cells_out_of_bounds;
        continue;
      }
      Cell cell{inst.schema, v, {}};
      int cur = v;
      bool ok = true;
      for (auto& m : inst.loop) {
        try {
          int e = c.step(cur, m, &cur);
          if (e) cell.boundary.push_back(e);
        } catch (const std::exception&) {
          ok = false;
          break;
        }
      }
      if (!ok || cur != v) {
        ++st.cells_failed;
        continue;
      }
      if (!c.add_cell(std::move(cell))) ++st.cells_duplicate;
      if (c.vertex_count() > bounds.vertex_budget)
        throw ComplexError("vertex budget of " + std::to_string(bounds.vertex_budget) + " exceeded");
    }
  }
  return c;
}

Connectivity check_connected(const TwoComplex& c, const std::set<std::string>& all_valid) {
  Connectivity r;
  std::vector<int> parent(c.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int e = 0; e < c.edge_count(); ++e) parent[find(c.edge(e).from)] = find(c.edge(e).to);
  for (int v = 0; v < c.vertex_count(); ++v) r.components += find(v) == v;
  for (auto& k : all_valid) {
    int v = c.find(k);
    if (v < 0 || find(v) != find(c.basepoint())) r.unreached.push_back(k);
  }
  r.connected = r.unreached.empty() && r.components <= 1;
  return r;
}

Presentation pi1_presentation(const TwoComplex& c) {
  const int nv = c.vertex_count(), ne = c.edge_count();
  std::vector<std::vector<int>> adj(nv);
  for (int e = 0; e < ne; ++e) {
    adj[c.edge(e).from].push_back(e);
    adj[c.edge(e).to].push_back(e);
  }
  std::vector<char> seen(nv, 0), tree(ne, 0);
  std::deque<int> q{c.basepoint()};
  if (nv) seen[c.basepoint()] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int e : adj[v]) {
      int w = c.edge(e).from == v ? c.edge(e).to : c.edge(e).from;
      if (seen[w]) continue;
      seen[w] = 1;
      tree[e] = 1;
      q.push_back(w);
    }
  }
  for (int v = 0; v < nv; ++v)
    if (!seen[v]) throw ComplexError("complex is disconnected; no fundamental group presentation");
  Presentation p;
  std::vector<int> gen(ne, 0);
  for (int e = 0; e < ne; ++e)
    if (!tree[e]) gen[e] = ++p.generators;
  for (int k = 0; k < c.cell_count(); ++k) {
    Word w;
    for (int s : c.cell(k).boundary) {
      int g = gen[std::abs(s) - 1];
      if (g) w.push_back(s > 0 ? g : -g);
    }
    w = cyclic_reduce(w);
    if (!w.empty()) p.relators.push_back(std::move(w));
  }
  return p;
}

// ---------------------------------------------------------------------------
// direct enumeration of valid vertices

namespace {

// One component's block-tree shape: arities, cuts (by block index and
// slot), and boundary -> (block, slot); block 0 holds the first boundary.
struct Shape {
  std::vector<int> arity;
  std::vector<std::pair<Slot, Slot>> cuts;  // block fields are indices into arity
  std::vector<Slot> ext;
};

void for_each_composition(int total, int parts, int lo, int hi, std::vector<int>& cur,
                          const std::function<void(const std::vector<int>&)>& fn) {
  if (parts == 0) {
    if (total == 0) fn(cur);
    return;
  }
  for (int a = lo; a <= std::min(hi, total - lo * (parts - 1)); ++a) {
    cur.push_back(a);
    for_each_composition(total - a, parts - 1, lo, hi, cur, fn);
    cur.pop_back();
  }
}

// all labelled trees on n nodes as edge lists (Pruefer sequences)
std::vector<std::vector<std::pair<int, int>>> labelled_trees(int n) {
  std::vector<std::vector<std::pair<int, int>>> out;
  if (n <= 1) {
    out.push_back({});
    return out;
  }
  if (n == 2) {
    out.push_back({{0, 1}});
    return out;
  }
  std::vector<int> seq(n - 2, 0);
  while (true) {
    std::vector<int> deg(n, 1);
    for (int x : seq) ++deg[x];
    std::vector<std::pair<int, int>> edges;
    std::vector<int> d = deg;
    for (int x : seq) {
      for (int leaf = 0; leaf < n; ++leaf)
        if (d[leaf] == 1) {
          edges.push_back({leaf, x});
          --d[leaf];
          --d[x];
          break;
        }
    }
    int u = -1, w = -1;
    for (int i = 0; i < n; ++i)
      if (d[i] == 1) (u < 0 ? u : w) = i;
    edges.push_back({u, w});
    out.push_back(edges);
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
  return out;
}

// ordered choices of `k` distinct slots out of 1..n
void for_each_injection(int k, int n, std::vector<int>& cur, std::vector<char>& used,
                        const std::function<void(const std::vector<int>&)>& fn) {
  if (static_cast<int>(cur.size()) == k) {
    fn(cur);
    return;
  }
  for (int s = 1; s <= n; ++s) {
    if (used[s]) continue;
    used[s] = 1;
    cur.push_back(s);
    for_each_injection(k, n, cur, used, fn);
    cur.pop_back();
    used[s] = 0;
  }
}

std::vector<Shape> component_shapes(int n, int k, int max_block) {
  std::vector<Shape> out;
  if (n == 0) {
    if (k == 0) out.push_back(Shape{{0}, {}, {}});
    return out;
  }
  if (n == 1) {
    if (k == 0 && max_block >= 1) out.push_back(Shape{{1}, {}, {{0, 1}}});
    return out;
  }
  const int B = k + 1;
  std::vector<int> cur;
  auto trees = labelled_trees(B);
  for_each_composition(n + 2 * k, B, 2, max_block, cur, [&](const std::vector<int>& ar) {
    for (auto& tree : trees) {
      std::vector<std::vector<int>> inc(B);  // cut indices per block
      for (int c = 0; c < k; ++c) {
        inc[tree[c].first].push_back(c);
        inc[tree[c].second].push_back(c);
      }
      bool fits = true;
      for (int b = 0; b < B; ++b) fits = fits && static_cast<int>(inc[b].size()) <= ar[b];
      if (!fits) continue;
      // per block: slots for its incident cuts; then boundaries on the rest
      std::vector<std::vector<int>> slot_of(B);
      std::function<void(int)> place = [&](int b) {
        if (b == B) {
          std::vector<Slot> free;
          for (int x = 0; x < B; ++x) {
            std::vector<char> taken(ar[x] + 1, 0);
            for (int s : slot_of[x]) taken[s] = 1;
            for (int s = 1; s <= ar[x]; ++s)
              if (!taken[s]) free.push_back({x, s});
          }
          std::vector<int> perm(n);
          std::iota(perm.begin(), perm.end(), 0);
          do {
            Shape sh;
            sh.arity = ar;
            for (int c = 0; c < k; ++c) {
              int a = tree[c].first, bb = tree[c].second;
              auto pos = [&](int blk) {
                auto& v = inc[blk];
                int idx = static_cast<int>(std::find(v.begin(), v.end(), c) - v.begin());
                return Slot{blk, slot_of[blk][idx]};
              };
              sh.cuts.push_back({pos(a), pos(bb)});
            }
            sh.ext.resize(n);
            for (int e = 0; e < n; ++e) sh.ext[e] = free[perm[e]];
            out.push_back(std::move(sh));
          } while (std::next_permutation(perm.begin(), perm.end()));
          return;
        }
        std::vector<int> chosen;
        std::vector<char> used(ar[b] + 1, 0);
        for_each_injection(static_cast<int>(inc[b].size()), ar[b], chosen, used, [&](const std::vector<int>& s) {
          slot_of[b] = s;
          place(b + 1);
        });
      };
      place(0);
    }
  });
  return out;
}

// A whole parameterization skeleton from per-component shapes (labels identity).
Param assemble(const Group& G, const TargetCover& t, const std::vector<const Shape*>& parts) {
  Param p;
  int next_block = 1, next_cut = 1, first = 0;
  for (int c = 0; c < t.component_count(); ++c) {
    const Shape& s = *parts[c];
    const int n = static_cast<int>(t.components[c].size());
    p.comp_size.push_back(n);
    p.global_lift.push_back(G.id());
    p.closed.push_back(n == 0 ? next_block : -1);
    std::vector<int> id(s.arity.size());
    for (size_t b = 0; b < s.arity.size(); ++b) {
      id[b] = next_block++;
      Node nd;
      nd.lab.g.assign(s.arity[b], G.id());
      nd.lab.h.assign(s.arity[b], G.id());
      nd.att.assign(s.arity[b], Att{});
      p.blocks.emplace(id[b], std::move(nd));
    }
    for (auto& [a, b] : s.cuts) {
      int cid = next_cut++;
      Slot sa{id[a.block], a.index}, sb{id[b.block], b.index};
      p.cuts[cid] = Cut{sa, sb};
      p.node(sa.block).att[sa.index - 1].cut = cid;
      p.node(sb.block).att[sb.index - 1].cut = cid;
    }
    for (int e = 0; e < n; ++e) {
      Slot s2{id[s.ext[e].block], s.ext[e].index};
      p.external.push_back(s2);
      p.node(s2.block).att[s2.index - 1].ext = first + e;
    }
    first += n;
  }
  return p;
}

// Labels one component of skeleton q (canonical ids) in every way that lands
// in the reference class; calls fn after each complete labelling of it.
void label_component(const Group& G, const TargetCover& t, const CoverInvariant& ref, int comp, Param& q,
                     const std::function<void()>& fn) {
  const int n = q.comp_size[comp];
  if (n == 0) {
    for (Elem x = 0; x < G.order(); ++x) {
      q.global_lift[comp] = x;
      fn();
    }
    q.global_lift[comp] = G.id();
    return;
  }
  // DFS tree from the root block
  int root = q.root_block(comp);
  std::vector<int> order{root};
  std::map<int, int> parent_cut;  // child block -> cut
  for (size_t i = 0; i < order.size(); ++i) {
    int b = order[i];
    for (auto& a : q.node(b).att) {
      if (a.cut < 0) continue;
      auto pc = parent_cut.find(b);
      if (pc != parent_cut.end() && pc->second == a.cut) continue;
      int child = q.far_side(a.cut, b).block;
      parent_cut[child] = a.cut;
      order.push_back(child);
    }
  }
  const int B = static_cast<int>(order.size());
  const int first = t.first_boundary(comp);
  const int q_order = G.order();
  // variables: x, F for order[1..], y for each child's parent cut
  std::vector<Elem> F(B, G.id()), y(B, G.id());
  std::map<int, int> pos;
  for (int i = 0; i < B; ++i) pos[order[i]] = i;
  std::vector<int> digits(2 * (B - 1) + 1, 0);
  while (true) {
    Elem x = digits[0];
    for (int i = 1; i < B; ++i) {
      F[i] = digits[i];
      y[i] = digits[B - 1 + i];
    }
    // h labels
    for (int e = first; e < first + n; ++e) {
      const Slot& s = q.external[e];
      Node& nd = q.node(s.block);
      Elem hv = G.mul(G.mul(ref.components[comp][e - first].iota, x), G.inv(F[pos[s.block]]));
      nd.lab.h[s.index - 1] = hv;
      nd.lab.g[s.index - 1] = G.mul(G.mul(G.inv(hv), G.inv(t.monodromy(e))), hv);
    }
    for (int i = 1; i < B; ++i) {
      int child = order[i];
      const Slot& cs = q.side(parent_cut[child], child);
      const Slot& ps = q.far_side(parent_cut[child], child);
      Elem yp = y[i];
      Elem yc = G.mul(G.mul(yp, F[pos[ps.block]]), G.inv(F[i]));
      q.node(ps.block).lab.h[ps.index - 1] = yp;
      q.node(cs.block).lab.h[cs.index - 1] = yc;
    }
    // g labels of cut slots, leaves first
    bool ok = true;
    for (int i = B - 1; i >= 0 && ok; --i) {
      Node& nd = q.node(order[i]);
      if (i == 0) {
        Elem prod = G.id();
        for (Elem g : nd.lab.g) prod = G.mul(prod, g);
        ok = prod == G.id();
        break;
      }
      const Slot& cs = q.side(parent_cut[order[i]], order[i]);
      const int j = cs.index - 1;
      Elem pre = G.id(), post = G.id();
      for (int s = 0; s < j; ++s) pre = G.mul(pre, nd.lab.g[s]);
      for (int s = j + 1; s < nd.arity(); ++s) post = G.mul(post, nd.lab.g[s]);
      Elem gc = G.mul(G.inv(pre), G.inv(post));  // pre * gc * post = 1
      nd.lab.g[j] = gc;
      Elem hc = nd.lab.h[j];
      Elem mc = G.mul(G.mul(hc, G.inv(gc)), G.inv(hc));
      const Slot& ps = q.far_side(parent_cut[order[i]], order[i]);
      Elem hp = q.node(ps.block).lab.h[ps.index - 1];
      // m_parent = mc^-1, g = h^-1 m^-1 h
      q.node(ps.block).lab.g[ps.index - 1] = G.mul(G.mul(G.inv(hp), mc), hp);
    }
    if (ok) fn();
    size_t d = 0;
    while (d < digits.size() && digits[d] == q_order - 1) digits[d++] = 0;
    if (d == digits.size()) break;
    ++digits[d];
  }
}

}  // namespace

std::set<std::string> enumerate_valid_vertices(const Group& G, const TargetCover& t, const Bounds& bounds) {
  if (!realizable(G, t)) throw ComplexError("target is not realizable");
  const CoverInvariant ref = cover_invariant(G, seed_parameterization(G, t), t);
  const int C = t.component_count();
  // shapes per component and cut count, deduplicated by skeleton key
  std::vector<std::vector<std::vector<Shape>>> shapes(C);
  for (int c = 0; c < C; ++c)
    for (int k = 0; k <= bounds.max_cuts; ++k)
      shapes[c].push_back(component_shapes(static_cast<int>(t.components[c].size()), k, bounds.max_block_size));
  std::set<std::string> out;
  std::set<std::string> skeletons;
  std::vector<const Shape*> pick(C, nullptr);
  std::function<void(int, int)> rec = [&](int c, int cuts_left) {
    if (c == C) {
      Param raw = assemble(G, t, pick);
      Canonical sk = canonicalize(raw);
      if (!skeletons.insert(sk.key).second) return;
      Param q = sk.param;
      std::function<void(int)> lab = [&](int comp) {
        if (comp == C) {
          if (check_structure(G, q, &t).ok()) out.insert(canonical_key(q));
          return;
        }
        label_component(G, t, ref, comp, q, [&] { lab(comp + 1); });
      };
      lab(0);
      return;
    }
    for (int k = 0; k <= cuts_left; ++k)
      for (auto& s : shapes[c][k]) {
        pick[c] = &s;
        rec(c + 1, cuts_left - k);
      }
  };
  rec(0, bounds.max_cuts);
  if (static_cast<long>(out.size()) > bounds.vertex_budget)
    throw ComplexError("valid vertex enumeration exceeded the vertex budget");
  return out;
}

std::vector<Param> cover_labelings(const Group& G, const TargetCover& t, const Param& shape) {
  if (!realizable(G, t)) throw ComplexError("target is not realizable");
  const CoverInvariant ref = cover_invariant(G, seed_parameterization(G, t), t);
  Param q = canonicalize(shape).param;
  for (auto& [id, n] : q.blocks) {
    std::fill(n.lab.g.begin(), n.lab.g.end(), G.id());
    std::fill(n.lab.h.begin(), n.lab.h.end(), G.id());
  }
  std::fill(q.global_lift.begin(), q.global_lift.end(), G.id());
  const int C = t.component_count();
  std::map<std::string, Param> out;
  std::function<void(int)> lab = [&](int comp) {
    if (comp == C) {
      if (check_structure(G, q, &t).ok()) {
        Canonical c = canonicalize(q);
        out.emplace(c.key, std::move(c.param));
      }
      return;
    }
    label_component(G, t, ref, comp, q, [&] { lab(comp + 1); });
  };
  lab(0);
  std::vector<Param> v;
  for (auto& [k, p] : out) v.push_back(std::move(p));
  return v;
}

}  // namespace gcov
