#include "gcov/param.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

namespace gcov {

int TargetCover::boundary_count() const {
  int n = 0;
  for (auto& c : components) n += static_cast<int>(c.size());
  return n;
}

int TargetCover::first_boundary(int comp) const {
  int n = 0;
  for (int i = 0; i < comp; ++i) n += static_cast<int>(components[i].size());
  return n;
}

int TargetCover::component_of(int boundary) const {
  for (int c = 0; c < component_count(); ++c) {
    int sz = static_cast<int>(components[c].size());
    if (boundary < sz) return c;
    boundary -= sz;
  }
  throw ParamError("boundary index out of range");
}

Elem TargetCover::monodromy(int boundary) const {
  int c = component_of(boundary);
  return components[c][boundary - first_boundary(c)];
}

const Node& Param::node(int id) const {
  auto it = blocks.find(id);
  if (it == blocks.end()) throw ParamError("no block b" + std::to_string(id));
  return it->second;
}

Node& Param::node(int id) {
  auto it = blocks.find(id);
  if (it == blocks.end()) throw ParamError("no block b" + std::to_string(id));
  return it->second;
}

int Param::first_boundary(int comp) const {
  int n = 0;
  for (int i = 0; i < comp; ++i) n += comp_size[i];
  return n;
}

int Param::root_block(int comp) const {
  if (comp_size[comp] == 0) return closed[comp];
  return external.at(first_boundary(comp)).block;
}

const Slot& Param::side(int c, int block) const {
  auto it = cuts.find(c);
  if (it == cuts.end()) throw ParamError("no cut c" + std::to_string(c));
  if (it->second.a.block == block) return it->second.a;
  if (it->second.b.block == block) return it->second.b;
  throw ParamError("cut c" + std::to_string(c) + " does not touch b" + std::to_string(block));
}

const Slot& Param::far_side(int c, int block) const {
  auto it = cuts.find(c);
  if (it == cuts.end()) throw ParamError("no cut c" + std::to_string(c));
  if (it->second.a.block == block) return it->second.b;
  if (it->second.b.block == block) return it->second.a;
  throw ParamError("cut c" + std::to_string(c) + " does not touch b" + std::to_string(block));
}

void refresh_slots(Param& p, int block) {
  Node& n = p.node(block);
  for (int i = 0; i < n.arity(); ++i) {
    const Att& a = n.att[i];
    Slot s{block, i + 1};
    if (a.ext >= 0) {
      p.external.at(a.ext) = s;
    } else if (a.cut >= 0) {
      Cut& c = p.cuts.at(a.cut);
      if (c.a == s || c.b == s) continue;
      // a cut never joins a block to itself: a side already on this block was
      // rotated; otherwise the side whose slot no longer carries the cut moved here
      auto stale = [&](const Slot& side) {
        auto it = p.blocks.find(side.block);
        if (it == p.blocks.end() || side.index < 1 || side.index > it->second.arity()) return true;
        return it->second.att[side.index - 1].cut != a.cut;
      };
      if (c.a.block == block)
        c.a = s;
      else if (c.b.block == block)
        c.b = s;
      else if (stale(c.a))
        c.a = s;
      else
        c.b = s;
    }
  }
}

std::map<int, int> block_components(const Param& p) {
  std::map<int, int> comp;
  for (int c = 0; c < p.component_count(); ++c) {
    int root = p.root_block(c);
    if (root < 0 || !p.blocks.count(root)) continue;
    std::vector<int> stack{root};
    comp[root] = c;
    while (!stack.empty()) {
      int b = stack.back();
      stack.pop_back();
      for (auto& a : p.node(b).att) {
        if (a.cut < 0) continue;
        int o = p.far_side(a.cut, b).block;
        if (!comp.count(o)) {
          comp[o] = c;
          stack.push_back(o);
        }
      }
    }
  }
  return comp;
}

namespace {

void put(std::string& k, int v) {
  k += static_cast<char>(v & 0xff);
  k += static_cast<char>((v >> 8) & 0xff);
}

}  // namespace

Canonical canonicalize(const Param& p) {
  Canonical out;
  auto& bm = out.block_map;
  auto& cm = out.cut_map;
  std::vector<int> order;
  std::function<void(int)> visit = [&](int b) {
    bm[b] = static_cast<int>(order.size()) + 1;
    order.push_back(b);
    const Node& n = p.node(b);
    for (auto& a : n.att) {
      if (a.cut < 0 || cm.count(a.cut)) continue;
      cm[a.cut] = static_cast<int>(cm.size()) + 1;
      int o = p.far_side(a.cut, b).block;
      if (!bm.count(o)) visit(o);
    }
  };
  for (int c = 0; c < p.component_count(); ++c) {
    int r = p.root_block(c);
    if (r >= 0 && p.blocks.count(r) && !bm.count(r)) visit(r);
  }
  for (auto& [id, n] : p.blocks)  // stray blocks (invalid input) go last
    if (!bm.count(id)) visit(id);
  for (auto& [id, c] : p.cuts)
    if (!cm.count(id)) cm[id] = static_cast<int>(cm.size()) + 1;

  Param& q = out.param;
  q.comp_size = p.comp_size;
  q.global_lift = p.global_lift;
  q.closed.resize(p.closed.size(), -1);
  for (size_t c = 0; c < p.closed.size(); ++c)
    if (p.closed[c] >= 0 && bm.count(p.closed[c])) q.closed[c] = bm.at(p.closed[c]);
  q.external.resize(p.external.size());
  for (size_t e = 0; e < p.external.size(); ++e) {
    auto it = bm.find(p.external[e].block);
    q.external[e] = {it == bm.end() ? -1 : it->second, p.external[e].index};
  }
  std::string& key = out.key;
  put(key, static_cast<int>(order.size()));
  for (int b : order) {
    Node n = p.node(b);
    for (auto& a : n.att)
      if (a.cut >= 0) a.cut = cm.at(a.cut);
    put(key, n.arity());
    for (int i = 0; i < n.arity(); ++i) {
      put(key, n.lab.g[i]);
      put(key, n.lab.h[i]);
      const Att& a = n.att[i];
      if (a.ext >= 0) {
        put(key, 0);
        put(key, a.ext);
      } else if (a.cut >= 0) {
        put(key, 1);
        put(key, a.cut);
      } else {
        put(key, 2);
        put(key, 0);
      }
    }
    q.blocks.emplace(bm.at(b), std::move(n));
  }
  for (auto& [id, c] : p.cuts) {
    Slot a{bm.at(c.a.block), c.a.index}, b{bm.at(c.b.block), c.b.index};
    if (b.block < a.block) std::swap(a, b);
    q.cuts.emplace(cm.at(id), Cut{a, b});
  }
  for (size_t c = 0; c < p.closed.size(); ++c)
    if (p.closed[c] >= 0) put(key, p.global_lift.at(c));
  return out;
}

std::string canonical_key(const Param& p) { return canonicalize(p).key; }

std::string key_hex(const std::string& key) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(key.size() * 2);
  for (unsigned char c : key) {
    s += digits[c >> 4];
    s += digits[c & 15];
  }
  return s;
}

Report check_structure(const Group& G, const Param& p, const TargetCover* t) {
  Report r;
  auto bad = [&](std::string s) { r.problems.push_back(std::move(s)); };
  int nb = 0;
  for (int s : p.comp_size) nb += s;
  if (t) {
    if (p.component_count() != t->component_count())
      bad("component count differs from target");
    else
      for (int c = 0; c < t->component_count(); ++c)
        if (p.comp_size[c] != static_cast<int>(t->components[c].size()))
          bad("component " + std::to_string(c + 1) + " has the wrong number of boundaries");
  }
  if (static_cast<int>(p.external.size()) != nb) bad("external map has the wrong size");
  if (p.closed.size() != p.comp_size.size() || p.global_lift.size() != p.comp_size.size())
    bad("closed-component tables have the wrong size");
  if (!r.ok()) return r;

  for (auto& [id, n] : p.blocks) {
    std::string name = "b" + std::to_string(id);
    try {
      check_block(G, n.lab);
    } catch (const BlockError& e) {
      bad(name + ": " + e.what());
    }
    if (static_cast<int>(n.att.size()) != n.arity()) {
      bad(name + ": attachment list has the wrong length");
      continue;
    }
    for (int i = 0; i < n.arity(); ++i) {
      const Att& a = n.att[i];
      std::string sl = name + "." + std::to_string(i + 1);
      if ((a.ext >= 0) == (a.cut >= 0)) {
        bad(sl + " must carry exactly one cut or external boundary");
      } else if (a.ext >= 0) {
        if (a.ext >= nb || p.external[a.ext] != Slot{id, i + 1})
          bad(sl + " claims boundary " + std::to_string(a.ext + 1) + " inconsistently");
      } else {
        auto it = p.cuts.find(a.cut);
        if (it == p.cuts.end() || (it->second.a != Slot{id, i + 1} && it->second.b != Slot{id, i + 1}))
          bad(sl + " claims cut c" + std::to_string(a.cut) + " inconsistently");
      }
    }
  }
  for (int e = 0; e < nb; ++e) {
    const Slot& s = p.external[e];
    auto it = p.blocks.find(s.block);
    if (it == p.blocks.end() || s.index < 1 || s.index > it->second.arity() ||
        it->second.att[s.index - 1].ext != e)
      bad("boundary " + std::to_string(e + 1) + " is not attached to a valid slot");
  }
  for (auto& [id, c] : p.cuts) {
    std::string name = "c" + std::to_string(id);
    auto ok_side = [&](const Slot& s) {
      auto it = p.blocks.find(s.block);
      return it != p.blocks.end() && s.index >= 1 && s.index <= it->second.arity() &&
             static_cast<int>(it->second.att.size()) == it->second.arity() &&
             it->second.att[s.index - 1].cut == id;
    };
    if (!ok_side(c.a) || !ok_side(c.b)) {
      bad(name + " references slots that do not point back to it");
      continue;
    }
    if (c.a.block == c.b.block) {
      bad(name + " joins a block to itself");
      continue;
    }
    if (!glue_admissible(G, p.node(c.a.block).lab, c.a.index, p.node(c.b.block).lab, c.b.index))
      bad(name + ": monodromies across the cut are not inverse");
  }
  if (!r.ok()) return r;

  // forest shape
  std::map<int, int> parent;
  for (auto& [id, n] : p.blocks) parent[id] = id;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto& [id, c] : p.cuts) {
    int a = find(c.a.block), b = find(c.b.block);
    if (a == b)
      bad("c" + std::to_string(id) + " closes a cycle (positive genus)");
    else
      parent[a] = b;
  }
  std::map<int, std::set<int>> comps_of_tree;
  for (int c = 0; c < p.component_count(); ++c) {
    if (p.comp_size[c] == 0) {
      int b = p.closed[c];
      if (!p.blocks.count(b)) {
        bad("closed component " + std::to_string(c + 1) + " has no block");
        continue;
      }
      if (p.node(b).arity() != 0) bad("closed component " + std::to_string(c + 1) + " needs an S0 block");
      comps_of_tree[find(b)].insert(c);
    } else {
      if (p.closed[c] != -1) bad("component " + std::to_string(c + 1) + " has boundaries and a closed block");
      int f = p.first_boundary(c);
      for (int e = f; e < f + p.comp_size[c]; ++e) comps_of_tree[find(p.external[e].block)].insert(c);
    }
  }
  std::set<int> seen_comp;
  for (auto& [root, cs] : comps_of_tree) {
    if (cs.size() > 1) bad("one connected piece carries several target components");
    for (int c : cs)
      if (!seen_comp.insert(c).second)
        bad("target component " + std::to_string(c + 1) + " is split across pieces");
  }
  for (auto& [id, n] : p.blocks)
    if (!comps_of_tree.count(find(id))) bad("b" + std::to_string(id) + " is not connected to any boundary");
  return r;
}

CoverInvariant cover_invariant(const Group& G, const Param& p, const TargetCover& t) {
  (void)t;
  CoverInvariant inv;
  inv.components.resize(p.component_count());
  inv.closed_lift.assign(p.component_count(), G.id());
  for (int c = 0; c < p.component_count(); ++c) {
    if (p.comp_size[c] == 0) {
      inv.closed_lift[c] = p.global_lift.at(c);
      continue;
    }
    // factor[b]: right factor taking block b's trivialisation to the root's
    std::map<int, Elem> factor;
    int root = p.root_block(c);
    factor[root] = G.id();
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int b = stack.back();
      stack.pop_back();
      const Node& n = p.node(b);
      for (int i = 0; i < n.arity(); ++i) {
        int cut = n.att[i].cut;
        if (cut < 0) continue;
        const Slot& far = p.far_side(cut, b);
        if (factor.count(far.block)) continue;
        Elem y_parent = n.lab.h[i];
        Elem y_child = p.node(far.block).lab.h[far.index - 1];
        factor[far.block] = G.mul(G.mul(G.inv(y_child), y_parent), factor[b]);
        stack.push_back(far.block);
      }
    }
    int f = p.first_boundary(c);
    for (int e = f; e < f + p.comp_size[c]; ++e) {
      const Slot& s = p.external[e];
      const Node& n = p.node(s.block);
      Elem iota = G.mul(n.lab.h[s.index - 1], factor.at(s.block));
      Elem m = monodromy(G, n.lab, s.index);
      inv.components[c].push_back({G.mul(G.mul(G.inv(iota), m), iota), iota});
    }
  }
  return inv;
}

bool cover_equivalent(const Group& G, const CoverInvariant& a, const CoverInvariant& b) {
  if (a.components.size() != b.components.size()) return false;
  for (size_t c = 0; c < a.components.size(); ++c) {
    auto& x = a.components[c];
    auto& y = b.components[c];
    if (x.size() != y.size()) return false;
    if (x.empty()) continue;
    Elem s = G.mul(G.inv(x[0].iota), y[0].iota);
    for (size_t i = 0; i < x.size(); ++i) {
      if (y[i].iota != G.mul(x[i].iota, s)) return false;
      if (y[i].monodromy != G.mul(G.mul(G.inv(s), x[i].monodromy), s)) return false;
    }
  }
  return true;
}

namespace {

// lexicographically first h with prod h_i^-1 m_i^-1 h_i = 1
std::optional<std::vector<Elem>> solve_component(const Group& G, const std::vector<Elem>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return std::vector<Elem>{};
  const int q = G.order();
  std::vector<Elem> h(n, 0);
  auto gof = [&](int i) { return G.mul(G.mul(G.inv(h[i]), G.inv(m[i])), h[i]); };
  while (true) {
    Elem prefix = G.id();
    for (int i = 0; i < n - 1; ++i) prefix = G.mul(prefix, gof(i));
    Elem need = G.inv(prefix);
    for (Elem x = 0; x < q; ++x) {
      h[n - 1] = x;
      if (gof(n - 1) == need) return h;
    }
    int i = n - 2;
    while (i >= 0 && h[i] == q - 1) h[i--] = 0;
    if (i < 0) return std::nullopt;
    ++h[i];
  }
}

}  // namespace

bool realizable(const Group& G, const TargetCover& t) {
  for (auto& comp : t.components)
    if (!solve_component(G, comp)) return false;
  return true;
}

Param seed_parameterization(const Group& G, const TargetCover& t) {
  Param p;
  int next = 1;
  int e = 0;
  for (int c = 0; c < t.component_count(); ++c) {
    auto& ms = t.components[c];
    p.comp_size.push_back(static_cast<int>(ms.size()));
    p.global_lift.push_back(G.id());
    auto h = solve_component(G, ms);
    if (!h) throw ParamError("target component " + std::to_string(c + 1) + " is not realizable");
    Node n;
    for (size_t i = 0; i < ms.size(); ++i) {
      Elem hi = (*h)[i];
      n.lab.g.push_back(G.mul(G.mul(G.inv(hi), G.inv(ms[i])), hi));
      n.lab.h.push_back(hi);
      n.att.push_back({e + static_cast<int>(i), -1});
    }
    int id = next++;
    p.closed.push_back(ms.empty() ? id : -1);
    for (size_t i = 0; i < ms.size(); ++i) p.external.push_back({id, static_cast<int>(i) + 1});
    e += static_cast<int>(ms.size());
    p.blocks.emplace(id, std::move(n));
  }
  return p;
}

Report validate(const Group& G, const Param& p, const TargetCover& t) {
  Report r = check_structure(G, p, &t);
  if (!r.ok()) return r;
  for (int e = 0; e < t.boundary_count(); ++e) {
    const Slot& s = p.external[e];
    Elem m = monodromy(G, p.node(s.block).lab, s.index);
    if (m != t.monodromy(e))
      r.problems.push_back("boundary " + std::to_string(e + 1) + ": monodromy " + G.format(m) +
                           " but target wants " + G.format(t.monodromy(e)));
  }
  if (!r.ok()) return r;
  if (!realizable(G, t)) {
    r.problems.push_back("target is not realizable");
    return r;
  }
  auto mine = cover_invariant(G, p, t);
  auto ref = cover_invariant(G, seed_parameterization(G, t), t);
  if (!cover_equivalent(G, ref, mine)) r.problems.push_back("cover invariant differs from the target's class");
  return r;
}

std::string to_text(const Group& G, const Param& p) {
  std::ostringstream o;
  for (auto& [id, n] : p.blocks) o << "b" << id << ": " << format_block(G, n.lab) << "\n";
  for (auto& [id, c] : p.cuts)
    o << "cut c" << id << ": b" << c.a.block << "." << c.a.index << " -- b" << c.b.block << "."
      << c.b.index << "\n";
  for (size_t e = 0; e < p.external.size(); ++e)
    o << "ext " << e + 1 << ": b" << p.external[e].block << "." << p.external[e].index << "\n";
  for (size_t c = 0; c < p.closed.size(); ++c)
    if (p.closed[c] >= 0)
      o << "closed " << c + 1 << ": b" << p.closed[c] << " lift=" << G.format(p.global_lift[c]) << "\n";
  return o.str();
}

namespace {

std::string trim_copy(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

int parse_id(std::string s, char prefix, int line) {
  s = trim_copy(s);
  if (!s.empty() && s[0] == prefix) s = s.substr(1);
  try {
    size_t pos;
    int v = std::stoi(s, &pos);
    if (pos == s.size()) return v;
  } catch (...) {
  }
  throw ParamError("line " + std::to_string(line) + ": bad identifier '" + s + "'");
}

Slot parse_slot(const std::string& s, int line) {
  auto dot = s.find('.');
  if (dot == std::string::npos) throw ParamError("line " + std::to_string(line) + ": bad slot '" + s + "'");
  return {parse_id(s.substr(0, dot), 'b', line), parse_id(s.substr(dot + 1), ' ', line)};
}

}  // namespace

Param parse_param(const Group& G, const TargetCover& t, const std::string& text) {
  Param p;
  for (auto& c : t.components) p.comp_size.push_back(static_cast<int>(c.size()));
  p.closed.assign(t.component_count(), -1);
  p.global_lift.assign(t.component_count(), G.id());
  p.external.assign(t.boundary_count(), Slot{});
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  std::vector<std::pair<int, Cut>> cuts;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim_copy(raw);
    if (s.empty() || s[0] == '#') continue;
    auto colon = s.find(':');
    if (colon == std::string::npos) throw ParamError("line " + std::to_string(line) + ": missing ':'");
    std::string head = trim_copy(s.substr(0, colon)), rest = trim_copy(s.substr(colon + 1));
    try {
      if (head.rfind("cut", 0) == 0) {
        auto dash = rest.find("--");
        if (dash == std::string::npos) throw ParamError("line " + std::to_string(line) + ": expected '--'");
        cuts.push_back({parse_id(head.substr(3), 'c', line),
                        Cut{parse_slot(trim_copy(rest.substr(0, dash)), line),
                            parse_slot(trim_copy(rest.substr(dash + 2)), line)}});
      } else if (head.rfind("ext", 0) == 0) {
        int e = parse_id(head.substr(3), ' ', line);
        if (e < 1 || e > t.boundary_count()) throw ParamError("line " + std::to_string(line) + ": no boundary " + std::to_string(e));
        p.external[e - 1] = parse_slot(rest, line);
      } else if (head.rfind("closed", 0) == 0) {
        int c = parse_id(head.substr(6), ' ', line);
        if (c < 1 || c > t.component_count()) throw ParamError("line " + std::to_string(line) + ": no component " + std::to_string(c));
        auto sp = rest.find("lift=");
        p.closed[c - 1] = parse_id(rest.substr(0, sp), 'b', line);
        if (sp != std::string::npos) p.global_lift[c - 1] = G.parse(rest.substr(sp + 5));
      } else {
        int id = parse_id(head, 'b', line);
        Node n;
        n.lab = parse_block(G, rest);
        n.att.assign(n.arity(), Att{});
        if (!p.blocks.emplace(id, std::move(n)).second)
          throw ParamError("line " + std::to_string(line) + ": duplicate block b" + std::to_string(id));
      }
    } catch (const GroupError& e) {
      throw ParamError("line " + std::to_string(line) + ": " + e.what());
    } catch (const BlockError& e) {
      throw ParamError("line " + std::to_string(line) + ": " + e.what());
    }
  }
  auto attach = [&](const Slot& s, Att a, const std::string& what) {
    auto it = p.blocks.find(s.block);
    if (it == p.blocks.end() || s.index < 1 || s.index > it->second.arity())
      throw ParamError(what + " refers to a missing slot");
    Att& cur = it->second.att[s.index - 1];
    if (cur.ext >= 0 || cur.cut >= 0) throw ParamError(what + " reuses an occupied slot");
    cur = a;
  };
  for (auto& [id, c] : cuts) {
    if (!p.cuts.emplace(id, c).second) throw ParamError("duplicate cut c" + std::to_string(id));
    attach(c.a, {-1, id}, "cut c" + std::to_string(id));
    attach(c.b, {-1, id}, "cut c" + std::to_string(id));
  }
  for (int e = 0; e < t.boundary_count(); ++e) {
    if (p.external[e].block < 0) throw ParamError("boundary " + std::to_string(e + 1) + " is not assigned");
    attach(p.external[e], {e, -1}, "ext " + std::to_string(e + 1));
  }
  for (int c = 0; c < t.component_count(); ++c)
    if (t.components[c].empty() && p.closed[c] < 0)
      throw ParamError("closed component " + std::to_string(c + 1) + " needs a 'closed' line");
  return p;
}

std::string to_dot(const Group& G, const Param& p) {
  Canonical c = canonicalize(p);
  const Param& q = c.param;
  auto lab = [&](const Node& n, int slot) {
    return "(" + G.format(n.lab.g[slot - 1]) + "," + G.format(n.lab.h[slot - 1]) + ")";
  };
  std::ostringstream o;
  o << "digraph parameterization {\n";
  for (auto& [id, n] : q.blocks) o << "  b" << id << " [label=\"S" << n.arity() << "\"];\n";
  for (auto& [id, cut] : q.cuts) {
    o << "  b" << cut.a.block << " -> b" << cut.b.block << " [label=\"c" << id << " "
      << lab(q.node(cut.a.block), cut.a.index) << " " << lab(q.node(cut.b.block), cut.b.index)
      << "\", dir=none];\n";
  }
  for (size_t e = 0; e < q.external.size(); ++e) {
    const Slot& s = q.external[e];
    o << "  x" << e + 1 << " [shape=plaintext, label=\"" << e + 1 << " " << lab(q.node(s.block), s.index)
      << "\"];\n";
    o << "  b" << s.block << " -> x" << e + 1 << " [arrowhead=none, taillabel=\"" << s.index << "\"];\n";
  }
  for (size_t k = 0; k < q.closed.size(); ++k)
    if (q.closed[k] >= 0)
      o << "  b" << q.closed[k] << " [xlabel=\"lift " << G.format(q.global_lift[k]) << "\"];\n";
  o << "}\n";
  return o.str();
}

}  // namespace gcov
