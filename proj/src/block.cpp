#include "gcov/block.hpp"

#include <cctype>

namespace gcov {

namespace {

void check_slot(const Block& b, int i) {
  if (i < 1 || i > b.arity())
    throw BlockError("slot " + std::to_string(i) + " out of range for arity " +
                     std::to_string(b.arity()));
}

// split on commas outside brackets (symmetric-group names contain commas)
std::vector<std::string> split_top(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  bool any = false;
  for (char c : s) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
      continue;
    }
    cur += c;
    if (!std::isspace(static_cast<unsigned char>(c))) any = true;
  }
  if (any || !out.empty()) out.push_back(cur);
  return out;
}

}  // namespace

Elem g_product(const Group& G, const Block& b) {
  Elem p = G.id();
  for (Elem x : b.g) p = G.mul(p, x);
  return p;
}

void check_block(const Group& G, const Block& b) {
  if (b.g.size() != b.h.size()) throw BlockError("g and h have different lengths");
  for (Elem x : b.g)
    if (!G.valid(x)) throw BlockError("g label out of range");
  for (Elem x : b.h)
    if (!G.valid(x)) throw BlockError("h label out of range");
  if (g_product(G, b) != G.id())
    throw BlockError("product of g labels is " + G.format(g_product(G, b)) + ", not the identity");
}

Block make_block(const Group& G, std::vector<Elem> g, std::vector<Elem> h) {
  Block b{std::move(g), std::move(h)};
  check_block(G, b);
  return b;
}

Elem monodromy(const Group& G, const Block& b, int i) {
  check_slot(b, i);
  Elem h = b.h[i - 1];
  return G.mul(G.mul(h, G.inv(b.g[i - 1])), G.inv(h));
}

std::vector<Elem> monodromies(const Group& G, const Block& b) {
  std::vector<Elem> m;
  for (int i = 1; i <= b.arity(); ++i) m.push_back(monodromy(G, b, i));
  return m;
}

std::optional<Elem> find_iso(const Group& G, const Block& a, const Block& b) {
  if (a.arity() != b.arity()) return std::nullopt;
  if (a.arity() == 0) return G.id();
  // h_1 x^-1 = h'_1 forces x = h'_1^-1 h_1
  Elem x = G.mul(G.inv(b.h[0]), a.h[0]);
  for (int i = 0; i < a.arity(); ++i) {
    if (G.conj(x, a.g[i]) != b.g[i]) return std::nullopt;
    if (G.mul(a.h[i], G.inv(x)) != b.h[i]) return std::nullopt;
  }
  return x;
}

bool glue_admissible(const Group& G, const Block& a, int i, const Block& b, int j) {
  return G.mul(monodromy(G, a, i), monodromy(G, b, j)) == G.id();
}

bool f_applicable(const Group& G, const Block& a, int i, const Block& b, int j) {
  check_slot(a, i);
  check_slot(b, j);
  return G.mul(a.g[i - 1], b.g[j - 1]) == G.id() && a.h[i - 1] == b.h[j - 1];
}

std::string format_block(const Group& G, const Block& b) {
  std::string s = "S" + std::to_string(b.arity()) + "(";
  for (int i = 0; i < b.arity(); ++i) s += (i ? "," : "") + G.format(b.g[i]);
  s += ";";
  for (int i = 0; i < b.arity(); ++i) s += (i ? "," : " ") + G.format(b.h[i]);
  return s + ")";
}

Block parse_block(const Group& G, const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  auto bad = [&](const std::string& why) -> Block {
    throw BlockError("cannot parse block '" + text + "': " + why);
  };
  if (t.size() < 4 || t[0] != 'S') return bad("expected S<n>(...)");
  auto open = t.find('(');
  if (open == std::string::npos || t.back() != ')') return bad("missing parentheses");
  int n;
  try {
    n = std::stoi(t.substr(1, open - 1));
  } catch (...) {
    return bad("bad arity");
  }
  std::string body = t.substr(open + 1, t.size() - open - 2);
  auto semi = body.find(';');
  if (semi == std::string::npos) return bad("missing ';'");
  auto gs = split_top(body.substr(0, semi));
  auto hs = split_top(body.substr(semi + 1));
  if (static_cast<int>(gs.size()) != n || static_cast<int>(hs.size()) != n)
    return bad("expected " + std::to_string(n) + " labels on each side");
  Block b;
  for (auto& s : gs) b.g.push_back(G.parse(s));
  for (auto& s : hs) b.h.push_back(G.parse(s));
  check_block(G, b);
  return b;
}

}  // namespace gcov
