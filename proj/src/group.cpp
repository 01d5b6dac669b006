#include "gcov/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace gcov {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_int(std::string_view s, int& out) {
  s = trim(s);
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

std::string strip_spaces(std::string_view s) {
  std::string r;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) r += c;
  return r;
}

}  // namespace

Elem Group::mul_checked(Elem a, Elem b) const {
  if (!valid(a) || !valid(b)) throw GroupError("element index out of range");
  return mul(a, b);
}

Elem Group::inv_checked(Elem a) const {
  if (!valid(a)) throw GroupError("element index out of range");
  return inv(a);
}

std::string Group::describe() const {
  switch (kind_) {
    case Kind::Cyclic: return "cyclic " + std::to_string(k_);
    case Kind::Symmetric: return "symmetric " + std::to_string(k_);
    case Kind::Dihedral: return "dihedral " + std::to_string(k_);
    case Kind::Table: break;
  }
  return "table of order " + std::to_string(n_);
}

Elem Group::parse(std::string_view text) const {
  std::string_view t = trim(text);
  auto fail = [&](std::string_view tok) -> Elem {
    throw GroupError("cannot parse element '" + std::string(tok) + "' in " + describe());
  };
  switch (kind_) {
    case Kind::Cyclic: {
      int v;
      if (!parse_int(t, v) || v < 0 || v >= n_) fail(t);
      return v;
    }
    case Kind::Symmetric: {
      std::string s = strip_spaces(t);
      if (s.size() < 2 || s.front() != '[' || s.back() != ']') fail(t);
      std::vector<int> p;
      std::string_view body(s.data() + 1, s.size() - 2);
      while (!body.empty()) {
        auto comma = body.find(',');
        std::string_view tok = body.substr(0, comma);
        int v;
        if (!parse_int(tok, v)) fail(tok);
        p.push_back(v);
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
        if (body.empty()) fail(t);
      }
      auto it = std::find(perms_.begin(), perms_.end(), p);
      if (it == perms_.end()) fail(t);
      return static_cast<Elem>(it - perms_.begin());
    }
    case Kind::Dihedral: {
      std::string s = strip_spaces(t);
      int a, b;
      auto star = s.find('*');
      if (s.rfind("r^", 0) != 0 || star == std::string::npos) fail(t);
      std::string_view ra(s.data() + 2, star - 2);
      std::string_view sb(s.data() + star + 1, s.size() - star - 1);
      if (sb.substr(0, 2) != "s^") fail(t);
      if (!parse_int(ra, a) || a < 0 || a >= k_) fail(ra);
      if (!parse_int(sb.substr(2), b) || b < 0 || b > 1) fail(sb);
      return a + k_ * b;
    }
    case Kind::Table: {
      for (int i = 0; i < n_; ++i)
        if (names_[i] == t) return i;
      fail(t);
    }
  }
  return fail(t);
}

void Group::finish() {
  if (n_ <= 0) throw GroupError("group order must be positive");
  if (static_cast<int>(mul_.size()) != n_ * n_) throw GroupError("table has wrong size");
  if (static_cast<int>(names_.size()) != n_) throw GroupError("wrong number of element names");
  for (Elem e : mul_)
    if (e < 0 || e >= n_) throw GroupError("table entry out of range");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (static_cast<int>(seen.size()) != n_) throw GroupError("element names are not distinct");
  id_ = -1;
  for (int e = 0; e < n_ && id_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) id_ = e;
  }
  if (id_ < 0) throw GroupError("no two-sided identity");
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == id_ && mul(b, a) == id_) {
        inv_[a] = b;
        break;
      }
    if (inv_[a] < 0) throw GroupError("element " + names_[a] + " has no two-sided inverse");
  }
  check_axioms();
}

void Group::check_axioms() const {
  auto assoc = [&](int a, int b, int c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw GroupError("table is not associative at (" + names_[a] + "," + names_[b] + "," +
                       names_[c] + ")");
  };
  if (n_ <= 48) {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c) assoc(a, b, c);
  } else {
    std::mt19937 rng(0);
    std::uniform_int_distribution<int> d(0, n_ - 1);
    for (int i = 0; i < 200000; ++i) assoc(d(rng), d(rng), d(rng));
  }
  for (int a = 0; a < n_; ++a)
    if (mul(a, inv_[a]) != id_ || mul(inv_[a], a) != id_) throw GroupError("bad inverse table");
}

Group Group::cyclic(int k) {
  if (k < 1) throw GroupError("cyclic group needs k >= 1");
  Group g;
  g.kind_ = Kind::Cyclic;
  g.k_ = k;
  g.n_ = k;
  g.mul_.resize(k * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) g.mul_[a * k + b] = (a + b) % k;
  for (int a = 0; a < k; ++a) g.names_.push_back(std::to_string(a));
  g.finish();
  return g;
}

Group Group::symmetric(int k) {
  if (k < 1 || k > 5) throw GroupError("symmetric group needs 1 <= k <= 5");
  Group g;
  g.kind_ = Kind::Symmetric;
  g.k_ = k;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 1);
  do g.perms_.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  g.n_ = static_cast<int>(g.perms_.size());
  const int n = g.n_;
  g.mul_.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // (ab)(i) = a(b(i))
      std::vector<int> c(k);
      for (int i = 0; i < k; ++i) c[i] = g.perms_[a][g.perms_[b][i] - 1];
      g.mul_[a * n + b] = static_cast<Elem>(
          std::find(g.perms_.begin(), g.perms_.end(), c) - g.perms_.begin());
    }
  for (auto& q : g.perms_) {
    std::string s = "[";
    for (int i = 0; i < k; ++i) s += (i ? "," : "") + std::to_string(q[i]);
    g.names_.push_back(s + "]");
  }
  g.finish();
  return g;
}

Group Group::dihedral(int k) {
  if (k < 1) throw GroupError("dihedral group needs k >= 1");
  Group g;
  g.kind_ = Kind::Dihedral;
  g.k_ = k;
  g.n_ = 2 * k;
  const int n = g.n_;
  g.mul_.resize(n * n);
  // r^a s^b * r^c s^d = r^(a + (-1)^b c) s^(b+d)
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int a = x % k, b = x / k, c = y % k, d = y / k;
      int e = ((b ? a - c : a + c) % k + k) % k;
      g.mul_[x * n + y] = e + k * ((b + d) % 2);
    }
  for (int x = 0; x < n; ++x)
    g.names_.push_back("r^" + std::to_string(x % k) + "*s^" + std::to_string(x / k));
  g.finish();
  return g;
}

Group Group::from_table(int n, std::vector<std::string> names, std::vector<Elem> table) {
  Group g;
  g.kind_ = Kind::Table;
  g.n_ = n;
  g.names_ = std::move(names);
  g.mul_ = std::move(table);
  g.finish();
  return g;
}

Group parse_group_table(std::string_view text) {
  std::vector<std::pair<int, std::string>> lines;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
      ++no;
      if (!trim(line).empty()) lines.emplace_back(no, line);
    }
  }
  auto err = [](int line, const std::string& msg) {
    throw GroupError("line " + std::to_string(line) + ": " + msg);
  };
  if (lines.empty()) err(1, "empty group table");
  int n;
  if (!parse_int(lines[0].second, n) || n <= 0)
    err(lines[0].first, "expected a positive order, got '" + lines[0].second + "'");
  if (lines.size() < 2) err(lines[0].first + 1, "missing element names");
  std::vector<std::string> names;
  {
    std::istringstream in(lines[1].second);
    std::string tok;
    while (in >> tok) names.push_back(tok);
  }
  if (static_cast<int>(names.size()) != n)
    err(lines[1].first, "expected " + std::to_string(n) + " names, got " + std::to_string(names.size()));
  if (static_cast<int>(lines.size()) != n + 2)
    err(lines.back().first, "expected " + std::to_string(n) + " table rows, got " +
                                std::to_string(static_cast<int>(lines.size()) - 2));
  std::vector<Elem> table;
  for (int r = 0; r < n; ++r) {
    auto& [no, line] = lines[r + 2];
    std::istringstream in(line);
    std::string tok;
    int cnt = 0;
    while (in >> tok) {
      int v;
      if (!parse_int(tok, v) || v < 0 || v >= n) err(no, "bad table entry '" + tok + "'");
      table.push_back(v);
      ++cnt;
    }
    if (cnt != n) err(no, "expected " + std::to_string(n) + " entries, got " + std::to_string(cnt));
  }
  return Group::from_table(n, std::move(names), std::move(table));
}

Group load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GroupError("cannot open group table '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_group_table(ss.str());
}

Group load_group(const std::string& spec) {
  std::string s(trim(spec));
  auto sep = s.find_first_of(" :");
  if (sep == std::string::npos) throw GroupError("bad group spec '" + spec + "'");
  std::string kind = s.substr(0, sep);
  std::string arg(trim(std::string_view(s).substr(sep + 1)));
  if (kind == "table") return load_group_file(arg);
  int k;
  if (!parse_int(arg, k)) throw GroupError("bad group parameter '" + arg + "'");
  if (kind == "cyclic") return Group::cyclic(k);
  if (kind == "symmetric") return Group::symmetric(k);
  if (kind == "dihedral") return Group::dihedral(k);
  throw GroupError("unknown group kind '" + kind + "'");
}

}  // namespace gcov
