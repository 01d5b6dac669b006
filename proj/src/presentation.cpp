#include "gcov/presentation.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gcov {

using boost::multiprecision::cpp_int;

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  size_t a = 0, b = r.size();
  while (b - a >= 2 && r[a] == -r[b - 1]) {
    ++a;
    --b;
  }
  return Word(r.begin() + a, r.begin() + b);
}

namespace {

Word inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (int& x : r) x = -x;
  return r;
}

Word min_rotation(const Word& w) {
  Word best = w;
  Word cur = w;
  for (size_t i = 1; i < w.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

}  // namespace

Word normal_cyclic_form(const Word& w) {
  Word r = cyclic_reduce(w);
  return std::min(min_rotation(r), min_rotation(inverse(r)));
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream o;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) o << " ";
    o << "x" << std::abs(w[i]);
    if (w[i] < 0) o << "^-1";
  }
  return o.str();
}

Presentation tietze_simplify(const Presentation& p) {
  constexpr size_t kMaxEliminationLength = 40;
  const int n = p.generators;
  std::vector<Word> rel;
  {
    std::set<Word> seen;
    for (auto& r : p.relators) {
      Word c = normal_cyclic_form(r);
      if (!c.empty() && seen.insert(c).second) rel.push_back(std::move(c));
    }
  }
  std::vector<char> alive(rel.size(), 1);
  std::vector<char> gen_alive(n + 1, 1);
  std::vector<std::vector<int>> occ(n + 1);
  for (size_t r = 0; r < rel.size(); ++r)
    for (int x : rel[r]) occ[std::abs(x)].push_back(static_cast<int>(r));
  using Item = std::pair<size_t, int>;  // (length, relator)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  for (size_t r = 0; r < rel.size(); ++r) queue.push({rel[r].size(), static_cast<int>(r)});

  while (!queue.empty()) {
    auto [len, r] = queue.top();
    queue.pop();
    if (!alive[r] || rel[r].size() != len) continue;
    Word& w = rel[r];
    if (w.empty()) {
      alive[r] = 0;
      continue;
    }
    if (w.size() > kMaxEliminationLength) continue;
    std::map<int, int> count;
    for (int x : w) ++count[std::abs(x)];
    int g = 0;
    for (auto& [gen, c] : count)
      if (c == 1) {
        // prefer the generator with the fewest occurrences elsewhere
        if (g == 0 || occ[gen].size() < occ[g].size()) g = gen;
      }
    if (g == 0) continue;
    // rotate so that g^e leads: g^e * rest = 1
    auto pos = std::find_if(w.begin(), w.end(), [&](int x) { return std::abs(x) == g; });
    Word rot(pos, w.end());
    rot.insert(rot.end(), w.begin(), pos);
    int e = rot[0] > 0 ? 1 : -1;
    Word rest(rot.begin() + 1, rot.end());
    Word value = e > 0 ? inverse(rest) : rest;  // g = value
    Word value_inv = inverse(value);
    alive[r] = 0;
    gen_alive[g] = 0;
    std::vector<int> touched = occ[g];
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (int s : touched) {
      if (!alive[s]) continue;
      Word out;
      for (int x : rel[s]) {
        if (x == g)
          out.insert(out.end(), value.begin(), value.end());
        else if (x == -g)
          out.insert(out.end(), value_inv.begin(), value_inv.end());
        else
          out.push_back(x);
      }
      rel[s] = cyclic_reduce(out);
      for (int x : rel[s]) occ[std::abs(x)].push_back(s);
      queue.push({rel[s].size(), s});
    }
    occ[g].clear();
  }

  // renumber surviving generators
  std::vector<int> renum(n + 1, 0);
  Presentation out;
  for (int g = 1; g <= n; ++g)
    if (gen_alive[g]) renum[g] = ++out.generators;
  std::set<Word> seen;
  for (size_t r = 0; r < rel.size(); ++r) {
    if (!alive[r] || rel[r].empty()) continue;
    Word w;
    for (int x : rel[r]) {
      int g = renum[std::abs(x)];
      if (g == 0) throw std::logic_error("tietze: eliminated generator survived");
      w.push_back(x > 0 ? g : -g);
    }
    w = normal_cyclic_form(w);
    if (!w.empty() && seen.insert(w).second) out.relators.push_back(std::move(w));
  }
  return out;
}

namespace {

using SparseRow = std::map<int, cpp_int>;

// Diagonal of a dense integer matrix after unimodular row/column operations.
std::vector<cpp_int> dense_diagonal(std::vector<std::vector<cpp_int>> a) {
  std::vector<cpp_int> diag;
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  size_t t = 0;
  while (t < rows && t < cols) {
    // pivot: smallest nonzero absolute value in the remaining block
    size_t pi = rows, pj = cols;
    cpp_int best = 0;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (best == 0 || abs(a[i][j]) < best)) {
          best = abs(a[i][j]);
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    std::swap(a[t], a[pi]);
    for (auto& row : a) std::swap(row[t], row[pj]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        cpp_int q = a[i][t] / a[t][t];
        for (size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        cpp_int q = a[t][j] / a[t][t];
        for (size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (auto& row : a) std::swap(row[t], row[j]);
          clean = false;
        }
      }
    }
    diag.push_back(abs(a[t][t]));
    ++t;
  }
  return diag;
}

}  // namespace

std::vector<std::string> abelian_invariants(const Presentation& p) {
  const int n = p.generators;
  std::vector<SparseRow> rows;
  for (auto& w : p.relators) {
    SparseRow r;
    for (int x : w) r[std::abs(x)] += x > 0 ? 1 : -1;
    for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
    if (!r.empty()) rows.push_back(std::move(r));
  }
  // sparse phase: eliminate with unit pivots
  std::vector<std::set<int>> col_rows(n + 1);
  for (size_t i = 0; i < rows.size(); ++i)
    for (auto& [c, v] : rows[i]) col_rows[c].insert(static_cast<int>(i));
  std::vector<char> row_alive(rows.size(), 1), col_alive(n + 1, 1);
  int unit_pivots = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (!row_alive[i]) continue;
      if (rows[i].empty()) {
        row_alive[i] = 0;
        continue;
      }
      // unit entry in the sparsest column
      int pc = -1;
      for (auto& [c, v] : rows[i])
        if (abs(v) == 1 && (pc < 0 || col_rows[c].size() < col_rows[pc].size())) pc = c;
      if (pc < 0) continue;
      const cpp_int pv = rows[i].at(pc);
      std::vector<int> others(col_rows[pc].begin(), col_rows[pc].end());
      for (int k : others) {
        if (k == static_cast<int>(i)) continue;
        cpp_int f = rows[k].at(pc) * pv;  // pv = +-1, so pv^-1 = pv
        for (auto& [c, v] : rows[i]) {
          cpp_int nv = rows[k][c] - f * v;
          if (nv == 0) {
            rows[k].erase(c);
            col_rows[c].erase(k);
          } else {
            rows[k][c] = nv;
            col_rows[c].insert(k);
          }
        }
      }
      // the pivot row only contributes a unit after column operations
      for (auto& [c, v] : rows[i]) col_rows[c].erase(static_cast<int>(i));
      rows[i].clear();
      row_alive[i] = 0;
      col_alive[pc] = 0;
      ++unit_pivots;
      progress = true;
    }
  }
  std::vector<int> cols;
  for (int c = 1; c <= n; ++c)
    if (col_alive[c]) cols.push_back(c);
  std::map<int, size_t> col_pos;
  for (size_t j = 0; j < cols.size(); ++j) col_pos[cols[j]] = j;
  std::vector<std::vector<cpp_int>> dense;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (!row_alive[i] || rows[i].empty()) continue;
    std::vector<cpp_int> r(cols.size(), 0);
    for (auto& [c, v] : rows[i]) r[col_pos.at(c)] = v;
    dense.push_back(std::move(r));
  }
  std::vector<cpp_int> diag = dense.empty() ? std::vector<cpp_int>{} : dense_diagonal(dense);
  // gcd/lcm normalisation gives the divisibility chain
  for (size_t i = 0; i < diag.size(); ++i)
    for (size_t j = i + 1; j < diag.size(); ++j) {
      cpp_int g = gcd(diag[i], diag[j]);
      if (g == 0) continue;
      cpp_int l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  std::vector<std::string> out;
  for (auto& d : diag)
    if (d != 1) out.push_back(d.str());
  const size_t free_rank = cols.size() - diag.size();
  for (size_t k = 0; k < free_rank; ++k) out.push_back("0");
  return out;
}

CosetResult enumerate_cosets(const Presentation& p, long max_cosets) {
  CosetResult res;
  const int n = p.generators;
  if (n == 0) {
    res.complete = true;
    res.index = 1;
    res.cosets_defined = 1;
    return res;
  }
  const int width = 2 * n;
  // table memory guard: at most about 2^26 entries
  const long cap = std::max<long>(1, std::min<long>(max_cosets, (1L << 26) / width));
  auto col = [](int letter) { return 2 * (std::abs(letter) - 1) + (letter < 0 ? 1 : 0); };
  std::vector<std::vector<int>> rels;
  for (auto& w : p.relators) {
    std::vector<int> r;
    for (int x : w) r.push_back(col(x));
    rels.push_back(std::move(r));
  }
  std::vector<int> table{};  // coset-major, -1 undefined
  std::vector<int> forward;  // union-find parent (self when live)
  table.reserve(static_cast<size_t>(std::min<long>(cap, 1 << 16)) * width);
  long defined = 0;
  bool overflow = false;
  auto add_coset = [&]() -> int {
    if (static_cast<long>(forward.size()) >= cap) {
      overflow = true;
      return -1;
    }
    int c = static_cast<int>(forward.size());
    forward.push_back(c);
    table.insert(table.end(), width, -1);
    ++defined;
    return c;
  };
  auto at = [&](int c, int x) -> int& { return table[static_cast<size_t>(c) * width + x]; };
  auto rep = [&](int c) {
    int r = c;
    while (forward[r] != r) r = forward[r];
    while (forward[c] != r) {
      int nx = forward[c];
      forward[c] = r;
      c = nx;
    }
    return r;
  };
  std::vector<int> queue;
  auto merge = [&](int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    forward[b] = a;
    queue.push_back(b);
  };
  auto coincidence = [&](int a, int b) {
    merge(a, b);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int e = queue[qi];
      for (int x = 0; x < width; ++x) {
        int f = at(e, x);
        if (f < 0) continue;
        at(f, x ^ 1) = -1;
        int e1 = rep(e), f1 = rep(f);
        if (at(e1, x) >= 0)
          merge(f1, at(e1, x));
        else if (at(f1, x ^ 1) >= 0)
          merge(e1, at(f1, x ^ 1));
        else {
          at(e1, x) = f1;
          at(f1, x ^ 1) = e1;
        }
      }
    }
    queue.clear();
  };
  auto define = [&](int c, int x) {
    int d = add_coset();
    if (d < 0) return false;
    at(c, x) = d;
    at(d, x ^ 1) = c;
    return true;
  };
  auto scan_and_fill = [&](int c, const std::vector<int>& w) {
    if (w.empty()) return true;
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && at(f, w[i]) >= 0) f = at(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && at(b, w[j] ^ 1) >= 0) b = at(b, w[j--] ^ 1);
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        at(f, w[i]) = b;
        at(b, w[i] ^ 1) = f;
        return true;
      }
      if (!define(f, w[i])) return false;
    }
  };
  add_coset();
  for (int c = 0; c < static_cast<int>(forward.size()) && !overflow; ++c) {
    for (auto& r : rels) {
      if (forward[c] != c) break;
      if (!scan_and_fill(c, r)) break;
    }
    if (overflow) break;
    if (forward[c] != c) continue;
    for (int x = 0; x < width; ++x)
      if (at(c, x) < 0 && !define(c, x)) break;
  }
  res.cosets_defined = defined;
  if (overflow) return res;
  long live = 0;
  for (size_t c = 0; c < forward.size(); ++c)
    if (forward[c] == static_cast<int>(c)) ++live;
  res.complete = true;
  res.index = live;
  return res;
}

const char* status_name(TrivialityVerdict::Status s) {
  switch (s) {
    case TrivialityVerdict::Status::ProvenTrivial: return "ProvenTrivial";
    case TrivialityVerdict::Status::Nontrivial: return "Nontrivial";
    case TrivialityVerdict::Status::Unknown: return "Unknown";
  }
  return "?";
}

std::string TrivialityVerdict::describe() const {
  std::ostringstream o;
  o << status_name(status);
  if (status == Status::Nontrivial) {
    o << " H1=";
    if (h1.empty()) o << "0";
    for (size_t i = 0; i < h1.size(); ++i) o << (i ? "+" : "") << (h1[i] == "0" ? "Z" : "Z/" + h1[i]);
  }
  o << " (after tietze: " << generators_after_tietze << " generators, " << relators_after_tietze
    << " relators; cosets defined " << cosets.cosets_defined;
  if (cosets.complete) o << ", index " << cosets.index;
  o << ")";
  return o.str();
}

TrivialityVerdict prove_trivial(const Presentation& p, long coset_budget) {
  TrivialityVerdict v;
  Presentation s = tietze_simplify(p);
  v.generators_after_tietze = s.generators;
  v.relators_after_tietze = static_cast<int>(s.relators.size());
  v.h1 = abelian_invariants(s);
  if (!v.h1.empty()) {
    v.status = TrivialityVerdict::Status::Nontrivial;
    return v;
  }
  v.cosets = enumerate_cosets(s, coset_budget);
  if (!v.cosets.complete)
    v.status = TrivialityVerdict::Status::Unknown;
  else if (v.cosets.index == 1)
    v.status = TrivialityVerdict::Status::ProvenTrivial;
  else
    v.status = TrivialityVerdict::Status::Nontrivial;  // finite perfect group
  return v;
}

}  // namespace gcov
