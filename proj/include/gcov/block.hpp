#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcov/group.hpp"

namespace gcov {

struct BlockError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// S_n(g; h).  Slots are 1-based in the public functions; the label vectors
// are 0-based.
struct Block {
  std::vector<Elem> g;
  std::vector<Elem> h;

  int arity() const { return static_cast<int>(g.size()); }
  bool operator==(const Block&) const = default;
};

// Checks sizes, element ranges and g_1 g_2 ... g_n = 1.
Block make_block(const Group& G, std::vector<Elem> g, std::vector<Elem> h);
void check_block(const Group& G, const Block& b);
Elem g_product(const Group& G, const Block& b);

// m_i = h_i g_i^-1 h_i^-1
Elem monodromy(const Group& G, const Block& b, int i);
std::vector<Elem> monodromies(const Group& G, const Block& b);

// x with x g_i x^-1 = g'_i and h_i x^-1 = h'_i for every i.
std::optional<Elem> find_iso(const Group& G, const Block& a, const Block& b);

bool glue_admissible(const Group& G, const Block& a, int i, const Block& b, int j);
bool f_applicable(const Group& G, const Block& a, int i, const Block& b, int j);

std::string format_block(const Group& G, const Block& b);
Block parse_block(const Group& G, const std::string& text);

}  // namespace gcov
