#pragma once

#include <string>
#include <vector>

#include "gcov/param.hpp"

namespace gcov {

struct MoveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class MoveKind { Z, B, F, Finv, P, T, GF, GB };

const char* kind_name(MoveKind k);

// One rewrite addressed by block/cut id.  `inverse` is meaningful for Z and
// B (Z!, B!) and for Finv (Finv! = merge at the block's last slot); P and T
// inverses are normalised into ordinary P/T moves when parsed.
struct Move {
  MoveKind kind = MoveKind::Z;
  bool inverse = false;
  int block = -1;
  int cut = -1;
  int i = 0;      // B: slot index; Finv: split position k
  Elem x = 0;     // P: x; T: z (new value); Finv: y
  Elem y = -1;    // T: expected current value, -1 when unchecked
  int s2 = 0, e2 = 0, s3 = 0, e3 = 0;  // GB ranges I2 = s2..e2, I3 = s3..e3

  bool operator==(const Move&) const = default;

  static Move z(int b, bool inv = false) { return {MoveKind::Z, inv, b}; }
  static Move braid(int b, int i, bool inv = false) { Move m{MoveKind::B, inv, b}; m.i = i; return m; }
  static Move f(int c) { Move m{MoveKind::F}; m.cut = c; return m; }
  static Move finv(int b, int k, Elem y) { Move m{MoveKind::Finv, false, b}; m.i = k; m.x = y; return m; }
  static Move p(int b, Elem x) { Move m{MoveKind::P, false, b}; m.x = x; return m; }
  static Move t(int c, Elem z, Elem y = -1) { Move m{MoveKind::T}; m.cut = c; m.x = z; m.y = y; return m; }
  static Move gf(int c) { Move m{MoveKind::GF}; m.cut = c; return m; }
  static Move gb(int b, int s2, int e2, int s3, int e3) {
    Move m{MoveKind::GB, false, b};
    m.s2 = s2; m.e2 = e2; m.s3 = s3; m.e3 = e3;
    return m;
  }
};

struct Bounds {
  int max_cuts = 2;
  int max_block_size = 1 << 20;
  long vertex_budget = 1000000;
  long coset_budget = 100000;
  int slack = 3;
  unsigned sampling_seed = 0;  // element sampling in relation enumeration when |G| > 6
};

Param apply_Z(const Group& G, const Param& p, int block, bool inverse = false);
Param apply_Bi(const Group& G, const Param& p, int block, int i, bool inverse = false);
Param apply_F(const Group& G, const Param& p, int cut);
Param apply_Finv(const Group& G, const Param& p, int block, int k, Elem y);
Param apply_P(const Group& G, const Param& p, int block, Elem x);
Param apply_T(const Group& G, const Param& p, int cut, Elem z);
Param apply_GF(const Group& G, const Param& p, int cut);
Param apply_GB(const Group& G, const Param& p, int block, int s2, int e2, int s3, int e3);

// GF: rotate `left` a times so the cut is its last slot, `right` b times so
// it is slot 1, then F.  `left` is the side nearer the component root.
struct GfPlan {
  int left = -1, right = -1;
  int a = 0, b = 0;
};
GfPlan gf_plan(const Group& G, const Param& p, int cut);

// Composite expansions into primitive moves (raw ids of the state they start from).
std::vector<Move> gf_path(const Group& G, const Param& p, int cut);
std::vector<Move> gb_path(const Group& G, const Param& p, int block, int s2, int e2, int s3, int e3);
// Slots reordered I1, I3, I2, I4 with the I3 labels transformed by z = prod of g over I2.
Param gb_closed_form(const Group& G, const Param& p, int block, int s2, int e2, int s3, int e3);

Param apply_move(const Group& G, const Param& p, const Move& m);
Param apply_path(const Group& G, Param p, const std::vector<Move>& path);

// The move that undoes `m`, addressed in the ids of apply_move(p, m).
Move inverse_move(const Group& G, const Param& p, const Move& m);

// True when the move changes nothing (P with x = 1, T to the current value).
bool is_identity_move(const Group& G, const Param& p, const Move& m);

// Primitive moves (Z, B, F, Finv, P, T) applicable at p, deterministic order.
std::vector<Move> enumerate_moves(const Group& G, const Param& p, const Bounds& bounds);

std::string format_move(const Group& G, const Move& m);
Move parse_move(const Group& G, const std::string& text);
std::vector<Move> parse_path(const Group& G, const std::string& text);
std::string format_path(const Group& G, const std::vector<Move>& path);

// Renames a block id (bookkeeping only, not a move).
Param rename_block(const Param& p, int from, int to);

}  // namespace gcov
