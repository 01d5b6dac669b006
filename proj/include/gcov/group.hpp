#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gcov {

using Elem = int;

struct GroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite group given by its full Cayley table.  Elements are indices in
// [0, order).  Immutable once built.
class Group {
 public:
  enum class Kind { Cyclic, Symmetric, Dihedral, Table };

  Group() = default;

  int order() const { return n_; }
  Elem id() const { return id_; }
  Elem mul(Elem a, Elem b) const { return mul_[a * n_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem conj(Elem x, Elem g) const { return mul(mul(x, g), inv(x)); }  // x g x^-1
  bool valid(Elem a) const { return a >= 0 && a < n_; }

  // range-checked variants for untrusted input
  Elem mul_checked(Elem a, Elem b) const;
  Elem inv_checked(Elem a) const;

  const std::string& name(Elem a) const { return names_[a]; }
  Kind kind() const { return kind_; }
  int degree() const { return k_; }
  std::string describe() const;

  Elem parse(std::string_view text) const;
  std::string format(Elem a) const { return names_.at(a); }

  // Throws GroupError when the table is not a group.  Exhaustive for
  // order <= 48, otherwise a fixed-seed sample of triples.
  void check_axioms() const;

  static Group cyclic(int k);
  static Group symmetric(int k);
  static Group dihedral(int k);
  static Group from_table(int n, std::vector<std::string> names, std::vector<Elem> table);

 private:
  int n_ = 0;
  int k_ = 0;
  Elem id_ = 0;
  Kind kind_ = Kind::Table;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> perms_;  // symmetric only: one-line notation

  void finish();  // locate identity, build inverses, check names
};

// "cyclic 4", "symmetric 3", "dihedral 5", "table <path>" (also "kind:arg")
Group load_group(const std::string& spec);
Group load_group_file(const std::string& path);
Group parse_group_table(std::string_view text);

}  // namespace gcov
