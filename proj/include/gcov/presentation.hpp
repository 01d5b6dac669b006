#pragma once

#include <string>
#include <vector>

namespace gcov {

// Finitely presented group.  Letters are +i / -i for generator i (1-based).
using Word = std::vector<int>;

struct Presentation {
  int generators = 0;
  std::vector<Word> relators;
};

Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
// Minimum over rotations of w and of its inverse; identifies conjugate relators.
Word normal_cyclic_form(const Word& w);

// Group-preserving simplification: drops trivial and duplicate relators,
// eliminates generators that occur exactly once in some relator.
Presentation tietze_simplify(const Presentation& p);

// Invariant factors of the abelianised relation matrix, including zeros for
// free rank; factors equal to 1 are omitted.  Empty means H1 = 0.
std::vector<std::string> abelian_invariants(const Presentation& p);

struct CosetResult {
  bool complete = false;
  long index = 0;
  long cosets_defined = 0;
};

// HLT coset enumeration over the trivial subgroup with a hard coset cap.
CosetResult enumerate_cosets(const Presentation& p, long max_cosets);

struct TrivialityVerdict {
  enum class Status { ProvenTrivial, Nontrivial, Unknown };
  Status status = Status::Unknown;
  std::vector<std::string> h1;  // invariant factors when Nontrivial
  int generators_after_tietze = 0;
  int relators_after_tietze = 0;
  CosetResult cosets;
  std::string describe() const;
};

const char* status_name(TrivialityVerdict::Status s);

TrivialityVerdict prove_trivial(const Presentation& p, long coset_budget);

std::string format_word(const Word& w);

}  // namespace gcov
