#pragma once

#include <string>
#include <vector>

#include "gnorm/group.hpp"

namespace gnorm {

/// A word is a sequence of signed 1-based generator indices: +k means
/// generator k-1, -k its inverse.  Words are freely reduced on input.
using Word = std::vector<int>;

Word reduce_word(Word w);
Word invert_word(const Word& w);

struct Presentation {
  int n_generators = 0;
  std::vector<Word> relators;
  std::string label;
};

/// Validates generator indices and freely reduces every relator.
Presentation make_presentation(int n_generators, std::vector<Word> relators,
                               std::string label = "");

/// Complete coset table: row = coset, columns alternate generator and inverse
/// (column 2k = generator k, 2k+1 = its inverse).  Row 0 is the subgroup coset.
struct CosetTable {
  int n_cosets = 0;
  int n_generators = 0;
  std::vector<int> entries;

  int at(int coset, int col) const {
    return entries[static_cast<size_t>(coset) * (2 * n_generators) + col];
  }
  int apply(int coset, int signed_gen) const {
    int col = signed_gen > 0 ? 2 * (signed_gen - 1) : 2 * (-signed_gen - 1) + 1;
    return at(coset, col);
  }
};

/// Coset enumeration over the subgroup generated by `subgroup_words`:
/// relator scanning with definition on first blank and immediate coincidence
/// merging.  Deterministic for identical inputs.  Throws
/// Errc::enumeration_overflow when live cosets exceed max_cosets.
CosetTable coset_enumerate(const Presentation& P, const std::vector<Word>& subgroup_words,
                           int max_cosets);

struct Realization {
  GroupPtr group;
  std::vector<int> generator_images;  // presentation generator -> element
};

/// Enumerates over the trivial subgroup and converts the coset action into a
/// Cayley table (regular representation).  Element 0 is the identity.
Realization realize(const Presentation& P, int max_cosets);

/// Evaluates a word left-to-right in a realized group.
int word_value(const FiniteGroup& G, const std::vector<int>& generator_images, const Word& w);

}  // namespace gnorm
