#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace covtop {

/// Group word: letter g > 0 is generator g (1-based), -g its inverse.
using Word = std::vector<int>;

Word free_reduce(std::span<const int> w);
Word inverse(std::span<const int> w);
Word concat(std::span<const int> a, std::span<const int> b);
Word conjugate(std::span<const int> w, std::span<const int> by);  ///< by^-1 w by
Word commutator(std::span<const int> a, std::span<const int> b);  ///< a b a^-1 b^-1

/// Freely and cyclically reduced.
Word cyclic_reduce(std::span<const int> w);

/// Least rotation under lexicographic order of the cyclically reduced word.
Word canonical_rotation(std::span<const int> w);

/// Exponent sum of every generator, indexed 0..rank-1.
std::vector<long long> exponent_sums(std::span<const int> w, int rank);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  int rank() const { return static_cast<int>(generators.size()); }
};

/// Whitespace-separated signed symbols, e.g. "a b^-1 a". The empty word prints as "1".
std::string to_string(std::span<const int> w, std::span<const std::string> names);

/// Inverse of to_string; also accepts "x^k" for integer k and "1" for the identity.
Word parse_word(std::string_view text, std::span<const std::string> names);

std::string to_string(const Presentation& p);

/// Resource limits for every procedure that may not terminate.
struct Budget {
  std::size_t max_cosets = 50000;      ///< live cosets in an enumeration, states in a search
  std::size_t max_word_length = 64;    ///< longest word the conjugate-product search visits
  int depth = 3;                       ///< subdivision depth for star-cover approximations
  int radius = 4;                      ///< ball radius for truncated coverings

  Budget doubled() const {
    return {max_cosets * 2, max_word_length * 2, depth, radius};
  }
};

}  // namespace covtop
