#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "covtop/word.hpp"

namespace covtop {

/**
 * Action of a finitely presented group on the cosets of a subgroup.
 *
 * Coset 0 is the subgroup itself. Columns are signed generators; the entry
 * for letter x at coset c is the coset c·x, or -1 where the enumeration
 * stopped before defining it.
 */
class CosetTable {
 public:
  CosetTable() = default;
  CosetTable(int rank, std::vector<std::vector<int>> rows, bool complete);

  bool complete() const { return complete_; }
  int size() const { return static_cast<int>(rows_.size()); }
  int rank() const { return rank_; }

  int act(int coset, int letter) const;
  /// Image of a coset under a word, or -1 if some step is undefined.
  int act(int coset, std::span<const int> w) const;

  const std::vector<std::vector<int>>& rows() const { return rows_; }

 private:
  int rank_ = 0;
  std::vector<std::vector<int>> rows_;
  bool complete_ = false;
};

/// Column of a letter in a table row: generator g at 2(g-1), its inverse at 2(g-1)+1.
inline int letter_column(int letter) {
  return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
}

/**
 * HLT enumeration with a lookahead pass when the live-coset budget is hit.
 * A complete result is renumbered in breadth-first order from coset 0; an
 * incomplete one carries whatever was defined and complete() == false.
 */
CosetTable todd_coxeter(const Presentation& p, std::span<const Word> subgroup,
                        std::size_t max_cosets);

}  // namespace covtop
