#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "covtop/abelian.hpp"
#include "covtop/coset_enumeration.hpp"
#include "covtop/verdict.hpp"
#include "covtop/word.hpp"

namespace covtop {

/**
 * Tietze reduction: repeatedly removes a generator that occurs exactly once
 * in some relator, substituting its expression everywhere. The resulting
 * presentation is isomorphic to the input; rewrite() carries words across.
 */
class TietzeReduction {
 public:
  explicit TietzeReduction(const Presentation& p, std::size_t max_total_length = 20000);

  const Presentation& reduced() const { return reduced_; }
  /// Image of a word over the original generators in the reduced presentation.
  Word rewrite(std::span<const int> w) const;
  /// Original generators that survived, in reduced order (1-based original indices).
  const std::vector<int>& kept() const { return kept_; }

 private:
  int original_rank_ = 0;
  std::vector<std::optional<Word>> expression_;  // by original generator; words over original letters
  std::vector<int> elimination_order_;
  std::vector<int> new_index_;                    // original generator -> reduced generator (0 = gone)
  std::vector<int> kept_;
  Presentation reduced_;
};

/**
 * Decision procedure for membership in the normal closure of a set of words
 * in a finitely presented group, i.e. triviality in the quotient
 * <p.generators | p.relators ∪ normal_generators>.
 *
 * Certificates, tried in order: free reduction, Tietze rewriting to the
 * empty word, abelianization (NO), freeness of the reduced quotient (NO),
 * a completed coset enumeration of the quotient (YES or NO), and a bounded
 * conjugate-product rewriting search (YES). Anything else is UNKNOWN.
 */
class QuotientOracle {
 public:
  QuotientOracle(const Presentation& p, std::span<const Word> normal_generators, const Budget& budget);

  Verdict is_trivial(std::span<const int> w) const;

  const AbelianQuotient& abelian() const { return abelian_; }
  /// Completed enumeration of the quotient over the trivial subgroup, if one fit the budget.
  const CosetTable* finite_table() const;

 private:
  Verdict search(const Word& w, std::size_t max_states) const;

  Presentation quotient_;
  Budget budget_;
  AbelianQuotient abelian_;
  TietzeReduction tietze_;
  std::vector<Word> search_relators_;  // cyclic rotations of reduced relators and inverses
  mutable std::optional<CosetTable> table_;
};

Verdict word_trivial_in_quotient(const Presentation& p, std::span<const Word> normal_generators,
                                 std::span<const int> w, const Budget& budget);

}  // namespace covtop
