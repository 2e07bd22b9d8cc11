#pragma once

#include <span>
#include <vector>

#include "covtop/word.hpp"

namespace covtop {

/// Z^free_rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k with d_i > 1 and d_i | d_{i+1}.
struct AbelianInvariants {
  std::vector<long long> divisors;
  int free_rank = 0;

  bool trivial() const { return divisors.empty() && free_rank == 0; }
  bool operator==(const AbelianInvariants&) const = default;
};

/**
 * Abelianization of <generators | relators> through the Smith normal form
 * of the exponent-sum matrix. Keeps the column transform so that the image
 * of any word can be read off in the normal-form coordinates.
 */
class AbelianQuotient {
 public:
  AbelianQuotient(int rank, std::span<const Word> relators);

  const AbelianInvariants& invariants() const { return invariants_; }

  /// Torsion coordinates (reduced mod their divisors) followed by free coordinates.
  std::vector<long long> image(std::span<const int> w) const;
  bool is_zero(std::span<const int> w) const;

 private:
  int rank_ = 0;
  std::vector<long long> diagonal_;               // one entry per column; 0 past the matrix rank
  std::vector<std::vector<long long>> column_ops_;  // rank x rank unimodular
  AbelianInvariants invariants_;
};

AbelianInvariants abelianization(const Presentation& p, std::span<const Word> extra_relators = {});

}  // namespace covtop
