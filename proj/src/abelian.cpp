#include "covtop/abelian.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace covtop {

namespace {

long long checked_mul(long long a, long long b) {
  long long out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("Smith normal form overflow");
  return out;
}

long long checked_sub(long long a, long long b) {
  long long out;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("Smith normal form overflow");
  return out;
}

using Matrix = std::vector<std::vector<long long>>;

}  // namespace

AbelianQuotient::AbelianQuotient(int rank, std::span<const Word> relators) : rank_(rank) {
  Matrix a;
  for (const Word& r : relators) a.push_back(exponent_sums(r, rank));
  const int rows = static_cast<int>(a.size());
  const int cols = rank;

  column_ops_.assign(cols, std::vector<long long>(cols, 0));
  for (int i = 0; i < cols; ++i) column_ops_[i][i] = 1;

  auto swap_cols = [&](int x, int y) {
    for (auto& row : a) std::swap(row[x], row[y]);
    for (auto& row : column_ops_) std::swap(row[x], row[y]);
  };
  auto col_sub = [&](int dst, int src, long long q) {  // col dst -= q * col src
    for (auto& row : a) row[dst] = checked_sub(row[dst], checked_mul(q, row[src]));
    for (auto& row : column_ops_) row[dst] = checked_sub(row[dst], checked_mul(q, row[src]));
  };
  auto row_sub = [&](int dst, int src, long long q) {
    for (int j = 0; j < cols; ++j) a[dst][j] = checked_sub(a[dst][j], checked_mul(q, a[src][j]));
  };

  diagonal_.assign(cols, 0);
  int t = 0;
  for (; t < rows && t < cols; ++t) {
    while (true) {
      // Smallest nonzero entry of the remaining block becomes the pivot.
      int pi = -1;
      int pj = -1;
      for (int i = t; i < rows; ++i) {
        for (int j = t; j < cols; ++j) {
          if (a[i][j] != 0 && (pi < 0 || std::llabs(a[i][j]) < std::llabs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi < 0) goto done;
      std::swap(a[t], a[pi]);
      if (pj != t) swap_cols(t, pj);

      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        row_sub(i, t, a[i][t] / a[t][t]);
        if (a[i][t] != 0) clean = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        col_sub(j, t, a[t][j] / a[t][t]);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      int bad_row = -1;
      for (int i = t + 1; i < rows && bad_row < 0; ++i) {
        for (int j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            bad_row = i;
            break;
          }
        }
      }
      if (bad_row < 0) break;
      for (int j = 0; j < cols; ++j) a[t][j] += a[bad_row][j];
    }
    diagonal_[t] = std::llabs(a[t][t]);
  }
done:
  for (int i = 0; i < cols; ++i) {
    if (diagonal_[i] > 1) invariants_.divisors.push_back(diagonal_[i]);
    if (diagonal_[i] == 0) ++invariants_.free_rank;
  }
}

std::vector<long long> AbelianQuotient::image(std::span<const int> w) const {
  const std::vector<long long> v = exponent_sums(w, rank_);
  std::vector<long long> torsion;
  std::vector<long long> free;
  for (int j = 0; j < rank_; ++j) {
    long long u = 0;
    for (int i = 0; i < rank_; ++i) u += checked_mul(v[i], column_ops_[i][j]);
    const long long d = diagonal_[j];
    if (d == 0) {
      free.push_back(u);
    } else if (d > 1) {
      torsion.push_back(((u % d) + d) % d);
    }
  }
  torsion.insert(torsion.end(), free.begin(), free.end());
  return torsion;
}

bool AbelianQuotient::is_zero(std::span<const int> w) const {
  for (long long x : image(w)) {
    if (x != 0) return false;
  }
  return true;
}

AbelianInvariants abelianization(const Presentation& p, std::span<const Word> extra_relators) {
  std::vector<Word> relators = p.relators;
  relators.insert(relators.end(), extra_relators.begin(), extra_relators.end());
  return AbelianQuotient(p.rank(), relators).invariants();
}

}  // namespace covtop
