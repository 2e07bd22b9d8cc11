#pragma once

#include <span>
#include <vector>

#include "covtop/word.hpp"

namespace covtop {

/**
 * Folded core graph of a finitely generated subgroup of the free group of
 * the given rank. Vertex 0 is the base; edges are labelled by generators
 * and folding makes the labelling deterministic, so membership is decided
 * by reading a reduced word from the base.
 */
class SubgroupGraph {
 public:
  SubgroupGraph(int rank, std::span<const Word> generators);

  int rank() const { return rank_; }
  int num_vertices() const { return static_cast<int>(out_.size()); }

  /// Endpoint of reading w from `start`, or -1 if the read falls off the graph.
  int read(int start, std::span<const int> w) const;
  bool contains(std::span<const int> w) const;

  /// Every vertex has every signed label: the subgroup has finite index equal to num_vertices().
  bool is_complete() const;
  /// w fixes every vertex, i.e. lies in every conjugate of the subgroup (complete graphs only).
  bool fixes_every_vertex(std::span<const int> w) const;

  /// Free basis read off a spanning tree of the graph.
  std::vector<Word> basis() const;

  /// Core graph of the intersection with another subgroup (pullback of the two graphs).
  SubgroupGraph intersect(const SubgroupGraph& other) const;

  int target(int v, int letter) const;

 private:
  struct Folded {};
  SubgroupGraph(Folded, int rank, std::vector<std::vector<int>> out);

  int rank_ = 0;
  std::vector<std::vector<int>> out_;  // out_[v][letter_column(x)] or -1
};

bool fold_membership(int rank, std::span<const Word> subgroup, std::span<const int> w);

/// Mutual containment of two finitely generated subgroups of a free group.
bool same_subgroup(int rank, std::span<const Word> a, std::span<const Word> b);

}  // namespace covtop
