#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "covtop/complex.hpp"
#include "covtop/quotient.hpp"
#include "covtop/verdict.hpp"
#include "covtop/word.hpp"

namespace covtop {

/**
 * Edge-path presentation of π1 at a basepoint. The spanning tree is grown
 * breadth-first from the basepoint, scanning edges in id order; every
 * non-tree edge is a generator (named by its edge id) and every face
 * boundary a relator.
 */
struct Pi1Data {
  Complex complex;
  int basepoint = 0;
  std::vector<int> tree_parent;          ///< parent vertex in the tree, -1 at the root
  std::vector<SignedEdge> tree_step;     ///< step from the parent into the vertex
  std::vector<int> bfs_order;            ///< position of each vertex in the search
  std::vector<int> generator_of_edge;    ///< 0 for tree edges
  std::vector<int> edge_of_generator;    ///< indexed by generator - 1
  Presentation presentation;

  /// Tree path from the basepoint to v.
  EdgePath tree_path(int v) const;
  /// Word of any edge path; closed paths give their homotopy class.
  Word word_of(std::span<const SignedEdge> path) const;
  /// Reduced edge loop at the basepoint realizing w.
  EdgePath loop_of(std::span<const int> w) const;
  EdgePath generator_loop(int g) const;
};

/// Throws Error{disconnected} (or any other validation error) on bad input.
Pi1Data pi1(const Complex& c, std::optional<int> basepoint = std::nullopt);

/// Normal generating set of a subgroup of π1, with a label saying where it came from.
struct NormalSubgroupData {
  std::shared_ptr<const Pi1Data> parent;
  std::vector<Word> generators;
  std::string provenance;

  bool trivially_trivial() const { return generators.empty(); }
};

/**
 * Normal generators of π(u, x): one conjugated generator set of π1(K) per
 * connected component K of every element, connected to the basepoint by
 * the tree path to the component's earliest vertex in search order.
 * Throws Error{not_cover}.
 */
NormalSubgroupData spanier_generators(std::shared_ptr<const Pi1Data> parent, const Cover& u);
NormalSubgroupData spanier_generators(const Complex& c, const Cover& u);

/// small ≤ big, both over the same parent.
Verdict normal_contains(const NormalSubgroupData& big, const NormalSubgroupData& small, const Budget& budget);
Verdict normal_equal(const NormalSubgroupData& a, const NormalSubgroupData& b, const Budget& budget);

/// π(v, x) ≤ π(u, x).
Verdict spanier_contains(const Complex& c, const Cover& u, const Cover& v, const Budget& budget);
Verdict spanier_equal(const Complex& c, const Cover& u, const Cover& v, const Budget& budget);

/// Cover of subdivide^depth(c); refines a cover of c when every cell's carrier lies in one element.
struct SubdividedCover {
  int depth = 0;
  Cover cover;
};

/// Covers to test π-stability against; `exhaustive` is the caller's claim that nothing else matters.
struct Universe {
  std::vector<Cover> covers;
  std::vector<SubdividedCover> subdivided;
  bool exhaustive = false;
};

/// Every element of `fine` (a cover of s.fine) lies, through carriers, in some element of `coarse`.
bool refines_through(const Subdivision& s, const Cover& fine, const Cover& coarse);

Verdict pi_stable(const Complex& c, const Cover& u, const Universe& universe, const Budget& budget);

/// One level of the star-cover approximation of π^sp.
struct SpLevel {
  int depth = 0;
  Subdivision subdivision;   ///< subdivide^depth of the base, with the map back
  Cover cover;               ///< star cover of subdivision.fine
  NormalSubgroupData group;  ///< π(cover), translated to words of the base π1
};

struct SpApproximation {
  std::vector<SpLevel> levels;
  NormalSubgroupData value;   ///< group of the last level
  bool stabilized = false;    ///< last two levels are equal (verdict YES)
  Verdict last_comparison = Verdict::unknown(UnknownReason::budget, "depth 0");
  int depth = 0;
};

/// Levels k = 0..depth. With stop_early, stops once two consecutive levels are trivial.
SpApproximation spanier_sp_approx(const Complex& c, int depth, const Budget& budget = {},
                                  bool stop_early = false);

/// π(u) of a cover living on a subdivision, pushed down to the base π1.
NormalSubgroupData push_down(const NormalSubgroupData& fine_group, const CellMap& to_base,
                             std::shared_ptr<const Pi1Data> base);

/**
 * Moves normal generators along `path` (from the current basepoint to a
 * new one): g becomes path^-1 g path, and π1 is re-rooted at the path's end.
 * Throws Error{path_endpoints}.
 */
NormalSubgroupData change_basepoint(const NormalSubgroupData& d, std::span<const SignedEdge> path);

/// Abelian invariants of π1 / ncl(d.generators).
AbelianInvariants quotient_invariants(const NormalSubgroupData& d);

}  // namespace covtop
