#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "covtop/complex.hpp"
#include "covtop/spanier.hpp"
#include "covtop/verdict.hpp"
#include "covtop/word.hpp"

namespace covtop {

/**
 * Cellular covering projection total -> base. Total edges keep the
 * orientation of the base edge they lie over, and a lifted face has exactly
 * the boundary of its base face.
 *
 * An untruncated map has `sheets` cells over every base cell. A truncated
 * map is a finite window of radius `radius` around the basepoint lift; its
 * frontier vertices may lack some edge lifts.
 */
struct CoveringMap {
  Complex total;
  Complex base;
  std::vector<int> vertex_projection;
  std::vector<int> edge_projection;
  std::vector<int> face_projection;
  int sheets = 0;
  int radius = -1;
  bool truncated = false;
  std::vector<int> frontier;
  std::vector<Word> subgroup;  ///< intended H, over pi1(base) generators
};

/**
 * Covering for the subgroup generated by `h_gens` (words over pi1(c)),
 * from a completed coset enumeration. Sheet i of vertex v is "v@i".
 * Throws Error{budget} when the enumeration does not complete.
 */
CoveringMap build_covering(const Complex& c, std::span<const Word> h_gens, const Budget& budget);

/// Covering for the normal closure of `normal_gens`: enumerates π1 / ncl over the trivial subgroup.
CoveringMap build_normal_covering(const Complex& c, std::span<const Word> normal_gens, const Budget& budget);

/**
 * Finite window of the covering for H around the basepoint lift. Returns the
 * full covering when the enumeration completes within budget. Otherwise the
 * tree of reduced edge paths of length ≤ radius is unrolled and then folded
 * along every face boundary and subgroup word that can be traced inside the
 * window. With `normal`, h_gens are traced from every vertex.
 */
CoveringMap ball_covering(const Complex& c, std::span<const Word> h_gens, int radius, const Budget& budget = {},
                          bool normal = false);

/// Throws Error{fiber, edge_lift, face_lift} naming the offending cell.
void verify_covering(const CoveringMap& m);

struct ImageSubgroup {
  std::vector<Word> generators;  ///< projections of the non-tree loops of the total space
  Verdict equals_intended;
};

/// Throws Error{truncated}.
ImageSubgroup image_subgroup(const CoveringMap& m, const Budget& budget = {});

/**
 * ncl(normal_gens) ≤ ⟨h_gens⟩ in pi1(c): every normal generator acts
 * trivially on the cosets of H. Decided by a complete coset table; on free
 * π1 an infinite-index H contains no nontrivial normal subgroup.
 */
Verdict normal_closure_in_subgroup(const Pi1Data& pi, std::span<const Word> normal_gens,
                                   std::span<const Word> h_gens, const Budget& budget);

/// Subdivides total and base together, keeping the projection cellular.
CoveringMap subdivide_covering(const CoveringMap& m);

/// Cover of (a subdivision of) the base by evenly covered subcomplexes.
struct EvenCover {
  int depth = 0;
  Subdivision base;  ///< subdivide^depth of m.base
  CoveringMap covering;  ///< the covering subdivided alongside
  Cover cover;
};

/// True iff p restricted to every component of p^-1(s) is a cell bijection onto s.
bool evenly_covered(const CoveringMap& m, const Subcomplex& s);

EvenCover evenly_covered_cover(const CoveringMap& m);

/// π(result.cover) ≤ p_*π1(total): the evenly-covered lemma on one instance.
Verdict lemma_check(const CoveringMap& m, const EvenCover& even, const Budget& budget);

struct CoveringWitness {
  bool found = false;
  std::string name;
  int depth = 0;           ///< subdivision depth the cover lives on (0: the complex itself)
  Cover cover;
  Verdict verdict;
  std::vector<std::string> searched;
};

/// First cover with π(𝒰) ≤ ⟨h_gens⟩: the universe first, then star covers of subdivide^k, k ≤ budget.depth.
CoveringWitness exists_covering_for(const Complex& c, std::span<const Word> h_gens,
                                    std::span<const Cover> universe, const Budget& budget);

struct UniversalCovering {
  CoveringMap covering;
  SpApproximation sp;
  int witness_depth = 0;     ///< level whose star cover is reported as the π-stable witness
  Verdict witness_equals_sp;
  Verdict witness_pi_stable;
  std::vector<std::pair<std::string, std::string>> items;  ///< equivalent conditions checked
  std::string note;
};

/// Throws Error{budget} if not even a radius-0 window fits.
UniversalCovering universal_covering(const Complex& c, const Budget& budget);

/// Cell map total(fine) -> total(coarse) commuting with projections and fixing basepoint lifts.
struct CoveringMorphism {
  std::vector<int> vertex;
  std::vector<int> edge;
};

/// Basepoint-led lifting of `fine`'s projection through `coarse`; nullopt when no such map exists.
std::optional<CoveringMorphism> factor_through(const CoveringMap& fine, const CoveringMap& coarse);

/// Basepoint-preserving cell isomorphism commuting with projections.
bool equivalent(const CoveringMap& a, const CoveringMap& b);

/// Free π1 only: generators of H ∩ K from the pullback of the folded graphs.
std::vector<Word> intersect_subgroups(int rank, std::span<const Word> h, std::span<const Word> k);

}  // namespace covtop
