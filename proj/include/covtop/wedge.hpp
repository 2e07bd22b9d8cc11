#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "covtop/complex.hpp"
#include "covtop/covering.hpp"
#include "covtop/spanier.hpp"
#include "covtop/verdict.hpp"

namespace covtop {

/// Factor (1 or 2) of an edge of the wedge.
int edge_factor(const WedgeComplex& w, int edge);

/**
 * Splits a loop at the wedge point into maximal runs of basepoint-to-basepoint
 * segments from the same factor. Throws Error{not_based}.
 */
std::vector<EdgeLoop> wedge_decompose_loop(const WedgeComplex& w, const EdgeLoop& loop);

/// Loop of factor `factor` (1 or 2) corresponding to a single-factor loop of the wedge.
EdgePath restrict_to_factor(const WedgeComplex& w, int factor, std::span<const SignedEdge> path);

struct GenerationCheck {
  Verdict verdict;
  int samples = 0;
  int pieces = 0;
  int trivial_pieces = 0;  ///< pieces nullhomotopic in the wedge
  std::string note;
};

/**
 * For `samples` random loops at the wedge point, the loop's class equals the
 * ordered product of its pieces pushed through the factor inclusions.
 */
GenerationCheck pi1_generation_check(const WedgeComplex& w, int samples, std::uint64_t seed,
                                     const Budget& budget = {});

struct SubspaceInclusion {
  Verdict in_subspace;  ///< [loop] ∈ π^sp(Y)
  Verdict in_whole;     ///< [loop] ∈ π^sp(X)
  bool violated = false;
  std::string status;
};

/// Throws Error{loop_outside} when the loop or the basepoint leaves y.
SubspaceInclusion subspace_spanier_inclusion(const Complex& c, const Subcomplex& y, const EdgeLoop& loop,
                                             const Budget& budget);

/**
 * Carries factor covers into the wedge. In each factor one element V_i is
 * chosen: the first holding every cell at the basepoint, else the first
 * touching it. V_1 and V_2 merge into one element "V1vV2"; every other
 * element is copied as "1:..." or "2:...". Throws Error{not_cover}.
 */
Cover t3_transfer(const WedgeComplex& w, const Complex& first, const Cover& u1, const Complex& second,
                  const Cover& u2);

struct T3Report {
  UniversalCovering first;
  UniversalCovering second;
  UniversalCovering wedge;
  bool first_ok = false;
  bool second_ok = false;
  bool wedge_ok = false;
  bool violation = false;
  int transfer_depth = 0;
  Cover transferred;        ///< wedge witness built from the factor witnesses, on wedge(sd^d c1, sd^d c2)
  Verdict transferred_equals_sp;
  Verdict transferred_pi_stable;
  GenerationCheck generation;
  std::string note;
};

T3Report t3_check(const Complex& first, const Complex& second, const Budget& budget);

}  // namespace covtop
