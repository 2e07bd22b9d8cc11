#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "covtop/complex.hpp"
#include "covtop/spanier.hpp"
#include "covtop/verdict.hpp"

namespace covtop {

enum class TowerKind { hawaiian, archipelago, cone, double_cone };

std::string_view to_string(TowerKind kind);
/// Throws Error{parse} on an unknown name.
TowerKind parse_tower_kind(std::string_view name);

struct TowerStage {
  int n = 0;
  Complex complex;
  std::vector<Subcomplex> filtration;  ///< N_1 .. N_n, nested, N_1 the whole stage
  std::vector<std::string> loop_names; ///< generator loops of the stage, one per circle
};

/**
 * Finite stages X_1..X_n with bonding maps f_k : X_{k+1} -> X_k.
 *
 * Stage n of the Hawaiian tower is a wedge of n circles, circle k made of
 * edges _a{k} (x to m{k}) and a{k} (m{k} back to x), so the spanning tree
 * takes every _a{k} and a{k} is the generator. The archipelago adds faces
 * d{k} with boundary a_k a_{k+1}^-1, the cone adds a face c{k} on every
 * circle, and the double cone wedges two cone stages.
 */
struct Tower {
  TowerKind kind = TowerKind::hawaiian;
  std::vector<TowerStage> stages;  ///< stages[n-1] is X_n
  std::vector<CellMap> bonding;    ///< bonding[n-1] : X_{n+1} -> X_n

  const TowerStage& stage(int n) const { return stages.at(n - 1); }
};

TowerStage build_stage(TowerKind kind, int n);
Tower builtin_tower(TowerKind kind, int n);

/// Basepoint to basepoint, and every face goes to a face (up to rotation) or degenerates.
bool bonding_is_cellular(const Tower& t, int n);

/// Cover {N_k} ∪ closed cells outside N_k of stage n.
Cover stage_cover(const TowerStage& s, int k);
NormalSubgroupData stage_spanier(const Tower& t, int n, int k);

enum class PointClass { regular, tame, wild, unknown };
std::string_view to_string(PointClass c);

struct Evidence {
  int k = 0;
  std::string loop;
  int m = 0;  ///< filtration level tested against; 0 for the nullhomotopy test
  Verdict verdict;
};

struct Classification {
  PointClass point = PointClass::unknown;
  int n = 0;
  std::vector<Evidence> evidence;
  std::string scale;  ///< "at tower scale n"
};

/**
 * REGULAR if for some k every generator loop of π1(N_k) is trivial in π1(X_n).
 * Otherwise each such loop is tested against stage_spanier(n, m) for m ≤ n:
 * WILD on any certified NO, TAME if every answer is YES, else UNKNOWN.
 */
Classification classify_basepoint(const Tower& t, int n, const Budget& budget);

struct CoverabilityReport {
  Classification classification;
  std::string verdict;  ///< LIMIT-NOT-COVERABLE | LIMIT-COVERABLE-EVIDENCE | INCONCLUSIVE
  std::string stage_certificate;
  std::vector<std::string> notes;
};

CoverabilityReport coverability_report(const Tower& t, int n, const Budget& budget);

}  // namespace covtop
