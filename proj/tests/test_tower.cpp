#include <doctest.h>

#include "covtop/tower.hpp"

using namespace covtop;

namespace {

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("stage counts") {
  const TowerStage h2 = build_stage(TowerKind::hawaiian, 2);
  CHECK(h2.complex.num_vertices() == 3);
  CHECK(h2.complex.num_edges() == 4);
  CHECK(h2.complex.num_faces() == 0);

  const TowerStage a3 = build_stage(TowerKind::archipelago, 3);
  const TowerStage h3 = build_stage(TowerKind::hawaiian, 3);
  CHECK(a3.complex.num_faces() == 2);
  CHECK(a3.complex.num_edges() == h3.complex.num_edges());

  const TowerStage c2 = build_stage(TowerKind::cone, 2);
  CHECK(abelianization(pi1(c2.complex).presentation).trivial());
  CHECK(pi1(c2.complex).presentation.relators.size() == 2);

  const TowerStage d3 = build_stage(TowerKind::double_cone, 3);
  CHECK(d3.complex.num_faces() == 6);
}

TEST_CASE("filtrations are nested and bonding maps are cellular") {
  for (TowerKind k : {TowerKind::hawaiian, TowerKind::archipelago, TowerKind::cone, TowerKind::double_cone}) {
    const Tower t = builtin_tower(k, 4);
    for (int n = 1; n <= 4; ++n) {
      const TowerStage& s = t.stage(n);
      REQUIRE(static_cast<int>(s.filtration.size()) == n);
      CHECK(s.filtration[0].same_cells(Subcomplex::whole(s.complex)));
      for (int i = 1; i < n; ++i) CHECK(s.filtration[i].is_subset_of(s.filtration[i - 1]));
    }
    for (int n = 1; n < 4; ++n) CHECK(bonding_is_cellular(t, n));
  }
}

TEST_CASE("stage Spanier groups") {
  const Tower h = builtin_tower(TowerKind::hawaiian, 3);
  const NormalSubgroupData s = stage_spanier(h, 3, 2);
  const AbelianInvariants q = quotient_invariants(s);
  CHECK(q.free_rank == 1);
  CHECK(q.divisors.empty());
  CHECK(quotient_invariants(stage_spanier(h, 3, 1)).trivial());

  const Tower c = builtin_tower(TowerKind::cone, 3);
  for (int k = 1; k <= 3; ++k) CHECK(quotient_invariants(stage_spanier(c, 3, k)).trivial());

  // filtration monotonicity
  for (TowerKind kind : {TowerKind::hawaiian, TowerKind::archipelago}) {
    const Tower t = builtin_tower(kind, 4);
    for (int k = 1; k < 4; ++k)
      CHECK_FALSE(normal_contains(stage_spanier(t, 4, k), stage_spanier(t, 4, k + 1), {}).is_no());
  }
}

TEST_CASE("classification") {
  const Budget b;
  for (int n = 2; n <= 5; ++n) {
    const Classification h = classify_basepoint(builtin_tower(TowerKind::hawaiian, n), n, b);
    CHECK(h.point == PointClass::wild);
    bool abelian_no = false;
    for (const Evidence& e : h.evidence) {
      CHECK_FALSE(e.verdict.is_unknown());
      if (e.verdict.is_no() && contains(e.verdict.certificate, "abelianization")) abelian_no = true;
    }
    CHECK(abelian_no);
    CHECK(h.scale == "at tower scale " + std::to_string(n));

    const Classification a = classify_basepoint(builtin_tower(TowerKind::archipelago, n), n, b);
    CHECK(a.point == PointClass::tame);
    for (const Evidence& e : a.evidence) CHECK(e.verdict.is_yes());

    CHECK(classify_basepoint(builtin_tower(TowerKind::cone, n), n, b).point == PointClass::regular);
  }
}

TEST_CASE("classification does not flip with more budget") {
  for (TowerKind k : {TowerKind::hawaiian, TowerKind::archipelago, TowerKind::cone}) {
    const Tower t = builtin_tower(k, 4);
    const Classification a = classify_basepoint(t, 4, {});
    const Classification b = classify_basepoint(t, 4, Budget{}.doubled());
    CHECK(a.point == b.point);
  }
}

TEST_CASE("coverability reports") {
  const CoverabilityReport h = coverability_report(builtin_tower(TowerKind::hawaiian, 4), 4, {});
  CHECK(h.verdict == "LIMIT-NOT-COVERABLE");
  const CoverabilityReport a = coverability_report(builtin_tower(TowerKind::archipelago, 4), 4, {});
  CHECK(a.verdict == "LIMIT-COVERABLE-EVIDENCE");
  CHECK(a.classification.point == PointClass::tame);
  const CoverabilityReport d = coverability_report(builtin_tower(TowerKind::double_cone, 3), 3, {});
  CHECK(contains(d.stage_certificate, "coverable"));
  bool cited = false;
  for (const std::string& note : d.notes) cited = cited || contains(note, "simply connected universal covering");
  CHECK(cited);
}

TEST_CASE("tower kind names") {
  CHECK(parse_tower_kind("hawaiian") == TowerKind::hawaiian);
  CHECK(to_string(TowerKind::double_cone) == "double_cone");
  CHECK_THROWS_AS(parse_tower_kind("torus"), Error);
}
