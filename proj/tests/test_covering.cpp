#include <doctest.h>

#include "covtop/coset_enumeration.hpp"
#include "covtop/covering.hpp"
#include "covtop/folding.hpp"
#include "covtop/standard_complexes.hpp"

using namespace covtop;

TEST_CASE("double cover of the circle") {
  const Complex c = circle();
  const std::vector<Word> h{{1, 1}};
  const CoveringMap m = build_covering(c, h, {});
  CHECK(m.sheets == 2);
  CHECK(m.total.num_vertices() == 2);
  CHECK(m.total.num_edges() == 2);
  CHECK_NOTHROW(verify_covering(m));
  const ImageSubgroup img = image_subgroup(m);
  CHECK(img.equals_intended.is_yes());
  CHECK(same_subgroup(1, img.generators, h));
}

TEST_CASE("identity coverings") {
  const CoveringMap d = build_covering(disc(), {}, {});
  CHECK(d.sheets == 1);
  CHECK(d.total.num_faces() == 1);
  CHECK_NOTHROW(verify_covering(d));

  const Complex w = bouquet(2);
  const std::vector<Word> all{{1}, {2}};
  const CoveringMap m = build_covering(w, all, {});
  CHECK(m.sheets == 1);
  CHECK(image_subgroup(m).equals_intended.is_yes());
}

TEST_CASE("index-2 cover of the wedge of two circles") {
  const std::vector<Word> h{{1}, {2, 2}, {2, 1, -2}};
  const CoveringMap m = build_covering(bouquet(2), h, {});
  CHECK(m.sheets == 2);
  CHECK(m.total.num_vertices() == 2);
  CHECK(m.total.num_edges() == 4);
  CHECK_NOTHROW(verify_covering(m));
  CHECK(image_subgroup(m).equals_intended.is_yes());
}

TEST_CASE("Z/3 universal cover") {
  const CoveringMap m = build_covering(cyclic(3), {}, {});
  CHECK(m.sheets == 3);
  CHECK(m.total.num_faces() == 3);
  CHECK_NOTHROW(verify_covering(m));
  CHECK(image_subgroup(m).equals_intended.is_yes());
}

TEST_CASE("infinite index raises ErrBudget") {
  try {
    build_covering(circle(), {}, {});
    FAIL("expected ErrBudget");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::budget);
  }
}

TEST_CASE("ball coverings") {
  const CoveringMap line = ball_covering(circle(), {}, 2);
  CHECK(line.truncated);
  CHECK(line.total.num_vertices() == 5);
  CHECK(line.total.num_edges() == 4);
  CHECK_NOTHROW(verify_covering(line));
  CHECK_THROWS_AS(image_subgroup(line), Error);

  const CoveringMap whole = ball_covering(theta(), std::vector<Word>{{1}, {2}}, 3);
  CHECK_FALSE(whole.truncated);
  CHECK(whole.sheets == 1);

  const CoveringMap star = ball_covering(bouquet(2), {}, 1);
  CHECK(star.truncated);
  CHECK(star.total.num_vertices() == 5);
  CHECK(star.total.num_edges() == 4);
}

TEST_CASE("verify_covering catches a re-targeted edge") {
  CoveringMap m = build_covering(circle(), std::vector<Word>{{1, 1}}, {});
  Complex broken;
  broken.add_vertex("x@0");
  broken.add_vertex("x@1");
  broken.add_edge("a@0", 0, 1);
  broken.add_edge("a@1", 1, 1);
  broken.set_basepoint(0);
  m.total = broken;
  try {
    verify_covering(m);
    FAIL("expected ErrEdgeLift");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::edge_lift);
  }
}

TEST_CASE("fiber-index law") {
  const Complex w = bouquet(2);
  const Presentation p = pi1(w).presentation;
  const std::vector<std::vector<Word>> subgroups{
      {{1}, {2, 2}, {2, 1, -2}}, {{2}, {1, 1}, {1, 2, -1}}, {{1, 1}, {2, 2}, {1, 2}}, {{1}, {2, 2, 2}, {2, 1, -2}, {-2, 1, 2}}};
  for (const auto& h : subgroups) {
    const CoveringMap m = build_covering(w, h, {});
    const CosetTable t = todd_coxeter(p, h, 1000);
    REQUIRE(t.complete());
    CHECK(m.sheets == t.size());
    CHECK_NOTHROW(verify_covering(m));
  }
}

TEST_CASE("evenly covered covers and the lemma") {
  const CoveringMap id = build_covering(disc(), {}, {});
  const EvenCover ide = evenly_covered_cover(id);
  CHECK(ide.depth == 0);
  REQUIRE(ide.cover.elements.size() == 1);
  CHECK(ide.cover.elements[0].same_cells(Subcomplex::whole(id.base)));

  const CoveringMap dbl = build_covering(circle(), std::vector<Word>{{1, 1}}, {});
  const EvenCover e = evenly_covered_cover(dbl);
  CHECK(e.depth == 1);
  CHECK(e.cover.elements.size() == 2);
  for (const Subcomplex& s : e.cover.elements) CHECK(evenly_covered(e.covering, s));
  CHECK_FALSE(lemma_check(dbl, e, {}).is_no());

  const CoveringMap z3 = build_covering(cyclic(3), {}, {});
  CHECK_FALSE(lemma_check(z3, evenly_covered_cover(z3), {}).is_no());
}

TEST_CASE("exists_covering_for") {
  const Complex w = bouquet(2);
  const Cover whole{"whole", {Subcomplex::whole(w)}};
  const std::vector<Word> all{{1}, {2}};
  const CoveringWitness a = exists_covering_for(circle(), std::vector<Word>{{1}}, std::vector<Cover>{{"whole", {Subcomplex::whole(circle())}}}, {});
  CHECK(a.found);
  CHECK(a.name == "whole");

  const CoveringWitness b = exists_covering_for(circle(), std::vector<Word>{{1, 1}}, {}, {});
  CHECK(b.found);
  CHECK(b.depth >= 1);

  const CoveringWitness n = exists_covering_for(w, all, std::vector<Cover>{whole}, {});
  CHECK(n.found);
}

TEST_CASE("universal coverings") {
  const UniversalCovering d = universal_covering(disc(), {});
  CHECK(d.covering.sheets == 1);
  CHECK(d.witness_pi_stable.is_yes());

  const UniversalCovering z = universal_covering(cyclic(3), {});
  CHECK(z.covering.sheets == 3);
  CHECK_FALSE(z.covering.truncated);
  CHECK(z.witness_equals_sp.is_yes());

  const UniversalCovering c = universal_covering(circle(), {});
  CHECK(c.covering.truncated);
  CHECK(c.covering.radius == 4);
  CHECK(c.items.size() == 6);
  CHECK(c.items.back().second == "not checked (out of scope)");
}

TEST_CASE("factorization and intersection of subgroups") {
  const Complex c = circle();
  const CoveringMap four = build_covering(c, std::vector<Word>{{1, 1, 1, 1}}, {});
  const CoveringMap two = build_covering(c, std::vector<Word>{{1, 1}}, {});
  CHECK(factor_through(four, two).has_value());
  CHECK_FALSE(factor_through(two, four).has_value());
  CHECK(equivalent(two, build_covering(c, std::vector<Word>{{-1, -1}}, {})));
  CHECK_FALSE(equivalent(two, four));

  const std::vector<Word> h{{1, 1}}, k{{1, 1, 1}};
  const std::vector<Word> hk = intersect_subgroups(1, h, k);
  const CoveringMap six = build_covering(c, hk, {});
  CHECK(six.sheets == 6);
  CHECK(six.sheets <= 2 * 3);
}

TEST_CASE("subdivide_covering stays a covering") {
  const CoveringMap m = build_covering(cyclic(3), {}, {});
  const CoveringMap s = subdivide_covering(m);
  CHECK(s.sheets == 3);
  CHECK_NOTHROW(verify_covering(s));
}
