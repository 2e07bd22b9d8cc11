#include <doctest.h>

#include <random>

#include "covtop/complex.hpp"
#include "covtop/standard_complexes.hpp"

using namespace covtop;

namespace {

int count_kind(const Subcomplex& s, CellKind k) {
  int n = 0;
  for (const CellRef& c : s.cells()) n += c.kind == k;
  return n;
}

Cover arcs_of_subdivided_circle(const Complex& c2) {
  Subcomplex upper(c2, "upper"), lower(c2, "lower");
  upper.add_closed(c2, {CellKind::edge, 0});
  lower.add_closed(c2, {CellKind::edge, 1});
  return {"arcs", {upper, lower}};
}

}  // namespace

TEST_CASE("validate accepts the standard complexes") {
  CHECK_NOTHROW(validate(circle()));
  CHECK_NOTHROW(validate(disc()));
  CHECK_NOTHROW(validate(theta()));
  CHECK_NOTHROW(validate(bouquet(3)));
  CHECK_NOTHROW(validate(cyclic(3)));
}

TEST_CASE("validate rejects broken complexes") {
  Complex dangling;
  dangling.add_vertex("x");
  dangling.add_edge("a", 0, 5);
  dangling.set_basepoint(0);
  try {
    validate(dangling);
    FAIL("expected ErrDangling");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::dangling);
  }

  Complex open;
  open.add_vertex("x");
  open.add_vertex("y");
  open.add_edge("a", 0, 1);
  open.add_face("F", {{0, false}});
  open.set_basepoint(0);
  try {
    validate(open);
    FAIL("expected ErrOpenBoundary");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::open_boundary);
  }

  Complex apart;
  apart.add_vertex("x");
  apart.add_vertex("y");
  apart.set_basepoint(0);
  try {
    validate(apart);
    FAIL("expected ErrDisconnected");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::disconnected);
  }

  Complex twice;
  twice.add_vertex("x");
  CHECK_THROWS_AS(twice.add_edge("x", 0, 0), Error);
}

TEST_CASE("subdivide counts") {
  const Subdivision c1 = subdivide(circle());
  CHECK(c1.fine.num_vertices() == 2);
  CHECK(c1.fine.num_edges() == 2);
  CHECK(c1.fine.num_faces() == 0);

  // disc: x, midpoint, center; 2 boundary halves + 2 radial edges; 2 triangles
  const Subdivision d = subdivide(disc());
  CHECK(d.fine.num_vertices() == 3);
  CHECK(d.fine.num_edges() == 4);
  CHECK(d.fine.num_faces() == 2);
  CHECK_NOTHROW(validate(d.fine));

  const Subdivision w = subdivide(bouquet(2));
  CHECK(w.fine.num_vertices() == 3);
  CHECK(w.fine.num_edges() == 4);
}

TEST_CASE("subdivision keeps the basepoint and maps back cellularly") {
  for (const Complex& c : {circle(), disc(), theta(), cyclic(3), bouquet(2)}) {
    const Subdivision s = subdivide_times(c, 2);
    CHECK_NOTHROW(validate(s.fine));
    CHECK(s.to_coarse.vertex[s.fine.basepoint()] == c.basepoint());
    for (int e = 0; e < s.fine.num_edges(); ++e) {
      const Edge& edge = s.fine.edges()[e];
      const EdgePath image = s.to_coarse.edge[e];
      CHECK(is_continuous(c, image, s.to_coarse.vertex[edge.source]));
      CHECK(c.path_target(image, s.to_coarse.vertex[edge.source]) == s.to_coarse.vertex[edge.target]);
    }
  }
}

TEST_CASE("star covers") {
  const Complex c = circle();
  const Cover u = star_cover(c);
  REQUIRE(u.elements.size() == 1);
  CHECK(u.elements[0].same_cells(Subcomplex::whole(c)));

  const Complex c2 = subdivide(c).fine;
  const Cover arcs = star_cover(c2);
  REQUIRE(arcs.elements.size() == 2);
  // closed stars of the once-subdivided circle: each vertex touches both edges
  for (const Subcomplex& s : arcs.elements) CHECK(count_kind(s, CellKind::edge) == 2);

  const Complex c4 = subdivide(c2).fine;
  const Cover fine = star_cover(c4);
  REQUIRE(fine.elements.size() == 4);
  for (const Subcomplex& s : fine.elements) {
    CHECK(count_kind(s, CellKind::edge) == 2);
    CHECK(count_kind(s, CellKind::vertex) == 3);
  }

  const Complex t = theta();
  const Cover tu = star_cover(t);
  REQUIRE(tu.elements.size() == 2);
  for (const Subcomplex& s : tu.elements) CHECK(count_kind(s, CellKind::edge) == 3);

  for (const Complex& x : {disc(), theta(), cyclic(3), subdivide_times(disc(), 2).fine})
    CHECK(is_cover(x, star_cover(x)));
}

TEST_CASE("intersect_covers") {
  const Complex c2 = subdivide(circle()).fine;
  const Cover whole{"whole", {Subcomplex::whole(c2)}};
  const Cover arcs = arcs_of_subdivided_circle(c2);

  const Cover a = intersect_covers(c2, whole, arcs);
  REQUIRE(a.elements.size() == 2);
  CHECK(refines(a, arcs));
  CHECK(refines(arcs, a));

  const Cover same = intersect_covers(c2, arcs, arcs);
  CHECK(same.elements.size() == 2);

  // Twice subdivided: arcs pulled back are 2-edge arcs A, B; the four stars
  // are 2-edge arcs, two of them equal to A and B. Every other intersection
  // is a single edge or a vertex pair inside A or B, so pruning leaves A, B.
  const Subdivision s = subdivide(c2);
  Subcomplex upper(s.fine, "upper"), lower(s.fine, "lower");
  for (int e = 0; e < s.fine.num_edges(); ++e) {
    const int coarse = s.edge_carrier[e].index;
    (coarse == 0 ? upper : lower).add_closed(s.fine, {CellKind::edge, e});
  }
  const Cover pulled{"arcs", {upper, lower}};
  const Cover stars = star_cover(s.fine);
  const Cover both = intersect_covers(s.fine, pulled, stars);
  REQUIRE(both.elements.size() == 2);
  CHECK((both.elements[0].same_cells(upper) || both.elements[0].same_cells(lower)));
  CHECK((both.elements[1].same_cells(upper) || both.elements[1].same_cells(lower)));
  CHECK(refines(both, pulled));
  CHECK(refines(both, stars));
}

TEST_CASE("refines") {
  const Complex c2 = subdivide(circle()).fine;
  const Cover whole{"whole", {Subcomplex::whole(c2)}};
  const Cover arcs = arcs_of_subdivided_circle(c2);
  CHECK(refines(arcs, whole));
  CHECK(refines(whole, whole));
  CHECK_FALSE(refines(whole, arcs));
}

TEST_CASE("refines is a preorder on random covers") {
  std::mt19937_64 rng(11);
  const Complex c = subdivide_times(theta(), 1).fine;
  auto random_cover = [&] {
    Cover u{"r", {}};
    for (int v = 0; v < c.num_vertices(); ++v) {
      Subcomplex s(c, "s");
      s.add_closed(c, {CellKind::vertex, v});
      for (int e = 0; e < c.num_edges(); ++e)
        if ((c.edges()[e].source == v || c.edges()[e].target == v) && rng() % 3) s.add_closed(c, {CellKind::edge, e});
      u.elements.push_back(s);
    }
    for (int e = 0; e < c.num_edges(); ++e) {
      Subcomplex s(c, "e");
      s.add_closed(c, {CellKind::edge, e});
      u.elements.push_back(s);
    }
    return u;
  };
  for (int i = 0; i < 30; ++i) {
    const Cover a = random_cover(), b = random_cover(), d = random_cover();
    CHECK(refines(a, a));
    if (refines(a, b) && refines(b, d)) CHECK(refines(a, d));
    try {
      const Cover x = intersect_covers(c, a, b);
      CHECK(refines(x, a));
      CHECK(refines(x, b));
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::not_cover);
    }
  }
}

TEST_CASE("wedge counts") {
  const WedgeComplex cc = wedge(circle(), circle());
  CHECK(cc.complex.num_vertices() == 1);
  CHECK(cc.complex.num_edges() == 2);
  const WedgeComplex cd = wedge(circle(), disc());
  CHECK(cc.complex.num_faces() == 0);
  CHECK(cd.complex.num_vertices() == 1);
  CHECK(cd.complex.num_edges() == 2);
  CHECK(cd.complex.num_faces() == 1);
  for (const Complex& a : {circle(), disc(), theta(), cyclic(3)}) {
    for (const Complex& b : {circle(), disc(), theta(), bouquet(2)}) {
      const WedgeComplex w = wedge(a, b);
      CHECK(w.complex.num_vertices() == a.num_vertices() + b.num_vertices() - 1);
      CHECK(w.complex.num_edges() == a.num_edges() + b.num_edges());
      CHECK(w.complex.num_faces() == a.num_faces() + b.num_faces());
      CHECK_NOTHROW(validate(w.complex));
      CHECK(w.vertex_factor[w.complex.basepoint()] == 0);
    }
  }
}

TEST_CASE("components and extract") {
  // twice-subdivided circle: edges 0,1 halve the first half, 2,3 the second
  const Complex c4 = subdivide_times(circle(), 2).fine;
  Subcomplex apart(c4, "apart");
  apart.add_closed(c4, {CellKind::edge, 1});
  apart.add_closed(c4, {CellKind::edge, 3});
  CHECK(components(c4, apart).size() == 2);
  Subcomplex joined(c4, "joined");
  joined.add_closed(c4, {CellKind::edge, 0});
  joined.add_closed(c4, {CellKind::edge, 3});
  CHECK(components(c4, joined).size() == 1);

  const Extracted x = extract(c4, joined, c4.basepoint());
  CHECK(x.complex.num_vertices() == 3);
  CHECK(x.complex.num_edges() == 2);
  CHECK(x.inclusion.vertex[x.complex.basepoint()] == c4.basepoint());
}
