#include "covtop/wedge.hpp"

#include <random>

namespace covtop {

int edge_factor(const WedgeComplex& w, int edge) { return w.edge_factor.at(edge); }

std::vector<EdgeLoop> wedge_decompose_loop(const WedgeComplex& w, const EdgeLoop& loop) {
  const Complex& c = w.complex;
  if (loop.base != c.basepoint()) throw Error(ErrorKind::not_based, "loop is not based at the wedge point");
  validate_loop(c, loop);

  std::vector<EdgeLoop> pieces;
  std::vector<int> factors;
  EdgePath segment;
  int at = loop.base;
  for (const SignedEdge& s : loop.word) {
    segment.push_back(s);
    at = c.target(s);
    if (at != c.basepoint()) continue;
    const int factor = edge_factor(w, segment.front().edge);
    if (!factors.empty() && factors.back() == factor) {
      pieces.back().word.insert(pieces.back().word.end(), segment.begin(), segment.end());
    } else {
      pieces.push_back({loop.base, segment});
      factors.push_back(factor);
    }
    segment.clear();
  }
  return pieces;
}

EdgePath restrict_to_factor(const WedgeComplex& w, int factor, std::span<const SignedEdge> path) {
  const int offset = factor == 1 ? 0 : static_cast<int>(w.from_first.edge.size());
  EdgePath out;
  for (const SignedEdge& s : path) {
    if (edge_factor(w, s.edge) != factor) {
      throw Error(ErrorKind::loop_outside, "edge '" + w.complex.edges()[s.edge].id + "' is not in factor " +
                                               std::to_string(factor));
    }
    out.push_back({s.edge - offset, s.inverted});
  }
  return out;
}

GenerationCheck pi1_generation_check(const WedgeComplex& w, int samples, std::uint64_t seed, const Budget& budget) {
  const Pi1Data pi = pi1(w.complex);
  const QuotientOracle oracle(pi.presentation, {}, budget);
  const auto adjacency = w.complex.adjacency();
  std::mt19937_64 rng(seed);
  GenerationCheck out;
  out.samples = samples;
  Verdict acc = Verdict::yes("");
  for (int i = 0; i < samples; ++i) {
    EdgePath walk;
    int at = pi.basepoint;
    const int length = std::uniform_int_distribution<int>(0, 12)(rng);
    for (int step = 0; step < length && !adjacency[at].empty(); ++step) {
      const auto& choices = adjacency[at];
      const SignedEdge s = choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)];
      walk.push_back(s);
      at = w.complex.target(s);
    }
    const EdgePath back = inverse(pi.tree_path(at));
    walk.insert(walk.end(), back.begin(), back.end());

    Word product;
    for (const EdgeLoop& piece : wedge_decompose_loop(w, {pi.basepoint, walk})) {
      const int factor = edge_factor(w, piece.word.front().edge);
      const EdgePath local = restrict_to_factor(w, factor, piece.word);
      const EdgePath image = (factor == 1 ? w.from_first : w.from_second).apply(local);
      const Word word = pi.word_of(image);
      ++out.pieces;
      if (oracle.is_trivial(word).is_yes()) ++out.trivial_pieces;
      product.insert(product.end(), word.begin(), word.end());
    }
    const Word difference = concat(pi.word_of(walk), inverse(free_reduce(product)));
    if (!difference.empty()) acc = conjunction(acc, oracle.is_trivial(difference));
    if (acc.is_no()) break;
  }
  if (acc.is_yes()) {
    acc.certificate = std::to_string(samples) + " loops equal the product of their factor pieces";
  }
  out.verdict = acc;
  out.note = "edge paths meet the wedge point discretely, so only the two factor families are used";
  return out;
}

SubspaceInclusion subspace_spanier_inclusion(const Complex& c, const Subcomplex& y, const EdgeLoop& loop,
                                             const Budget& budget) {
  validate_loop(c, loop);
  const int base = c.basepoint() >= 0 ? c.basepoint() : 0;
  if (loop.base != base) throw Error(ErrorKind::not_based, "loop is not based at the basepoint");
  if (!y.contains_vertex(base)) throw Error(ErrorKind::loop_outside, "basepoint is not in the subspace");
  for (const SignedEdge& s : loop.word) {
    if (!y.contains_edge(s.edge)) {
      throw Error(ErrorKind::loop_outside, "edge '" + c.edges()[s.edge].id + "' is not in the subspace");
    }
  }

  const Extracted sub = extract(c, y, base);
  std::vector<int> local(c.num_edges(), -1);
  for (int e = 0; e < sub.complex.num_edges(); ++e) local[sub.inclusion.edge[e].front().edge] = e;
  EdgePath inside;
  for (const SignedEdge& s : loop.word) inside.push_back({local[s.edge], s.inverted});

  SubspaceInclusion out;
  const SpApproximation sp_y = spanier_sp_approx(sub.complex, budget.depth, budget, true);
  out.in_subspace = word_trivial_in_quotient(sp_y.value.parent->presentation, sp_y.value.generators,
                                             sp_y.value.parent->word_of(inside), budget);
  const SpApproximation sp_x = spanier_sp_approx(c, budget.depth, budget, true);
  out.in_whole = word_trivial_in_quotient(sp_x.value.parent->presentation, sp_x.value.generators,
                                          sp_x.value.parent->word_of(loop.word), budget);
  out.violated = out.in_subspace.is_yes() && out.in_whole.is_no();
  if (out.violated) {
    out.status = "violated";
  } else if (!out.in_subspace.is_yes()) {
    out.status = "consistent: premise does not hold";
  } else if (out.in_whole.is_yes()) {
    out.status = "consistent: conclusion holds";
  } else {
    out.status = "undecided: conclusion unknown";
  }
  return out;
}

namespace {

/// V_i of the factor cover: the first element holding every cell at the basepoint, else the first one touching it.
std::size_t basepoint_element(const Complex& factor, const Cover& u) {
  const int x = factor.basepoint();
  std::size_t touching = u.elements.size();
  for (std::size_t i = 0; i < u.elements.size(); ++i) {
    const Subcomplex& s = u.elements[i];
    if (!s.contains_vertex(x)) continue;
    if (touching == u.elements.size()) touching = i;
    bool neighborhood = true;
    for (int e = 0; e < factor.num_edges() && neighborhood; ++e) {
      const Edge& edge = factor.edges()[e];
      if ((edge.source == x || edge.target == x) && !s.contains_edge(e)) neighborhood = false;
    }
    for (int f = 0; f < factor.num_faces() && neighborhood; ++f) {
      for (const SignedEdge& b : factor.faces()[f].boundary) {
        if (factor.source(b) == x && !s.contains_face(f)) {
          neighborhood = false;
          break;
        }
      }
    }
    if (neighborhood) return i;
  }
  return touching;
}

}  // namespace

Cover t3_transfer(const WedgeComplex& w, const Complex& first, const Cover& u1, const Complex& second,
                  const Cover& u2) {
  require_cover(first, u1);
  require_cover(second, u2);
  const Complex& c = w.complex;
  Cover out;
  out.name = "t3(" + u1.name + "," + u2.name + ")";
  Subcomplex merged(c, "V1vV2");

  auto carry = [&](const Complex& factor, const Cover& u, const CellMap& map, const std::vector<int>& faces,
                   const std::string& tag) {
    const std::size_t v = basepoint_element(factor, u);
    for (std::size_t i = 0; i < u.elements.size(); ++i) {
      const Subcomplex& s = u.elements[i];
      Subcomplex image(c, tag + ":" + s.name());
      for (int x = 0; x < factor.num_vertices(); ++x)
        if (s.contains_vertex(x)) image.insert({CellKind::vertex, map.vertex[x]});
      for (int e = 0; e < factor.num_edges(); ++e)
        if (s.contains_edge(e)) image.insert({CellKind::edge, map.edge[e].front().edge});
      for (int f = 0; f < factor.num_faces(); ++f)
        if (s.contains_face(f)) image.insert({CellKind::face, faces[f]});
      if (i == v) {
        merged = merged.unite(image);
      } else {
        out.elements.push_back(std::move(image));
      }
    }
  };
  carry(first, u1, w.from_first, w.face_from_first, "1");
  carry(second, u2, w.from_second, w.face_from_second, "2");
  merged.set_name("V1vV2");
  out.elements.insert(out.elements.begin(), std::move(merged));
  require_cover(c, out);
  return out;
}

namespace {

bool succeeded(const UniversalCovering& u) { return u.witness_pi_stable.is_yes(); }

/// wedge(sd^d c1, sd^d c2) -> wedge(c1, c2), factor by factor.
CellMap wedge_of_maps(const WedgeComplex& fine, const WedgeComplex& coarse, const Subdivision& s1,
                      const Subdivision& s2) {
  CellMap out;
  out.vertex.assign(fine.complex.num_vertices(), coarse.complex.basepoint());
  out.edge.assign(fine.complex.num_edges(), {});
  auto place = [&](const CellMap& from_fine, const Subdivision& s, const CellMap& from_coarse) {
    for (std::size_t v = 0; v < from_fine.vertex.size(); ++v) {
      out.vertex[from_fine.vertex[v]] = from_coarse.vertex[s.to_coarse.vertex[v]];
    }
    for (std::size_t e = 0; e < from_fine.edge.size(); ++e) {
      out.edge[from_fine.edge[e].front().edge] = from_coarse.apply(s.to_coarse.edge[e]);
    }
  };
  place(fine.from_first, s1, coarse.from_first);
  place(fine.from_second, s2, coarse.from_second);
  return out;
}

}  // namespace

T3Report t3_check(const Complex& first, const Complex& second, const Budget& budget) {
  T3Report r;
  const WedgeComplex w = wedge(first, second);
  r.first = universal_covering(first, budget);
  r.second = universal_covering(second, budget);
  r.wedge = universal_covering(w.complex, budget);
  r.first_ok = succeeded(r.first);
  r.second_ok = succeeded(r.second);
  r.wedge_ok = succeeded(r.wedge);
  r.violation = (r.first_ok && r.second_ok) != r.wedge_ok;

  r.transfer_depth = std::max(r.first.witness_depth, r.second.witness_depth);
  const Subdivision s1 = subdivide_times(first, r.transfer_depth);
  const Subdivision s2 = subdivide_times(second, r.transfer_depth);
  const WedgeComplex fine = wedge(s1.fine, s2.fine);
  Cover c1 = star_cover(s1.fine);
  Cover c2 = star_cover(s2.fine);
  c1.name = "star(sd^" + std::to_string(r.transfer_depth) + " X1)";
  c2.name = "star(sd^" + std::to_string(r.transfer_depth) + " X2)";
  r.transferred = t3_transfer(fine, s1.fine, c1, s2.fine, c2);

  auto base = r.wedge.sp.value.parent;
  auto fine_pi = std::make_shared<const Pi1Data>(pi1(fine.complex));
  const NormalSubgroupData pushed =
      push_down(spanier_generators(fine_pi, r.transferred), wedge_of_maps(fine, w, s1, s2), base);
  r.transferred_equals_sp = normal_equal(pushed, r.wedge.sp.value, budget);
  if (pushed.generators.empty()) {
    r.transferred_pi_stable = Verdict::yes("π(" + r.transferred.name + ") is trivial and cannot drop");
  } else {
    Universe universe;
    universe.subdivided.push_back({1, star_cover(subdivide(fine.complex).fine)});
    r.transferred_pi_stable = pi_stable(fine.complex, r.transferred, universe, budget);
  }
  r.generation = pi1_generation_check(w, 20, 1, budget);
  r.note = r.generation.note;
  return r;
}

}  // namespace covtop
