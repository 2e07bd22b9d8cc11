#include "covtop/spanier.hpp"

#include <algorithm>
#include <set>

#include "covtop/coset_enumeration.hpp"

namespace covtop {

EdgePath Pi1Data::tree_path(int v) const {
  EdgePath out;
  while (tree_parent[v] >= 0) {
    out.push_back(tree_step[v]);
    v = tree_parent[v];
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Word Pi1Data::word_of(std::span<const SignedEdge> path) const {
  Word w;
  for (const SignedEdge& s : path) {
    const int g = generator_of_edge[s.edge];
    if (g != 0) w.push_back(s.inverted ? -g : g);
  }
  return free_reduce(w);
}

EdgePath Pi1Data::generator_loop(int g) const {
  const int e = edge_of_generator[g - 1];
  const Edge& edge = complex.edges()[e];
  EdgePath out = tree_path(edge.source);
  out.push_back({e, false});
  const EdgePath back = inverse(tree_path(edge.target));
  out.insert(out.end(), back.begin(), back.end());
  return reduce_path(out);
}

EdgePath Pi1Data::loop_of(std::span<const int> w) const {
  EdgePath out;
  for (int x : w) {
    const EdgePath piece = x > 0 ? generator_loop(x) : inverse(generator_loop(-x));
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return reduce_path(out);
}

Pi1Data pi1(const Complex& c, std::optional<int> basepoint) {
  validate(c);
  Pi1Data d;
  d.complex = c;
  d.basepoint = basepoint.value_or(c.basepoint() >= 0 ? c.basepoint() : 0);
  if (d.basepoint < 0 || d.basepoint >= c.num_vertices()) {
    throw Error(ErrorKind::dangling, "basepoint is not a vertex");
  }
  const int nv = c.num_vertices();
  d.tree_parent.assign(nv, -1);
  d.tree_step.assign(nv, {});
  d.bfs_order.assign(nv, -1);
  std::vector<bool> tree_edge(c.num_edges(), false);
  const auto adjacency = c.adjacency();
  std::vector<int> queue{d.basepoint};
  d.bfs_order[d.basepoint] = 0;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const int u = queue[k];
    for (const SignedEdge& s : adjacency[u]) {
      const int v = c.target(s);
      if (d.bfs_order[v] >= 0) continue;
      d.bfs_order[v] = static_cast<int>(queue.size());
      d.tree_parent[v] = u;
      d.tree_step[v] = s;
      tree_edge[s.edge] = true;
      queue.push_back(v);
    }
  }
  if (static_cast<int>(queue.size()) != nv) {
    throw Error(ErrorKind::disconnected, "1-skeleton is not connected");
  }
  d.generator_of_edge.assign(c.num_edges(), 0);
  for (int e = 0; e < c.num_edges(); ++e) {
    if (tree_edge[e]) continue;
    d.edge_of_generator.push_back(e);
    d.generator_of_edge[e] = static_cast<int>(d.edge_of_generator.size());
    d.presentation.generators.push_back(c.edges()[e].id);
  }
  for (const Face& f : c.faces()) d.presentation.relators.push_back(d.word_of(f.boundary));
  return d;
}

// ---------------------------------------------------------------------------
// Spanier generators

namespace {

constexpr std::size_t component_triviality_cosets = 256;

/// Generator loops of π1(K) at `root`, as edge loops of the parent.
std::vector<EdgePath> component_loops(const Complex& parent, const Subcomplex& k, int root) {
  const Extracted piece = extract(parent, k, root);
  const Pi1Data local = pi1(piece.complex);
  const TietzeReduction tietze(local.presentation);
  const Presentation& reduced = tietze.reduced();
  if (reduced.rank() == 0) return {};
  if (!reduced.relators.empty()) {
    const CosetTable table = todd_coxeter(reduced, {}, component_triviality_cosets);
    if (table.complete() && table.size() == 1) return {};
  }
  std::vector<EdgePath> out;
  for (int g : tietze.kept()) out.push_back(piece.inclusion.apply(local.generator_loop(g)));
  return out;
}

void add_generator(std::vector<Word>& generators, std::set<Word>& seen, Word w) {
  w = free_reduce(w);
  if (w.empty()) return;
  if (seen.insert(w).second) generators.push_back(std::move(w));
}

}  // namespace

NormalSubgroupData spanier_generators(std::shared_ptr<const Pi1Data> parent, const Cover& u) {
  const Complex& c = parent->complex;
  require_cover(c, u);
  NormalSubgroupData out;
  out.parent = parent;
  out.provenance = "spanier(" + u.name + ")";
  std::set<Word> seen;
  for (const Subcomplex& element : u.elements) {
    for (const Subcomplex& k : components(c, element)) {
      int root = -1;
      for (int v = 0; v < c.num_vertices(); ++v) {
        if (k.contains_vertex(v) && (root < 0 || parent->bfs_order[v] < parent->bfs_order[root])) root = v;
      }
      const EdgePath gamma = parent->tree_path(root);
      for (const EdgePath& loop : component_loops(c, k, root)) {
        EdgePath path = gamma;
        path.insert(path.end(), loop.begin(), loop.end());
        const EdgePath back = inverse(gamma);
        path.insert(path.end(), back.begin(), back.end());
        add_generator(out.generators, seen, parent->word_of(path));
      }
    }
  }
  return out;
}

NormalSubgroupData spanier_generators(const Complex& c, const Cover& u) {
  return spanier_generators(std::make_shared<const Pi1Data>(pi1(c)), u);
}

Verdict normal_contains(const NormalSubgroupData& big, const NormalSubgroupData& small, const Budget& budget) {
  if (small.generators.empty()) return Verdict::yes("trivial subgroup");
  const QuotientOracle oracle(big.parent->presentation, big.generators, budget);
  const auto& names = big.parent->presentation.generators;
  Verdict acc = Verdict::yes("");
  for (const Word& g : small.generators) {
    Verdict v = oracle.is_trivial(g);
    if (!v.certificate.empty()) v.certificate = to_string(g, names) + ": " + v.certificate;
    acc = conjunction(acc, v);
    if (acc.is_no()) break;
  }
  return acc;
}

Verdict normal_equal(const NormalSubgroupData& a, const NormalSubgroupData& b, const Budget& budget) {
  return conjunction(normal_contains(a, b, budget), normal_contains(b, a, budget));
}

Verdict spanier_contains(const Complex& c, const Cover& u, const Cover& v, const Budget& budget) {
  auto parent = std::make_shared<const Pi1Data>(pi1(c));
  return normal_contains(spanier_generators(parent, u), spanier_generators(parent, v), budget);
}

Verdict spanier_equal(const Complex& c, const Cover& u, const Cover& v, const Budget& budget) {
  auto parent = std::make_shared<const Pi1Data>(pi1(c));
  return normal_equal(spanier_generators(parent, u), spanier_generators(parent, v), budget);
}

bool refines_through(const Subdivision& s, const Cover& fine, const Cover& coarse) {
  auto carrier = [&](CellRef r) {
    switch (r.kind) {
      case CellKind::vertex: return s.vertex_carrier[r.index];
      case CellKind::edge: return s.edge_carrier[r.index];
      case CellKind::face: return s.face_carrier[r.index];
    }
    return r;
  };
  return std::all_of(fine.elements.begin(), fine.elements.end(), [&](const Subcomplex& a) {
    const std::vector<CellRef> cells = a.cells();
    return std::any_of(coarse.elements.begin(), coarse.elements.end(), [&](const Subcomplex& b) {
      return std::all_of(cells.begin(), cells.end(), [&](CellRef r) { return b.contains(carrier(r)); });
    });
  });
}

Verdict pi_stable(const Complex& c, const Cover& u, const Universe& universe, const Budget& budget) {
  auto parent = std::make_shared<const Pi1Data>(pi1(c));
  const NormalSubgroupData pu = spanier_generators(parent, u);
  for (const Cover& v : universe.covers) require_cover(c, v);

  Verdict acc = Verdict::yes("");
  int compared = 0;
  if (pu.generators.empty()) {
    acc = Verdict::yes("π(" + u.name + ") is trivial and cannot drop");
  } else {
    for (const Cover& v : universe.covers) {
      if (!refines(v, u)) continue;
      ++compared;
      Verdict eq = normal_equal(pu, spanier_generators(parent, v), budget);
      if (eq.is_no()) eq.certificate = "refinement " + v.name + " drops: " + eq.certificate;
      acc = conjunction(acc, eq);
      if (acc.is_no()) return acc;
    }
    std::vector<Subdivision> cache;
    for (const SubdividedCover& v : universe.subdivided) {
      while (static_cast<int>(cache.size()) <= v.depth) cache.push_back(subdivide_times(c, static_cast<int>(cache.size())));
      const Subdivision& s = cache[v.depth];
      require_cover(s.fine, v.cover);
      if (!refines_through(s, v.cover, u)) continue;
      ++compared;
      auto fine = std::make_shared<const Pi1Data>(pi1(s.fine, parent->basepoint));
      const NormalSubgroupData pv = push_down(spanier_generators(fine, v.cover), s.to_coarse, parent);
      Verdict eq = normal_equal(pu, pv, budget);
      if (eq.is_no()) eq.certificate = "refinement " + v.cover.name + " drops: " + eq.certificate;
      acc = conjunction(acc, eq);
      if (acc.is_no()) return acc;
    }
    if (acc.is_yes()) acc.certificate = std::to_string(compared) + " refinements agree";
  }
  if (acc.is_yes() && !universe.exhaustive) {
    return Verdict::unknown(UnknownReason::incomplete_universe, acc.certificate);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// π^sp approximation

NormalSubgroupData push_down(const NormalSubgroupData& fine_group, const CellMap& to_base,
                             std::shared_ptr<const Pi1Data> base) {
  NormalSubgroupData out;
  out.parent = base;
  out.provenance = fine_group.provenance;
  std::set<Word> seen;
  for (const Word& g : fine_group.generators) {
    const EdgePath loop = to_base.apply(fine_group.parent->loop_of(g));
    add_generator(out.generators, seen, base->word_of(loop));
  }
  return out;
}

SpApproximation spanier_sp_approx(const Complex& c, int depth, const Budget& budget, bool stop_early) {
  auto base = std::make_shared<const Pi1Data>(pi1(c));
  SpApproximation out;
  for (int k = 0; k <= depth; ++k) {
    SpLevel level;
    level.depth = k;
    level.subdivision = subdivide_times(c, k);
    level.cover = star_cover(level.subdivision.fine);
    level.cover.name = "star(sd^" + std::to_string(k) + ")";
    auto fine = std::make_shared<const Pi1Data>(pi1(level.subdivision.fine, c.basepoint() >= 0 ? c.basepoint() : 0));
    level.group = push_down(spanier_generators(fine, level.cover), level.subdivision.to_coarse, base);
    out.levels.push_back(std::move(level));
    const std::size_t n = out.levels.size();
    if (stop_early && n >= 2 && out.levels[n - 1].group.generators.empty() &&
        out.levels[n - 2].group.generators.empty()) {
      break;
    }
  }
  out.depth = out.levels.back().depth;
  out.value = out.levels.back().group;
  if (out.levels.size() >= 2) {
    out.last_comparison = normal_equal(out.levels[out.levels.size() - 2].group, out.value, budget);
    out.stabilized = out.last_comparison.is_yes();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Basepoint change

NormalSubgroupData change_basepoint(const NormalSubgroupData& d, std::span<const SignedEdge> path) {
  const Pi1Data& old = *d.parent;
  const Complex& c = old.complex;
  if (!is_continuous(c, path, old.basepoint)) {
    throw Error(ErrorKind::path_endpoints, "path does not start at the current basepoint");
  }
  const int end = c.path_target(path, old.basepoint);
  auto rooted = std::make_shared<const Pi1Data>(pi1(c, end));
  NormalSubgroupData out;
  out.parent = rooted;
  out.provenance = d.provenance + " moved to " + c.vertices()[end];
  const EdgePath back = inverse(path);
  for (const Word& g : d.generators) {
    EdgePath loop = back;
    const EdgePath middle = old.loop_of(g);
    loop.insert(loop.end(), middle.begin(), middle.end());
    loop.insert(loop.end(), path.begin(), path.end());
    out.generators.push_back(rooted->word_of(loop));
  }
  return out;
}

AbelianInvariants quotient_invariants(const NormalSubgroupData& d) {
  return abelianization(d.parent->presentation, d.generators);
}

}  // namespace covtop
