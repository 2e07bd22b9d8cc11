#include "covtop/covering.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "covtop/abelian.hpp"
#include "covtop/coset_enumeration.hpp"
#include "covtop/folding.hpp"

namespace covtop {

namespace {

int step_column(SignedEdge s) { return 2 * s.edge + (s.inverted ? 1 : 0); }

std::string sheet_id(const std::string& base, int sheet) { return base + "@" + std::to_string(sheet); }

CoveringMap covering_from_table(const Pi1Data& pi, const CosetTable& table, std::span<const Word> subgroup) {
  const Complex& c = pi.complex;
  const int n = table.size();
  CoveringMap m;
  m.base = c;
  m.sheets = n;
  m.subgroup.assign(subgroup.begin(), subgroup.end());
  auto act = [&](int sheet, SignedEdge s) {
    const int g = pi.generator_of_edge[s.edge];
    if (g == 0) return sheet;
    return table.act(sheet, s.inverted ? -g : g);
  };
  for (int v = 0; v < c.num_vertices(); ++v) {
    for (int i = 0; i < n; ++i) {
      m.total.add_vertex(sheet_id(c.vertices()[v], i));
      m.vertex_projection.push_back(v);
    }
  }
  for (int e = 0; e < c.num_edges(); ++e) {
    const Edge& edge = c.edges()[e];
    for (int i = 0; i < n; ++i) {
      m.total.add_edge(sheet_id(edge.id, i), edge.source * n + i, edge.target * n + act(i, {e, false}));
      m.edge_projection.push_back(e);
    }
  }
  for (int f = 0; f < c.num_faces(); ++f) {
    const Face& face = c.faces()[f];
    for (int i = 0; i < n; ++i) {
      EdgePath boundary;
      int sheet = i;
      for (const SignedEdge& s : face.boundary) {
        if (!s.inverted) {
          boundary.push_back({s.edge * n + sheet, false});
          sheet = act(sheet, s);
        } else {
          sheet = act(sheet, s);
          boundary.push_back({s.edge * n + sheet, true});
        }
      }
      m.total.add_face(sheet_id(face.id, i), std::move(boundary));
      m.face_projection.push_back(f);
    }
  }
  m.total.set_basepoint(pi.basepoint * n);
  return m;
}

bool infinite_by_abelianization(const Presentation& p) { return abelianization(p).free_rank > 0; }

/// Union-find graph whose edge labels are signed base edges; merging folds.
class WindowFolder {
 public:
  explicit WindowFolder(int columns) : columns_(columns) {}

  int add_node(int base_vertex) {
    parent_.push_back(static_cast<int>(parent_.size()));
    base_.push_back(base_vertex);
    out_.emplace_back(columns_, -1);
    return static_cast<int>(parent_.size()) - 1;
  }

  int rep(int v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }

  void link(int u, SignedEdge s, int v) {
    attach(u, step_column(s), v);
    attach(v, step_column(s.inverse()), u);
    drain();
  }

  int next(int u, SignedEdge s) {
    const int t = out_[rep(u)][step_column(s)];
    return t < 0 ? -1 : rep(t);
  }

  int trace(int u, std::span<const SignedEdge> path) {
    for (const SignedEdge& s : path) {
      u = next(u, s);
      if (u < 0) return -1;
    }
    return u;
  }

  bool merge(int a, int b) {
    if (rep(a) == rep(b)) return false;
    pending_.emplace_back(a, b);
    drain();
    return true;
  }

  int base(int v) const { return base_[v]; }
  int size() const { return static_cast<int>(parent_.size()); }
  int out(int v, int column) const { return out_[v][column]; }

 private:
  void attach(int u, int col, int v) {
    u = rep(u);
    const int existing = out_[u][col];
    if (existing < 0) {
      out_[u][col] = v;
    } else {
      pending_.emplace_back(existing, v);
    }
  }

  void drain() {
    while (!pending_.empty()) {
      auto [a, b] = pending_.back();
      pending_.pop_back();
      a = rep(a);
      b = rep(b);
      if (a == b) continue;
      const int low = std::min(a, b);
      const int high = std::max(a, b);
      parent_[high] = low;
      for (int col = 0; col < columns_; ++col) {
        const int t = out_[high][col];
        if (t >= 0) attach(low, col, t);
      }
    }
  }

  int columns_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<std::vector<int>> out_;
  std::vector<std::pair<int, int>> pending_;
};

/// Per total vertex: signed total edge (2e + inverted) lying over each signed base edge column, -1 if none, -2 if several.
std::vector<std::vector<int>> lift_table(const CoveringMap& m) {
  std::vector<std::vector<int>> table(m.total.num_vertices(), std::vector<int>(2 * m.base.num_edges(), -1));
  auto put = [&](int v, int column, int value) {
    int& slot = table[v][column];
    slot = slot == -1 ? value : -2;
  };
  for (int e = 0; e < m.total.num_edges(); ++e) {
    const Edge& edge = m.total.edges()[e];
    const int b = m.edge_projection[e];
    put(edge.source, 2 * b, 2 * e);
    put(edge.target, 2 * b + 1, 2 * e + 1);
  }
  return table;
}

/// Rotation r with projected boundary == base boundary rotated by r, or -1.
int boundary_rotation(const CoveringMap& m, int face) {
  const EdgePath& total = m.total.faces()[face].boundary;
  const EdgePath& base = m.base.faces()[m.face_projection[face]].boundary;
  if (total.size() != base.size()) return -1;
  const std::size_t n = base.size();
  for (std::size_t r = 0; r < n; ++r) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) {
      const SignedEdge& t = total[j];
      const SignedEdge& b = base[(j + r) % n];
      ok = m.edge_projection[t.edge] == b.edge && t.inverted == b.inverted;
    }
    if (ok) return static_cast<int>(r);
  }
  return -1;
}

/// Base words of the non-tree loops of the total space: generators of p_*π1.
std::vector<Word> projected_loops(const CoveringMap& m) {
  const Pi1Data total = pi1(m.total);
  const Pi1Data base = pi1(m.base);
  std::vector<Word> out;
  for (int g = 1; g <= total.presentation.rank(); ++g) {
    EdgePath projected;
    for (const SignedEdge& s : total.generator_loop(g)) projected.push_back({m.edge_projection[s.edge], s.inverted});
    Word w = base.word_of(projected);
    if (!w.empty()) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

CoveringMap build_covering(const Complex& c, std::span<const Word> h_gens, const Budget& budget) {
  const Pi1Data pi = pi1(c);
  const Presentation& p = pi.presentation;
  if (p.relators.empty() && p.rank() > 0 && !SubgroupGraph(p.rank(), h_gens).is_complete()) {
    throw Error(ErrorKind::budget, "subgroup has infinite index in a free group");
  }
  const CosetTable table = todd_coxeter(p, h_gens, budget.max_cosets);
  if (!table.complete()) {
    throw Error(ErrorKind::budget,
                "coset enumeration exceeded " + std::to_string(budget.max_cosets) + " cosets");
  }
  return covering_from_table(pi, table, h_gens);
}

CoveringMap build_normal_covering(const Complex& c, std::span<const Word> normal_gens, const Budget& budget) {
  const Pi1Data pi = pi1(c);
  Presentation q = pi.presentation;
  for (const Word& w : normal_gens) q.relators.push_back(free_reduce(w));
  if (infinite_by_abelianization(q)) {
    throw Error(ErrorKind::budget, "quotient has infinite abelianization");
  }
  const CosetTable table = todd_coxeter(q, {}, budget.max_cosets);
  if (!table.complete()) {
    throw Error(ErrorKind::budget,
                "coset enumeration exceeded " + std::to_string(budget.max_cosets) + " cosets");
  }
  CoveringMap m = covering_from_table(pi, table, {});
  m.subgroup = projected_loops(m);
  return m;
}

CoveringMap ball_covering(const Complex& c, std::span<const Word> h_gens, int radius, const Budget& budget,
                          bool normal) {
  try {
    return normal ? build_normal_covering(c, h_gens, budget) : build_covering(c, h_gens, budget);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::budget) throw;
  }

  const Pi1Data pi = pi1(c);
  const auto adjacency = c.adjacency();
  WindowFolder folder(2 * c.num_edges());
  const int root = folder.add_node(pi.basepoint);
  std::vector<int> depth{0};
  std::vector<int> incoming{-1};
  for (int u = 0; u < folder.size(); ++u) {
    if (depth[u] >= radius) continue;
    for (const SignedEdge& s : adjacency[folder.base(u)]) {
      if (incoming[u] == step_column(s.inverse())) continue;
      if (static_cast<std::size_t>(folder.size()) >= budget.max_cosets) {
        throw Error(ErrorKind::budget, "window of radius " + std::to_string(radius) + " exceeds " +
                                           std::to_string(budget.max_cosets) + " vertices");
      }
      const int v = folder.add_node(c.target(s));
      depth.push_back(depth[u] + 1);
      incoming.push_back(step_column(s));
      folder.link(u, s, v);
    }
  }

  std::vector<EdgePath> subgroup_loops;
  for (const Word& h : h_gens) subgroup_loops.push_back(pi.loop_of(h));
  for (bool changed = true; changed;) {
    changed = false;
    for (int u = 0; u < folder.size(); ++u) {
      if (folder.rep(u) != u) continue;
      for (const Face& f : c.faces()) {
        EdgePath rotated = f.boundary;
        for (std::size_t r = 0; r < rotated.size(); ++r) {
          if (c.source(rotated.front()) == folder.base(u)) {
            const int end = folder.trace(u, rotated);
            if (end >= 0 && folder.merge(u, end)) changed = true;
          }
          std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
        }
      }
      if (normal || folder.rep(u) == folder.rep(root)) {
        for (const EdgePath& loop : subgroup_loops) {
          if (c.path_source(loop, pi.basepoint) != folder.base(u)) continue;
          const int end = folder.trace(u, loop);
          if (end >= 0 && folder.merge(u, end)) changed = true;
        }
      }
    }
  }

  std::vector<int> number(folder.size(), -1);
  std::vector<int> order;
  for (int u = 0; u < folder.size(); ++u) {
    const int r = folder.rep(u);
    if (number[r] < 0) {
      number[r] = static_cast<int>(order.size());
      order.push_back(r);
    }
  }

  CoveringMap m;
  m.base = c;
  m.radius = radius;
  m.truncated = true;
  m.subgroup.assign(h_gens.begin(), h_gens.end());
  for (std::size_t k = 0; k < order.size(); ++k) {
    m.total.add_vertex(sheet_id(c.vertices()[folder.base(order[k])], static_cast<int>(k)));
    m.vertex_projection.push_back(folder.base(order[k]));
  }
  std::map<std::pair<int, int>, int> edge_of;  // (node, base edge) -> total edge leaving node
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (int e = 0; e < c.num_edges(); ++e) {
      const int t = folder.out(order[k], 2 * e);
      if (t < 0) continue;
      const int id = m.total.add_edge(sheet_id(c.edges()[e].id, static_cast<int>(k)), static_cast<int>(k),
                                      number[folder.rep(t)]);
      m.edge_projection.push_back(e);
      edge_of[{static_cast<int>(k), e}] = id;
    }
  }
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (int f = 0; f < c.num_faces(); ++f) {
      const Face& face = c.faces()[f];
      if (c.source(face.boundary.front()) != folder.base(order[k])) continue;
      EdgePath boundary;
      int at = order[k];
      for (const SignedEdge& s : face.boundary) {
        const int next = folder.next(at, s);
        if (next < 0) break;
        const int from = number[folder.rep(s.inverted ? next : at)];
        boundary.push_back({edge_of.at({from, s.edge}), s.inverted});
        at = next;
      }
      if (boundary.size() != face.boundary.size() || folder.rep(at) != order[k]) continue;
      m.total.add_face(sheet_id(face.id, static_cast<int>(k)), std::move(boundary));
      m.face_projection.push_back(f);
    }
  }
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (const SignedEdge& s : adjacency[folder.base(order[k])]) {
      if (folder.next(order[k], s) < 0) {
        m.frontier.push_back(static_cast<int>(k));
        break;
      }
    }
  }
  m.total.set_basepoint(number[folder.rep(root)]);
  return m;
}

void verify_covering(const CoveringMap& m) {
  const Complex& t = m.total;
  const Complex& b = m.base;
  if (static_cast<int>(m.vertex_projection.size()) != t.num_vertices() ||
      static_cast<int>(m.edge_projection.size()) != t.num_edges() ||
      static_cast<int>(m.face_projection.size()) != t.num_faces()) {
    throw Error(ErrorKind::fiber, "projection does not cover every total cell");
  }
  for (int v = 0; v < t.num_vertices(); ++v) {
    if (m.vertex_projection[v] < 0 || m.vertex_projection[v] >= b.num_vertices()) {
      throw Error(ErrorKind::fiber, "vertex '" + t.vertices()[v] + "' projects outside the base");
    }
  }
  for (int e = 0; e < t.num_edges(); ++e) {
    const Edge& edge = t.edges()[e];
    const int p = m.edge_projection[e];
    if (p < 0 || p >= b.num_edges() || m.vertex_projection[edge.source] != b.edges()[p].source ||
        m.vertex_projection[edge.target] != b.edges()[p].target) {
      throw Error(ErrorKind::edge_lift, "edge '" + edge.id + "' does not lie over a base edge");
    }
  }

  const std::set<int> frontier(m.frontier.begin(), m.frontier.end());
  const auto lifts = lift_table(m);
  const auto base_adjacency = b.adjacency();
  for (int v = 0; v < t.num_vertices(); ++v) {
    for (const SignedEdge& s : base_adjacency[m.vertex_projection[v]]) {
      const int slot = lifts[v][step_column(s)];
      const bool missing_ok = m.truncated && frontier.count(v);
      if (slot == -2 || (slot == -1 && !missing_ok)) {
        throw Error(ErrorKind::edge_lift, "vertex '" + t.vertices()[v] + "' has " +
                                              (slot == -2 ? "several lifts" : "no lift") + " of " +
                                              (s.inverted ? b.edges()[s.edge].id + "^-1" : b.edges()[s.edge].id));
      }
    }
  }

  if (!m.truncated) {
    std::vector<int> vcount(b.num_vertices(), 0), ecount(b.num_edges(), 0), fcount(b.num_faces(), 0);
    for (int p : m.vertex_projection) ++vcount[p];
    for (int p : m.edge_projection) ++ecount[p];
    for (int p : m.face_projection) {
      if (p < 0 || p >= b.num_faces()) throw Error(ErrorKind::face_lift, "face projects outside the base");
      ++fcount[p];
    }
    for (int v = 0; v < b.num_vertices(); ++v) {
      if (vcount[v] != m.sheets) {
        throw Error(ErrorKind::fiber, "vertex '" + b.vertices()[v] + "' has " + std::to_string(vcount[v]) +
                                          " lifts, expected " + std::to_string(m.sheets));
      }
    }
    for (int e = 0; e < b.num_edges(); ++e) {
      if (ecount[e] != m.sheets) {
        throw Error(ErrorKind::fiber, "edge '" + b.edges()[e].id + "' has " + std::to_string(ecount[e]) +
                                          " lifts, expected " + std::to_string(m.sheets));
      }
    }
    for (int f = 0; f < b.num_faces(); ++f) {
      if (fcount[f] != m.sheets) {
        throw Error(ErrorKind::face_lift, "face '" + b.faces()[f].id + "' has " + std::to_string(fcount[f]) +
                                             " lifts, expected " + std::to_string(m.sheets));
      }
    }
  }
  for (int f = 0; f < t.num_faces(); ++f) {
    const int p = m.face_projection[f];
    if (p < 0 || p >= b.num_faces() || boundary_rotation(m, f) < 0) {
      throw Error(ErrorKind::face_lift, "face '" + t.faces()[f].id + "' does not lie over a base face");
    }
  }
}

Verdict normal_closure_in_subgroup(const Pi1Data& pi, std::span<const Word> normal_gens,
                                   std::span<const Word> h_gens, const Budget& budget) {
  std::vector<Word> nontrivial;
  for (const Word& w : normal_gens) {
    if (!free_reduce(w).empty()) nontrivial.push_back(free_reduce(w));
  }
  if (nontrivial.empty()) return Verdict::yes("trivial normal closure");
  const Presentation& p = pi.presentation;
  const auto& names = p.generators;
  if (p.relators.empty()) {
    const SubgroupGraph graph(p.rank(), h_gens);
    if (!graph.is_complete()) {
      return Verdict::no(to_string(nontrivial.front(), names) +
                         " is nontrivial and an infinite-index finitely generated subgroup of a free "
                         "group contains no nontrivial normal subgroup");
    }
    for (const Word& w : nontrivial) {
      if (!graph.fixes_every_vertex(w)) {
        return Verdict::no(to_string(w, names) + " moves a vertex of the folded graph (" +
                           std::to_string(graph.num_vertices()) + " vertices)");
      }
    }
    return Verdict::yes("every normal generator fixes all " + std::to_string(graph.num_vertices()) +
                        " vertices of the folded graph");
  }
  const CosetTable table = todd_coxeter(p, h_gens, budget.max_cosets);
  if (!table.complete()) return Verdict::unknown(UnknownReason::budget, "coset enumeration of H incomplete");
  for (const Word& w : nontrivial) {
    for (int coset = 0; coset < table.size(); ++coset) {
      if (table.act(coset, w) != coset) {
        return Verdict::no(to_string(w, names) + " moves coset " + std::to_string(coset) + " of " +
                           std::to_string(table.size()));
      }
    }
  }
  return Verdict::yes("every normal generator acts trivially on all " + std::to_string(table.size()) + " cosets");
}

ImageSubgroup image_subgroup(const CoveringMap& m, const Budget& budget) {
  if (m.truncated) throw Error(ErrorKind::truncated, "image subgroup needs an untruncated covering");
  const Pi1Data base = pi1(m.base);
  ImageSubgroup out;
  out.generators = projected_loops(m);

  const Presentation& p = base.presentation;
  if (p.relators.empty()) {
    if (same_subgroup(p.rank(), out.generators, m.subgroup)) {
      out.equals_intended = Verdict::yes("folded core graphs coincide (" +
                                         std::to_string(SubgroupGraph(p.rank(), m.subgroup).num_vertices()) +
                                         " vertices)");
    } else {
      out.equals_intended = Verdict::no("folded core graphs differ");
    }
    return out;
  }
  const CosetTable of_h = todd_coxeter(p, m.subgroup, budget.max_cosets);
  const CosetTable of_image = todd_coxeter(p, out.generators, budget.max_cosets);
  if (!of_h.complete() || !of_image.complete()) {
    out.equals_intended = Verdict::unknown(UnknownReason::budget, "coset enumeration incomplete");
    return out;
  }
  for (const Word& w : out.generators) {
    if (of_h.act(0, w) != 0) {
      out.equals_intended = Verdict::no("image generator " + to_string(w, p.generators) + " is not in H");
      return out;
    }
  }
  for (const Word& w : m.subgroup) {
    if (of_image.act(0, w) != 0) {
      out.equals_intended = Verdict::no("generator " + to_string(w, p.generators) + " of H is not in the image");
      return out;
    }
  }
  out.equals_intended = Verdict::yes("coset tables agree both ways (index " + std::to_string(of_h.size()) + ")");
  return out;
}

CoveringMap subdivide_covering(const CoveringMap& m) {
  const Subdivision st = subdivide(m.total);
  const Subdivision sb = subdivide(m.base);
  const int vt = m.total.num_vertices(), et = m.total.num_edges();
  const int vb = m.base.num_vertices(), eb = m.base.num_edges();
  std::vector<int> base_offset(m.base.num_faces() + 1, 0);
  for (int f = 0; f < m.base.num_faces(); ++f) {
    base_offset[f + 1] = base_offset[f] + 2 * static_cast<int>(m.base.faces()[f].boundary.size());
  }

  CoveringMap out;
  out.total = st.fine;
  out.base = sb.fine;
  out.sheets = m.sheets;
  out.radius = m.radius;
  out.truncated = m.truncated;
  out.frontier = m.frontier;
  for (int v = 0; v < vt; ++v) out.vertex_projection.push_back(m.vertex_projection[v]);
  for (int e = 0; e < et; ++e) out.vertex_projection.push_back(vb + m.edge_projection[e]);
  for (int f = 0; f < m.total.num_faces(); ++f) out.vertex_projection.push_back(vb + eb + m.face_projection[f]);
  for (int e = 0; e < et; ++e) {
    out.edge_projection.push_back(2 * m.edge_projection[e]);
    out.edge_projection.push_back(2 * m.edge_projection[e] + 1);
  }
  std::vector<int> radial_faces;
  for (int f = 0; f < m.total.num_faces(); ++f) {
    const int p = m.face_projection[f];
    const int positions = 2 * static_cast<int>(m.total.faces()[f].boundary.size());
    const int shift = 2 * boundary_rotation(m, f);
    for (int j = 0; j < positions; ++j) {
      out.edge_projection.push_back(2 * eb + base_offset[p] + (j + shift) % positions);
    }
    for (int j = 0; j < positions; ++j) out.face_projection.push_back(base_offset[p] + (j + shift) % positions);
  }

  const Pi1Data coarse = pi1(m.base);
  const Pi1Data fine = pi1(sb.fine, coarse.basepoint);
  for (const Word& h : m.subgroup) {
    EdgePath lifted;
    for (const SignedEdge& s : coarse.loop_of(h)) {
      if (!s.inverted) {
        lifted.push_back({2 * s.edge, false});
        lifted.push_back({2 * s.edge + 1, false});
      } else {
        lifted.push_back({2 * s.edge + 1, true});
        lifted.push_back({2 * s.edge, true});
      }
    }
    out.subgroup.push_back(fine.word_of(lifted));
  }
  return out;
}

bool evenly_covered(const CoveringMap& m, const Subcomplex& s) {
  const Complex& t = m.total;
  Subcomplex pre(t, "preimage");
  for (int v = 0; v < t.num_vertices(); ++v)
    if (s.contains_vertex(m.vertex_projection[v])) pre.insert({CellKind::vertex, v});
  for (int e = 0; e < t.num_edges(); ++e)
    if (s.contains_edge(m.edge_projection[e])) pre.insert({CellKind::edge, e});
  for (int f = 0; f < t.num_faces(); ++f)
    if (s.contains_face(m.face_projection[f])) pre.insert({CellKind::face, f});
  const int size = s.cell_count();
  for (const Subcomplex& k : components(t, pre)) {
    if (k.cell_count() != size) return false;
    std::set<CellRef> image;
    for (const CellRef& r : k.cells()) {
      switch (r.kind) {
        case CellKind::vertex: image.insert({r.kind, m.vertex_projection[r.index]}); break;
        case CellKind::edge: image.insert({r.kind, m.edge_projection[r.index]}); break;
        case CellKind::face: image.insert({r.kind, m.face_projection[r.index]}); break;
      }
    }
    if (static_cast<int>(image.size()) != size) return false;
  }
  return true;
}

namespace {

std::optional<Cover> even_cover_of(const CoveringMap& m) {
  const Complex& b = m.base;
  const Subcomplex whole = Subcomplex::whole(b);
  if (evenly_covered(m, whole)) return Cover{"even", {whole}};

  std::vector<Subcomplex> pieces;
  const Cover stars = star_cover(b);
  for (int v = 0; v < b.num_vertices(); ++v) {
    const Subcomplex& star = stars.elements[v];
    if (evenly_covered(m, star)) {
      pieces.push_back(star);
      continue;
    }
    for (const CellRef& r : star.cells()) {
      if (r.kind == CellKind::vertex && r.index != v) continue;
      Subcomplex cell(b, "");
      cell.add_closed(b, r);
      if (!cell.contains_vertex(v)) continue;
      if (!evenly_covered(m, cell)) return std::nullopt;
      pieces.push_back(std::move(cell));
    }
  }

  std::vector<Subcomplex> kept;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < pieces.size() && !dominated; ++j) {
      if (i == j || !pieces[i].is_subset_of(pieces[j])) continue;
      dominated = !pieces[j].is_subset_of(pieces[i]) || j < i;
    }
    if (!dominated) kept.push_back(pieces[i]);
  }

  Cover out{"even", {}};
  for (const Subcomplex& piece : kept) {
    bool merged = false;
    for (Subcomplex& element : out.elements) {
      const Subcomplex joined = element.unite(piece);
      if (evenly_covered(m, joined)) {
        element = joined;
        merged = true;
        break;
      }
    }
    if (!merged) out.elements.push_back(piece);
  }
  for (std::size_t i = 0; i < out.elements.size(); ++i) out.elements[i].set_name("even" + std::to_string(i));
  return out;
}

}  // namespace

EvenCover evenly_covered_cover(const CoveringMap& m) {
  if (m.truncated) throw Error(ErrorKind::truncated, "evenly covered cover needs an untruncated covering");
  CoveringMap current = m;
  for (int depth = 0;; ++depth) {
    if (std::optional<Cover> cover = even_cover_of(current)) {
      EvenCover out;
      out.depth = depth;
      out.base = subdivide_times(m.base, depth);
      out.covering = std::move(current);
      out.cover = std::move(*cover);
      return out;
    }
    current = subdivide_covering(current);
  }
}

Verdict lemma_check(const CoveringMap& m, const EvenCover& even, const Budget& budget) {
  auto base = std::make_shared<const Pi1Data>(pi1(m.base));
  auto fine = std::make_shared<const Pi1Data>(pi1(even.base.fine, base->basepoint));
  const NormalSubgroupData spanier = push_down(spanier_generators(fine, even.cover), even.base.to_coarse, base);
  const ImageSubgroup image = image_subgroup(m, budget);
  return normal_closure_in_subgroup(*base, spanier.generators, image.generators, budget);
}

CoveringWitness exists_covering_for(const Complex& c, std::span<const Word> h_gens,
                                    std::span<const Cover> universe, const Budget& budget) {
  auto base = std::make_shared<const Pi1Data>(pi1(c));
  CoveringWitness out;
  bool budget_hit = false;
  for (const Cover& u : universe) {
    out.searched.push_back(u.name);
    const NormalSubgroupData group = spanier_generators(base, u);
    Verdict v = normal_closure_in_subgroup(*base, group.generators, h_gens, budget);
    if (v.is_yes()) {
      out.found = true;
      out.name = u.name;
      out.cover = u;
      out.verdict = v;
      return out;
    }
    budget_hit = budget_hit || v.is_unknown();
  }
  for (int k = 0; k <= budget.depth; ++k) {
    const Subdivision s = subdivide_times(c, k);
    Cover stars = star_cover(s.fine);
    stars.name = "star(sd^" + std::to_string(k) + ")";
    out.searched.push_back(stars.name);
    auto fine = std::make_shared<const Pi1Data>(pi1(s.fine, base->basepoint));
    const NormalSubgroupData group = push_down(spanier_generators(fine, stars), s.to_coarse, base);
    Verdict v = normal_closure_in_subgroup(*base, group.generators, h_gens, budget);
    if (v.is_yes()) {
      out.found = true;
      out.name = stars.name;
      out.depth = k;
      out.cover = std::move(stars);
      out.verdict = v;
      return out;
    }
    budget_hit = budget_hit || v.is_unknown();
  }
  out.verdict = Verdict::unknown(budget_hit ? UnknownReason::budget : UnknownReason::incomplete_universe,
                                 "no witness among " + std::to_string(out.searched.size()) + " covers");
  return out;
}

UniversalCovering universal_covering(const Complex& c, const Budget& budget) {
  UniversalCovering out;
  out.sp = spanier_sp_approx(c, std::max(budget.depth, 1), budget, true);
  const std::vector<SpLevel>& levels = out.sp.levels;
  out.witness_depth = out.sp.depth;
  for (const SpLevel& level : levels) {
    Verdict eq = normal_equal(level.group, out.sp.value, budget);
    if (eq.is_yes() || level.depth == out.sp.depth) {
      out.witness_depth = level.depth;
      out.witness_equals_sp = eq;
      break;
    }
  }
  const SpLevel& witness = levels[out.witness_depth];
  if (witness.group.generators.empty()) {
    out.witness_pi_stable = Verdict::yes("π(" + witness.cover.name + ") is trivial and cannot drop");
  } else {
    Universe universe;
    universe.subdivided.push_back({1, star_cover(subdivide(witness.subdivision.fine).fine)});
    out.witness_pi_stable = pi_stable(witness.subdivision.fine, witness.cover, universe, budget);
  }

  const std::vector<Word>& h = out.sp.value.generators;
  bool complete = true;
  try {
    out.covering = build_normal_covering(c, h, budget);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::budget) throw;
    complete = false;
  }
  if (!complete) {
    for (int r = budget.radius;; --r) {
      try {
        out.covering = ball_covering(c, h, r, budget, true);
        break;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::budget || r == 0) throw;
      }
    }
  }

  const bool trivial = h.empty();
  const std::string level = "star cover of sd^" + std::to_string(out.witness_depth);
  out.items.emplace_back("(i) coverable", trivial ? "holds: π^sp = 1 and every subgroup contains it"
                                                  : "evidence only: π^sp approximation nontrivial");
  out.items.emplace_back("(ii) universal covering",
                         complete ? "built with " + std::to_string(out.covering.sheets) + " sheets"
                                  : "infinitely many sheets; window of radius " + std::to_string(out.covering.radius));
  out.items.emplace_back("(iii) π-stable cover", level + ": " + describe(out.witness_pi_stable));
  out.items.emplace_back("(iv) semi-locally Spanier",
                         trivial ? "holds: every element of the " + level + " has π1 inside π^sp"
                                 : "not established at depth " + std::to_string(out.sp.depth));
  out.items.emplace_back("(v) no wild point", trivial ? "holds: finite complex, stars eventually simply connected"
                                                      : "not established");
  out.items.emplace_back("(vi) π^sp open in π1^τ", "not checked (out of scope)");
  out.note = "Spanier groups over subcomplex covers; π^sp approximated by star covers up to depth " +
             std::to_string(out.sp.depth);
  return out;
}

std::optional<CoveringMorphism> factor_through(const CoveringMap& fine, const CoveringMap& coarse) {
  const auto lifts = lift_table(coarse);
  CoveringMorphism f;
  f.vertex.assign(fine.total.num_vertices(), -1);
  f.edge.assign(fine.total.num_edges(), -1);
  const int start = fine.total.basepoint();
  f.vertex[start] = coarse.total.basepoint();
  if (fine.vertex_projection[start] != coarse.vertex_projection[f.vertex[start]]) return std::nullopt;
  const auto adjacency = fine.total.adjacency();
  std::vector<int> queue{start};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const int u = queue[k];
    for (const SignedEdge& s : adjacency[u]) {
      const int column = 2 * fine.edge_projection[s.edge] + (s.inverted ? 1 : 0);
      const int lifted = lifts[f.vertex[u]][column];
      if (lifted < 0) return std::nullopt;
      const int image_edge = lifted / 2;
      if (f.edge[s.edge] >= 0 && f.edge[s.edge] != image_edge) return std::nullopt;
      f.edge[s.edge] = image_edge;
      const Edge& ce = coarse.total.edges()[image_edge];
      const int image = (lifted % 2 == 0) ? ce.target : ce.source;
      const int v = fine.total.target(s);
      if (f.vertex[v] < 0) {
        f.vertex[v] = image;
        queue.push_back(v);
      } else if (f.vertex[v] != image) {
        return std::nullopt;
      }
    }
  }
  for (int e = 0; e < fine.total.num_edges(); ++e) {
    if (f.edge[e] < 0) return std::nullopt;
  }
  return f;
}

bool equivalent(const CoveringMap& a, const CoveringMap& b) {
  if (a.total.num_vertices() != b.total.num_vertices() || a.total.num_edges() != b.total.num_edges()) return false;
  const auto there = factor_through(a, b);
  const auto back = factor_through(b, a);
  if (!there || !back) return false;
  for (int v = 0; v < a.total.num_vertices(); ++v) {
    if (back->vertex[there->vertex[v]] != v) return false;
  }
  return true;
}

std::vector<Word> intersect_subgroups(int rank, std::span<const Word> h, std::span<const Word> k) {
  return SubgroupGraph(rank, h).intersect(SubgroupGraph(rank, k)).basis();
}

}  // namespace covtop
