#include "covtop/tower.hpp"

#include <algorithm>
#include <cctype>

namespace covtop {

std::string_view to_string(TowerKind kind) {
  switch (kind) {
    case TowerKind::hawaiian: return "hawaiian";
    case TowerKind::archipelago: return "archipelago";
    case TowerKind::cone: return "cone";
    case TowerKind::double_cone: return "double_cone";
  }
  return "hawaiian";
}

TowerKind parse_tower_kind(std::string_view name) {
  for (TowerKind k : {TowerKind::hawaiian, TowerKind::archipelago, TowerKind::cone, TowerKind::double_cone}) {
    if (name == to_string(k)) return k;
  }
  throw Error(ErrorKind::parse, "unknown tower kind '" + std::string(name) + "'");
}

std::string_view to_string(PointClass c) {
  switch (c) {
    case PointClass::regular: return "REGULAR";
    case PointClass::tame: return "TAME";
    case PointClass::wild: return "WILD";
    case PointClass::unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

namespace {

std::string index_id(std::string_view stem, int k) { return std::string(stem) + std::to_string(k); }

TowerStage circles_stage(TowerKind kind, int n) {
  TowerStage s;
  s.n = n;
  Complex& c = s.complex;
  const int x = c.add_vertex("x");
  c.set_basepoint(x);
  std::vector<int> tail(n + 1), head(n + 1);
  for (int k = 1; k <= n; ++k) {
    const int m = c.add_vertex(index_id("m", k));
    tail[k] = c.add_edge(index_id("_a", k), x, m);
    head[k] = c.add_edge(index_id("a", k), m, x);
  }
  std::vector<std::pair<int, int>> face_span;  // circles a face touches
  if (kind == TowerKind::archipelago) {
    for (int k = 1; k < n; ++k) {
      c.add_face(index_id("d", k), {{tail[k], false}, {head[k], false}, {head[k + 1], true}, {tail[k + 1], true}});
      face_span.emplace_back(k, k + 1);
    }
  } else if (kind == TowerKind::cone) {
    for (int k = 1; k <= n; ++k) {
      c.add_face(index_id("c", k), {{tail[k], false}, {head[k], false}});
      face_span.emplace_back(k, k);
    }
  }
  for (int k = 1; k <= n; ++k) {
    Subcomplex nk(c, "N" + std::to_string(k));
    nk.insert({CellKind::vertex, x});
    for (int j = k; j <= n; ++j) {
      nk.add_closed(c, {CellKind::edge, tail[j]});
      nk.add_closed(c, {CellKind::edge, head[j]});
    }
    for (std::size_t f = 0; f < face_span.size(); ++f) {
      if (face_span[f].first >= k) nk.insert({CellKind::face, static_cast<int>(f)});
    }
    s.filtration.push_back(std::move(nk));
  }
  return s;
}

Subcomplex carry(const Complex& factor, const Subcomplex& s, const CellMap& map,
                 const std::vector<int>& faces, Subcomplex into) {
  for (int v = 0; v < factor.num_vertices(); ++v)
    if (s.contains_vertex(v)) into.insert({CellKind::vertex, map.vertex[v]});
  for (int e = 0; e < factor.num_edges(); ++e)
    if (s.contains_edge(e)) into.insert({CellKind::edge, map.edge[e].front().edge});
  for (int f = 0; f < factor.num_faces(); ++f)
    if (s.contains_face(f)) into.insert({CellKind::face, faces[f]});
  return into;
}

/// Index of the circle an id belongs to ("m3", "_a3", "a3", "c3", "2:a3" -> 3), or 0.
int circle_of(std::string_view id) {
  const auto colon = id.find(':');
  if (colon != std::string_view::npos) id.remove_prefix(colon + 1);
  std::size_t digits = id.size();
  while (digits > 0 && std::isdigit(static_cast<unsigned char>(id[digits - 1]))) --digits;
  if (digits == id.size()) return 0;
  return std::stoi(std::string(id.substr(digits)));
}

/// Same id with the circle index replaced.
std::string renumber(std::string_view id, int k) {
  std::size_t digits = id.size();
  while (digits > 0 && std::isdigit(static_cast<unsigned char>(id[digits - 1]))) --digits;
  return std::string(id.substr(0, digits)) + std::to_string(k);
}

CellMap bonding_map(TowerKind kind, const Complex& upper, const Complex& lower, int n) {
  CellMap f;
  for (int v = 0; v < upper.num_vertices(); ++v) {
    const std::string& id = upper.vertices()[v];
    if (circle_of(id) <= n) {
      f.vertex.push_back(lower.vertex_index(id));
    } else if (kind == TowerKind::archipelago) {
      f.vertex.push_back(lower.vertex_index(renumber(id, n)));
    } else {
      f.vertex.push_back(lower.basepoint());
    }
  }
  for (int e = 0; e < upper.num_edges(); ++e) {
    const std::string& id = upper.edges()[e].id;
    if (circle_of(id) <= n) {
      f.edge.push_back({{lower.find(id)->index, false}});
    } else if (kind == TowerKind::archipelago) {
      f.edge.push_back({{lower.find(renumber(id, n))->index, false}});
    } else {
      f.edge.push_back({});
    }
  }
  return f;
}

bool same_cycle(const EdgePath& a, const EdgePath& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t r = 0; r < a.size(); ++r) {
    bool ok = true;
    for (std::size_t j = 0; j < a.size() && ok; ++j) ok = a[j] == b[(j + r) % b.size()];
    if (ok) return true;
  }
  return a.empty();
}

/// Raw edge-path generators of π1(N_k) as words of the stage, with their names.
std::vector<std::pair<std::string, Word>> neighborhood_loops(const TowerStage& s, const Pi1Data& pi, int k) {
  const Extracted piece = extract(s.complex, s.filtration[k - 1], pi.basepoint);
  const Pi1Data local = pi1(piece.complex);
  std::vector<std::pair<std::string, Word>> out;
  for (int g = 1; g <= local.presentation.rank(); ++g) {
    out.emplace_back(local.presentation.generators[g - 1],
                     pi.word_of(piece.inclusion.apply(local.generator_loop(g))));
  }
  return out;
}

}  // namespace

TowerStage build_stage(TowerKind kind, int n) {
  if (n < 1) throw Error(ErrorKind::parse, "tower stage must be at least 1");
  if (kind != TowerKind::double_cone) return circles_stage(kind, n);
  const TowerStage cone = circles_stage(TowerKind::cone, n);
  const WedgeComplex w = wedge(cone.complex, cone.complex);
  TowerStage s;
  s.n = n;
  s.complex = w.complex;
  for (int k = 1; k <= n; ++k) {
    Subcomplex nk(s.complex, "N" + std::to_string(k));
    nk = carry(cone.complex, cone.filtration[k - 1], w.from_first, w.face_from_first, nk);
    nk = carry(cone.complex, cone.filtration[k - 1], w.from_second, w.face_from_second, nk);
    s.filtration.push_back(std::move(nk));
  }
  return s;
}

Tower builtin_tower(TowerKind kind, int n) {
  Tower t;
  t.kind = kind;
  for (int k = 1; k <= n; ++k) {
    t.stages.push_back(build_stage(kind, k));
    const Pi1Data pi = pi1(t.stages.back().complex);
    t.stages.back().loop_names = pi.presentation.generators;
  }
  for (int k = 1; k < n; ++k) {
    t.bonding.push_back(bonding_map(kind, t.stage(k + 1).complex, t.stage(k).complex, k));
  }
  return t;
}

bool bonding_is_cellular(const Tower& t, int n) {
  const Complex& upper = t.stage(n + 1).complex;
  const Complex& lower = t.stage(n).complex;
  const CellMap& f = t.bonding.at(n - 1);
  if (f.vertex[upper.basepoint()] != lower.basepoint()) return false;
  for (int e = 0; e < upper.num_edges(); ++e) {
    const Edge& edge = upper.edges()[e];
    const EdgePath& image = f.edge[e];
    if (!is_continuous(lower, image, f.vertex[edge.source])) return false;
    if (lower.path_target(image, f.vertex[edge.source]) != f.vertex[edge.target]) return false;
  }
  for (const Face& face : upper.faces()) {
    const EdgePath image = reduce_path(f.apply(face.boundary));
    if (image.empty()) continue;
    const bool hits = std::any_of(lower.faces().begin(), lower.faces().end(),
                                  [&](const Face& g) { return same_cycle(image, g.boundary); });
    if (!hits) return false;
  }
  for (int k = 1; k <= n; ++k) {
    const Subcomplex& big = t.stage(n + 1).filtration[k - 1];
    const Subcomplex& small = t.stage(n).filtration[k - 1];
    for (int v = 0; v < upper.num_vertices(); ++v)
      if (big.contains_vertex(v) && !small.contains_vertex(f.vertex[v])) return false;
    for (int e = 0; e < upper.num_edges(); ++e) {
      if (!big.contains_edge(e)) continue;
      for (const SignedEdge& s : f.edge[e])
        if (!small.contains_edge(s.edge)) return false;
    }
  }
  return true;
}

Cover stage_cover(const TowerStage& s, int k) {
  const Complex& c = s.complex;
  const Subcomplex& nk = s.filtration.at(k - 1);
  Cover u;
  u.name = "U(" + std::to_string(s.n) + "," + std::to_string(k) + ")";
  u.elements.push_back(nk);
  for (int e = 0; e < c.num_edges(); ++e) {
    if (nk.contains_edge(e)) continue;
    Subcomplex arc(c, "arc(" + c.edges()[e].id + ")");
    arc.add_closed(c, {CellKind::edge, e});
    u.elements.push_back(std::move(arc));
  }
  for (int f = 0; f < c.num_faces(); ++f) {
    if (nk.contains_face(f)) continue;
    Subcomplex disc(c, "cell(" + c.faces()[f].id + ")");
    disc.add_closed(c, {CellKind::face, f});
    u.elements.push_back(std::move(disc));
  }
  return u;
}

NormalSubgroupData stage_spanier(const Tower& t, int n, int k) {
  const TowerStage& s = t.stage(n);
  return spanier_generators(s.complex, stage_cover(s, k));
}

Classification classify_basepoint(const Tower& t, int n, const Budget& budget) {
  const TowerStage& s = t.stage(n);
  auto pi = std::make_shared<const Pi1Data>(pi1(s.complex));
  Classification out;
  out.n = n;
  out.scale = "at tower scale " + std::to_string(n);

  std::vector<std::vector<std::pair<std::string, Word>>> loops(n + 1);
  for (int k = 1; k <= n; ++k) loops[k] = neighborhood_loops(s, *pi, k);

  const QuotientOracle ambient(pi->presentation, {}, budget);
  for (int k = 1; k <= n; ++k) {
    std::vector<Evidence> local;
    bool all_trivial = true;
    for (const auto& [name, word] : loops[k]) {
      Verdict v = ambient.is_trivial(word);
      all_trivial = all_trivial && v.is_yes();
      local.push_back({k, name, 0, std::move(v)});
    }
    if (all_trivial) {
      out.point = PointClass::regular;
      out.evidence = std::move(local);
      return out;
    }
  }

  std::vector<QuotientOracle> spanier;
  for (int m = 1; m <= n; ++m) {
    spanier.emplace_back(pi->presentation, spanier_generators(pi, stage_cover(s, m)).generators, budget);
  }
  bool any_no = false, any_unknown = false;
  for (int k = 1; k <= n; ++k) {
    for (const auto& [name, word] : loops[k]) {
      for (int m = 1; m <= n; ++m) {
        Verdict v = spanier[m - 1].is_trivial(word);
        any_no = any_no || v.is_no();
        any_unknown = any_unknown || v.is_unknown();
        out.evidence.push_back({k, name, m, std::move(v)});
      }
    }
  }
  out.point = any_no ? PointClass::wild : any_unknown ? PointClass::unknown : PointClass::tame;
  return out;
}

CoverabilityReport coverability_report(const Tower& t, int n, const Budget& budget) {
  CoverabilityReport r;
  r.classification = classify_basepoint(t, n, budget);
  switch (r.classification.point) {
    case PointClass::wild: r.verdict = "LIMIT-NOT-COVERABLE"; break;
    case PointClass::tame:
    case PointClass::regular: r.verdict = "LIMIT-COVERABLE-EVIDENCE"; break;
    case PointClass::unknown: r.verdict = "INCONCLUSIVE"; break;
  }

  const SpApproximation sp = spanier_sp_approx(t.stage(n).complex, budget.depth, budget, true);
  const std::string depth = std::to_string(sp.depth);
  r.stage_certificate = sp.value.generators.empty()
                            ? "stage " + std::to_string(n) + " is coverable: star cover of sd^" + depth +
                                  " has trivial Spanier group, so the stage has a universal covering"
                            : "stage " + std::to_string(n) + ": Spanier group of the sd^" + depth +
                                  " star cover is not yet trivial";

  r.notes.push_back("classification " + r.classification.scale +
                    "; a finite stage gives evidence about the limit, not a proof");
  if (r.classification.point == PointClass::wild) {
    r.notes.push_back("a wild point rules out semi-locally Spanier, hence a universal covering: "
                      "the limit space is not coverable");
  }
  if (t.kind == TowerKind::double_cone) {
    r.notes.push_back("limit (cited, not computed): the double cone on the Hawaiian Earring does not have a "
                      "simply connected universal covering space");
  }
  if (t.kind == TowerKind::cone) {
    r.notes.push_back("limit (cited, not computed): the cone on the Hawaiian Earring is semi-locally simply "
                      "connected");
  }
  return r;
}

}  // namespace covtop
