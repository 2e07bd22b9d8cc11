#include "covtop/complex.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace covtop {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::dangling: return "ErrDangling";
    case ErrorKind::open_boundary: return "ErrOpenBoundary";
    case ErrorKind::disconnected: return "ErrDisconnected";
    case ErrorKind::duplicate_id: return "ErrDuplicateId";
    case ErrorKind::not_closed: return "ErrNotClosed";
    case ErrorKind::not_cover: return "ErrNotCover";
    case ErrorKind::path_endpoints: return "ErrPathEndpoints";
    case ErrorKind::budget: return "ErrBudget";
    case ErrorKind::fiber: return "ErrFiber";
    case ErrorKind::edge_lift: return "ErrEdgeLift";
    case ErrorKind::face_lift: return "ErrFaceLift";
    case ErrorKind::truncated: return "ErrTruncated";
    case ErrorKind::not_based: return "ErrNotBased";
    case ErrorKind::loop_outside: return "ErrLoopOutside";
    case ErrorKind::parse: return "ErrParse";
  }
  return "Err";
}

EdgePath inverse(std::span<const SignedEdge> path) {
  EdgePath out;
  out.reserve(path.size());
  for (auto it = path.rbegin(); it != path.rend(); ++it) out.push_back(it->inverse());
  return out;
}

EdgePath reduce_path(std::span<const SignedEdge> path) {
  EdgePath out;
  out.reserve(path.size());
  for (const SignedEdge& s : path) {
    if (!out.empty() && out.back() == s.inverse()) {
      out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Complex

void Complex::register_id(const std::string& id, CellRef cell) {
  if (id.empty()) throw Error(ErrorKind::parse, "empty cell id");
  auto [it, inserted] = index_.emplace(id, cell);
  if (!inserted) throw Error(ErrorKind::duplicate_id, "cell id '" + id + "' declared twice");
}

int Complex::add_vertex(std::string id) {
  const int index = num_vertices();
  register_id(id, {CellKind::vertex, index});
  vertices_.push_back(std::move(id));
  return index;
}

int Complex::add_edge(std::string id, int source, int target) {
  const int index = num_edges();
  register_id(id, {CellKind::edge, index});
  edges_.push_back({std::move(id), source, target});
  return index;
}

int Complex::add_edge(std::string id, std::string_view source, std::string_view target) {
  const int s = vertex_index(source);
  const int t = vertex_index(target);
  return add_edge(std::move(id), s, t);
}

int Complex::add_face(std::string id, EdgePath boundary) {
  const int index = num_faces();
  register_id(id, {CellKind::face, index});
  faces_.push_back({std::move(id), std::move(boundary)});
  return index;
}

void Complex::set_basepoint(int vertex) { basepoint_ = vertex; }

std::optional<CellRef> Complex::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Complex::vertex_index(std::string_view id) const {
  auto cell = find(id);
  if (!cell || cell->kind != CellKind::vertex) {
    throw Error(ErrorKind::dangling, "undeclared vertex '" + std::string(id) + "'");
  }
  return cell->index;
}

const std::string& Complex::id(CellRef cell) const {
  switch (cell.kind) {
    case CellKind::vertex: return vertices_.at(cell.index);
    case CellKind::edge: return edges_.at(cell.index).id;
    case CellKind::face: return faces_.at(cell.index).id;
  }
  return vertices_.at(cell.index);
}

int Complex::source(SignedEdge s) const {
  const Edge& e = edges_.at(s.edge);
  return s.inverted ? e.target : e.source;
}

int Complex::target(SignedEdge s) const {
  const Edge& e = edges_.at(s.edge);
  return s.inverted ? e.source : e.target;
}

int Complex::path_source(std::span<const SignedEdge> path, int fallback) const {
  return path.empty() ? fallback : source(path.front());
}

int Complex::path_target(std::span<const SignedEdge> path, int fallback) const {
  return path.empty() ? fallback : target(path.back());
}

std::vector<std::vector<SignedEdge>> Complex::adjacency() const {
  std::vector<int> order(edges_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return edges_[a].id < edges_[b].id; });
  std::vector<std::vector<SignedEdge>> adj(vertices_.size());
  for (int e : order) {
    adj[edges_[e].source].push_back({e, false});
    adj[edges_[e].target].push_back({e, true});
  }
  return adj;
}

bool is_continuous(const Complex& c, std::span<const SignedEdge> path, int from) {
  int at = from;
  for (const SignedEdge& s : path) {
    if (s.edge < 0 || s.edge >= c.num_edges()) return false;
    if (c.source(s) != at) return false;
    at = c.target(s);
  }
  return true;
}

void validate(const Complex& c) {
  const int nv = c.num_vertices();
  for (const Edge& e : c.edges()) {
    if (e.source < 0 || e.source >= nv || e.target < 0 || e.target >= nv) {
      throw Error(ErrorKind::dangling, "edge '" + e.id + "' references an undeclared vertex");
    }
  }
  for (const Face& f : c.faces()) {
    for (const SignedEdge& s : f.boundary) {
      if (s.edge < 0 || s.edge >= c.num_edges()) {
        throw Error(ErrorKind::dangling, "face '" + f.id + "' references an undeclared edge");
      }
    }
    if (f.boundary.empty()) {
      throw Error(ErrorKind::open_boundary, "face '" + f.id + "' has an empty boundary");
    }
    const int start = c.source(f.boundary.front());
    if (!is_continuous(c, f.boundary, start) || c.path_target(f.boundary, start) != start) {
      throw Error(ErrorKind::open_boundary, "face '" + f.id + "' boundary is not a closed path");
    }
  }
  if (c.basepoint() < 0 || c.basepoint() >= nv) {
    throw Error(ErrorKind::dangling, "basepoint is not a declared vertex");
  }
  std::vector<bool> seen(nv, false);
  std::vector<int> stack{c.basepoint()};
  seen[c.basepoint()] = true;
  const auto adj = c.adjacency();
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const SignedEdge& s : adj[v]) {
      const int w = c.target(s);
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != nv) {
    for (int v = 0; v < nv; ++v) {
      if (!seen[v]) {
        throw Error(ErrorKind::disconnected,
                    "vertex '" + c.vertices()[v] + "' is not reachable from the basepoint");
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Subcomplex

Subcomplex::Subcomplex(const Complex& parent, std::string name)
    : name_(std::move(name)),
      vertices_(parent.num_vertices(), false),
      edges_(parent.num_edges(), false),
      faces_(parent.num_faces(), false) {}

Subcomplex Subcomplex::whole(const Complex& parent, std::string name) {
  Subcomplex s(parent, std::move(name));
  std::fill(s.vertices_.begin(), s.vertices_.end(), true);
  std::fill(s.edges_.begin(), s.edges_.end(), true);
  std::fill(s.faces_.begin(), s.faces_.end(), true);
  return s;
}

void Subcomplex::insert(CellRef cell) {
  switch (cell.kind) {
    case CellKind::vertex: vertices_.at(cell.index) = true; break;
    case CellKind::edge: edges_.at(cell.index) = true; break;
    case CellKind::face: faces_.at(cell.index) = true; break;
  }
}

void Subcomplex::add_closed(const Complex& parent, CellRef cell) {
  insert(cell);
  if (cell.kind == CellKind::edge) {
    const Edge& e = parent.edges()[cell.index];
    vertices_[e.source] = true;
    vertices_[e.target] = true;
  } else if (cell.kind == CellKind::face) {
    for (const SignedEdge& s : parent.faces()[cell.index].boundary) {
      add_closed(parent, {CellKind::edge, s.edge});
    }
  }
}

bool Subcomplex::contains(CellRef cell) const {
  switch (cell.kind) {
    case CellKind::vertex: return vertices_.at(cell.index);
    case CellKind::edge: return edges_.at(cell.index);
    case CellKind::face: return faces_.at(cell.index);
  }
  return false;
}

void Subcomplex::close(const Complex& parent) {
  for (int f = 0; f < parent.num_faces(); ++f) {
    if (faces_[f]) add_closed(parent, {CellKind::face, f});
  }
  for (int e = 0; e < parent.num_edges(); ++e) {
    if (edges_[e]) add_closed(parent, {CellKind::edge, e});
  }
}

bool Subcomplex::is_closed(const Complex& parent) const {
  for (int f = 0; f < parent.num_faces(); ++f) {
    if (!faces_[f]) continue;
    for (const SignedEdge& s : parent.faces()[f].boundary) {
      if (!edges_[s.edge]) return false;
    }
  }
  for (int e = 0; e < parent.num_edges(); ++e) {
    if (!edges_[e]) continue;
    const Edge& edge = parent.edges()[e];
    if (!vertices_[edge.source] || !vertices_[edge.target]) return false;
  }
  return true;
}

namespace {

bool mask_subset(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

std::vector<bool> mask_and(const std::vector<bool>& a, const std::vector<bool>& b) {
  std::vector<bool> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
  return out;
}

std::vector<bool> mask_or(const std::vector<bool>& a, const std::vector<bool>& b) {
  std::vector<bool> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] || b[i];
  return out;
}

}  // namespace

bool Subcomplex::is_subset_of(const Subcomplex& other) const {
  return mask_subset(vertices_, other.vertices_) && mask_subset(edges_, other.edges_) &&
         mask_subset(faces_, other.faces_);
}

bool Subcomplex::empty() const {
  auto none = [](const std::vector<bool>& m) {
    return std::none_of(m.begin(), m.end(), [](bool b) { return b; });
  };
  return none(vertices_) && none(edges_) && none(faces_);
}

bool Subcomplex::same_cells(const Subcomplex& other) const {
  return vertices_ == other.vertices_ && edges_ == other.edges_ && faces_ == other.faces_;
}

int Subcomplex::cell_count() const {
  auto count = [](const std::vector<bool>& m) {
    return static_cast<int>(std::count(m.begin(), m.end(), true));
  };
  return count(vertices_) + count(edges_) + count(faces_);
}

Subcomplex Subcomplex::intersect(const Subcomplex& other) const {
  Subcomplex out;
  out.name_ = name_ + "&" + other.name_;
  out.vertices_ = mask_and(vertices_, other.vertices_);
  out.edges_ = mask_and(edges_, other.edges_);
  out.faces_ = mask_and(faces_, other.faces_);
  return out;
}

Subcomplex Subcomplex::unite(const Subcomplex& other) const {
  Subcomplex out;
  out.name_ = name_ + "|" + other.name_;
  out.vertices_ = mask_or(vertices_, other.vertices_);
  out.edges_ = mask_or(edges_, other.edges_);
  out.faces_ = mask_or(faces_, other.faces_);
  return out;
}

std::vector<CellRef> Subcomplex::cells() const {
  std::vector<CellRef> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i]) out.push_back({CellKind::vertex, static_cast<int>(i)});
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i]) out.push_back({CellKind::edge, static_cast<int>(i)});
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i]) out.push_back({CellKind::face, static_cast<int>(i)});
  return out;
}

std::vector<Subcomplex> components(const Complex& parent, const Subcomplex& s) {
  const int nv = parent.num_vertices();
  std::vector<int> root(nv);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (int e = 0; e < parent.num_edges(); ++e) {
    if (!s.contains_edge(e)) continue;
    const int a = find(parent.edges()[e].source);
    const int b = find(parent.edges()[e].target);
    if (a != b) root[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> slot(nv, -1);
  std::vector<Subcomplex> out;
  for (int v = 0; v < nv; ++v) {
    if (!s.contains_vertex(v)) continue;
    const int r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back(parent, s.name() + "#" + std::to_string(out.size()));
    }
    out[slot[r]].insert({CellKind::vertex, v});
  }
  for (int e = 0; e < parent.num_edges(); ++e) {
    if (s.contains_edge(e)) out[slot[find(parent.edges()[e].source)]].insert({CellKind::edge, e});
  }
  for (int f = 0; f < parent.num_faces(); ++f) {
    if (!s.contains_face(f)) continue;
    const int v = parent.source(parent.faces()[f].boundary.front());
    out[slot[find(v)]].insert({CellKind::face, f});
  }
  return out;
}

bool is_cover(const Complex& parent, const Cover& u) {
  Subcomplex all(parent, "");
  for (const Subcomplex& s : u.elements) {
    if (s.parent_vertices() != parent.num_vertices() || s.parent_edges() != parent.num_edges() ||
        s.parent_faces() != parent.num_faces()) {
      return false;
    }
    all = all.unite(s);
  }
  return all.same_cells(Subcomplex::whole(parent));
}

void require_cover(const Complex& parent, const Cover& u) {
  Subcomplex all(parent, "");
  for (const Subcomplex& s : u.elements) {
    if (s.parent_vertices() != parent.num_vertices() || s.parent_edges() != parent.num_edges() ||
        s.parent_faces() != parent.num_faces()) {
      throw Error(ErrorKind::not_cover,
                  "element '" + s.name() + "' of cover '" + u.name + "' belongs to another complex");
    }
    all = all.unite(s);
  }
  for (const CellRef& cell : Subcomplex::whole(parent).cells()) {
    if (!all.contains(cell)) {
      throw Error(ErrorKind::not_cover,
                  "cover '" + u.name + "' misses cell '" + parent.id(cell) + "'");
    }
  }
}

void validate_loop(const Complex& c, const EdgeLoop& loop) {
  if (loop.base < 0 || loop.base >= c.num_vertices()) {
    throw Error(ErrorKind::not_based, "loop base is not a vertex");
  }
  if (!is_continuous(c, loop.word, loop.base) ||
      c.path_target(loop.word, loop.base) != loop.base) {
    throw Error(ErrorKind::not_based, "edge word is not a closed path at its base");
  }
}

// ---------------------------------------------------------------------------
// Cell maps

EdgePath CellMap::apply(std::span<const SignedEdge> path) const {
  EdgePath out;
  for (const SignedEdge& s : path) {
    const EdgePath& image = edge.at(s.edge);
    if (!s.inverted) {
      out.insert(out.end(), image.begin(), image.end());
    } else {
      for (auto it = image.rbegin(); it != image.rend(); ++it) out.push_back(it->inverse());
    }
  }
  return out;
}

CellMap compose(const CellMap& first, const CellMap& second) {
  CellMap out;
  out.vertex.reserve(first.vertex.size());
  for (int v : first.vertex) out.vertex.push_back(second.vertex.at(v));
  out.edge.reserve(first.edge.size());
  for (const EdgePath& p : first.edge) out.edge.push_back(second.apply(p));
  return out;
}

CellMap identity_map(const Complex& c) {
  CellMap out;
  out.vertex.resize(c.num_vertices());
  std::iota(out.vertex.begin(), out.vertex.end(), 0);
  out.edge.resize(c.num_edges());
  for (int e = 0; e < c.num_edges(); ++e) out.edge[e] = {{e, false}};
  return out;
}

// ---------------------------------------------------------------------------
// Subdivision

Subdivision subdivide(const Complex& c) {
  Subdivision out;
  Complex& fine = out.fine;
  const int nv = c.num_vertices();
  const int ne = c.num_edges();

  for (int v = 0; v < nv; ++v) {
    fine.add_vertex(c.vertices()[v]);
    out.vertex_carrier.push_back({CellKind::vertex, v});
    out.to_coarse.vertex.push_back(v);
  }
  for (int e = 0; e < ne; ++e) {
    fine.add_vertex(c.edges()[e].id + "/m");
    out.vertex_carrier.push_back({CellKind::edge, e});
    out.to_coarse.vertex.push_back(c.edges()[e].source);
  }
  for (int f = 0; f < c.num_faces(); ++f) {
    fine.add_vertex(c.faces()[f].id + "/c");
    out.vertex_carrier.push_back({CellKind::face, f});
    out.to_coarse.vertex.push_back(c.source(c.faces()[f].boundary.front()));
  }

  auto midpoint = [&](int e) { return nv + e; };
  for (int e = 0; e < ne; ++e) {
    const Edge& edge = c.edges()[e];
    fine.add_edge(edge.id + "/0", edge.source, midpoint(e));
    fine.add_edge(edge.id + "/1", midpoint(e), edge.target);
    out.edge_carrier.push_back({CellKind::edge, e});
    out.edge_carrier.push_back({CellKind::edge, e});
    out.to_coarse.edge.push_back({});
    out.to_coarse.edge.push_back({{e, false}});
  }

  for (int f = 0; f < c.num_faces(); ++f) {
    const Face& face = c.faces()[f];
    const int center = nv + ne + f;
    const int len = static_cast<int>(face.boundary.size());

    // Subdivided boundary: position j has vertex positions[j]; step j runs
    // from positions[j] to positions[j+1].
    std::vector<int> positions;
    EdgePath steps;
    std::vector<EdgePath> anchor_paths;  // coarse path from the center's anchor to positions[j]'s anchor
    EdgePath prefix;
    for (int i = 0; i < len; ++i) {
      const SignedEdge s = face.boundary[i];
      positions.push_back(c.source(s));
      anchor_paths.push_back(prefix);
      positions.push_back(midpoint(s.edge));
      if (!s.inverted) {
        anchor_paths.push_back(prefix);
        steps.push_back({2 * s.edge, false});
        steps.push_back({2 * s.edge + 1, false});
      } else {
        EdgePath through = prefix;
        through.push_back(s);
        anchor_paths.push_back(through);
        steps.push_back({2 * s.edge + 1, true});
        steps.push_back({2 * s.edge, true});
      }
      prefix.push_back(s);
    }

    const int first_radial = fine.num_edges();
    const int positions_count = 2 * len;
    for (int j = 0; j < positions_count; ++j) {
      fine.add_edge(face.id + "/r" + std::to_string(j), center, positions[j]);
      out.edge_carrier.push_back({CellKind::face, f});
      out.to_coarse.edge.push_back(anchor_paths[j]);
    }
    for (int j = 0; j < positions_count; ++j) {
      const int next = (j + 1) % positions_count;
      fine.add_face(face.id + "/t" + std::to_string(j),
                    {{first_radial + j, false}, steps[j], {first_radial + next, true}});
      out.face_carrier.push_back({CellKind::face, f});
    }
  }
  fine.set_basepoint(c.basepoint());
  return out;
}

Subdivision subdivide_times(const Complex& c, int depth) {
  Subdivision acc;
  acc.fine = c;
  acc.to_coarse = identity_map(c);
  for (int v = 0; v < c.num_vertices(); ++v) acc.vertex_carrier.push_back({CellKind::vertex, v});
  for (int e = 0; e < c.num_edges(); ++e) acc.edge_carrier.push_back({CellKind::edge, e});
  for (int f = 0; f < c.num_faces(); ++f) acc.face_carrier.push_back({CellKind::face, f});

  for (int k = 0; k < depth; ++k) {
    Subdivision step = subdivide(acc.fine);
    auto lift = [&](CellRef r) {
      switch (r.kind) {
        case CellKind::vertex: return acc.vertex_carrier[r.index];
        case CellKind::edge: return acc.edge_carrier[r.index];
        case CellKind::face: return acc.face_carrier[r.index];
      }
      return r;
    };
    Subdivision next;
    next.to_coarse = compose(step.to_coarse, acc.to_coarse);
    for (CellRef r : step.vertex_carrier) next.vertex_carrier.push_back(lift(r));
    for (CellRef r : step.edge_carrier) next.edge_carrier.push_back(lift(r));
    for (CellRef r : step.face_carrier) next.face_carrier.push_back(lift(r));
    next.fine = std::move(step.fine);
    acc = std::move(next);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Covers

Cover star_cover(const Complex& c) {
  Cover out;
  out.name = "star";
  for (int v = 0; v < c.num_vertices(); ++v) {
    Subcomplex star(c, "star(" + c.vertices()[v] + ")");
    star.insert({CellKind::vertex, v});
    for (int e = 0; e < c.num_edges(); ++e) {
      if (c.edges()[e].source == v || c.edges()[e].target == v) {
        star.add_closed(c, {CellKind::edge, e});
      }
    }
    for (int f = 0; f < c.num_faces(); ++f) {
      for (const SignedEdge& s : c.faces()[f].boundary) {
        if (c.source(s) == v) {
          star.add_closed(c, {CellKind::face, f});
          break;
        }
      }
    }
    out.elements.push_back(std::move(star));
  }
  return out;
}

Cover intersect_covers(const Complex& c, const Cover& u, const Cover& v) {
  require_cover(c, u);
  require_cover(c, v);
  std::vector<Subcomplex> pieces;
  for (const Subcomplex& a : u.elements) {
    for (const Subcomplex& b : v.elements) {
      Subcomplex piece = a.intersect(b);
      if (piece.empty()) continue;
      const bool duplicate = std::any_of(pieces.begin(), pieces.end(), [&](const Subcomplex& p) {
        return p.same_cells(piece);
      });
      if (!duplicate) pieces.push_back(std::move(piece));
    }
  }
  Cover out;
  out.name = u.name + "&" + v.name;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < pieces.size() && !dominated; ++j) {
      dominated = i != j && pieces[i].is_subset_of(pieces[j]);
    }
    if (!dominated) out.elements.push_back(pieces[i]);
  }
  require_cover(c, out);
  return out;
}

bool refines(const Cover& v, const Cover& u) {
  return std::all_of(v.elements.begin(), v.elements.end(), [&](const Subcomplex& a) {
    return std::any_of(u.elements.begin(), u.elements.end(),
                       [&](const Subcomplex& b) { return a.is_subset_of(b); });
  });
}

// ---------------------------------------------------------------------------
// Wedge

WedgeComplex wedge(const Complex& first, const Complex& second) {
  validate(first);
  validate(second);
  WedgeComplex out;
  Complex& w = out.complex;

  auto collides = [](const Complex& self, const Complex& other, CellRef cell) {
    const std::string& id = self.id(cell);
    auto hit = other.find(id);
    if (!hit) return false;
    // The two basepoints merge, so a shared basepoint id is not a collision.
    const bool self_base = cell.kind == CellKind::vertex && cell.index == self.basepoint();
    const bool other_base = hit->kind == CellKind::vertex && hit->index == other.basepoint();
    return !(self_base && other_base);
  };
  auto name_for = [&](const Complex& self, const Complex& other, CellRef cell, int tag) {
    const std::string& id = self.id(cell);
    return collides(self, other, cell) ? std::to_string(tag) + ":" + id : id;
  };

  const int wedge_point = w.add_vertex(name_for(first, second, {CellKind::vertex, first.basepoint()}, 1));
  out.vertex_factor.push_back(0);
  w.set_basepoint(wedge_point);

  auto add_factor = [&](const Complex& self, const Complex& other, int tag, CellMap& map,
                        std::vector<int>& face_map) {
    map.vertex.assign(self.num_vertices(), -1);
    for (int v = 0; v < self.num_vertices(); ++v) {
      if (v == self.basepoint()) {
        map.vertex[v] = wedge_point;
        continue;
      }
      map.vertex[v] = w.add_vertex(name_for(self, other, {CellKind::vertex, v}, tag));
      out.vertex_factor.push_back(tag);
    }
    for (int e = 0; e < self.num_edges(); ++e) {
      const Edge& edge = self.edges()[e];
      const int idx = w.add_edge(name_for(self, other, {CellKind::edge, e}, tag),
                                 map.vertex[edge.source], map.vertex[edge.target]);
      map.edge.push_back({{idx, false}});
      out.edge_factor.push_back(tag);
    }
    for (int f = 0; f < self.num_faces(); ++f) {
      const Face& face = self.faces()[f];
      face_map.push_back(w.add_face(name_for(self, other, {CellKind::face, f}, tag), map.apply(face.boundary)));
      out.face_factor.push_back(tag);
    }
  };
  add_factor(first, second, 1, out.from_first, out.face_from_first);
  add_factor(second, first, 2, out.from_second, out.face_from_second);
  return out;
}

Extracted extract(const Complex& parent, const Subcomplex& s, int root) {
  if (!s.contains_vertex(root)) {
    throw Error(ErrorKind::loop_outside, "root vertex is not in the subcomplex");
  }
  Extracted out;
  std::vector<int> vmap(parent.num_vertices(), -1);
  std::vector<int> emap(parent.num_edges(), -1);
  for (int v = 0; v < parent.num_vertices(); ++v) {
    if (!s.contains_vertex(v)) continue;
    vmap[v] = out.complex.add_vertex(parent.vertices()[v]);
    out.inclusion.vertex.push_back(v);
  }
  for (int e = 0; e < parent.num_edges(); ++e) {
    if (!s.contains_edge(e)) continue;
    const Edge& edge = parent.edges()[e];
    emap[e] = out.complex.add_edge(edge.id, vmap.at(edge.source), vmap.at(edge.target));
    out.inclusion.edge.push_back({{e, false}});
  }
  for (int f = 0; f < parent.num_faces(); ++f) {
    if (!s.contains_face(f)) continue;
    EdgePath boundary;
    for (const SignedEdge& step : parent.faces()[f].boundary) {
      boundary.push_back({emap.at(step.edge), step.inverted});
    }
    out.complex.add_face(parent.faces()[f].id, std::move(boundary));
    out.face_inclusion.push_back(f);
  }
  out.complex.set_basepoint(vmap[root]);
  return out;
}

}  // namespace covtop
