#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "covtop/error.hpp"

namespace covtop {

enum class CellKind { vertex, edge, face };

struct CellRef {
  CellKind kind = CellKind::vertex;
  int index = 0;
  auto operator<=>(const CellRef&) const = default;
};

/// An oriented traversal of an edge; an inverted edge runs from target to source.
struct SignedEdge {
  int edge = 0;
  bool inverted = false;

  SignedEdge inverse() const { return {edge, !inverted}; }
  bool operator==(const SignedEdge&) const = default;
};

using EdgePath = std::vector<SignedEdge>;

EdgePath inverse(std::span<const SignedEdge> path);

/// Cancels adjacent e e^-1 pairs.
EdgePath reduce_path(std::span<const SignedEdge> path);

struct Edge {
  std::string id;
  int source = 0;
  int target = 0;
};

struct Face {
  std::string id;
  EdgePath boundary;
};

/**
 * Finite combinatorial 2-complex: vertices, directed edges with formal
 * inverses, and polygonal faces glued along closed edge paths.
 *
 * Cell ids are opaque strings, unique across all three kinds so that a
 * single id names a cell unambiguously in the text formats.
 */
class Complex {
 public:
  int add_vertex(std::string id);
  int add_edge(std::string id, int source, int target);
  int add_edge(std::string id, std::string_view source, std::string_view target);
  int add_face(std::string id, EdgePath boundary);
  void set_basepoint(int vertex);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Face>& faces() const { return faces_; }
  int basepoint() const { return basepoint_; }

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  int num_cells() const { return num_vertices() + num_edges() + num_faces(); }

  std::optional<CellRef> find(std::string_view id) const;
  int vertex_index(std::string_view id) const;
  const std::string& id(CellRef cell) const;

  int source(SignedEdge s) const;
  int target(SignedEdge s) const;
  int path_source(std::span<const SignedEdge> path, int fallback) const;
  int path_target(std::span<const SignedEdge> path, int fallback) const;

  /// Signed edges leaving each vertex, ordered by edge id (forward before inverse).
  std::vector<std::vector<SignedEdge>> adjacency() const;

 private:
  void register_id(const std::string& id, CellRef cell);

  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  int basepoint_ = -1;
  std::unordered_map<std::string, CellRef> index_;
};

/// Throws Error{dangling, open_boundary, disconnected} on the first violated invariant.
void validate(const Complex& c);

/// True when `path` is a continuous edge path starting at `from`.
bool is_continuous(const Complex& c, std::span<const SignedEdge> path, int from);

/// Subset of cells of a parent complex, stored as membership masks.
class Subcomplex {
 public:
  Subcomplex() = default;
  Subcomplex(const Complex& parent, std::string name);

  static Subcomplex whole(const Complex& parent, std::string name = "whole");

  /// Inserts the cell and everything on its boundary.
  void add_closed(const Complex& parent, CellRef cell);
  void insert(CellRef cell);
  bool contains(CellRef cell) const;
  bool contains_vertex(int v) const { return vertices_[v]; }
  bool contains_edge(int e) const { return edges_[e]; }
  bool contains_face(int f) const { return faces_[f]; }

  void close(const Complex& parent);
  bool is_closed(const Complex& parent) const;
  bool is_subset_of(const Subcomplex& other) const;
  bool empty() const;
  bool same_cells(const Subcomplex& other) const;
  int cell_count() const;

  Subcomplex intersect(const Subcomplex& other) const;
  Subcomplex unite(const Subcomplex& other) const;

  std::vector<CellRef> cells() const;

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  int parent_vertices() const { return static_cast<int>(vertices_.size()); }
  int parent_edges() const { return static_cast<int>(edges_.size()); }
  int parent_faces() const { return static_cast<int>(faces_.size()); }

 private:
  std::string name_;
  std::vector<bool> vertices_;
  std::vector<bool> edges_;
  std::vector<bool> faces_;
};

/// Connected components of a subcomplex (faces follow their boundary edges).
std::vector<Subcomplex> components(const Complex& parent, const Subcomplex& s);

struct Cover {
  std::string name;
  std::vector<Subcomplex> elements;
};

bool is_cover(const Complex& parent, const Cover& u);
/// Throws Error{not_cover} naming the first uncovered cell.
void require_cover(const Complex& parent, const Cover& u);

/// Closed loop of signed edges at a base vertex.
struct EdgeLoop {
  int base = 0;
  EdgePath word;
};

/// Throws Error{not_based} unless the loop is continuous and closed at its base.
void validate_loop(const Complex& c, const EdgeLoop& loop);

/**
 * Cellular map between complexes: every vertex goes to a vertex and every
 * edge to an edge path between the images of its endpoints. Faces are not
 * stored; their images are the images of their boundary paths.
 */
struct CellMap {
  std::vector<int> vertex;
  std::vector<EdgePath> edge;

  EdgePath apply(std::span<const SignedEdge> path) const;
};

/// `first` then `second`.
CellMap compose(const CellMap& first, const CellMap& second);

CellMap identity_map(const Complex& c);

/// Result of subdividing a complex once, with the canonical map back.
struct Subdivision {
  Complex fine;
  CellMap to_coarse;
  std::vector<CellRef> vertex_carrier;
  std::vector<CellRef> edge_carrier;
  std::vector<CellRef> face_carrier;
};

/**
 * Splits every edge at a midpoint and cones every face from a new center
 * over its subdivided boundary (one radial edge and one triangle per
 * boundary position). Cell layout is positional: original vertices, then
 * midpoints, then centers; edge e becomes edges 2e and 2e+1; radial edges
 * and triangles follow face by face.
 */
Subdivision subdivide(const Complex& c);

/// Applies `subdivide` `depth` times and composes the maps back to `c`.
Subdivision subdivide_times(const Complex& c, int depth);

/// One closed star per vertex.
Cover star_cover(const Complex& c);

/**
 * All nonempty pairwise intersections, with duplicates and elements contained
 * in another element dropped. Throws Error{not_cover} if either input or the
 * result fails to cover.
 */
Cover intersect_covers(const Complex& c, const Cover& u, const Cover& v);

/// True iff every element of `v` lies in some element of `u`.
bool refines(const Cover& v, const Cover& u);

/// One-point union with the two basepoints identified; cells carry factor tags.
struct WedgeComplex {
  Complex complex;
  std::vector<int> vertex_factor;  ///< 0 for the wedge point
  std::vector<int> edge_factor;
  std::vector<int> face_factor;
  CellMap from_first;
  CellMap from_second;
  std::vector<int> face_from_first;
  std::vector<int> face_from_second;
};

WedgeComplex wedge(const Complex& first, const Complex& second);

/// Standalone complex on the cells of `s`, with `root` as basepoint, plus its inclusion map.
struct Extracted {
  Complex complex;
  CellMap inclusion;
  std::vector<int> face_inclusion;
};

Extracted extract(const Complex& parent, const Subcomplex& s, int root);

}  // namespace covtop
