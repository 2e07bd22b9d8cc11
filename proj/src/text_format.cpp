#include "covtop/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "covtop/spanier.hpp"

namespace covtop {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(ErrorKind kind, int line, const std::string& message) {
  throw Error(kind, "line " + std::to_string(line) + ": " + message);
}

/// Runs f, re-raising library errors with the line number attached.
template <typename F>
auto at_line(int line, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    std::string what = e.what();
    const std::string prefix = std::string(to_string(e.kind())) + ": ";
    if (what.rfind(prefix, 0) == 0) what = what.substr(prefix.size());
    fail(e.kind(), line, what);
  }
}

void expect_arity(const Line& l, std::size_t min, std::size_t max) {
  const std::size_t n = l.tokens.size() - 1;
  if (n < min || n > max) fail(ErrorKind::parse, l.number, "wrong number of fields for '" + l.tokens[0] + "'");
}

SignedEdge parse_signed_edge(const Complex& c, const std::string& token, int line) {
  std::string id = token;
  bool inverted = false;
  if (id.size() > 3 && id.ends_with("^-1")) {
    id.resize(id.size() - 3);
    inverted = true;
  }
  auto cell = c.find(id);
  if (!cell || cell->kind != CellKind::edge) fail(ErrorKind::dangling, line, "undeclared edge '" + id + "'");
  return {cell->index, inverted};
}

std::string signed_id(const Complex& c, SignedEdge s) {
  return c.edges()[s.edge].id + (s.inverted ? "^-1" : "");
}

}  // namespace

Complex parse_complex(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  Complex c;
  // Declarations may come in any order: vertices first, then edges, then faces.
  for (const Line& l : lines) {
    const std::string& kw = l.tokens[0];
    if (kw != "vertex" && kw != "edge" && kw != "face" && kw != "basepoint") {
      fail(ErrorKind::parse, l.number, "unknown declaration '" + kw + "'");
    }
    if (kw == "vertex") {
      expect_arity(l, 1, 1);
      at_line(l.number, [&] { return c.add_vertex(l.tokens[1]); });
    }
  }
  for (const Line& l : lines) {
    if (l.tokens[0] != "edge") continue;
    expect_arity(l, 3, 3);
    at_line(l.number, [&] { return c.add_edge(l.tokens[1], l.tokens[2], l.tokens[3]); });
  }
  for (const Line& l : lines) {
    if (l.tokens[0] != "face") continue;
    expect_arity(l, 2, static_cast<std::size_t>(-1));
    EdgePath boundary;
    for (std::size_t i = 2; i < l.tokens.size(); ++i) boundary.push_back(parse_signed_edge(c, l.tokens[i], l.number));
    if (!is_continuous(c, boundary, c.source(boundary.front())) ||
        c.target(boundary.back()) != c.source(boundary.front())) {
      fail(ErrorKind::open_boundary, l.number, "face '" + l.tokens[1] + "' boundary is not a closed path");
    }
    at_line(l.number, [&] { return c.add_face(l.tokens[1], boundary); });
  }
  int basepoint_line = 0;
  for (const Line& l : lines) {
    if (l.tokens[0] != "basepoint") continue;
    expect_arity(l, 1, 1);
    if (basepoint_line) fail(ErrorKind::parse, l.number, "second basepoint declaration");
    basepoint_line = l.number;
    c.set_basepoint(at_line(l.number, [&] { return c.vertex_index(l.tokens[1]); }));
  }
  if (c.num_vertices() == 0) throw Error(ErrorKind::parse, "no vertices declared");
  if (!basepoint_line) c.set_basepoint(0);
  validate(c);
  return c;
}

std::string format_complex(const Complex& c) {
  std::ostringstream out;
  for (const std::string& v : c.vertices()) out << "vertex " << v << "\n";
  for (const Edge& e : c.edges()) out << "edge " << e.id << " " << c.vertices()[e.source] << " " << c.vertices()[e.target] << "\n";
  for (const Face& f : c.faces()) {
    out << "face " << f.id;
    for (const SignedEdge& s : f.boundary) out << " " << signed_id(c, s);
    out << "\n";
  }
  if (c.basepoint() >= 0) out << "basepoint " << c.vertices()[c.basepoint()] << "\n";
  return out.str();
}

CoverFile parse_cover_file(const Complex& c, std::string_view text) {
  CoverFile out;
  std::map<std::string, std::size_t> by_name;
  Subcomplex* current = nullptr;
  for (const Line& l : tokenize(text)) {
    const std::string& kw = l.tokens[0];
    if (kw == "subcomplex") {
      expect_arity(l, 1, 1);
      if (by_name.contains(l.tokens[1])) fail(ErrorKind::duplicate_id, l.number, "subcomplex '" + l.tokens[1] + "' declared twice");
      by_name[l.tokens[1]] = out.subcomplexes.size();
      out.subcomplexes.emplace_back(c, l.tokens[1]);
      current = &out.subcomplexes.back();
    } else if (kw == "cells") {
      if (!current) fail(ErrorKind::parse, l.number, "'cells' before any 'subcomplex'");
      expect_arity(l, 1, static_cast<std::size_t>(-1));
      for (std::size_t i = 1; i < l.tokens.size(); ++i) {
        auto cell = c.find(l.tokens[i]);
        if (!cell) fail(ErrorKind::dangling, l.number, "unknown cell '" + l.tokens[i] + "'");
        current->add_closed(c, *cell);
      }
    } else if (kw == "cover") {
      if (l.tokens.size() < 4 || l.tokens[2] != "=") fail(ErrorKind::parse, l.number, "expected 'cover <name> = <subcomplex>+'");
      Cover u{l.tokens[1], {}};
      for (std::size_t i = 3; i < l.tokens.size(); ++i) {
        auto it = by_name.find(l.tokens[i]);
        if (it == by_name.end()) fail(ErrorKind::dangling, l.number, "unknown subcomplex '" + l.tokens[i] + "'");
        u.elements.push_back(out.subcomplexes[it->second]);
      }
      out.covers.push_back(std::move(u));
    } else {
      fail(ErrorKind::parse, l.number, "unknown declaration '" + kw + "'");
    }
  }
  if (out.covers.empty() && !out.subcomplexes.empty()) out.covers.push_back({"cover", out.subcomplexes});
  return out;
}

std::string format_cover(const Complex& c, const Cover& u) {
  std::ostringstream out;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < u.elements.size(); ++i) {
    const Subcomplex& s = u.elements[i];
    std::string name = s.name().empty() ? "U" + std::to_string(i) : s.name();
    // Element names need not be unique or free of spaces; the file format needs both.
    for (char& ch : name)
      if (std::isspace(static_cast<unsigned char>(ch))) ch = '_';
    if (std::find(names.begin(), names.end(), name) != names.end()) name += "#" + std::to_string(i);
    names.push_back(name);
    out << "subcomplex " << name << "\ncells";
    for (const CellRef& cell : s.cells()) out << " " << c.id(cell);
    out << "\n";
  }
  std::string cover_name = u.name.empty() ? "cover" : u.name;
  for (char& ch : cover_name)
    if (std::isspace(static_cast<unsigned char>(ch))) ch = '_';
  out << "cover " << cover_name << " =";
  for (const std::string& n : names) out << " " << n;
  out << "\n";
  return out.str();
}

std::string format_covering(const CoveringMap& m) {
  std::ostringstream out;
  if (m.truncated) {
    out << "truncated " << m.radius << "\n";
  } else {
    out << "sheets " << m.sheets << "\n";
  }
  const Pi1Data base_pi = pi1(m.base);
  for (const Word& w : m.subgroup) out << "subgroup " << to_string(w, base_pi.presentation.generators) << "\n";
  out << format_complex(m.total);
  for (int v = 0; v < m.total.num_vertices(); ++v)
    out << "project " << m.total.vertices()[v] << " " << m.base.vertices()[m.vertex_projection[v]] << "\n";
  for (int e = 0; e < m.total.num_edges(); ++e)
    out << "project " << m.total.edges()[e].id << " " << m.base.edges()[m.edge_projection[e]].id << "\n";
  for (int f = 0; f < m.total.num_faces(); ++f)
    out << "project " << m.total.faces()[f].id << " " << m.base.faces()[m.face_projection[f]].id << "\n";
  if (m.truncated && !m.frontier.empty()) {
    out << "frontier";
    for (int v : m.frontier) out << " " << m.total.vertices()[v];
    out << "\n";
  }
  return out.str();
}

CoveringMap parse_covering(std::string_view text, const Complex& base) {
  // Covering-only lines are blanked so that complex errors keep their line numbers.
  std::vector<Line> extra;
  std::string complex_text;
  {
    std::istringstream in{std::string(text)};
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
      ++number;
      std::string content = raw.substr(0, raw.find('#'));
      std::istringstream words(content);
      Line line{number, {}};
      for (std::string w; words >> w;) line.tokens.push_back(w);
      const bool mine = !line.tokens.empty() &&
                        (line.tokens[0] == "sheets" || line.tokens[0] == "truncated" ||
                         line.tokens[0] == "project" || line.tokens[0] == "frontier" || line.tokens[0] == "subgroup");
      if (mine) extra.push_back(std::move(line));
      complex_text += (mine ? std::string() : raw) + "\n";
    }
  }
  CoveringMap m;
  m.base = base;
  m.total = parse_complex(complex_text);
  m.vertex_projection.assign(m.total.num_vertices(), -1);
  m.edge_projection.assign(m.total.num_edges(), -1);
  m.face_projection.assign(m.total.num_faces(), -1);
  bool header = false;
  const Pi1Data base_pi = pi1(base);
  for (const Line& l : extra) {
    const std::string& kw = l.tokens[0];
    if (kw == "sheets" || kw == "truncated") {
      expect_arity(l, 1, 1);
      if (header) fail(ErrorKind::parse, l.number, "second header line");
      header = true;
      int value = 0;
      try {
        value = std::stoi(l.tokens[1]);
      } catch (const std::exception&) {
        fail(ErrorKind::parse, l.number, "expected an integer");
      }
      if (kw == "sheets") {
        m.sheets = value;
      } else {
        m.truncated = true;
        m.radius = value;
      }
    } else if (kw == "subgroup") {
      std::string joined;
      for (std::size_t i = 1; i < l.tokens.size(); ++i) joined += l.tokens[i] + " ";
      m.subgroup.push_back(at_line(l.number, [&] {
        try {
          return parse_word(joined, base_pi.presentation.generators);
        } catch (const Error&) {
          throw;
        } catch (const std::exception& e) {
          throw Error(ErrorKind::parse, e.what());
        }
      }));
    } else if (kw == "project") {
      expect_arity(l, 2, 2);
      auto from = m.total.find(l.tokens[1]);
      auto to = base.find(l.tokens[2]);
      if (!from) fail(ErrorKind::dangling, l.number, "unknown total cell '" + l.tokens[1] + "'");
      if (!to) fail(ErrorKind::dangling, l.number, "unknown base cell '" + l.tokens[2] + "'");
      if (from->kind != to->kind) fail(ErrorKind::parse, l.number, "projection changes cell dimension");
      auto& table = from->kind == CellKind::vertex ? m.vertex_projection
                    : from->kind == CellKind::edge ? m.edge_projection
                                                   : m.face_projection;
      table[from->index] = to->index;
    } else {
      for (std::size_t i = 1; i < l.tokens.size(); ++i)
        m.frontier.push_back(at_line(l.number, [&] { return m.total.vertex_index(l.tokens[i]); }));
    }
  }
  if (!header) throw Error(ErrorKind::parse, "missing 'sheets' or 'truncated' header");
  auto check = [](const std::vector<int>& table, const Complex& c, CellKind kind) {
    for (std::size_t i = 0; i < table.size(); ++i)
      if (table[i] < 0) throw Error(ErrorKind::parse, "no projection for '" + c.id({kind, static_cast<int>(i)}) + "'");
  };
  check(m.vertex_projection, m.total, CellKind::vertex);
  check(m.edge_projection, m.total, CellKind::edge);
  check(m.face_projection, m.total, CellKind::face);
  return m;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::parse, "cannot read '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace covtop
