// covtop: command-line front end for the covering-space toolkit.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "covtop/complex.hpp"
#include "covtop/covering.hpp"
#include "covtop/report.hpp"
#include "covtop/spanier.hpp"
#include "covtop/text_format.hpp"
#include "covtop/tower.hpp"
#include "covtop/wedge.hpp"

using namespace covtop;

namespace {

struct RunConfig {
  std::size_t budget_cosets = 50000;
  std::size_t budget_words = 64;
  int depth = 3;
  int radius = 4;
  std::uint64_t seed = 1;
  std::string format = "text";

  Budget budget() const { return {budget_cosets, budget_words, depth, radius}; }
};

struct Input {
  std::string path;
  std::string text;
};

Input load(const std::string& path) { return {path, read_file(path)}; }

Complex load_complex(const Input& in) {
  try {
    return parse_complex(in.text);
  } catch (const Error& e) {
    throw Error(e.kind(), in.path + ": " + std::string(e.what()).substr(to_string(e.kind()).size() + 2));
  }
}

const Cover& pick_cover(const CoverFile& f, const std::string& name, const std::string& path) {
  if (f.covers.empty()) throw Error(ErrorKind::parse, path + ": no cover declared");
  if (name.empty()) return f.covers.front();
  for (const Cover& u : f.covers)
    if (u.name == name) return u;
  throw Error(ErrorKind::dangling, path + ": no cover named '" + name + "'");
}

Report make_report(const std::string& command, const std::vector<Input>& inputs, const RunConfig& cfg,
                   std::vector<std::string> extra = {}) {
  std::vector<std::string> names;
  std::vector<std::string> contents;
  for (const Input& in : inputs) {
    names.push_back(in.path);
    contents.push_back(in.text);
  }
  for (const std::string& e : extra) {
    names.push_back(e);
    contents.push_back(e);
  }
  return Report(command, names, contents, cfg.budget(), cfg.seed);
}

void emit(const Report& r, const RunConfig& cfg) {
  std::cout << (cfg.format == "text" ? r.render_text() : r.render_json());
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::parse, "cannot write '" + path + "'");
  out << text;
}

std::vector<Word> parse_words(const std::vector<std::string>& texts, const Presentation& p) {
  std::vector<Word> out;
  for (const std::string& t : texts) out.push_back(parse_word(t, p.generators));
  return out;
}

json covering_summary(const CoveringMap& m) {
  json out = {{"total_vertices", m.total.num_vertices()},
              {"total_edges", m.total.num_edges()},
              {"total_faces", m.total.num_faces()}};
  if (m.truncated) {
    out["truncated"] = true;
    out["radius"] = m.radius;
    out["frontier"] = m.frontier.size();
  } else {
    out["sheets"] = m.sheets;
  }
  return out;
}

// ---------------------------------------------------------------------------

void cmd_pi1(const RunConfig& cfg, const std::string& path, const std::string& basepoint) {
  const Input in = load(path);
  const Complex c = load_complex(in);
  std::optional<int> base;
  if (!basepoint.empty()) base = c.vertex_index(basepoint);
  const Pi1Data pi = pi1(c, base);
  Report r = make_report("pi1", {in}, cfg);
  r.result()["basepoint"] = c.vertices()[pi.basepoint];
  r.result()["presentation"] = to_json(pi.presentation);
  const TietzeReduction tietze(pi.presentation);
  r.result()["reduced"] = to_json(tietze.reduced());
  r.result()["abelianization"] = describe(abelianization(pi.presentation));
  const QuotientOracle oracle(pi.presentation, {}, cfg.budget());
  Verdict all = Verdict::yes("no generators");
  for (int g = 1; g <= pi.presentation.rank(); ++g) all = conjunction(all, oracle.is_trivial(Word{g}));
  if (all.is_yes() && pi.presentation.rank() > 0) all.certificate = "every generator is trivial";
  r.verdict("group_trivial", all);
  emit(r, cfg);
}

void cmd_spanier(const RunConfig& cfg, const std::string& complex_path, const std::string& cover_path,
                 const std::string& cover_name) {
  const Input cin = load(complex_path);
  const Input uin = load(cover_path);
  const Complex c = load_complex(cin);
  const CoverFile f = parse_cover_file(c, uin.text);
  const Cover& u = pick_cover(f, cover_name, cover_path);
  const NormalSubgroupData d = spanier_generators(c, u);
  Report r = make_report("spanier", {cin, uin}, cfg);
  r.result()["cover"] = to_json(c, u);
  r.result()["spanier"] = to_json(d);
  r.result()["pi1_abelianization"] = describe(abelianization(d.parent->presentation));
  Verdict trivial = Verdict::yes("no normal generators");
  if (!d.generators.empty()) {
    const QuotientOracle oracle(d.parent->presentation, {}, cfg.budget());
    for (const Word& w : d.generators) trivial = conjunction(trivial, oracle.is_trivial(w));
  }
  r.verdict("spanier_group_trivial", trivial);
  r.certificate("universe", "subcomplex covers of the input complex");
  emit(r, cfg);
}

void cmd_stable(const RunConfig& cfg, const std::string& complex_path, const std::string& cover_path,
                const std::string& cover_name) {
  const Input cin = load(complex_path);
  const Input uin = load(cover_path);
  const Complex c = load_complex(cin);
  const CoverFile f = parse_cover_file(c, uin.text);
  const Cover& u = pick_cover(f, cover_name, cover_path);
  Universe universe;
  universe.covers = f.covers;
  Subdivision s = subdivide(c);
  for (int k = 1; k <= cfg.depth; ++k) {
    Cover star = star_cover(s.fine);
    star.name = "star(sd^" + std::to_string(k) + ")";
    universe.subdivided.push_back({k, std::move(star)});
    if (k < cfg.depth) s = subdivide(s.fine);
  }
  const Verdict v = pi_stable(c, u, universe, cfg.budget());
  Report r = make_report("stable", {cin, uin}, cfg);
  r.result()["cover"] = u.name;
  json searched = json::array();
  for (const Cover& x : universe.covers) searched.push_back(x.name);
  for (const SubdividedCover& x : universe.subdivided) searched.push_back(x.cover.name);
  r.result()["universe"] = searched;
  r.result()["spanier"] = to_json(spanier_generators(c, u));
  r.verdict("pi_stable", v);
  emit(r, cfg);
}

void cmd_universal(const RunConfig& cfg, const std::string& path, const std::string& out_path) {
  const Input in = load(path);
  const Complex c = load_complex(in);
  Report r = make_report("universal", {in}, cfg);
  try {
    const UniversalCovering u = universal_covering(c, cfg.budget());
    r.result() = to_json(u);
    r.verdict("witness_equals_sp", u.witness_equals_sp);
    r.verdict("witness_pi_stable", u.witness_pi_stable);
    if (u.covering.truncated) {
      r.certificate("sheets", "infinite: window of radius " + std::to_string(u.covering.radius) + " on the universal cover");
    } else {
      r.certificate("sheets", std::to_string(u.covering.sheets) + " = |π1|");
    }
    if (!out_path.empty()) {
      write_text(out_path, format_covering(u.covering));
      r.result()["written"] = out_path;
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::budget) throw;
    r.verdict("universal_covering", Verdict::unknown(UnknownReason::budget, e.what()));
  }
  emit(r, cfg);
}

void cmd_cover_build(const RunConfig& cfg, const std::string& path, const std::vector<std::string>& subgroup,
                     bool normal, const std::string& out_path) {
  const Input in = load(path);
  const Complex c = load_complex(in);
  const Pi1Data pi = pi1(c);
  const std::vector<Word> h = parse_words(subgroup, pi.presentation);
  Report r = make_report("cover-build", {in}, cfg, subgroup);
  r.result()["subgroup"] = subgroup;
  r.result()["normal"] = normal;
  CoveringMap m;
  try {
    m = normal ? build_normal_covering(c, h, cfg.budget()) : build_covering(c, h, cfg.budget());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::budget) throw;
    r.certificate("enumeration", std::string(e.what()) + "; falling back to a window");
    m = ball_covering(c, h, cfg.radius, cfg.budget(), normal);
  }
  verify_covering(m);
  r.result()["covering"] = covering_summary(m);
  r.certificate("verify_covering", "ok");
  if (!m.truncated) {
    const ImageSubgroup img = image_subgroup(m, cfg.budget());
    json gens = json::array();
    for (const Word& w : img.generators) gens.push_back(to_string(w, pi.presentation.generators));
    r.result()["image_generators"] = gens;
    r.verdict("image_equals_subgroup", img.equals_intended);
  }
  if (!out_path.empty()) {
    write_text(out_path, format_covering(m));
    r.result()["written"] = out_path;
  }
  emit(r, cfg);
}

void cmd_wedge(const RunConfig& cfg, const std::string& p1, const std::string& p2, int samples,
               const std::string& out_path) {
  const Input a = load(p1);
  const Input b = load(p2);
  const WedgeComplex w = wedge(load_complex(a), load_complex(b));
  Report r = make_report("wedge", {a, b}, cfg);
  r.result()["vertices"] = w.complex.num_vertices();
  r.result()["edges"] = w.complex.num_edges();
  r.result()["faces"] = w.complex.num_faces();
  r.result()["basepoint"] = w.complex.vertices()[w.complex.basepoint()];
  const GenerationCheck g = pi1_generation_check(w, samples, cfg.seed, cfg.budget());
  r.result()["generation"] = {{"samples", g.samples}, {"pieces", g.pieces}, {"trivial_pieces", g.trivial_pieces}};
  r.certificate("decomposition", g.note);
  r.verdict("pi1_generated_by_factors", g.verdict);
  if (!out_path.empty()) {
    write_text(out_path, format_complex(w.complex));
    r.result()["written"] = out_path;
  }
  emit(r, cfg);
}

void cmd_t3(const RunConfig& cfg, const std::string& p1, const std::string& p2) {
  const Input a = load(p1);
  const Input b = load(p2);
  const T3Report t = t3_check(load_complex(a), load_complex(b), cfg.budget());
  Report r = make_report("t3", {a, b}, cfg);
  r.result() = to_json(t);
  r.verdict("factor1_pi_stable", t.first.witness_pi_stable);
  r.verdict("factor2_pi_stable", t.second.witness_pi_stable);
  r.verdict("wedge_pi_stable", t.wedge.witness_pi_stable);
  r.verdict("transferred_equals_sp", t.transferred_equals_sp);
  r.verdict("transferred_pi_stable", t.transferred_pi_stable);
  r.verdict("generation", t.generation.verdict);
  r.certificate("biconditional", t.violation ? "violated" : "holds");
  emit(r, cfg);
}

void cmd_tower(const RunConfig& cfg, const std::string& kind_name, int n) {
  if (n < 1) throw Error(ErrorKind::parse, "tower stage must be at least 1");
  const Tower t = builtin_tower(parse_tower_kind(kind_name), n);
  const CoverabilityReport c = coverability_report(t, n, cfg.budget());
  Report r = make_report("tower", {}, cfg, {kind_name, std::to_string(n)});
  r.result() = to_json(c);
  for (const Evidence& e : c.classification.evidence) {
    const std::string name = "k" + std::to_string(e.k) + ":" + e.loop + (e.m ? ":m" + std::to_string(e.m) : ":null");
    r.verdict(name, e.verdict);
  }
  r.certificate("classification", std::string(to_string(c.classification.point)) + " " + c.classification.scale);
  r.certificate("limit", c.verdict);
  r.certificate("stage", c.stage_certificate);
  emit(r, cfg);
}

void cmd_verify(const RunConfig& cfg, const std::string& base_path, const std::string& covering_path) {
  const Input b = load(base_path);
  const Input m_in = load(covering_path);
  const Complex base = load_complex(b);
  CoveringMap m;
  try {
    m = parse_covering(m_in.text, base);
  } catch (const Error& e) {
    throw Error(e.kind(), covering_path + ": " + std::string(e.what()).substr(to_string(e.kind()).size() + 2));
  }
  verify_covering(m);
  Report r = make_report("verify", {b, m_in}, cfg);
  r.result()["covering"] = covering_summary(m);
  r.certificate("verify_covering", "ok");
  if (!m.truncated && !m.subgroup.empty()) {
    const ImageSubgroup img = image_subgroup(m, cfg.budget());
    r.verdict("image_equals_subgroup", img.equals_intended);
  }
  emit(r, cfg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covering spaces, Spanier groups and wild points of finite 2-complexes"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--budget-cosets", cfg.budget_cosets, "coset/state budget")->check(CLI::PositiveNumber);
  app.add_option("--budget-words", cfg.budget_words, "longest word the rewriting search visits")
      ->check(CLI::PositiveNumber);
  app.add_option("--depth", cfg.depth, "subdivision depth")->check(CLI::NonNegativeNumber);
  app.add_option("--radius", cfg.radius, "window radius for infinite coverings")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", cfg.seed, "seed for sampled checks");
  app.add_option("--format", cfg.format, "text or json")
      ->check(CLI::IsMember({"text", "json", "structured"}));

  std::string a, b, name, out, basepoint;
  std::vector<std::string> words;
  bool normal = false;
  int n = 0;
  int samples = 50;

  auto* pi1_cmd = app.add_subcommand("pi1", "edge-path presentation of π1");
  pi1_cmd->add_option("complex", a)->required();
  pi1_cmd->add_option("--basepoint", basepoint);

  auto* spanier_cmd = app.add_subcommand("spanier", "Spanier group of a cover");
  spanier_cmd->add_option("complex", a)->required();
  spanier_cmd->add_option("cover", b)->required();
  spanier_cmd->add_option("--cover-name", name);

  auto* stable_cmd = app.add_subcommand("stable", "π-stability of a cover");
  stable_cmd->add_option("complex", a)->required();
  stable_cmd->add_option("cover", b)->required();
  stable_cmd->add_option("--cover-name", name);

  auto* universal_cmd = app.add_subcommand("universal", "universal covering with certificate");
  universal_cmd->add_option("complex", a)->required();
  universal_cmd->add_option("-o,--out", out, "write the covering here");

  auto* build_cmd = app.add_subcommand("cover-build", "covering for a subgroup");
  build_cmd->add_option("complex", a)->required();
  build_cmd->add_option("-s,--subgroup", words, "generator word, e.g. \"a a\" (repeatable)");
  build_cmd->add_flag("--normal", normal, "use the normal closure");
  build_cmd->add_option("-o,--out", out, "write the covering here");

  auto* wedge_cmd = app.add_subcommand("wedge", "one-point union and generation check");
  wedge_cmd->add_option("first", a)->required();
  wedge_cmd->add_option("second", b)->required();
  wedge_cmd->add_option("--samples", samples)->check(CLI::NonNegativeNumber);
  wedge_cmd->add_option("-o,--out", out, "write the wedge complex here");

  auto* t3_cmd = app.add_subcommand("t3", "universal coverings of two factors and their wedge");
  t3_cmd->add_option("first", a)->required();
  t3_cmd->add_option("second", b)->required();

  auto* tower_cmd = app.add_subcommand("tower", "classify the basepoint of a built-in tower");
  tower_cmd->add_option("kind", a, "hawaiian, archipelago, cone or double_cone")->required();
  tower_cmd->add_option("n", n)->required();

  auto* verify_cmd = app.add_subcommand("verify", "check a covering file against its base");
  verify_cmd->add_option("base", a)->required();
  verify_cmd->add_option("covering", b)->required();

  CLI11_PARSE(app, argc, argv);
  if (cfg.format == "structured") cfg.format = "json";

  try {
    if (*pi1_cmd) cmd_pi1(cfg, a, basepoint);
    if (*spanier_cmd) cmd_spanier(cfg, a, b, name);
    if (*stable_cmd) cmd_stable(cfg, a, b, name);
    if (*universal_cmd) cmd_universal(cfg, a, out);
    if (*build_cmd) cmd_cover_build(cfg, a, words, normal, out);
    if (*wedge_cmd) cmd_wedge(cfg, a, b, samples, out);
    if (*t3_cmd) cmd_t3(cfg, a, b);
    if (*tower_cmd) cmd_tower(cfg, a, n);
    if (*verify_cmd) cmd_verify(cfg, a, b);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
