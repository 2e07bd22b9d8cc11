#include "covtop/report.hpp"

#include <cstdio>
#include <sstream>

namespace covtop {

std::string inputs_digest(std::span<const std::string> contents) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](unsigned char byte) {
    h ^= byte;
    h *= 1099511628211ULL;
  };
  for (const std::string& s : contents) {
    for (unsigned char ch : s) mix(ch);
    mix(0);  // separator, so ("ab","c") and ("a","bc") differ
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string describe(const AbelianInvariants& a) {
  if (a.trivial()) return "1";
  std::string out;
  auto add = [&](const std::string& part) { out += (out.empty() ? "" : " + ") + part; };
  if (a.free_rank == 1) add("Z");
  if (a.free_rank > 1) add("Z^" + std::to_string(a.free_rank));
  for (long long d : a.divisors) add("Z/" + std::to_string(d));
  return out;
}

json to_json(const Verdict& v) {
  json out;
  out["answer"] = std::string(to_string(v.answer));
  if (v.is_unknown()) out["reason"] = std::string(to_string(v.reason));
  out["certificate"] = v.certificate;
  return out;
}

json to_json(const Budget& b, std::uint64_t seed) {
  return {{"max_cosets", b.max_cosets},
          {"max_word_length", b.max_word_length},
          {"depth", b.depth},
          {"radius", b.radius},
          {"seed", seed}};
}

json to_json(const Presentation& p) {
  json relators = json::array();
  for (const Word& r : p.relators) relators.push_back(to_string(r, p.generators));
  return {{"generators", p.generators}, {"relators", relators}};
}

json to_json(const NormalSubgroupData& d) {
  json gens = json::array();
  for (const Word& w : d.generators) gens.push_back(to_string(w, d.parent->presentation.generators));
  return {{"provenance", d.provenance},
          {"normal_generators", gens},
          {"quotient_abelianization", describe(quotient_invariants(d))}};
}

json to_json(const Complex& c, const Cover& u) {
  json elements = json::array();
  for (const Subcomplex& s : u.elements) {
    json cells = json::array();
    for (const CellRef& cell : s.cells()) cells.push_back(c.id(cell));
    elements.push_back({{"name", s.name()}, {"cells", cells}});
  }
  return {{"name", u.name}, {"elements", elements}};
}

json to_json(const SpApproximation& sp) {
  json levels = json::array();
  for (const SpLevel& l : sp.levels) {
    levels.push_back({{"depth", l.depth}, {"cover", l.cover.name}, {"elements", l.cover.elements.size()},
                      {"normal_generators", l.group.generators.size()},
                      {"quotient_abelianization", describe(quotient_invariants(l.group))}});
  }
  return {{"depth", sp.depth},
          {"stabilized", sp.stabilized},
          {"last_comparison", to_json(sp.last_comparison)},
          {"levels", levels},
          {"value", to_json(sp.value)}};
}

json to_json(const UniversalCovering& u) {
  json items = json::object();
  for (const auto& [k, v] : u.items) items[k] = v;
  json covering = {{"total_vertices", u.covering.total.num_vertices()},
                   {"total_edges", u.covering.total.num_edges()},
                   {"total_faces", u.covering.total.num_faces()}};
  if (u.covering.truncated) {
    covering["truncated"] = true;
    covering["radius"] = u.covering.radius;
  } else {
    covering["sheets"] = u.covering.sheets;
  }
  return {{"covering", covering},
          {"sp", to_json(u.sp)},
          {"witness", "star(sd^" + std::to_string(u.witness_depth) + ")"},
          {"witness_depth", u.witness_depth},
          {"witness_equals_sp", to_json(u.witness_equals_sp)},
          {"witness_pi_stable", to_json(u.witness_pi_stable)},
          {"items", items},
          {"note", u.note}};
}

json to_json(const T3Report& r) {
  return {{"factor1", to_json(r.first)},
          {"factor2", to_json(r.second)},
          {"wedge", to_json(r.wedge)},
          {"factor1_ok", r.first_ok},
          {"factor2_ok", r.second_ok},
          {"wedge_ok", r.wedge_ok},
          {"biconditional", r.violation ? "violated" : "holds"},
          {"transfer",
           {{"depth", r.transfer_depth},
            {"cover", r.transferred.name},
            {"elements", r.transferred.elements.size()},
            {"equals_sp", to_json(r.transferred_equals_sp)},
            {"pi_stable", to_json(r.transferred_pi_stable)}}},
          {"generation",
           {{"verdict", to_json(r.generation.verdict)},
            {"samples", r.generation.samples},
            {"pieces", r.generation.pieces},
            {"trivial_pieces", r.generation.trivial_pieces}}},
          {"note", r.note}};
}

json to_json(const Classification& c) {
  json evidence = json::array();
  for (const Evidence& e : c.evidence) {
    evidence.push_back({{"k", e.k}, {"loop", e.loop}, {"m", e.m}, {"verdict", to_json(e.verdict)}});
  }
  return {{"point", std::string(to_string(c.point))}, {"n", c.n}, {"scale", c.scale}, {"evidence", evidence}};
}

json to_json(const CoverabilityReport& r) {
  return {{"classification", to_json(r.classification)},
          {"verdict", r.verdict},
          {"stage_certificate", r.stage_certificate},
          {"notes", r.notes}};
}

Report::Report(std::string command, std::span<const std::string> input_names,
               std::span<const std::string> input_contents, const Budget& budget, std::uint64_t seed) {
  doc_["command"] = std::move(command);
  doc_["inputs"] = json(std::vector<std::string>(input_names.begin(), input_names.end()));
  doc_["inputs_digest"] = inputs_digest(input_contents);
  doc_["budgets"] = to_json(budget, seed);
  doc_["verdicts"] = json::object();
  doc_["certificates"] = json::object();
  doc_["result"] = json::object();
}

void Report::verdict(const std::string& name, const Verdict& v) {
  doc_["verdicts"][name] = to_json(v);
  if (!v.certificate.empty()) doc_["certificates"][name] = v.certificate;
}

void Report::certificate(const std::string& name, const std::string& text) { doc_["certificates"][name] = text; }

std::string Report::render_json() const { return doc_.dump(2) + "\n"; }

namespace {

bool scalar_list(const json& j) {
  if (!j.is_array()) return false;
  for (const json& x : j)
    if (x.is_structured()) return false;
  return true;
}

std::string scalar(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render(std::ostringstream& out, const json& j, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() && value.contains("answer") && !value["answer"].is_structured()) {
        out << pad << key << ": " << scalar(value["answer"]);
        if (value.contains("reason")) out << "(" << scalar(value["reason"]) << ")";
        if (value.contains("certificate") && !value["certificate"].get<std::string>().empty())
          out << "  [" << scalar(value["certificate"]) << "]";
        out << "\n";
      } else if (value.is_structured() && !scalar_list(value)) {
        if (value.empty()) continue;
        out << pad << key << ":\n";
        render(out, value, indent + 2);
      } else if (scalar_list(value)) {
        out << pad << key << ":";
        for (const json& x : value) out << " " << scalar(x);
        out << "\n";
      } else {
        out << pad << key << ": " << scalar(value) << "\n";
      }
    }
  } else if (j.is_array()) {
    int i = 0;
    for (const json& x : j) {
      if (x.is_structured()) {
        out << pad << "- [" << i << "]\n";
        render(out, x, indent + 2);
      } else {
        out << pad << "- " << scalar(x) << "\n";
      }
      ++i;
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

}  // namespace

std::string Report::render_text() const {
  std::ostringstream out;
  render(out, doc_, 0);
  return out.str();
}

}  // namespace covtop
