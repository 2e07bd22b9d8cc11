// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "covtop/covering.hpp"
#include "covtop/spanier.hpp"
#include "covtop/standard_complexes.hpp"
#include "covtop/tower.hpp"
#include "covtop/wedge.hpp"

using namespace covtop;

namespace {

/// Outcome of one criterion run: pass flag, decided verdicts in a fixed order, a short summary.
struct Outcome {
  bool pass = true;
  std::vector<Answer> answers;
  std::string summary;

  void require(bool ok, const std::string& why) {
    if (!ok && pass) summary = why;
    pass = pass && ok;
  }
};

// ---------------------------------------------------------------------------
// random inputs

/// Connected complex with at most 3 vertices, 5 edges and 2 faces.
Complex random_complex(std::mt19937_64& rng) {
  Complex c;
  const int nv = 1 + static_cast<int>(rng() % 3);
  for (int v = 0; v < nv; ++v) c.add_vertex("v" + std::to_string(v));
  int edges = 0;
  for (int v = 1; v < nv; ++v) {
    const int u = static_cast<int>(rng() % v);
    if (rng() % 2) {
      c.add_edge("e" + std::to_string(edges++), u, v);
    } else {
      c.add_edge("e" + std::to_string(edges++), v, u);
    }
  }
  const int extra = (nv == 1 ? 1 : 0) + static_cast<int>(rng() % 3);
  for (int k = 0; k < extra; ++k) {
    c.add_edge("e" + std::to_string(edges++), static_cast<int>(rng() % nv), static_cast<int>(rng() % nv));
  }
  const auto adjacency = c.adjacency();
  const int faces = static_cast<int>(rng() % 3);
  for (int f = 0, tries = 0; f < faces && tries < 200; ++tries) {
    const int start = static_cast<int>(rng() % nv);
    const int length = 1 + static_cast<int>(rng() % 4);
    EdgePath walk;
    int at = start;
    for (int s = 0; s < length; ++s) {
      const auto& out = adjacency[at];
      const SignedEdge step = out[rng() % out.size()];
      walk.push_back(step);
      at = c.target(step);
    }
    if (at != start) continue;
    c.add_face("f" + std::to_string(f++), walk);
  }
  c.set_basepoint(0);
  validate(c);
  return c;
}

std::vector<CellRef> all_cells(const Complex& c) {
  std::vector<CellRef> out;
  for (int v = 0; v < c.num_vertices(); ++v) out.push_back({CellKind::vertex, v});
  for (int e = 0; e < c.num_edges(); ++e) out.push_back({CellKind::edge, e});
  for (int f = 0; f < c.num_faces(); ++f) out.push_back({CellKind::face, f});
  return out;
}

/// Each cell goes into one or two of up to three closed elements.
Cover random_cover(const Complex& c, std::mt19937_64& rng, const std::string& name) {
  const int k = 1 + static_cast<int>(rng() % 3);
  std::vector<Subcomplex> elements;
  for (int i = 0; i < k; ++i) elements.emplace_back(c, name + std::to_string(i));
  for (const CellRef& cell : all_cells(c)) {
    elements[rng() % k].add_closed(c, cell);
    if (rng() % 3 == 0) elements[rng() % k].add_closed(c, cell);
  }
  Cover u{name, {}};
  for (Subcomplex& s : elements)
    if (!s.empty()) u.elements.push_back(std::move(s));
  return u;
}

/// Splits every element's cells into up to three groups, each closed inside the element.
Cover random_refinement(const Complex& c, const Cover& u, std::mt19937_64& rng) {
  Cover v{u.name + "'", {}};
  for (const Subcomplex& s : u.elements) {
    const int k = 1 + static_cast<int>(rng() % 3);
    std::vector<Subcomplex> parts;
    for (int i = 0; i < k; ++i) parts.emplace_back(c, s.name() + "." + std::to_string(i));
    for (const CellRef& cell : s.cells()) parts[rng() % k].add_closed(c, cell);
    for (Subcomplex& p : parts)
      if (!p.empty()) v.elements.push_back(std::move(p));
  }
  return v;
}

/// Random walk from the basepoint of at most `length` steps.
EdgePath random_walk(const Complex& c, int length, std::mt19937_64& rng) {
  const auto adjacency = c.adjacency();
  EdgePath walk;
  int at = c.basepoint();
  for (int s = 0; s < length && !adjacency[at].empty(); ++s) {
    const SignedEdge step = adjacency[at][rng() % adjacency[at].size()];
    walk.push_back(step);
    at = c.target(step);
  }
  return walk;
}

// ---------------------------------------------------------------------------
// independent oracle for criterion 3

/// [G : H] by brute force: the largest degree n <= max_degree of a transitive
/// permutation action of <gens | relators> in which H fixes point 0.
/// The coset action attains [G : H]; any such action has degree <= [G : H].
int brute_force_index(const Presentation& p, const std::vector<Word>& h, int max_degree) {
  int best = 0;
  for (int n = 1; n <= max_degree; ++n) {
    std::vector<std::vector<int>> perms;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::size_t> choice(p.rank(), 0);
    auto act = [&](int point, const Word& w) {
      for (int letter : w) {
        const auto& sigma = perms[choice[std::abs(letter) - 1]];
        if (letter > 0) {
          point = sigma[point];
        } else {
          point = static_cast<int>(std::find(sigma.begin(), sigma.end(), point) - sigma.begin());
        }
      }
      return point;
    };
    bool found = false;
    while (!found) {
      bool ok = true;
      for (const Word& r : p.relators)
        for (int x = 0; x < n && ok; ++x) ok = act(x, r) == x;
      for (const Word& w : h) ok = ok && act(0, w) == 0;
      if (ok) {
        std::vector<bool> reached(n, false);
        std::vector<int> stack{0};
        reached[0] = true;
        while (!stack.empty()) {
          const int x = stack.back();
          stack.pop_back();
          for (int g = 1; g <= p.rank(); ++g) {
            for (const Word& step : {Word{g}, Word{-g}}) {
              const int y = act(x, step);
              if (!reached[y]) {
                reached[y] = true;
                stack.push_back(y);
              }
            }
          }
        }
        found = std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
      }
      int i = 0;
      while (i < p.rank() && ++choice[i] == perms.size()) choice[i++] = 0;
      if (i == p.rank()) break;
    }
    if (found) best = n;
  }
  return best;
}

// ---------------------------------------------------------------------------
// criteria

Outcome criterion1(const Budget& budget) {
  Outcome out;
  std::mt19937_64 rng(101);
  int yes = 0;
  for (int i = 0; i < 200; ++i) {
    const Complex c = random_complex(rng);
    const Cover u = random_cover(c, rng, "U");
    const Cover v = random_refinement(c, u, rng);
    out.require(refines(v, u), "generated cover does not refine");
    const Verdict verdict = spanier_contains(c, u, v, budget);
    out.answers.push_back(verdict.answer);
    yes += verdict.is_yes();
    out.require(!verdict.is_no(), "NO against a refinement: " + verdict.certificate);
  }
  if (out.pass) out.summary = std::to_string(yes) + "/200 YES, rest UNKNOWN, no NO";
  return out;
}

Outcome criterion2(const Budget& budget) {
  Outcome out;
  std::mt19937_64 rng(202);
  int done = 0, attempts = 0, yes = 0;
  while (done < 100 && attempts < 5000) {
    ++attempts;
    const Complex c = random_complex(rng);
    const Cover u = random_cover(c, rng, "U");
    const Cover v = random_cover(c, rng, "V");
    Cover both;
    try {
      both = intersect_covers(c, u, v);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::not_cover) throw;
      continue;
    }
    ++done;
    for (const Cover* side : {&u, &v}) {
      const Verdict verdict = spanier_contains(c, *side, both, budget);
      out.answers.push_back(verdict.answer);
      yes += verdict.is_yes();
      out.require(!verdict.is_no(), "NO for an intersection: " + verdict.certificate);
    }
  }
  out.require(done == 100, "only " + std::to_string(done) + " intersections succeeded");
  if (out.pass) out.summary = std::to_string(yes) + "/200 YES over " + std::to_string(attempts) + " attempts";
  return out;
}

struct Instance {
  std::string name;
  Complex complex;
  std::vector<Word> h;
};

std::vector<Instance> criterion3_instances() {
  std::vector<Instance> out;
  for (int k = 1; k <= 4; ++k) out.push_back({"C1 <a^" + std::to_string(k) + ">", circle(), {Word(k, 1)}});
  out.push_back({"F2 <a, b^2, b a b^-1>", bouquet(2), {{1}, {2, 2}, {2, 1, -2}}});
  out.push_back({"F2 <b, a^2, a b a^-1>", bouquet(2), {{2}, {1, 1}, {1, 2, -1}}});
  out.push_back({"F2 <a b, a^2, a b^-1>", bouquet(2), {{1, 2}, {1, 1}, {1, -2}}});
  out.push_back({"Z/3 <1>", cyclic(3), {}});
  return out;
}

Outcome criterion3(const Budget& budget) {
  Outcome out;
  std::string sheets;
  for (const Instance& inst : criterion3_instances()) {
    try {
      const CoveringMap m = build_covering(inst.complex, inst.h, budget);
      verify_covering(m);
      const Verdict image = image_subgroup(m, budget).equals_intended;
      out.answers.push_back(image.answer);
      out.require(image.is_yes(), inst.name + ": image subgroup " + describe(image));
      const int index = brute_force_index(pi1(inst.complex).presentation, inst.h, 5);
      out.require(index < 5, inst.name + ": oracle bound reached");
      out.require(m.sheets == index, inst.name + ": " + std::to_string(m.sheets) + " sheets, oracle index " +
                                         std::to_string(index));
      sheets += (sheets.empty() ? "" : " ") + std::to_string(m.sheets);
    } catch (const Error& e) {
      out.require(false, inst.name + ": " + e.what());
    }
  }
  if (out.pass) out.summary = "sheets " + sheets + " match the brute-force index";
  return out;
}

Outcome criterion4(const Budget& budget) {
  Outcome out;
  int yes = 0;
  for (const Instance& inst : criterion3_instances()) {
    try {
      const CoveringMap m = build_covering(inst.complex, inst.h, budget);
      const EvenCover even = evenly_covered_cover(m);
      for (const Subcomplex& s : even.cover.elements)
        out.require(evenly_covered(even.covering, s), inst.name + ": element not evenly covered");
      const Verdict v = lemma_check(m, even, budget);
      out.answers.push_back(v.answer);
      yes += v.is_yes();
      out.require(!v.is_no(), inst.name + ": lemma NO " + v.certificate);
    } catch (const Error& e) {
      out.require(false, inst.name + ": " + e.what());
    }
  }
  if (out.pass) out.summary = std::to_string(yes) + "/8 YES, no NO";
  return out;
}

Outcome criterion5(const Budget& budget) {
  Outcome out;
  std::mt19937_64 rng(505);
  int truncated = 0;
  for (int i = 0; i < 20; ++i) {
    const Complex c = random_complex(rng);
    try {
      const UniversalCovering u = universal_covering(c, budget);
      verify_covering(u.covering);
      truncated += u.covering.truncated;
      out.answers.push_back(u.witness_equals_sp.answer);
      out.answers.push_back(u.witness_pi_stable.answer);
      out.require(u.sp.stabilized, "complex " + std::to_string(i) + ": π^sp approximation did not stabilize");
      out.require(u.witness_equals_sp.is_yes(),
                  "complex " + std::to_string(i) + ": witness vs π^sp " + describe(u.witness_equals_sp));
      out.require(!u.witness_pi_stable.is_no(), "complex " + std::to_string(i) + ": witness not π-stable");
    } catch (const Error& e) {
      out.require(false, "complex " + std::to_string(i) + ": " + e.what());
    }
  }
  if (out.pass) out.summary = "20 witnesses equal π^sp (" + std::to_string(truncated) + " infinite, windowed)";
  return out;
}

Outcome criterion6(const Budget&) {
  Outcome out;
  std::mt19937_64 rng(606);
  int loops = 0, pieces = 0;
  for (int i = 0; i < 10; ++i) {
    const WedgeComplex w = wedge(random_complex(rng), random_complex(rng));
    const Pi1Data pi = pi1(w.complex);
    int made = 0;
    while (made < 50) {
      EdgePath walk = random_walk(w.complex, static_cast<int>(rng() % 13), rng);
      const EdgePath back = inverse(pi.tree_path(w.complex.path_target(walk, w.complex.basepoint())));
      walk.insert(walk.end(), back.begin(), back.end());
      if (walk.size() > 12) continue;
      ++made;
      ++loops;
      const auto parts = wedge_decompose_loop(w, {w.complex.basepoint(), walk});
      EdgePath joined;
      for (const EdgeLoop& piece : parts) {
        ++pieces;
        const int factor = w.edge_factor[piece.word.front().edge];
        for (const SignedEdge& s : piece.word) out.require(w.edge_factor[s.edge] == factor, "piece mixes factors");
        out.require(w.complex.path_target(piece.word, piece.base) == w.complex.basepoint(), "piece not closed");
        joined.insert(joined.end(), piece.word.begin(), piece.word.end());
      }
      out.require(reduce_path(joined) == reduce_path(walk), "pieces do not multiply back to the loop");
    }
  }
  if (out.pass) out.summary = std::to_string(loops) + " loops, " + std::to_string(pieces) + " pieces";
  return out;
}

Outcome criterion7(const Budget& budget) {
  Outcome out;
  const std::vector<std::pair<std::string, Complex>> factors{
      {"C1", circle()}, {"disc", disc()}, {"wedge2", bouquet(2)}, {"Z/3", cyclic(3)}};
  int pairs = 0;
  for (const auto& [n1, c1] : factors) {
    for (const auto& [n2, c2] : factors) {
      const T3Report r = t3_check(c1, c2, budget);
      ++pairs;
      const std::string name = n1 + " v " + n2;
      out.answers.push_back(r.transferred_equals_sp.answer);
      out.answers.push_back(r.transferred_pi_stable.answer);
      out.answers.push_back(r.wedge.witness_pi_stable.answer);
      out.require(!r.violation, name + ": biconditional violated");
      out.require(r.transferred.name.rfind("t3(", 0) == 0, name + ": witness not built by t3_transfer");
      out.require(r.transferred_equals_sp.is_yes(), name + ": transferred cover vs π^sp " + describe(r.transferred_equals_sp));
      out.require(r.transferred_pi_stable.is_yes(), name + ": transferred cover " + describe(r.transferred_pi_stable));
    }
  }
  if (out.pass) out.summary = std::to_string(pairs) + " pairs hold, wedge witness from t3_transfer";
  return out;
}

Outcome criterion8(const Budget& budget) {
  Outcome out;
  for (int n = 2; n <= 6; ++n) {
    const Classification h = classify_basepoint(builtin_tower(TowerKind::hawaiian, n), n, budget);
    out.answers.push_back(h.point == PointClass::wild ? Answer::yes : Answer::no);
    out.require(h.point == PointClass::wild, "hawaiian(" + std::to_string(n) + ") is " + std::string(to_string(h.point)));
    bool certified = false;
    for (const Evidence& e : h.evidence) {
      out.answers.push_back(e.verdict.answer);
      out.require(!e.verdict.is_unknown(), "hawaiian(" + std::to_string(n) + ") has UNKNOWN evidence");
      if (e.verdict.is_no()) {
        out.require(e.verdict.certificate.find("abelianization") != std::string::npos,
                    "hawaiian NO without an abelianization certificate");
        certified = true;
      }
    }
    out.require(certified, "hawaiian(" + std::to_string(n) + ") has no NO certificate");

    const Classification a = classify_basepoint(builtin_tower(TowerKind::archipelago, n), n, budget);
    out.answers.push_back(a.point == PointClass::tame ? Answer::yes : Answer::no);
    out.require(a.point == PointClass::tame, "archipelago(" + std::to_string(n) + ") is " + std::string(to_string(a.point)));
    for (const Evidence& e : a.evidence) {
      out.answers.push_back(e.verdict.answer);
      out.require(!e.verdict.is_unknown(), "archipelago(" + std::to_string(n) + ") has UNKNOWN evidence");
    }

    const Classification c = classify_basepoint(builtin_tower(TowerKind::cone, n), n, budget);
    out.answers.push_back(c.point == PointClass::regular ? Answer::yes : Answer::no);
    out.require(c.point == PointClass::regular, "cone(" + std::to_string(n) + ") is " + std::string(to_string(c.point)));
  }
  const CoverabilityReport r = coverability_report(builtin_tower(TowerKind::hawaiian, 4), 4, budget);
  out.require(r.verdict == "LIMIT-NOT-COVERABLE", "hawaiian coverability: " + r.verdict);
  if (out.pass) out.summary = "hawaiian WILD, archipelago TAME, cone REGULAR for n = 2..6; hawaiian LIMIT-NOT-COVERABLE";
  return out;
}

Outcome criterion9(const Budget&) {
  Outcome out;
  std::mt19937_64 rng(909);
  int moved = 0;
  for (int i = 0; i < 50; ++i) {
    const Complex c = random_complex(rng);
    const Cover u = random_cover(c, rng, "U");
    const NormalSubgroupData d = spanier_generators(c, u);
    const EdgePath path = random_walk(c, 1 + static_cast<int>(rng() % 6), rng);
    const NormalSubgroupData e = change_basepoint(d, path);
    moved += e.parent->basepoint != d.parent->basepoint;
    out.require(quotient_invariants(d) == quotient_invariants(e), "invariants changed on triple " + std::to_string(i));
    out.require(abelianization(d.parent->presentation) == abelianization(e.parent->presentation),
                "π1 abelianization changed on triple " + std::to_string(i));
  }
  if (out.pass) out.summary = "50 triples, " + std::to_string(moved) + " moved the basepoint";
  return out;
}

using Criterion = std::function<Outcome(const Budget&)>;

struct Timed {
  Outcome outcome;
  double seconds = 0;
};

Timed timed(const Criterion& f, const Budget& b) {
  const auto start = std::chrono::steady_clock::now();
  Timed t{f(b), 0};
  t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return t;
}

void report(int number, bool pass, const std::string& summary, double seconds, double limit) {
  std::printf("criterion %2d: %s  %.2fs (limit %.0fs)  %s\n", number, pass ? "PASS" : "FAIL", seconds, limit,
              summary.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  const std::vector<std::pair<Criterion, double>> criteria{
      {criterion1, 30}, {criterion2, 30}, {criterion3, 10}, {criterion4, 10}, {criterion5, 60},
      {criterion6, 10}, {criterion7, 30}, {criterion8, 60}, {criterion9, 15}};
  const Budget base;
  bool all = true;
  std::vector<Outcome> first;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Timed t = timed(criteria[i].first, base);
    const bool pass = t.outcome.pass && t.seconds < criteria[i].second;
    all = all && pass;
    report(static_cast<int>(i) + 1, pass, t.outcome.summary, t.seconds, criteria[i].second);
    first.push_back(t.outcome);
  }

  // 10: criteria 1-8 again with every budget doubled; no decided verdict may change
  const auto start = std::chrono::steady_clock::now();
  bool stable = true;
  std::string why = "no YES/NO flipped across criteria 1-8";
  int decided = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    const Outcome again = criteria[i].first(base.doubled());
    const auto& a = first[i].answers;
    const auto& b = again.answers;
    if (a.size() != b.size()) {
      stable = false;
      why = "criterion " + std::to_string(i + 1) + " produced a different number of verdicts";
      continue;
    }
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k] == Answer::unknown) continue;
      ++decided;
      if (a[k] != b[k]) {
        stable = false;
        why = "criterion " + std::to_string(i + 1) + " verdict " + std::to_string(k) + " flipped";
      }
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool pass10 = stable && seconds < 300;
  if (stable) why = std::to_string(decided) + " decided verdicts unchanged under doubled budgets";
  report(10, pass10, why, seconds, 300);
  all = all && pass10;
  return all ? 0 : 1;
}
