#include <doctest.h>

#include <random>
#include <set>

#include "covtop/folding.hpp"

using namespace covtop;

namespace {

/// Elements of H of reduced length <= bound reachable through such elements, by brute-force closure.
std::set<Word> closure(const std::vector<Word>& gens, std::size_t bound) {
  std::set<Word> seen{{}};
  std::vector<Word> queue{{}};
  while (!queue.empty()) {
    const Word w = queue.back();
    queue.pop_back();
    for (const Word& g : gens) {
      for (const Word& step : {g, inverse(g)}) {
        Word next = free_reduce(concat(w, step));
        if (next.size() <= bound && seen.insert(next).second) queue.push_back(next);
      }
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("membership examples") {
  const std::vector<Word> a2{{1, 1}};
  CHECK(fold_membership(1, a2, Word{1, 1, 1, 1}));
  CHECK_FALSE(fold_membership(1, a2, Word{1, 1, 1}));
  const std::vector<Word> h{{1}, {2, 1, -2}};
  CHECK(fold_membership(2, h, Word{2, 1, 1, -2}));
  CHECK_FALSE(fold_membership(2, h, Word{2}));
}

TEST_CASE("index and completeness") {
  const SubgroupGraph g(2, std::vector<Word>{{1}, {2, 2}, {2, 1, -2}});
  CHECK(g.is_complete());
  CHECK(g.num_vertices() == 2);
  CHECK(g.fixes_every_vertex(Word{2, 2}));
  CHECK_FALSE(g.fixes_every_vertex(Word{2}));
  const SubgroupGraph h(2, std::vector<Word>{{1}});
  CHECK_FALSE(h.is_complete());
}

TEST_CASE("same subgroup and intersection") {
  CHECK(same_subgroup(2, std::vector<Word>{{1}, {2}}, std::vector<Word>{{1, 2}, {2}}));
  CHECK_FALSE(same_subgroup(2, std::vector<Word>{{1}}, std::vector<Word>{{1, 1}}));
  const SubgroupGraph a(1, std::vector<Word>{{1, 1}});
  const SubgroupGraph b(1, std::vector<Word>{{1, 1, 1}});
  const SubgroupGraph ab = a.intersect(b);
  CHECK(ab.contains(Word(6, 1)));
  CHECK_FALSE(ab.contains(Word(2, 1)));
  CHECK_FALSE(ab.contains(Word(3, 1)));
}

TEST_CASE("membership agrees with brute-force enumeration on random rank-2 subgroups") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Word> gens;
    const int count = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < count; ++i) {
      Word w;
      const int len = 1 + static_cast<int>(rng() % 3);
      for (int k = 0; k < len; ++k) w.push_back(static_cast<int>(rng() % 2 + 1) * (rng() % 2 ? 1 : -1));
      w = free_reduce(w);
      if (!w.empty()) gens.push_back(w);
    }
    if (gens.empty()) continue;
    const std::set<Word> members = closure(gens, 8);
    const SubgroupGraph g(2, gens);
    for (const Word& w : members) CHECK(g.contains(w));
    // converse on every reduced word of length <= 4
    std::vector<Word> all{{}};
    for (int len = 0; len < 4; ++len) {
      std::vector<Word> next;
      for (const Word& w : all) {
        if (static_cast<int>(w.size()) != len) continue;
        for (int x : {1, -1, 2, -2}) {
          if (!w.empty() && w.back() == -x) continue;
          Word v = w;
          v.push_back(x);
          next.push_back(v);
        }
      }
      all.insert(all.end(), next.begin(), next.end());
    }
    for (const Word& w : all) {
      CHECK(g.contains(w) == (members.count(w) == 1));
    }
  }
}
