#include <doctest.h>

#include <random>

#include "covtop/error.hpp"
#include "covtop/word.hpp"

using namespace covtop;

TEST_CASE("free_reduce") {
  CHECK(free_reduce(Word{1, -1}).empty());
  CHECK(free_reduce(Word{1, 2, -2, 1}) == Word{1, 1});
  CHECK(free_reduce(Word{1, 2, -1}) == Word{1, 2, -1});
  CHECK(free_reduce(Word{1, 2, -2, -1, 2}) == Word{2});
}

TEST_CASE("free_reduce is idempotent and agrees with a stack-free oracle") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    Word w;
    const int len = static_cast<int>(rng() % 12);
    for (int k = 0; k < len; ++k) w.push_back(static_cast<int>(rng() % 2 + 1) * (rng() % 2 ? 1 : -1));
    const Word r = free_reduce(w);
    CHECK(free_reduce(r) == r);
    // oracle: cancel adjacent pairs until none are left
    Word o = w;
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t k = 0; k + 1 < o.size(); ++k) {
        if (o[k] == -o[k + 1]) {
          o.erase(o.begin() + k, o.begin() + k + 2);
          changed = true;
          break;
        }
      }
    }
    CHECK(r == o);
  }
}

TEST_CASE("inverse, conjugate, commutator") {
  CHECK(inverse(Word{1, 2, -1}) == Word{1, -2, -1});
  CHECK(free_reduce(concat(Word{1, 2}, inverse(Word{1, 2}))).empty());
  CHECK(conjugate(Word{2}, Word{1}) == Word{-1, 2, 1});
  CHECK(commutator(Word{1}, Word{2}) == Word{1, 2, -1, -2});
}

TEST_CASE("cyclic reduction and canonical rotation") {
  CHECK(cyclic_reduce(Word{-1, 2, 1}) == Word{2});
  CHECK(cyclic_reduce(Word{1, -1}).empty());
  CHECK(canonical_rotation(Word{2, 1}) == canonical_rotation(Word{1, 2}));
  CHECK(canonical_rotation(Word{-1, 2, 2, 1}) == Word{2, 2});
}

TEST_CASE("exponent sums") {
  CHECK(exponent_sums(Word{1, 2, -1, 2, 2}, 2) == std::vector<long long>{0, 3});
}

TEST_CASE("word text round trip") {
  const std::vector<std::string> names{"a", "b"};
  CHECK(to_string(Word{1, -2, 1}, names) == "a b^-1 a");
  CHECK(to_string(Word{}, names) == "1");
  CHECK(parse_word("a b^-1 a", names) == Word{1, -2, 1});
  CHECK(parse_word("a^3 b^-2", names) == Word{1, 1, 1, -2, -2});
  CHECK(parse_word("1", names).empty());
  CHECK_THROWS_AS(parse_word("c", names), Error);
}

TEST_CASE("budget defaults and doubling") {
  const Budget b;
  CHECK(b.max_cosets == 50000);
  CHECK(b.max_word_length == 64);
  CHECK(b.depth == 3);
  CHECK(b.radius == 4);
  const Budget d = b.doubled();
  CHECK(d.max_cosets == 100000);
  CHECK(d.max_word_length == 128);
}
