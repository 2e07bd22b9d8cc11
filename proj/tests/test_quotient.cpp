#include <doctest.h>

#include <random>

#include "covtop/quotient.hpp"

using namespace covtop;

TEST_CASE("verdict conjunction") {
  const Verdict y = Verdict::yes("y"), n = Verdict::no("n"), u = Verdict::unknown(UnknownReason::budget);
  const Verdict i = Verdict::unknown(UnknownReason::incomplete_universe);
  CHECK(conjunction(y, y).is_yes());
  CHECK(conjunction(y, n).is_no());
  CHECK(conjunction(n, u).is_no());
  CHECK(conjunction(u, n).is_no());
  CHECK(conjunction(y, u).is_unknown());
  CHECK(conjunction(u, y).is_unknown());
  CHECK(conjunction(y, i).reason == UnknownReason::incomplete_universe);
  CHECK(conjunction(i, u).reason == UnknownReason::budget);
  CHECK(conjunction(Verdict::no("b"), Verdict::no("a")).certificate == conjunction(Verdict::no("a"), Verdict::no("b")).certificate);
}

TEST_CASE("word_trivial_in_quotient examples") {
  const Presentation f2{{"a", "b"}, {}};
  const std::vector<Word> b{{2}};
  CHECK(word_trivial_in_quotient(f2, b, Word{1, 2, -1}, {}).is_yes());
  const Verdict no = word_trivial_in_quotient(f2, b, Word{1}, {});
  CHECK(no.is_no());
  CHECK(no.certificate.find("abelianization") != std::string::npos);

  const std::vector<Word> comm{{1, 2, -1, -2}};
  Budget tiny;
  tiny.max_cosets = 4;
  tiny.max_word_length = 4;
  const Word w = commutator(Word{1}, commutator(Word{1}, Word{2}));
  CHECK(word_trivial_in_quotient(f2, comm, w, tiny).is_unknown());
}

TEST_CASE("finite quotients are decided by enumeration") {
  // S3 = <a,b | a^2, b^3, (ab)^2>: the commutator [a,b] is nontrivial but has zero abelian image
  const Presentation s3{{"a", "b"}, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2}}};
  const Verdict v = word_trivial_in_quotient(s3, {}, Word{2}, {});
  CHECK(v.is_no());
  CHECK(word_trivial_in_quotient(s3, {}, Word{1, 2, 1, 2}, {}).is_yes());
  CHECK(word_trivial_in_quotient(s3, {}, Word{2, 2, 2, 1, 1}, {}).is_yes());
}

TEST_CASE("budget monotonicity of verdicts") {
  std::mt19937_64 rng(9);
  const Presentation p{{"a", "b"}, {{1, 2, -1, -2}}};
  const std::vector<Word> normal{{1, 1}};
  for (int i = 0; i < 40; ++i) {
    Word w;
    const int len = static_cast<int>(rng() % 8);
    for (int k = 0; k < len; ++k) w.push_back(static_cast<int>(rng() % 2 + 1) * (rng() % 2 ? 1 : -1));
    Budget small;
    small.max_cosets = 64;
    small.max_word_length = 16;
    const Verdict a = word_trivial_in_quotient(p, normal, w, small);
    const Verdict b = word_trivial_in_quotient(p, normal, w, small.doubled());
    if (!a.is_unknown()) CHECK(a.answer == b.answer);
  }
}

TEST_CASE("normality: conjugates of normal generators stay trivial") {
  const Presentation p{{"a", "b", "c"}, {{1, 2, -1, -2}}};
  const std::vector<Word> normal{{3}, {1, 1}};
  const QuotientOracle oracle(p, normal, {});
  for (const Word& g : normal)
    for (int x : {1, -1, 2, -2, 3, -3}) CHECK(oracle.is_trivial(conjugate(g, Word{x})).is_yes());
}

TEST_CASE("Tietze reduction") {
  const Presentation p{{"a", "b"}, {{1, -2, -2}}};
  const TietzeReduction t(p);
  CHECK(t.reduced().rank() == 1);
  CHECK(t.reduced().relators.empty());
  CHECK(free_reduce(t.rewrite(Word{1, -2, -2})).empty());
}
