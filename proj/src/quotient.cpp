#include "covtop/quotient.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <set>
#include <tuple>

namespace covtop {

// ---------------------------------------------------------------------------
// Verdict helpers

Verdict conjunction(const Verdict& a, const Verdict& b) {
  if (a.is_no() && b.is_no()) return a.certificate <= b.certificate ? a : b;
  if (a.is_no()) return a;
  if (b.is_no()) return b;
  if (a.is_yes() && b.is_yes()) {
    if (a.certificate.empty()) return b;
    if (b.certificate.empty()) return a;
    return Verdict::yes(a.certificate <= b.certificate ? a.certificate + "; " + b.certificate
                                                      : b.certificate + "; " + a.certificate);
  }
  const bool budget = (a.is_unknown() && a.reason == UnknownReason::budget) ||
                      (b.is_unknown() && b.reason == UnknownReason::budget);
  return Verdict::unknown(budget ? UnknownReason::budget : UnknownReason::incomplete_universe);
}

std::string_view to_string(Answer a) {
  switch (a) {
    case Answer::yes: return "YES";
    case Answer::no: return "NO";
    case Answer::unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::string_view to_string(UnknownReason r) {
  switch (r) {
    case UnknownReason::none: return "none";
    case UnknownReason::budget: return "budget";
    case UnknownReason::incomplete_universe: return "incomplete-universe";
  }
  return "none";
}

std::string describe(const Verdict& v) {
  std::string out(to_string(v.answer));
  if (v.is_unknown()) {
    out += "(" + std::string(to_string(v.reason)) + ")";
  }
  if (!v.certificate.empty()) out += " [" + v.certificate + "]";
  return out;
}

// ---------------------------------------------------------------------------
// Tietze reduction

namespace {

Word substitute(std::span<const int> w, int generator, const Word& expression) {
  Word out;
  const Word inv = inverse(expression);
  for (int x : w) {
    if (x == generator) {
      out.insert(out.end(), expression.begin(), expression.end());
    } else if (x == -generator) {
      out.insert(out.end(), inv.begin(), inv.end());
    } else {
      out.push_back(x);
    }
  }
  return free_reduce(out);
}

void add_relator(std::vector<Word>& relators, std::set<Word>& seen, const Word& r) {
  Word c = cyclic_reduce(r);
  if (c.empty()) return;
  const Word key = std::min(canonical_rotation(c), canonical_rotation(inverse(c)));
  if (seen.insert(key).second) relators.push_back(std::move(c));
}

}  // namespace

TietzeReduction::TietzeReduction(const Presentation& p, std::size_t max_total_length)
    : original_rank_(p.rank()), expression_(p.rank() + 1) {
  std::vector<Word> relators;
  std::set<Word> seen;
  for (const Word& r : p.relators) add_relator(relators, seen, r);

  while (true) {
    int best_relator = -1;
    int best_generator = 0;
    for (std::size_t i = 0; i < relators.size(); ++i) {
      if (best_relator >= 0 && relators[i].size() >= relators[best_relator].size()) continue;
      std::vector<int> count(original_rank_ + 1, 0);
      for (int x : relators[i]) ++count[std::abs(x)];
      for (int g = 1; g <= original_rank_; ++g) {
        if (count[g] == 1) {
          best_relator = static_cast<int>(i);
          best_generator = g;
          break;
        }
      }
    }
    if (best_relator < 0) break;

    Word r = relators[best_relator];
    const auto at = std::find_if(r.begin(), r.end(), [&](int x) { return std::abs(x) == best_generator; });
    std::rotate(r.begin(), at, r.end());
    const Word rest(r.begin() + 1, r.end());
    const Word expression = r.front() > 0 ? free_reduce(inverse(rest)) : free_reduce(rest);

    std::size_t projected = 0;
    for (std::size_t i = 0; i < relators.size(); ++i) {
      if (static_cast<int>(i) == best_relator) continue;
      for (int x : relators[i]) projected += std::abs(x) == best_generator ? expression.size() : 1;
    }
    if (projected > max_total_length) break;

    expression_[best_generator] = expression;
    elimination_order_.push_back(best_generator);
    std::vector<Word> next;
    std::set<Word> next_seen;
    for (std::size_t i = 0; i < relators.size(); ++i) {
      if (static_cast<int>(i) == best_relator) continue;
      add_relator(next, next_seen, substitute(relators[i], best_generator, expression));
    }
    relators = std::move(next);
  }

  new_index_.assign(original_rank_ + 1, 0);
  for (int g = 1; g <= original_rank_; ++g) {
    if (expression_[g]) continue;
    kept_.push_back(g);
    new_index_[g] = static_cast<int>(kept_.size());
    reduced_.generators.push_back(p.generators[g - 1]);
  }
  for (const Word& r : relators) {
    Word mapped;
    for (int x : r) mapped.push_back(x > 0 ? new_index_[x] : -new_index_[-x]);
    reduced_.relators.push_back(std::move(mapped));
  }
}

Word TietzeReduction::rewrite(std::span<const int> w) const {
  Word current = free_reduce(w);
  for (int g : elimination_order_) current = substitute(current, g, *expression_[g]);
  Word mapped;
  mapped.reserve(current.size());
  for (int x : current) mapped.push_back(x > 0 ? new_index_[x] : -new_index_[-x]);
  return mapped;
}

// ---------------------------------------------------------------------------
// Quotient oracle

namespace {

Presentation with_relators(const Presentation& p, std::span<const Word> extra) {
  Presentation q = p;
  for (const Word& w : extra) q.relators.push_back(free_reduce(w));
  return q;
}

std::string image_string(const std::vector<long long>& image) {
  std::string out = "(";
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(image[i]);
  }
  return out + ")";
}

constexpr std::size_t quick_search_states = 256;

}  // namespace

QuotientOracle::QuotientOracle(const Presentation& p, std::span<const Word> normal_generators,
                               const Budget& budget)
    : quotient_(with_relators(p, normal_generators)),
      budget_(budget),
      abelian_(quotient_.rank(), quotient_.relators),
      tietze_(quotient_) {
  std::set<Word> seen;
  for (const Word& r : tietze_.reduced().relators) {
    for (const Word& base : {r, inverse(r)}) {
      Word rot = cyclic_reduce(base);
      for (std::size_t k = 0; k < rot.size(); ++k) {
        if (seen.insert(rot).second) search_relators_.push_back(rot);
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      }
    }
  }
}

const CosetTable* QuotientOracle::finite_table() const {
  if (!table_) table_ = todd_coxeter(tietze_.reduced(), {}, budget_.max_cosets);
  return table_->complete() ? &*table_ : nullptr;
}

Verdict QuotientOracle::is_trivial(std::span<const int> w) const {
  const Word reduced = free_reduce(w);
  if (reduced.empty()) return Verdict::yes("free reduction");

  if (!abelian_.is_zero(reduced)) {
    return Verdict::no("abelianization image " + image_string(abelian_.image(reduced)));
  }

  const Word rewritten = cyclic_reduce(tietze_.rewrite(reduced));
  if (rewritten.empty()) return Verdict::yes("Tietze rewriting");

  if (tietze_.reduced().relators.empty()) {
    return Verdict::no("quotient is free of rank " + std::to_string(tietze_.reduced().rank()) +
                       " and the word reduces to a nonempty word");
  }

  if (Verdict quick = search(rewritten, std::min(quick_search_states, budget_.max_cosets)); quick.is_yes()) {
    return quick;
  }

  if (const CosetTable* table = finite_table()) {
    const int image = table->act(0, rewritten);
    const std::string size = std::to_string(table->size());
    if (image == 0) return Verdict::yes("coset enumeration of the quotient (" + size + " cosets)");
    return Verdict::no("coset enumeration of the quotient (" + size + " cosets) moves coset 0 to " +
                       std::to_string(image));
  }

  return search(rewritten, budget_.max_cosets);
}

Verdict QuotientOracle::search(const Word& w, std::size_t max_states) const {
  using State = std::tuple<std::size_t, std::size_t, Word>;
  std::priority_queue<State, std::vector<State>, std::greater<>> frontier;
  std::set<Word> visited;
  const Word start = canonical_rotation(w);
  if (start.empty()) return Verdict::yes("conjugate-product search (0 steps)");
  if (start.size() > budget_.max_word_length) {
    return Verdict::unknown(UnknownReason::budget, "word longer than the search bound");
  }
  frontier.emplace(start.size(), 0, start);
  visited.insert(start);
  std::size_t sequence = 0;
  std::size_t expanded = 0;

  while (!frontier.empty() && expanded < max_states) {
    Word current = std::get<2>(frontier.top());
    frontier.pop();
    ++expanded;
    Word rotated = current;
    for (std::size_t k = 0; k < current.size(); ++k) {
      for (const Word& r : search_relators_) {
        std::size_t m = 0;
        while (m < rotated.size() && m < r.size() && rotated[m] == r[m]) ++m;
        if (m == 0) continue;
        Word next = inverse(std::span<const int>(r).subspan(m));
        next.insert(next.end(), rotated.begin() + static_cast<std::ptrdiff_t>(m), rotated.end());
        next = canonical_rotation(next);
        if (next.empty()) {
          return Verdict::yes("conjugate-product search (" + std::to_string(expanded) + " states)");
        }
        if (next.size() > budget_.max_word_length) continue;
        if (visited.insert(next).second) frontier.emplace(next.size(), ++sequence, std::move(next));
      }
      std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
    }
  }
  return Verdict::unknown(UnknownReason::budget,
                          "search exhausted after " + std::to_string(expanded) + " states");
}

Verdict word_trivial_in_quotient(const Presentation& p, std::span<const Word> normal_generators,
                                 std::span<const int> w, const Budget& budget) {
  return QuotientOracle(p, normal_generators, budget).is_trivial(w);
}

}  // namespace covtop
