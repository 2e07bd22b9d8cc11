#include "covtop/coset_enumeration.hpp"

#include <algorithm>

namespace covtop {

CosetTable::CosetTable(int rank, std::vector<std::vector<int>> rows, bool complete)
    : rank_(rank), rows_(std::move(rows)), complete_(complete) {}

int CosetTable::act(int coset, int letter) const {
  if (coset < 0 || coset >= size()) return -1;
  return rows_[coset][letter_column(letter)];
}

int CosetTable::act(int coset, std::span<const int> w) const {
  for (int x : w) {
    coset = act(coset, x);
    if (coset < 0) return -1;
  }
  return coset;
}

namespace {

class Enumerator {
 public:
  Enumerator(int rank, std::size_t max_live)
      : columns_(2 * rank), max_live_(std::max<std::size_t>(max_live, 1)),
        max_total_(4 * std::max<std::size_t>(max_live, 1) + 16) {}

  int columns() const { return columns_; }
  int total() const { return static_cast<int>(parent_.size()); }
  std::size_t live() const { return live_; }
  bool alive(int c) const { return parent_[c] == c; }

  int entry(int c, int col) const { return table_[static_cast<std::size_t>(c) * columns_ + col]; }
  void set(int c, int col, int value) { table_[static_cast<std::size_t>(c) * columns_ + col] = value; }

  int new_coset() {
    if (live_ >= max_live_ || parent_.size() >= max_total_) return -1;
    const int c = total();
    parent_.push_back(c);
    table_.resize(table_.size() + columns_, -1);
    ++live_;
    return c;
  }

  int rep(int c) {
    int r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      const int next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  /// Scans `w` at coset c, defining new cosets to close the cycle. False when out of budget.
  bool scan_and_fill(int c, const Word& w) { return scan(c, w, true); }
  void scan_only(int c, const Word& w) { scan(c, w, false); }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const int e = queue[k];
      for (int x = 0; x < columns_; ++x) {
        const int f = entry(e, x);
        if (f < 0) continue;
        set(f, x ^ 1, -1);
        const int e1 = rep(e);
        const int f1 = rep(f);
        if (entry(e1, x) >= 0) {
          merge(f1, entry(e1, x), queue);
        } else if (entry(f1, x ^ 1) >= 0) {
          merge(e1, entry(f1, x ^ 1), queue);
        } else {
          set(e1, x, f1);
          set(f1, x ^ 1, e1);
        }
      }
    }
  }

  CosetTable compact(int rank, bool complete) {
    std::vector<int> number(parent_.size(), -1);
    std::vector<int> order{rep(0)};
    number[order[0]] = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
      const int c = order[k];
      for (int x = 0; x < columns_; ++x) {
        int d = entry(c, x);
        if (d < 0) continue;
        d = rep(d);
        if (number[d] < 0) {
          number[d] = static_cast<int>(order.size());
          order.push_back(d);
        }
      }
    }
    std::vector<std::vector<int>> rows(order.size(), std::vector<int>(columns_, -1));
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (int x = 0; x < columns_; ++x) {
        const int d = entry(order[k], x);
        if (d >= 0) rows[k][x] = number[rep(d)];
      }
    }
    return CosetTable(rank, std::move(rows), complete);
  }

 private:
  void merge(int a, int b, std::vector<int>& queue) {
    const int phi = rep(a);
    const int psi = rep(b);
    if (phi == psi) return;
    const int low = std::min(phi, psi);
    const int high = std::max(phi, psi);
    parent_[high] = low;
    queue.push_back(high);
    --live_;
  }

  bool scan(int c, const Word& w, bool define) {
    if (w.empty()) return true;
    int f = c;
    int b = c;
    int i = 0;
    int j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && entry(f, letter_column(w[i])) >= 0) {
        f = entry(f, letter_column(w[i]));
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && entry(b, letter_column(w[j]) ^ 1) >= 0) {
        b = entry(b, letter_column(w[j]) ^ 1);
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        set(f, letter_column(w[i]), b);
        set(b, letter_column(w[i]) ^ 1, f);
        return true;
      }
      if (!define) return true;
      const int d = new_coset();
      if (d < 0) return false;
      set(f, letter_column(w[i]), d);
      set(d, letter_column(w[i]) ^ 1, f);
    }
  }

  int columns_;
  std::size_t max_live_;
  std::size_t max_total_;
  std::size_t live_ = 0;
  std::vector<int> parent_;
  std::vector<int> table_;
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, std::span<const Word> subgroup,
                        std::size_t max_cosets) {
  const int rank = p.rank();
  std::vector<Word> relators;
  for (const Word& r : p.relators) {
    Word reduced = cyclic_reduce(r);
    if (!reduced.empty()) relators.push_back(std::move(reduced));
  }
  std::vector<Word> generators;
  for (const Word& h : subgroup) {
    Word reduced = free_reduce(h);
    if (!reduced.empty()) generators.push_back(std::move(reduced));
  }

  Enumerator en(rank, max_cosets);
  en.new_coset();

  auto lookahead = [&] {
    for (const Word& h : generators) en.scan_only(en.rep(0), h);
    for (int c = 0; c < en.total(); ++c) {
      for (const Word& r : relators) {
        if (!en.alive(c)) break;
        en.scan_only(c, r);
      }
    }
  };
  auto with_lookahead = [&](auto&& step) {
    if (step()) return true;
    lookahead();
    return step();
  };

  for (const Word& h : generators) {
    if (!with_lookahead([&] { return en.scan_and_fill(en.rep(0), h); })) {
      return en.compact(rank, false);
    }
  }
  for (int c = 0; c < en.total(); ++c) {
    for (const Word& r : relators) {
      if (!en.alive(c)) break;
      if (!with_lookahead([&] { return !en.alive(c) || en.scan_and_fill(c, r); })) {
        return en.compact(rank, false);
      }
    }
    for (int x = 0; x < en.columns(); ++x) {
      if (!en.alive(c) || en.entry(c, x) >= 0) continue;
      const bool ok = with_lookahead([&] {
        if (!en.alive(c) || en.entry(c, x) >= 0) return true;
        const int d = en.new_coset();
        if (d < 0) return false;
        en.set(c, x, d);
        en.set(d, x ^ 1, c);
        return true;
      });
      if (!ok) return en.compact(rank, false);
    }
  }
  return en.compact(rank, true);
}

}  // namespace covtop
