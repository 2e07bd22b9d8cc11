#include "covtop/folding.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "covtop/coset_enumeration.hpp"

namespace covtop {

namespace {

class Folder {
 public:
  explicit Folder(int rank) : columns_(2 * rank) { add_vertex(); }

  int add_vertex() {
    parent_.push_back(static_cast<int>(parent_.size()));
    out_.emplace_back(columns_, -1);
    return static_cast<int>(parent_.size()) - 1;
  }

  int rep(int v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }

  void add_edge(int u, int letter, int v) {
    const int col = letter_column(letter);
    attach(u, col, v);
    attach(v, col ^ 1, u);
    drain();
  }

  std::vector<std::vector<int>> finish() {
    std::vector<int> number(parent_.size(), -1);
    std::vector<int> order{rep(0)};
    number[order[0]] = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (int col = 0; col < columns_; ++col) {
        const int t = out_[order[k]][col];
        if (t < 0) continue;
        const int r = rep(t);
        if (number[r] < 0) {
          number[r] = static_cast<int>(order.size());
          order.push_back(r);
        }
      }
    }
    std::vector<std::vector<int>> out(order.size(), std::vector<int>(columns_, -1));
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (int col = 0; col < columns_; ++col) {
        const int t = out_[order[k]][col];
        if (t >= 0) out[k][col] = number[rep(t)];
      }
    }
    return out;
  }

 private:
  void attach(int u, int col, int v) {
    u = rep(u);
    const int existing = out_[u][col];
    if (existing < 0) {
      out_[u][col] = v;
    } else {
      pending_.emplace_back(existing, v);
    }
  }

  void drain() {
    while (!pending_.empty()) {
      auto [a, b] = pending_.back();
      pending_.pop_back();
      a = rep(a);
      b = rep(b);
      if (a == b) continue;
      const int low = std::min(a, b);
      const int high = std::max(a, b);
      parent_[high] = low;
      for (int col = 0; col < columns_; ++col) {
        const int t = out_[high][col];
        if (t >= 0) attach(low, col, t);
      }
    }
  }

  int columns_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> out_;
  std::vector<std::pair<int, int>> pending_;
};

}  // namespace

SubgroupGraph::SubgroupGraph(int rank, std::span<const Word> generators) : rank_(rank) {
  Folder folder(rank);
  for (const Word& g : generators) {
    const Word w = free_reduce(g);
    if (w.empty()) continue;
    int at = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const int next = i + 1 == w.size() ? 0 : folder.add_vertex();
      folder.add_edge(at, w[i], next);
      at = next;
    }
  }
  out_ = folder.finish();
}

SubgroupGraph::SubgroupGraph(Folded, int rank, std::vector<std::vector<int>> out)
    : rank_(rank), out_(std::move(out)) {}

int SubgroupGraph::target(int v, int letter) const {
  if (v < 0) return -1;
  return out_[v][letter_column(letter)];
}

int SubgroupGraph::read(int start, std::span<const int> w) const {
  int at = start;
  for (int x : w) {
    at = target(at, x);
    if (at < 0) return -1;
  }
  return at;
}

bool SubgroupGraph::contains(std::span<const int> w) const { return read(0, w) == 0; }

bool SubgroupGraph::is_complete() const {
  return std::all_of(out_.begin(), out_.end(), [](const std::vector<int>& row) {
    return std::all_of(row.begin(), row.end(), [](int t) { return t >= 0; });
  });
}

bool SubgroupGraph::fixes_every_vertex(std::span<const int> w) const {
  for (int v = 0; v < num_vertices(); ++v) {
    if (read(v, w) != v) return false;
  }
  return true;
}

std::vector<Word> SubgroupGraph::basis() const {
  const int n = num_vertices();
  std::vector<Word> path(n);
  std::vector<bool> seen(n, false);
  std::vector<std::vector<bool>> tree(n, std::vector<bool>(2 * rank_, false));
  std::vector<int> order{0};
  seen[0] = true;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int u = order[k];
    for (int col = 0; col < 2 * rank_; ++col) {
      const int v = out_[u][col];
      if (v < 0 || seen[v]) continue;
      seen[v] = true;
      tree[u][col] = true;
      tree[v][col ^ 1] = true;
      path[v] = path[u];
      const int letter = (col % 2 == 0) ? col / 2 + 1 : -(col / 2 + 1);
      path[v].push_back(letter);
      order.push_back(v);
    }
  }
  std::vector<Word> out;
  for (int u = 0; u < n; ++u) {
    for (int g = 1; g <= rank_; ++g) {
      const int col = letter_column(g);
      const int v = out_[u][col];
      if (v < 0 || tree[u][col]) continue;
      Word w = path[u];
      w.push_back(g);
      const Word back = inverse(path[v]);
      w.insert(w.end(), back.begin(), back.end());
      out.push_back(free_reduce(w));
    }
  }
  return out;
}

SubgroupGraph SubgroupGraph::intersect(const SubgroupGraph& other) const {
  std::map<std::pair<int, int>, int> number;
  std::vector<std::pair<int, int>> order{{0, 0}};
  number[{0, 0}] = 0;
  std::vector<std::vector<int>> out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    out.emplace_back(2 * rank_, -1);
    const auto [a, b] = order[k];
    for (int col = 0; col < 2 * rank_; ++col) {
      const int ta = out_[a][col];
      const int tb = other.out_[b][col];
      if (ta < 0 || tb < 0) continue;
      auto [it, inserted] = number.emplace(std::make_pair(ta, tb), static_cast<int>(order.size()));
      if (inserted) order.emplace_back(ta, tb);
      out[k][col] = it->second;
    }
  }
  return SubgroupGraph(Folded{}, rank_, std::move(out));
}

bool fold_membership(int rank, std::span<const Word> subgroup, std::span<const int> w) {
  return SubgroupGraph(rank, subgroup).contains(free_reduce(w));
}

bool same_subgroup(int rank, std::span<const Word> a, std::span<const Word> b) {
  const SubgroupGraph ga(rank, a);
  const SubgroupGraph gb(rank, b);
  auto all_in = [](std::span<const Word> words, const SubgroupGraph& g) {
    return std::all_of(words.begin(), words.end(),
                       [&](const Word& w) { return g.contains(free_reduce(w)); });
  };
  return all_in(a, gb) && all_in(b, ga);
}

}  // namespace covtop
