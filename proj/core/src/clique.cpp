#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

#include "zec/graph.hpp"

namespace zec {

namespace {

using Words = std::vector<std::uint64_t>;

int popcount_words(const Words& w) {
  int c = 0;
  for (std::uint64_t x : w) c += std::popcount(x);
  return c;
}

template <typename F>
void for_each_bit(const Words& w, F&& f) {
  for (size_t i = 0; i < w.size(); ++i) {
    std::uint64_t x = w[i];
    while (x) {
      const int b = std::countr_zero(x);
      f(static_cast<int>(i * 64 + b));
      x &= x - 1;
    }
  }
}

// Tomita-style branch and bound: candidates of each subproblem are greedily
// colored, vertices are expanded in reverse color order, and a branch is cut
// when |current| + color can no longer beat the incumbent. Doubles as a
// decision procedure ("is there a clique of size k in this candidate set")
// by presetting the incumbent to k-1 and stopping at the first improvement.
class MaxCliqueEngine {
public:
  MaxCliqueEngine(const Graph& g, std::uint64_t budget)
      : g_(g), n_(g.vertex_count()), words_(g.words_per_row()), budget_(budget) {}

  void run_max() {
    reset_search(0, std::numeric_limits<int>::max());
    Words all(words_, 0);
    for (int v = 0; v < n_; ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    candidates(0) = all;
    expand(0);
  }

  bool exists(const Words& candidate_set, int k) {
    if (k <= 0) return true;
    if (popcount_words(candidate_set) < k) return false;
    reset_search(k - 1, k);
    candidates(0) = candidate_set;
    expand(0);
    return found_;
  }

  int best_size() const { return best_size_; }
  const std::vector<int>& best_clique() const { return best_; }
  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }

  Words& candidates(int depth) {
    while (static_cast<int>(pool_.size()) <= depth) pool_.emplace_back(words_, 0);
    return pool_[depth];
  }

private:
  void reset_search(int initial_best, int target) {
    best_size_ = initial_best;
    target_ = target;
    best_.clear();
    current_.clear();
    found_ = false;
  }

  void color_sort(const Words& p, std::vector<int>& order, std::vector<int>& colors) {
    order.clear();
    colors.clear();
    class_bits_.clear();
    class_members_.clear();
    for_each_bit(p, [&](int v) {
      const auto nb = g_.row(v);
      size_t c = 0;
      for (; c < class_bits_.size(); ++c) {
        bool conflict = false;
        for (int w = 0; w < words_; ++w)
          if (class_bits_[c][w] & nb[w]) {
            conflict = true;
            break;
          }
        if (!conflict) break;
      }
      if (c == class_bits_.size()) {
        class_bits_.emplace_back(words_, 0);
        class_members_.emplace_back();
      }
      class_bits_[c][v / 64] |= std::uint64_t{1} << (v % 64);
      class_members_[c].push_back(v);
    });
    for (size_t c = 0; c < class_members_.size(); ++c)
      for (int v : class_members_[c]) {
        order.push_back(v);
        colors.push_back(static_cast<int>(c) + 1);
      }
  }

  void expand(int depth) {
    if (exhausted_ || found_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    while (static_cast<int>(order_.size()) <= depth) {
      order_.emplace_back();
      colors_.emplace_back();
    }
    std::vector<int>& order = order_[depth];
    std::vector<int>& colors = colors_[depth];
    color_sort(candidates(depth), order, colors);

    Words& p = candidates(depth);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (exhausted_ || found_) return;
      const int v = order[i];
      if (static_cast<int>(current_.size()) + colors[i] <= best_size_) return;

      current_.push_back(v);
      Words& next = candidates(depth + 1);
      const auto nb = g_.row(v);
      bool empty = true;
      for (int w = 0; w < words_; ++w) {
        next[w] = p[w] & nb[w];
        empty &= next[w] == 0;
      }
      if (empty) {
        if (static_cast<int>(current_.size()) > best_size_) {
          best_size_ = static_cast<int>(current_.size());
          best_ = current_;
          if (best_size_ >= target_) found_ = true;
        }
      } else {
        expand(depth + 1);
      }
      current_.pop_back();
      p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }

  const Graph& g_;
  int n_;
  int words_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  bool found_ = false;
  int best_size_ = 0;
  int target_ = std::numeric_limits<int>::max();
  std::vector<int> best_;
  std::vector<int> current_;
  std::vector<Words> pool_;
  std::vector<std::vector<int>> order_;
  std::vector<std::vector<int>> colors_;
  std::vector<Words> class_bits_;
  std::vector<std::vector<int>> class_members_;
};

}  // namespace

CliqueResult clique_number(const Graph& g, const CliqueOptions& options) {
  CliqueResult result;
  if (g.vertex_count() == 0) return result;

  MaxCliqueEngine engine(g, options.node_budget);
  engine.run_max();
  result.size = engine.best_size();
  result.witness = engine.best_clique();
  result.exact = !engine.exhausted();
  std::sort(result.witness.begin(), result.witness.end());

  if (!result.exact) {
    result.nodes = engine.nodes();
    return result;
  }

  // Canonical witness: grow the lexicographically smallest maximum clique
  // with lowest-index-first decision searches. A vertex rejected here is in
  // no maximum clique extending the prefix, so it is dropped permanently.
  const int words = g.words_per_row();
  Words p(words, 0);
  for (int v = 0; v < g.vertex_count(); ++v) p[v / 64] |= std::uint64_t{1} << (v % 64);
  std::vector<int> witness;
  int remaining = result.size;
  bool fell_back = false;
  while (remaining > 0 && !fell_back) {
    bool committed = false;
    for (int v = 0; v < g.vertex_count() && !committed; ++v) {
      if (!((p[v / 64] >> (v % 64)) & 1)) continue;
      Words next(words, 0);
      const auto nb = g.row(v);
      for (int w = 0; w < words; ++w) next[w] = p[w] & nb[w];
      if (remaining == 1 || engine.exists(next, remaining - 1)) {
        witness.push_back(v);
        p = std::move(next);
        --remaining;
        committed = true;
      } else if (engine.exhausted()) {
        fell_back = true;  // budget gone mid-extraction; keep the phase-1 witness
        break;
      } else {
        p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
      }
    }
    if (!committed) fell_back = true;
  }
  if (!fell_back) result.witness = std::move(witness);
  result.nodes = engine.nodes();
  return result;
}

CliqueResult independence_number(const Graph& g, const CliqueOptions& options) {
  return clique_number(complement(g), options);
}

}  // namespace zec
