#include "reedcheck/invariants.hpp"

#include <algorithm>
#include <set>

namespace reedcheck {

namespace {

class NodeCounter {
public:
  explicit NodeCounter(const SolverLimits &limits) : limit_(limits.node_limit) {}

  void tick() {
    if (++used_ > limit_) {
      throw BudgetExhausted(limit_);
    }
  }

private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Branch and bound for maximum clique with greedy-coloring bounds: the
// candidates are partitioned into independent sets, so a set coloured with c
// classes cannot contribute more than c clique vertices.
class CliqueSearch {
public:
  CliqueSearch(const Graph &g, NodeCounter &counter) : g_(g), counter_(counter) {}

  VertexSet run() {
    expand(g_.vertices().bits(), VertexSet());
    return best_;
  }

private:
  void expand(std::uint64_t candidates, VertexSet current) {
    counter_.tick();
    std::vector<int> order;
    std::vector<int> bound;
    std::uint64_t uncolored = candidates;
    for (int color = 1; uncolored != 0; ++color) {
      std::uint64_t open = uncolored;
      while (open != 0) {
        const int v = std::countr_zero(open);
        open &= ~bit(v) & ~g_.row(v);
        uncolored &= ~bit(v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (current.size() + bound[i] <= best_.size()) {
        return;
      }
      const int v = order[i];
      VertexSet grown = current;
      grown.insert(v);
      const std::uint64_t next = candidates & g_.row(v);
      if (next == 0) {
        if (grown.size() > best_.size()) {
          best_ = grown;
        }
      } else {
        expand(next, grown);
      }
      candidates &= ~bit(v);
    }
  }

  const Graph &g_;
  NodeCounter &counter_;
  VertexSet best_;
};

// Exact k-colorability by DSATUR-ordered backtracking. Colors are opened in
// first-use order, which also fixes the first (maximum-degree) vertex to 1.
class ColorSearch {
public:
  ColorSearch(const Graph &g, int k, NodeCounter &counter)
      : g_(g), k_(std::min(k, g.order())), counter_(counter), colors_(g.order(), 0), forbidden_(g.order(), 0),
        uncolored_(g.vertices().bits()) {}

  bool run() { return place(0); }
  const std::vector<int> &colors() const { return colors_; }

private:
  int pick() const {
    int best = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (std::uint64_t b = uncolored_; b != 0; b &= b - 1) {
      const int v = std::countr_zero(b);
      const int sat = std::popcount(forbidden_[v]);
      const int deg = std::popcount(g_.row(v) & uncolored_);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  bool place(int used) {
    counter_.tick();
    if (uncolored_ == 0) {
      return true;
    }
    const int v = pick();
    if (std::popcount(forbidden_[v]) >= k_) {
      return false;
    }
    uncolored_ &= ~bit(v);
    const int open = std::min(k_, used + 1);
    std::vector<int> touched;
    for (int c = 1; c <= open; ++c) {
      const std::uint64_t cbit = bit(c - 1);
      if (forbidden_[v] & cbit) {
        continue;
      }
      colors_[v] = c;
      touched.clear();
      for (std::uint64_t b = g_.row(v) & uncolored_; b != 0; b &= b - 1) {
        const int w = std::countr_zero(b);
        if (!(forbidden_[w] & cbit)) {
          forbidden_[w] |= cbit;
          touched.push_back(w);
        }
      }
      if (place(std::max(used, c))) {
        return true;
      }
      for (int w : touched) {
        forbidden_[w] &= ~cbit;
      }
    }
    colors_[v] = 0;
    uncolored_ |= bit(v);
    return false;
  }

  const Graph &g_;
  int k_;
  NodeCounter &counter_;
  std::vector<int> colors_;
  std::vector<std::uint64_t> forbidden_;
  std::uint64_t uncolored_;
};

std::optional<Coloring> k_coloring(const Graph &g, int k, NodeCounter &counter) {
  if (k < 0) {
    throw std::invalid_argument("palette size must be non-negative");
  }
  if (g.order() == 0) {
    return Coloring(k, {});
  }
  if (k == 0) {
    return std::nullopt;
  }
  ColorSearch search(g, k, counter);
  if (!search.run()) {
    return std::nullopt;
  }
  return Coloring(k, search.colors());
}

} // namespace

BudgetExhausted::BudgetExhausted(std::uint64_t limit)
    : std::runtime_error("solver node budget of " + std::to_string(limit) + " exhausted"), limit_(limit) {}

Coloring::Coloring(int palette_size, std::vector<int> colors) : palette_size_(palette_size), colors_(std::move(colors)) {
  if (palette_size_ < 0) {
    throw std::invalid_argument("palette size must be non-negative");
  }
  for (std::size_t v = 0; v < colors_.size(); ++v) {
    if (colors_[v] < 1 || colors_[v] > palette_size_) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " has color " + std::to_string(colors_[v]) +
                                  " outside 1.." + std::to_string(palette_size_));
    }
  }
}

int Coloring::used() const { return static_cast<int>(std::set<int>(colors_.begin(), colors_.end()).size()); }

bool is_proper(const Graph &g, const Coloring &c) {
  if (c.order() != g.order()) {
    return false;
  }
  for (auto [u, v] : g.edges()) {
    if (c.color(u) == c.color(v)) {
      return false;
    }
  }
  return true;
}

VertexSet maximum_clique(const Graph &g, const SolverLimits &limits) {
  NodeCounter counter(limits);
  return CliqueSearch(g, counter).run();
}

int clique_number(const Graph &g, const SolverLimits &limits) { return maximum_clique(g, limits).size(); }

std::optional<Coloring> is_k_colorable(const Graph &g, int k, const SolverLimits &limits) {
  NodeCounter counter(limits);
  return k_coloring(g, k, counter);
}

Coloring minimum_coloring(const Graph &g, const SolverLimits &limits) {
  NodeCounter counter(limits);
  Coloring greedy = greedy_coloring(g);
  const int lower = CliqueSearch(g, counter).run().size();
  for (int k = lower; k < greedy.palette_size(); ++k) {
    if (auto c = k_coloring(g, k, counter)) {
      return *c;
    }
  }
  return greedy;
}

int chromatic_number(const Graph &g, const SolverLimits &limits) {
  return minimum_coloring(g, limits).palette_size();
}

Coloring greedy_coloring(const Graph &g) {
  const int n = g.order();
  std::vector<int> colors(n, 0);
  std::vector<std::uint64_t> seen(n, 0);
  std::uint64_t uncolored = g.vertices().bits();
  int palette = 0;
  while (uncolored != 0) {
    int v = -1;
    int v_sat = -1;
    int v_deg = -1;
    for (std::uint64_t b = uncolored; b != 0; b &= b - 1) {
      const int w = std::countr_zero(b);
      const int sat = std::popcount(seen[w]);
      const int deg = std::popcount(g.row(w) & uncolored);
      if (sat > v_sat || (sat == v_sat && deg > v_deg)) {
        v = w;
        v_sat = sat;
        v_deg = deg;
      }
    }
    const int c = std::countr_one(seen[v]) + 1;
    colors[v] = c;
    palette = std::max(palette, c);
    uncolored &= ~bit(v);
    g.neighbors(v).for_each([&](int w) { seen[w] |= bit(c - 1); });
  }
  return Coloring(palette, std::move(colors));
}

int greedy_bound(const Graph &g) { return greedy_coloring(g).palette_size(); }

} // namespace reedcheck
