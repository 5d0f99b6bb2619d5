#include "reedcheck/kempe.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace reedcheck {

namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

std::uint64_t color_mask(std::span<const int> colors, int i, int j) {
  std::uint64_t mask = 0;
  for (std::size_t v = 0; v < colors.size(); ++v) {
    if (colors[v] == i || colors[v] == j) {
      mask |= bit(static_cast<int>(v));
    }
  }
  return mask;
}

// Vertices colored 0 are uncolored and never belong to a component.
std::uint64_t component_bits(const Graph &g, std::span<const int> colors, int v, int i, int j) {
  const std::uint64_t allowed = color_mask(colors, i, j);
  std::uint64_t comp = bit(v);
  std::uint64_t frontier = comp;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t b = frontier; b != 0; b &= b - 1) {
      next |= g.row(std::countr_zero(b));
    }
    next &= allowed & ~comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

void swap_bits(std::vector<int> &colors, std::uint64_t comp, int i, int j) {
  for (std::uint64_t b = comp; b != 0; b &= b - 1) {
    int &c = colors[std::countr_zero(b)];
    c = c == i ? j : i;
  }
}

// Recoloring search on a partial coloring of g (0 = uncolored) for the
// uncolored vertex u with palette 1..k.
class Extender {
public:
  Extender(const Graph &g, int u, int k, const ExtendOptions &options, std::vector<int> colors)
      : g_(g), u_(u), k_(k), options_(options), colors_(std::move(colors)) {}

  std::optional<std::pair<std::vector<int>, std::vector<KempeSwap>>> run() {
    bool found = free_color(colors_) != 0;
    if (!found && options_.max_depth >= 0) {
      found = depth_first(options_.max_depth);
    }
    if (!found && (options_.max_depth < 0 || g_.order() <= options_.exhaustive_order)) {
      found = breadth_first();
    }
    if (!found) {
      return std::nullopt;
    }
    colors_[u_] = free_color(colors_);
    return std::make_pair(std::move(colors_), std::move(trace_));
  }

private:
  int free_color(std::span<const int> colors) const {
    std::uint64_t present = 0;
    g_.neighbors(u_).for_each([&](int w) {
      if (colors[w] > 0) {
        present |= bit(colors[w] - 1);
      }
    });
    for (int c = 1; c <= k_; ++c) {
      if (!(present & bit(c - 1))) {
        return c;
      }
    }
    return 0;
  }

  std::uint64_t neighbors_colored(int c) const {
    std::uint64_t out = 0;
    g_.neighbors(u_).for_each([&](int w) {
      if (colors_[w] == c) {
        out |= bit(w);
      }
    });
    return out;
  }

  void apply(std::uint64_t comp, int vertex, int i, int j) {
    swap_bits(colors_, comp, i, j);
    trace_.push_back({vertex, i, j});
  }

  // Frees color i in one step: every i/j chain through an i-neighbor of u
  // avoids the j-neighbors of u, so swapping all of them clears i from N(u).
  bool free_by_chains() {
    for (int i = 1; i <= k_; ++i) {
      const std::uint64_t with_i = neighbors_colored(i);
      for (int j = 1; j <= k_; ++j) {
        if (j == i) {
          continue;
        }
        const std::uint64_t with_j = neighbors_colored(j);
        std::vector<std::pair<std::uint64_t, int>> chains;
        std::uint64_t covered = 0;
        bool blocked = false;
        for (std::uint64_t b = with_i; b != 0 && !blocked; b &= b - 1) {
          const int x = std::countr_zero(b);
          if (covered & bit(x)) {
            continue;
          }
          const std::uint64_t comp = component_bits(g_, colors_, x, i, j);
          blocked = (comp & with_j) != 0;
          covered |= comp;
          chains.emplace_back(comp, x);
        }
        if (!blocked) {
          for (auto [comp, x] : chains) {
            apply(comp, x, i, j);
          }
          return true;
        }
      }
    }
    return false;
  }

  struct Move {
    int meets;
    int j;
    int vertex;
    std::uint64_t comp;
  };

  bool depth_first(int depth) {
    if (free_color(colors_) != 0) {
      return true;
    }
    if (free_by_chains()) {
      return true;
    }
    if (depth == 0) {
      return false;
    }
    const std::uint64_t nbrs = g_.row(u_);
    for (int i = 1; i <= k_; ++i) {
      std::vector<Move> moves;
      const std::uint64_t with_i = neighbors_colored(i);
      for (int j = 1; j <= k_; ++j) {
        if (j == i) {
          continue;
        }
        std::uint64_t covered = 0;
        for (std::uint64_t b = with_i; b != 0; b &= b - 1) {
          const int x = std::countr_zero(b);
          if (covered & bit(x)) {
            continue;
          }
          const std::uint64_t comp = component_bits(g_, colors_, x, i, j);
          covered |= comp;
          moves.push_back({std::popcount(comp & nbrs), j, x, comp});
        }
      }
      std::stable_sort(moves.begin(), moves.end(), [](const Move &a, const Move &b) { return a.meets < b.meets; });
      for (const Move &m : moves) {
        const std::size_t mark = trace_.size();
        apply(m.comp, m.vertex, i, m.j);
        if (depth_first(depth - 1)) {
          return true;
        }
        // Undo the swap and anything a failed chain step appended.
        while (trace_.size() > mark + 1) {
          trace_.pop_back();
        }
        swap_bits(colors_, m.comp, i, m.j);
        trace_.pop_back();
      }
    }
    return false;
  }

  static std::string key_of(const std::vector<int> &colors) { return std::string(colors.begin(), colors.end()); }

  bool breadth_first() {
    struct Visit {
      std::string parent;
      KempeSwap swap;
    };
    const std::string start = key_of(colors_);
    std::unordered_map<std::string, Visit> visited;
    visited.emplace(start, Visit{std::string(), {-1, 0, 0}});
    std::deque<std::vector<int>> queue{colors_};
    while (!queue.empty()) {
      std::vector<int> state = std::move(queue.front());
      queue.pop_front();
      if (free_color(state) != 0) {
        std::vector<KempeSwap> path;
        for (std::string key = key_of(state); key != start;) {
          const Visit &v = visited.at(key);
          path.push_back(v.swap);
          key = v.parent;
        }
        std::reverse(path.begin(), path.end());
        trace_ = std::move(path);
        colors_ = std::move(state);
        return true;
      }
      const std::string here = key_of(state);
      for (int i = 1; i <= k_; ++i) {
        for (int j = i + 1; j <= k_; ++j) {
          std::uint64_t covered = 0;
          const std::uint64_t pair_mask = color_mask(state, i, j);
          for (std::uint64_t b = pair_mask; b != 0; b &= b - 1) {
            const int w = std::countr_zero(b);
            if (covered & bit(w)) {
              continue;
            }
            const std::uint64_t comp = component_bits(g_, state, w, i, j);
            covered |= comp;
            std::vector<int> next = state;
            const int from = state[w];
            swap_bits(next, comp, i, j);
            auto [it, inserted] = visited.try_emplace(key_of(next), Visit{here, {w, from, from == i ? j : i}});
            if (inserted) {
              if (visited.size() > options_.max_states) {
                return false;
              }
              queue.push_back(std::move(next));
            }
          }
        }
      }
    }
    return false;
  }

  const Graph &g_;
  int u_;
  int k_;
  ExtendOptions options_;
  std::vector<int> colors_;
  std::vector<KempeSwap> trace_;
};

void check_coloring_matches(const Graph &g, const Coloring &col) {
  if (col.order() != g.order()) {
    throw KempeError("coloring has " + std::to_string(col.order()) + " vertices, graph has " +
                     std::to_string(g.order()));
  }
}

} // namespace

ExtensionProblem::ExtensionProblem(Graph g, int u, std::vector<int> colors, int k)
    : g_(std::move(g)), u_(u), k_(k), colors_(std::move(colors)) {
  if (u_ < 0 || u_ >= g_.order()) {
    throw KempeError("extension vertex " + std::to_string(u_) + " out of range");
  }
  if (static_cast<int>(colors_.size()) != g_.order()) {
    throw KempeError("base coloring has the wrong number of vertices");
  }
  if (k_ < 0) {
    throw KempeError("palette size must be non-negative");
  }
  colors_[u_] = 0;
  for (int v = 0; v < g_.order(); ++v) {
    if (v != u_ && (colors_[v] < 1 || colors_[v] > k_)) {
      throw KempeError("vertex " + std::to_string(v) + " has color " + std::to_string(colors_[v]) + " outside 1.." +
                       std::to_string(k_));
    }
  }
  for (auto [a, b] : g_.edges()) {
    if (a != u_ && b != u_ && colors_[a] == colors_[b]) {
      throw KempeError("base coloring is not proper on edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  }
}

ExtensionProblem::ExtensionProblem(Graph g, int u, const Coloring &base)
    : ExtensionProblem(
          [&] {
            if (u < 0 || u >= g.order() || base.order() != g.order() - 1) {
              throw KempeError("base coloring must cover exactly the vertices other than u");
            }
            std::vector<int> lifted(g.order(), 0);
            for (int v = 0, idx = 0; v < g.order(); ++v) {
              if (v != u) {
                lifted[v] = base.color(idx++);
              }
            }
            return ExtensionProblem(g, u, std::move(lifted), base.palette_size());
          }()) {}

ExtensionProblem ExtensionProblem::from_partial(Graph g, int u, std::vector<int> colors, int k) {
  if (u >= 0 && u < static_cast<int>(colors.size())) {
    colors[u] = 0;
  }
  return ExtensionProblem(std::move(g), u, std::move(colors), k);
}

Coloring ExtensionProblem::base() const {
  std::vector<int> out;
  out.reserve(colors_.size());
  for (int v = 0; v < g_.order(); ++v) {
    if (v != u_) {
      out.push_back(colors_[v]);
    }
  }
  return Coloring(k_, std::move(out));
}

VertexSet unique_color_neighbors(const ExtensionProblem &p) {
  const Graph &g = p.graph();
  std::vector<int> count(p.palette_size() + 1, 0);
  g.neighbors(p.vertex()).for_each([&](int w) { ++count[p.colors()[w]]; });
  VertexSet out;
  g.neighbors(p.vertex()).for_each([&](int w) {
    if (count[p.colors()[w]] == 1) {
      out.insert(w);
    }
  });
  return out;
}

VertexSet bicolor_component(const Graph &g, const Coloring &col, int v, int i, int j) {
  check_coloring_matches(g, col);
  if (i == j) {
    throw KempeError("bicolor component needs two distinct colors");
  }
  if (v < 0 || v >= g.order()) {
    throw KempeError("vertex " + std::to_string(v) + " out of range");
  }
  if (col.color(v) != i && col.color(v) != j) {
    throw KempeError("vertex " + std::to_string(v) + " has color " + std::to_string(col.color(v)) + ", not " +
                     std::to_string(i) + " or " + std::to_string(j));
  }
  return VertexSet(component_bits(g, col.colors(), v, i, j));
}

Coloring kempe_swap(const Graph &g, const Coloring &col, VertexSet comp, int i, int j) {
  check_coloring_matches(g, col);
  if (comp.empty()) {
    throw KempeError("empty component");
  }
  if ((comp - g.vertices()) != VertexSet()) {
    throw KempeError("component has vertices outside the graph");
  }
  if (i < 1 || j < 1 || i > col.palette_size() || j > col.palette_size()) {
    throw KempeError("swap colors outside the palette");
  }
  if (bicolor_component(g, col, comp.front(), i, j) != comp) {
    throw KempeError("set is not a maximal " + std::to_string(i) + "/" + std::to_string(j) + " component");
  }
  std::vector<int> colors = col.colors();
  swap_bits(colors, comp.bits(), i, j);
  return Coloring(col.palette_size(), std::move(colors));
}

std::optional<Extension> extend_coloring_traced(const ExtensionProblem &p, const ExtendOptions &options) {
  Extender ext(p.graph(), p.vertex(), p.palette_size(), options, std::vector<int>(p.colors().begin(), p.colors().end()));
  auto found = ext.run();
  if (!found) {
    return std::nullopt;
  }
  return Extension{Coloring(p.palette_size(), std::move(found->first)), std::move(found->second)};
}

std::optional<Coloring> extend_coloring(const ExtensionProblem &p, const ExtendOptions &options) {
  auto ext = extend_coloring_traced(p, options);
  if (!ext) {
    return std::nullopt;
  }
  return std::move(ext->coloring);
}

AuditFacts audit_facts(const ExtensionProblem &p, const SolverLimits &limits) {
  const Graph &g = p.graph();
  AuditFacts f;
  f.k = p.palette_size();
  f.deg_u = g.degree(p.vertex());
  f.r = unique_color_neighbors(p).size();
  std::vector<bool> present(f.k + 1, false);
  g.neighbors(p.vertex()).for_each([&](int w) { present[p.colors()[w]] = true; });
  f.colors_in_N = static_cast<int>(std::count(present.begin() + 1, present.end(), true));
  f.omega = clique_number(g, limits);
  f.delta = max_degree(g);
  f.saturated = f.colors_in_N == f.k;
  f.ineq_degree = f.deg_u >= f.r + 2 * (f.k - f.r);
  f.ineq_r = f.r >= f.omega + 1;
  if (!f.saturated) {
    f.failed.emplace_back("not_saturated");
  }
  if (!f.ineq_degree) {
    f.failed.emplace_back("ineq_degree");
  }
  if (!f.ineq_r) {
    f.failed.emplace_back("ineq_r");
  }
  return f;
}

std::vector<int> degeneracy_order(const Graph &g) {
  const int n = g.order();
  std::vector<int> removed;
  removed.reserve(n);
  std::uint64_t remaining = g.vertices().bits();
  while (remaining != 0) {
    int pick = -1;
    int pick_deg = n + 1;
    for (std::uint64_t b = remaining; b != 0; b &= b - 1) {
      const int v = std::countr_zero(b);
      const int d = std::popcount(g.row(v) & remaining);
      if (d < pick_deg) {
        pick = v;
        pick_deg = d;
      }
    }
    removed.push_back(pick);
    remaining &= ~bit(pick);
  }
  std::reverse(removed.begin(), removed.end());
  return removed;
}

std::pair<Coloring, int> reed_color(const Graph &g, const ExtendOptions &options) {
  std::vector<int> colors(g.order(), 0);
  int k = 0;
  for (int v : degeneracy_order(g)) {
    Extender ext(g, v, k, options, colors);
    if (auto found = ext.run()) {
      colors = std::move(found->first);
    } else {
      colors[v] = ++k;
    }
  }
  return {Coloring(k, std::move(colors)), k};
}

} // namespace reedcheck
