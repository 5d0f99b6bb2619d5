#ifndef REEDCHECK_INVARIANTS_HPP
#define REEDCHECK_INVARIANTS_HPP

#include "reedcheck/graph.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace reedcheck {

/// Default node-expansion cap per top-level solver call. An order-12 graph
/// has fewer than 6e6 partial colorings in first-use order (sum of Bell
/// numbers), so any single k-colorability test at that order finishes well
/// inside this.
inline constexpr std::uint64_t kDefaultNodeLimit = 200'000'000;

struct SolverLimits {
  std::uint64_t node_limit = kDefaultNodeLimit;
};

class BudgetExhausted : public std::runtime_error {
public:
  explicit BudgetExhausted(std::uint64_t limit);
  std::uint64_t limit() const noexcept { return limit_; }

private:
  std::uint64_t limit_;
};

/// Total assignment vertex -> color in 1..palette_size. Properness is a
/// property relative to a graph; see is_proper.
class Coloring {
public:
  Coloring() = default;
  /// Throws std::invalid_argument if some color is outside 1..palette_size.
  Coloring(int palette_size, std::vector<int> colors);

  int palette_size() const { return palette_size_; }
  int order() const { return static_cast<int>(colors_.size()); }
  int color(int v) const { return colors_[v]; }
  const std::vector<int> &colors() const { return colors_; }
  /// Number of distinct colors actually used.
  int used() const;

  friend bool operator==(const Coloring &, const Coloring &) = default;

private:
  int palette_size_ = 0;
  std::vector<int> colors_;
};

/// Same order as g and no edge joins equal colors.
bool is_proper(const Graph &g, const Coloring &c);

int clique_number(const Graph &g, const SolverLimits &limits = {});
/// Some maximum clique.
VertexSet maximum_clique(const Graph &g, const SolverLimits &limits = {});

/// A proper coloring with palette_size k, or nullopt if none exists.
/// Throws BudgetExhausted when the node cap is hit.
std::optional<Coloring> is_k_colorable(const Graph &g, int k, const SolverLimits &limits = {});

int chromatic_number(const Graph &g, const SolverLimits &limits = {});
/// A proper coloring with palette_size == chromatic_number(g).
Coloring minimum_coloring(const Graph &g, const SolverLimits &limits = {});

/// DSATUR greedy coloring.
Coloring greedy_coloring(const Graph &g);
int greedy_bound(const Graph &g);

} // namespace reedcheck

#endif // REEDCHECK_INVARIANTS_HPP
