#ifndef REEDCHECK_KEMPE_HPP
#define REEDCHECK_KEMPE_HPP

#include "reedcheck/graph.hpp"
#include "reedcheck/invariants.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace reedcheck {

class KempeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A graph, a vertex u, and a proper k-coloring of g - u that we try to
/// extend to u.
class ExtensionProblem {
public:
  /// `base` colors induced_subgraph(g, V - {u}) with its ascending relabeling;
  /// k is base.palette_size(). Throws KempeError if base is not proper there.
  ExtensionProblem(Graph g, int u, const Coloring &base);

  /// `colors` is indexed by the vertices of g; the entry for u is ignored.
  static ExtensionProblem from_partial(Graph g, int u, std::vector<int> colors, int k);

  const Graph &graph() const { return g_; }
  int vertex() const { return u_; }
  int palette_size() const { return k_; }
  /// Colors on g's labels with 0 at u.
  std::span<const int> colors() const { return colors_; }
  /// The base coloring on g - u (ascending relabeling).
  Coloring base() const;

private:
  ExtensionProblem(Graph g, int u, std::vector<int> colors, int k);

  Graph g_;
  int u_;
  int k_;
  std::vector<int> colors_;
};

/// Swap colors `from` and `to` on the bicolor component containing `vertex`.
struct KempeSwap {
  int vertex;
  int from;
  int to;

  friend bool operator==(const KempeSwap &, const KempeSwap &) = default;
};

struct Extension {
  Coloring coloring;
  /// Swaps applied to the base, in order, before u was colored.
  std::vector<KempeSwap> swaps;
};

struct ExtendOptions {
  /// Chained single swaps tried by the depth-first search; negative means
  /// skip it and go straight to the exhaustive search.
  int max_depth = 2;
  /// Orders up to this value fall back to a breadth-first search over every
  /// coloring reachable by Kempe swaps.
  int exhaustive_order = 8;
  /// State cap for the breadth-first search.
  std::size_t max_states = 1'000'000;

  /// Exhaustive search regardless of order.
  static ExtendOptions unbounded() { return ExtendOptions{-1, kMaxOrder, 50'000'000}; }
};

/// Neighbors of u whose color occurs exactly once in N(u).
VertexSet unique_color_neighbors(const ExtensionProblem &p);

/// Component containing v of the subgraph induced by colors i and j.
VertexSet bicolor_component(const Graph &g, const Coloring &col, int v, int i, int j);

/// Exchanges i and j on `comp`, which must be a whole i/j component.
Coloring kempe_swap(const Graph &g, const Coloring &col, VertexSet comp, int i, int j);

/// Proper k-coloring of all of g obtained from the base by Kempe swaps and
/// then coloring u, or nullopt. Absence does not show that g needs k+1 colors.
std::optional<Coloring> extend_coloring(const ExtensionProblem &p, const ExtendOptions &options = {});
std::optional<Extension> extend_coloring_traced(const ExtensionProblem &p, const ExtendOptions &options = {});

/// Counting facts of the minimal-counterexample argument at u.
struct AuditFacts {
  int deg_u = 0;
  int r = 0;
  int colors_in_N = 0;
  int k = 0;
  int omega = 0;
  int delta = 0;
  /// Every one of the k colors appears in N(u).
  bool saturated = false;
  /// deg_u >= r + 2 (k - r)
  bool ineq_degree = false;
  /// r >= omega + 1
  bool ineq_r = false;
  /// Conditions that fail: any of "not_saturated", "ineq_degree", "ineq_r".
  std::vector<std::string> failed;
};

AuditFacts audit_facts(const ExtensionProblem &p, const SolverLimits &limits = {});

/// Removal order reversed: each vertex has at most degeneracy(g) earlier
/// neighbors.
std::vector<int> degeneracy_order(const Graph &g);

/// Inserts vertices in degeneracy order, extending the current coloring by
/// Kempe swaps and opening a new color only when that fails. Returns the
/// coloring and its palette size (at most max_degree(g) + 1).
std::pair<Coloring, int> reed_color(const Graph &g, const ExtendOptions &options = {});

} // namespace reedcheck

#endif // REEDCHECK_KEMPE_HPP
