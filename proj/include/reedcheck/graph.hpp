#ifndef REEDCHECK_GRAPH_HPP
#define REEDCHECK_GRAPH_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace reedcheck {

/// Largest supported order; one adjacency row fits in a 64-bit word.
inline constexpr int kMaxOrder = 64;

using Edge = std::pair<int, int>;

class GraphError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Decode failure; offset is the index of the offending byte in the input.
class Graph6Error : public GraphError {
public:
  Graph6Error(std::size_t offset, const std::string &what);
  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

/// Subset of {0..63} stored as a bit mask.
class VertexSet {
public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> members);

  /// {0..n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }
  /// Smallest member; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }

  std::vector<int> members() const;

  template <class F> void for_each(F &&f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      f(std::countr_zero(b));
    }
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

private:
  std::uint64_t bits_ = 0;
};

/// Immutable simple undirected graph on vertices 0..order()-1.
///
/// Every constructor checks symmetry and irreflexivity, so a Graph value is
/// always a valid simple graph.
class Graph {
public:
  /// The null graph K0.
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Graph with exactly the given edges; duplicates (in either orientation)
  /// collapse. Throws GraphError on loops or out-of-range endpoints.
  static Graph build(int n, std::span<const Edge> edges);
  static Graph build(int n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Graph from adjacency rows (bit v of rows[u] set iff u~v). Rejects
  /// asymmetric rows, loops and bits beyond the order.
  static Graph from_rows(std::span<const std::uint64_t> rows);

  int order() const { return static_cast<int>(rows_.size()); }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  VertexSet neighbors(int v) const { return VertexSet(rows_[v]); }
  std::uint64_t row(int v) const { return rows_[v]; }
  std::span<const std::uint64_t> rows() const { return rows_; }
  int degree(int v) const { return std::popcount(rows_[v]); }
  VertexSet vertices() const { return VertexSet::range(order()); }

  std::size_t edge_count() const;
  /// Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph &, const Graph &) = default;

private:
  std::vector<std::uint64_t> rows_;
};

Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph &g);

Graph complement(const Graph &g);

/// Subgraph induced by s, relabeled by ascending original label.
Graph induced_subgraph(const Graph &g, VertexSet s);

/// Graph whose vertex i is vertex order[i] of g. order must be a permutation.
Graph relabel(const Graph &g, std::span<const int> order);

int degree(const Graph &g, int v);
/// 0 for the null graph.
int max_degree(const Graph &g);
/// Non-increasing.
std::vector<int> degree_sequence(const Graph &g);

/// Some adjacency-preserving bijection a -> b (image of vertex i of a at
/// index i), or nullopt.
std::optional<std::vector<int>> find_isomorphism(const Graph &a, const Graph &b);
bool is_isomorphic(const Graph &a, const Graph &b);

/// Canonical relabeling: isomorphic inputs give identical outputs.
Graph canonical_graph(const Graph &g);
/// graph6 text of canonical_graph(g).
std::string canonical_form(const Graph &g);

// Named families, used throughout tests and the catalog.
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph petersen_graph();

} // namespace reedcheck

#endif // REEDCHECK_GRAPH_HPP
