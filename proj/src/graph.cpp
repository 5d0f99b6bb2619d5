#include "reedcheck/graph.hpp"

#include <algorithm>
#include <functional>

namespace reedcheck {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxOrder) {
    throw GraphError("graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxOrder));
  }
}

} // namespace

Graph6Error::Graph6Error(std::size_t offset, const std::string &what)
    : GraphError("graph6 byte " + std::to_string(offset) + ": " + what), offset_(offset) {}

VertexSet::VertexSet(std::initializer_list<int> members) {
  for (int v : members) {
    if (v < 0 || v >= kMaxOrder) {
      throw GraphError("vertex " + std::to_string(v) + " out of range");
    }
    insert(v);
  }
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for_each([&](int v) { out.push_back(v); });
  return out;
}

Graph::Graph(int n) {
  check_order(n);
  rows_.assign(n, 0);
}

Graph Graph::build(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for order " +
                       std::to_string(n));
    }
    if (u == v) {
      throw GraphError("loop at vertex " + std::to_string(u));
    }
    g.rows_[u] |= std::uint64_t{1} << v;
    g.rows_[v] |= std::uint64_t{1} << u;
  }
  return g;
}

Graph Graph::from_rows(std::span<const std::uint64_t> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  const std::uint64_t allowed = VertexSet::range(n).bits();
  for (int u = 0; u < n; ++u) {
    if ((rows[u] & ~allowed) != 0) {
      throw GraphError("row " + std::to_string(u) + " has bits beyond the order");
    }
    if ((rows[u] >> u) & 1U) {
      throw GraphError("loop at vertex " + std::to_string(u));
    }
    for (std::uint64_t b = rows[u]; b != 0; b &= b - 1) {
      const int v = std::countr_zero(b);
      if (!((rows[v] >> u) & 1U)) {
        throw GraphError("asymmetric adjacency between " + std::to_string(u) + " and " + std::to_string(v));
      }
    }
  }
  Graph g;
  g.rows_.assign(rows.begin(), rows.end());
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto r : rows_) {
    twice += std::popcount(r);
  }
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (std::uint64_t b = rows_[u] & ~VertexSet::range(u + 1).bits(); b != 0; b &= b - 1) {
      out.emplace_back(u, std::countr_zero(b));
    }
  }
  return out;
}

Graph complement(const Graph &g) {
  const int n = g.order();
  const std::uint64_t all = VertexSet::range(n).bits();
  std::vector<std::uint64_t> rows(n);
  for (int v = 0; v < n; ++v) {
    rows[v] = ~g.row(v) & all & ~(std::uint64_t{1} << v);
  }
  return Graph::from_rows(rows);
}

Graph induced_subgraph(const Graph &g, VertexSet s) {
  if ((s - g.vertices()) != VertexSet()) {
    throw GraphError("vertex " + std::to_string((s - g.vertices()).front()) + " out of range for order " +
                     std::to_string(g.order()));
  }
  return relabel(g, s.members());
}

Graph relabel(const Graph &g, std::span<const int> order) {
  const int m = static_cast<int>(order.size());
  std::vector<int> position(g.order(), -1);
  for (int i = 0; i < m; ++i) {
    const int v = order[i];
    if (v < 0 || v >= g.order() || position[v] != -1) {
      throw GraphError("relabel: invalid or repeated vertex " + std::to_string(v));
    }
    position[v] = i;
  }
  std::vector<std::uint64_t> rows(m, 0);
  for (int i = 0; i < m; ++i) {
    g.neighbors(order[i]).for_each([&](int w) {
      if (position[w] >= 0) {
        rows[i] |= std::uint64_t{1} << position[w];
      }
    });
  }
  return Graph::from_rows(rows);
}

int degree(const Graph &g, int v) {
  if (v < 0 || v >= g.order()) {
    throw GraphError("vertex " + std::to_string(v) + " out of range");
  }
  return g.degree(v);
}

int max_degree(const Graph &g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) {
    best = std::max(best, g.degree(v));
  }
  return best;
}

std::vector<int> degree_sequence(const Graph &g) {
  std::vector<int> seq(g.order());
  for (int v = 0; v < g.order(); ++v) {
    seq[v] = g.degree(v);
  }
  std::sort(seq.begin(), seq.end(), std::greater<>());
  return seq;
}

std::optional<std::vector<int>> find_isomorphism(const Graph &a, const Graph &b) {
  const int n = a.order();
  if (n != b.order() || a.edge_count() != b.edge_count() || degree_sequence(a) != degree_sequence(b)) {
    return std::nullopt;
  }
  // Map a's vertices in order of decreasing degree, preferring vertices
  // adjacent to already-placed ones so adjacency checks bite early.
  std::vector<int> sequence;
  std::uint64_t placed = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    int pick_links = -1;
    for (int v = 0; v < n; ++v) {
      if ((placed >> v) & 1U) {
        continue;
      }
      const int links = std::popcount(a.row(v) & placed);
      if (links > pick_links || (links == pick_links && a.degree(v) > a.degree(pick))) {
        pick = v;
        pick_links = links;
      }
    }
    sequence.push_back(pick);
    placed |= std::uint64_t{1} << pick;
  }

  std::vector<int> image(n, -1);
  std::uint64_t used = 0;
  std::function<bool(int)> extend = [&](int depth) {
    if (depth == n) {
      return true;
    }
    const int v = sequence[depth];
    for (int w = 0; w < n; ++w) {
      if (((used >> w) & 1U) || b.degree(w) != a.degree(v)) {
        continue;
      }
      bool ok = true;
      for (int prev = 0; prev < depth && ok; ++prev) {
        const int x = sequence[prev];
        ok = a.adjacent(v, x) == b.adjacent(w, image[x]);
      }
      if (!ok) {
        continue;
      }
      image[v] = w;
      used |= std::uint64_t{1} << w;
      if (extend(depth + 1)) {
        return true;
      }
      used &= ~(std::uint64_t{1} << w);
      image[v] = -1;
    }
    return false;
  };
  if (!extend(0)) {
    return std::nullopt;
  }
  return image;
}

bool is_isomorphic(const Graph &a, const Graph &b) { return find_isomorphism(a, b).has_value(); }

Graph complete_graph(int n) { return complement(Graph(n)); }

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) {
    edges.emplace_back(i, i + 1);
  }
  return Graph::build(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) {
    throw GraphError("cycle needs at least 3 vertices");
  }
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
  }
  return Graph::build(n, edges);
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) {
    edges.emplace_back(0, i);
  }
  return Graph::build(leaves + 1, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);         // outer cycle
    edges.emplace_back(i, i + 5);               // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
  }
  return Graph::build(10, edges);
}

} // namespace reedcheck
