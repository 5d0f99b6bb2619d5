#include "reedcheck/patterns.hpp"

#include <algorithm>
#include <functional>

namespace reedcheck {

namespace {

Graph house() { return Graph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 3}}); }

// H: triangle {1,2,5} with a degree-2 vertex on each triangle edge
// (0 on 12, 3 on 25, 4 on 15).
Graph h_graph() {
  return Graph::build(6, {{0, 1}, {0, 2}, {1, 2}, {1, 4}, {1, 5}, {2, 3}, {2, 5}, {3, 5}, {4, 5}});
}

// M: apex 5 joined to a House on 0..4.
Graph m_graph() {
  std::vector<Edge> edges = house().edges();
  for (int v = 0; v < 5; ++v) {
    edges.emplace_back(v, 5);
  }
  return Graph::build(6, edges);
}

std::vector<Pattern> make_catalog() {
  return {
      {"P4", path_graph(4)},
      {"P4+K1", Graph::build(5, {{0, 1}, {1, 2}, {2, 3}})},
      {"2K2", Graph::build(4, {{0, 1}, {2, 3}})},
      {"K2+co-K2", Graph::build(4, {{0, 1}})},
      {"Chair", Graph::build(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}})},
      {"Kite", Graph::build(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}})},
      {"House", house()},
      {"H", h_graph()},
      {"M", m_graph()},
  };
}

std::vector<ClassSpec> make_registry() {
  return {
      {"class1", {"P4K1-Kite", "p4k1-kite"}, {pattern("P4+K1"), pattern("Kite")}},
      {"class2", {"Chair-Kite", "chair-kite"}, {pattern("Chair"), pattern("Kite")}},
      {"class3", {"K2K2bar-H", "k2k2bar-h"}, {pattern("K2+co-K2"), pattern("H")}},
      {"class4", {"2K2-M", "2k2-m"}, {pattern("2K2"), pattern("M")}},
  };
}

// Tries to map pattern vertices onto the host vertices in `members` so that
// adjacency matches exactly. Returns the map on success.
std::optional<std::vector<int>> match_subset(const Graph &host, const std::vector<int> &members,
                                             const Graph &pattern) {
  const int k = pattern.order();
  std::vector<int> image(k, -1);
  std::vector<bool> used(k, false);
  std::function<bool(int)> place = [&](int i) {
    if (i == k) {
      return true;
    }
    for (int m = 0; m < k; ++m) {
      if (used[m]) {
        continue;
      }
      const int h = members[m];
      bool ok = true;
      for (int prev = 0; prev < i && ok; ++prev) {
        ok = pattern.adjacent(i, prev) == host.adjacent(h, image[prev]);
      }
      if (!ok) {
        continue;
      }
      image[i] = h;
      used[m] = true;
      if (place(i + 1)) {
        return true;
      }
      used[m] = false;
    }
    return false;
  };
  if (!place(0)) {
    return std::nullopt;
  }
  return image;
}

// Enumerates k-subsets of `pool` (plus the forced vertices), filtered by the
// induced degree multiset, and returns the first exact match.
std::optional<Embedding> search(const Graph &host, const Graph &pattern, VertexSet forced, VertexSet pool) {
  const int k = pattern.order();
  const int need = k - forced.size();
  if (need < 0 || need > pool.size()) {
    return std::nullopt;
  }
  const std::vector<int> target = degree_sequence(pattern);
  const std::vector<int> candidates = pool.members();
  std::vector<int> degrees(k);

  std::optional<Embedding> found;
  std::function<bool(std::size_t, int, VertexSet)> choose = [&](std::size_t from, int left, VertexSet chosen) {
    if (left == 0) {
      const std::vector<int> members = chosen.members();
      for (int i = 0; i < k; ++i) {
        degrees[i] = (host.neighbors(members[i]) & chosen).size();
      }
      std::sort(degrees.begin(), degrees.end(), std::greater<>());
      if (degrees != target) {
        return false;
      }
      if (auto m = match_subset(host, members, pattern)) {
        found = Embedding{std::move(*m)};
        return true;
      }
      return false;
    }
    for (std::size_t i = from; i + left <= candidates.size(); ++i) {
      VertexSet next = chosen;
      next.insert(candidates[i]);
      if (choose(i + 1, left - 1, next)) {
        return true;
      }
    }
    return false;
  };
  choose(0, need, forced);
  return found;
}

} // namespace

VertexSet Embedding::image() const {
  VertexSet s;
  for (int v : map) {
    s.insert(v);
  }
  return s;
}

const std::vector<Pattern> &catalog() {
  static const std::vector<Pattern> patterns = make_catalog();
  return patterns;
}

const Pattern &pattern(std::string_view name) {
  for (const auto &p : catalog()) {
    if (p.name == name) {
      return p;
    }
  }
  throw UnknownNameError("unknown pattern '" + std::string(name) + "'");
}

const std::vector<ClassSpec> &class_registry() {
  static const std::vector<ClassSpec> registry = make_registry();
  return registry;
}

const ClassSpec &all_graphs_class() {
  static const ClassSpec all{"all", {"any"}, {}};
  return all;
}

const ClassSpec &find_class(std::string_view name) {
  const auto matches = [&](const ClassSpec &c) {
    return c.name == name || std::find(c.aliases.begin(), c.aliases.end(), name) != c.aliases.end();
  };
  for (const auto &c : class_registry()) {
    if (matches(c)) {
      return c;
    }
  }
  if (matches(all_graphs_class())) {
    return all_graphs_class();
  }
  throw UnknownNameError("unknown class '" + std::string(name) + "'");
}

std::optional<Embedding> find_induced(const Graph &host, const Graph &pattern) {
  if (pattern.order() > host.order()) {
    return std::nullopt;
  }
  return search(host, pattern, VertexSet(), host.vertices());
}

std::optional<Embedding> find_induced(const Graph &host, const Pattern &p) { return find_induced(host, p.graph); }

std::optional<Embedding> find_induced_through(const Graph &host, const Graph &pattern, int v) {
  if (v < 0 || v >= host.order()) {
    throw GraphError("vertex " + std::to_string(v) + " out of range");
  }
  if (pattern.order() > host.order() || pattern.order() == 0) {
    return std::nullopt;
  }
  VertexSet pool = host.vertices();
  pool.erase(v);
  return search(host, pattern, VertexSet{v}, pool);
}

bool contains_induced(const Graph &host, const Graph &pattern) { return find_induced(host, pattern).has_value(); }

bool contains_induced(const Graph &host, const Pattern &p) { return contains_induced(host, p.graph); }

bool verify_embedding(const Graph &host, const Graph &pattern, const Embedding &emb) {
  const int k = pattern.order();
  if (static_cast<int>(emb.map.size()) != k) {
    return false;
  }
  for (int v : emb.map) {
    if (v < 0 || v >= host.order()) {
      return false;
    }
  }
  if (emb.image().size() != k) {
    return false;
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (pattern.adjacent(i, j) != host.adjacent(emb.map[i], emb.map[j])) {
        return false;
      }
    }
  }
  return true;
}

bool is_in_class(const Graph &g, const ClassSpec &c) {
  return std::none_of(c.forbidden.begin(), c.forbidden.end(),
                      [&](const Pattern &p) { return contains_induced(g, p); });
}

bool is_in_class_extension(const Graph &g, const ClassSpec &c, int v) {
  return std::none_of(c.forbidden.begin(), c.forbidden.end(),
                      [&](const Pattern &p) { return find_induced_through(g, p.graph, v).has_value(); });
}

bool is_self_complementary(const Graph &g) { return is_isomorphic(g, complement(g)); }

} // namespace reedcheck
