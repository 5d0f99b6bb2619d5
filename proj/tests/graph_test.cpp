#include "oracles.hpp"

#include "reedcheck/enumerate.hpp"
#include "reedcheck/graph.hpp"
#include "reedcheck/patterns.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <set>

using namespace reedcheck;

namespace {

bool symmetric_irreflexive(const Graph &g) {
  for (int u = 0; u < g.order(); ++u) {
    if (g.adjacent(u, u)) {
      return false;
    }
    for (int v = 0; v < g.order(); ++v) {
      if (g.adjacent(u, v) != g.adjacent(v, u)) {
        return false;
      }
    }
  }
  return true;
}

Graph shuffled(const Graph &g, std::mt19937_64 &rng) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

} // namespace

TEST_CASE("build") {
  const Graph k3 = Graph::build(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(k3 == complete_graph(3));
  CHECK(k3.edge_count() == 3);

  const Graph k1 = Graph::build(1, {});
  CHECK(k1.order() == 1);
  CHECK(k1.edge_count() == 0);

  const Graph dup = Graph::build(4, {{0, 1}, {1, 0}});
  CHECK(dup.edges() == std::vector<Edge>{{0, 1}});
  CHECK(dup.order() == 4);

  CHECK_THROWS_AS(Graph::build(3, {{0, 3}}), GraphError);
  CHECK_THROWS_AS(Graph::build(3, {{-1, 0}}), GraphError);
  CHECK_THROWS_AS(Graph::build(3, {{2, 2}}), GraphError);
  CHECK_THROWS_AS(Graph(65), GraphError);
  CHECK_NOTHROW(Graph(64));
}

TEST_CASE("from_rows rejects invalid adjacency") {
  const std::vector<std::uint64_t> asym{0b10, 0b00};
  CHECK_THROWS_AS(Graph::from_rows(asym), GraphError);
  const std::vector<std::uint64_t> loop{0b1};
  CHECK_THROWS_AS(Graph::from_rows(loop), GraphError);
  const std::vector<std::uint64_t> beyond{0b100, 0};
  CHECK_THROWS_AS(Graph::from_rows(beyond), GraphError);
}

TEST_CASE("graph6 examples") {
  const Graph g = from_graph6("D?{");
  CHECK(g.order() == 5);
  CHECK(is_isomorphic(g, star_graph(4)));
  CHECK(degree_sequence(g) == std::vector<int>{4, 1, 1, 1, 1});
  CHECK(g.degree(4) == 4);

  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(to_graph6(Graph()) == "?");
  CHECK(to_graph6(complete_graph(5)) == "D~{");
  CHECK(from_graph6(">>graph6<<D?{") == g);
}

TEST_CASE("graph6 decode errors carry byte offsets") {
  auto offset_of = [](std::string_view text) -> std::size_t {
    try {
      from_graph6(text);
    } catch (const Graph6Error &e) {
      return e.offset();
    }
    return std::string::npos;
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of(" ") == 0);         // header below 63
  CHECK(offset_of("D?") == 2);        // body truncated: 2 bytes needed
  CHECK(offset_of("D?{?") == 3);      // trailing data
  CHECK(offset_of("D? ") == 2);       // body byte out of range
  CHECK(offset_of("D?|") == 2);       // padding bits set
  CHECK(offset_of("~??") == 3);       // truncated extended header
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng() % 21);
    const double p = static_cast<double>(rng() % 1000) / 1000.0;
    const Graph g = sample_gnp(n, p, rng());
    const std::string text = to_graph6(g);
    CHECK(from_graph6(text) == g);
    CHECK(to_graph6(from_graph6(text)) == text);
  }
  for (int n : {61, 62, 63, 64}) {
    const Graph g = sample_gnp(n, 0.3, static_cast<std::uint64_t>(n));
    CHECK(from_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("complement") {
  CHECK(complement(complete_graph(4)) == Graph(4));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = sample_gnp(static_cast<int>(rng() % 12), 0.4, rng());
    const Graph c = complement(g);
    CHECK(symmetric_irreflexive(c));
    CHECK(complement(c) == g);
    for (int v = 0; v < g.order(); ++v) {
      CHECK(c.degree(v) == g.order() - 1 - g.degree(v));
    }
  }
  CHECK(is_isomorphic(complement(pattern("Chair").graph), pattern("Kite").graph));
}

TEST_CASE("induced_subgraph") {
  CHECK(induced_subgraph(cycle_graph(5), VertexSet{0, 1, 2, 3}) == path_graph(4));
  const Graph g = petersen_graph();
  CHECK(induced_subgraph(g, g.vertices()) == g);
  CHECK(induced_subgraph(complete_graph(5), VertexSet{0, 2, 4}) == complete_graph(3));
  CHECK(induced_subgraph(g, VertexSet{}) == Graph());
  CHECK_THROWS_AS(induced_subgraph(path_graph(3), VertexSet{0, 5}), GraphError);
}

TEST_CASE("degrees") {
  const Graph k4 = complete_graph(4);
  for (int v = 0; v < 4; ++v) {
    CHECK(degree(k4, v) == 3);
  }
  CHECK(max_degree(k4) == 3);
  CHECK(max_degree(cycle_graph(5)) == 2);
  CHECK(max_degree(Graph()) == 0);
  const Graph kite = pattern("Kite").graph;
  CHECK(degree_sequence(kite) == std::vector<int>{3, 3, 3, 2, 1});
  CHECK(max_degree(kite) == 3);
  CHECK_THROWS_AS(degree(k4, 4), GraphError);
}

TEST_CASE("is_isomorphic") {
  CHECK(is_isomorphic(cycle_graph(5), complement(cycle_graph(5))));
  CHECK_FALSE(is_isomorphic(path_graph(4), star_graph(3)));
  CHECK(is_isomorphic(pattern("Chair").graph, complement(pattern("Kite").graph)));
  CHECK_FALSE(is_isomorphic(path_graph(3), path_graph(4)));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = sample_gnp(static_cast<int>(rng() % 10), 0.5, rng());
    const Graph h = shuffled(g, rng);
    const auto map = find_isomorphism(g, h);
    REQUIRE(map.has_value());
    for (auto [a, b] : g.edges()) {
      CHECK(h.adjacent((*map)[a], (*map)[b]));
    }
  }
}

TEST_CASE("canonical_form examples") {
  const Graph p4 = path_graph(4);
  const Graph p4_relabeled = Graph::build(4, {{2, 0}, {0, 3}, {3, 1}});
  CHECK(canonical_form(p4) == canonical_form(p4_relabeled));
  CHECK(canonical_form(complete_graph(3)) != canonical_form(path_graph(3)));

  std::set<std::string> forms;
  for (const Graph &g : oracle::all_labeled_graphs(4)) {
    forms.insert(canonical_form(g));
  }
  CHECK(forms.size() == 11);
}

TEST_CASE("canonical_form matches is_isomorphic on all graphs of order <= 5") {
  for (int n = 0; n <= 5; ++n) {
    std::map<std::string, Graph> representative;
    std::map<std::string, std::string> brute_of;
    for (const Graph &g : oracle::all_labeled_graphs(n)) {
      const std::string form = canonical_form(g);
      const std::string brute = oracle::min_permutation_code(g);
      auto [it, fresh] = representative.try_emplace(form, g);
      if (!fresh) {
        CHECK(is_isomorphic(it->second, g));
      }
      // Same partition as the brute-force minimal-permutation key.
      auto [bit, bfresh] = brute_of.try_emplace(form, brute);
      CHECK(bit->second == brute);
      CHECK(canonical_graph(canonical_graph(g)) == canonical_graph(g));
    }
    std::vector<Graph> reps;
    for (auto &[form, g] : representative) {
      reps.push_back(g);
    }
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (std::size_t j = i + 1; j < reps.size(); ++j) {
        CHECK_FALSE(is_isomorphic(reps[i], reps[j]));
      }
    }
    CHECK(representative.size() == oracle::isomorphism_class_count(n));
  }
}

TEST_CASE("canonical_form is relabeling invariant on larger random graphs") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 6 + static_cast<int>(rng() % 5);
    const Graph g = sample_gnp(n, 0.5, rng());
    CHECK(canonical_form(g) == canonical_form(shuffled(g, rng)));
  }
  // Highly symmetric cases exercise the twin pruning.
  for (const Graph &g : {complete_graph(10), Graph(10), petersen_graph(), cycle_graph(9),
                         complement(petersen_graph())}) {
    CHECK(canonical_form(g) == canonical_form(shuffled(g, rng)));
    CHECK(is_isomorphic(canonical_graph(g), g));
  }
}
