#include "forced_structure.hpp"
#include "oracles.hpp"

#include "reedcheck/enumerate.hpp"
#include "reedcheck/patterns.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace reedcheck;

TEST_CASE("catalog contents") {
  const auto &cat = catalog();
  std::set<std::string> names;
  for (const auto &p : cat) {
    CHECK(p.graph.order() >= 2);
    CHECK(p.graph.order() <= 6);
    CHECK(names.insert(p.name).second);
  }
  for (const char *name : {"P4", "P4+K1", "2K2", "K2+co-K2", "Chair", "Kite", "House", "H", "M"}) {
    CHECK_NOTHROW(pattern(name));
  }
  CHECK_THROWS_AS(pattern("Bull"), UnknownNameError);

  CHECK(degree_sequence(pattern("Chair").graph) == std::vector<int>{3, 2, 1, 1, 1});
  const Graph &h = pattern("H").graph;
  CHECK(h.edge_count() == 9);
  CHECK(degree_sequence(h) == std::vector<int>{4, 4, 4, 2, 2, 2});
  const Graph &m = pattern("M").graph;
  CHECK(m.edge_count() == 11);
  CHECK(degree_sequence(m) == std::vector<int>{5, 4, 4, 3, 3, 3});
  CHECK(is_isomorphic(complement(pattern("House").graph), path_graph(5)));
}

TEST_CASE("Chair and Kite are complements") {
  CHECK(is_isomorphic(complement(pattern("Chair").graph), pattern("Kite").graph));
  CHECK(is_isomorphic(complement(pattern("Kite").graph), pattern("Chair").graph));
}

TEST_CASE("H and M agree with both forced constraint sets") {
  for (const auto &set : {forced::h_first(), forced::h_second()}) {
    CAPTURE(set.label);
    CHECK(is_isomorphic(forced::realize(set), pattern("H").graph));
  }
  for (const auto &set : {forced::m_first(), forced::m_second()}) {
    CAPTURE(set.label);
    CHECK(is_isomorphic(forced::realize(set), pattern("M").graph));
  }
  CHECK(is_isomorphic(forced::realize(forced::h_first()), forced::realize(forced::h_second())));
  CHECK(is_isomorphic(forced::realize(forced::m_first()), forced::realize(forced::m_second())));
}

TEST_CASE("registry") {
  REQUIRE(class_registry().size() == 4);
  CHECK(find_class("class1").forbidden.size() == 2);
  CHECK(find_class("Chair-Kite").name == "class2");
  CHECK(find_class("K2K2bar-H").name == "class3");
  CHECK(find_class("2K2-M").name == "class4");
  CHECK(find_class("all").forbidden.empty());
  CHECK_THROWS_AS(find_class("class5"), UnknownNameError);
  const auto names = [](const ClassSpec &c) {
    std::vector<std::string> out;
    for (const auto &p : c.forbidden) {
      out.push_back(p.name);
    }
    return out;
  };
  CHECK(names(find_class("class1")) == std::vector<std::string>{"P4+K1", "Kite"});
  CHECK(names(find_class("class2")) == std::vector<std::string>{"Chair", "Kite"});
  CHECK(names(find_class("class3")) == std::vector<std::string>{"K2+co-K2", "H"});
  CHECK(names(find_class("class4")) == std::vector<std::string>{"2K2", "M"});
}

TEST_CASE("contains_induced examples") {
  CHECK(contains_induced(cycle_graph(5), pattern("P4")));
  CHECK_FALSE(contains_induced(complete_graph(6), pattern("2K2")));
  CHECK(contains_induced(path_graph(6), pattern("P4+K1")));
  CHECK_FALSE(contains_induced(path_graph(3), pattern("P4")));
}

TEST_CASE("find_induced examples and witnesses") {
  const auto c5 = find_induced(cycle_graph(5), pattern("P4"));
  REQUIRE(c5.has_value());
  CHECK(verify_embedding(cycle_graph(5), pattern("P4").graph, *c5));
  CHECK(c5->image().size() == 4);
  // Consecutive on the cycle: the missing vertex's two neighbors are the ends.
  const int missing = (cycle_graph(5).vertices() - c5->image()).front();
  CHECK(c5->map.front() != c5->map.back());
  CHECK(cycle_graph(5).adjacent(missing, c5->map.front()));
  CHECK(cycle_graph(5).adjacent(missing, c5->map.back()));

  CHECK_FALSE(find_induced(complete_graph(4), pattern("2K2")).has_value());

  const Graph &m = pattern("M").graph;
  const auto house = find_induced(m, pattern("House"));
  REQUIRE(house.has_value());
  CHECK(house->image() == VertexSet{0, 1, 2, 3, 4});
  CHECK(verify_embedding(m, pattern("House").graph, *house));
}

TEST_CASE("find_induced_through only reports occurrences at the vertex") {
  // P5 = 0-1-2-3-4: the only induced P4s are {0..3} and {1..4}.
  const Graph p5 = path_graph(5);
  CHECK(find_induced_through(p5, path_graph(4), 2).has_value());
  const auto at0 = find_induced_through(p5, path_graph(4), 0);
  REQUIRE(at0.has_value());
  CHECK(at0->image() == VertexSet{0, 1, 2, 3});
  const Graph p5_plus = Graph::build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK_FALSE(find_induced_through(p5_plus, path_graph(4), 5).has_value());
  CHECK_THROWS_AS(find_induced_through(p5, path_graph(4), 9), GraphError);
}

TEST_CASE("contains_induced agrees with the brute-force oracle") {
  // Exhaustive over order <= 5 here; the acceptance suite covers order 7.
  for (int n = 0; n <= 5; ++n) {
    for (const Graph &g : enumerate_graphs(n)) {
      for (const auto &p : catalog()) {
        CAPTURE(to_graph6(g));
        CAPTURE(p.name);
        const auto emb = find_induced(g, p);
        CHECK(emb.has_value() == oracle::contains_induced(g, p.graph));
        if (emb) {
          CHECK(verify_embedding(g, p.graph, *emb));
        }
      }
    }
  }
}

TEST_CASE("is_in_class examples") {
  for (const auto &c : class_registry()) {
    for (int n = 1; n <= 8; ++n) {
      CHECK(is_in_class(complete_graph(n), c));
    }
  }
  CHECK_FALSE(is_in_class(cycle_graph(6), find_class("class4")));
  CHECK(contains_induced(induced_subgraph(cycle_graph(6), VertexSet{0, 1, 3, 4}), pattern("2K2")));
  CHECK(is_in_class(cycle_graph(5), find_class("class2")));
  CHECK(is_in_class(petersen_graph(), all_graphs_class()));
}

TEST_CASE("classes are hereditary") {
  std::mt19937_64 rng(5);
  int members = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 6);
    const Graph g = sample_gnp(n, static_cast<double>(rng() % 100) / 100.0, rng());
    for (const auto &c : class_registry()) {
      if (!is_in_class(g, c)) {
        continue;
      }
      ++members;
      const VertexSet s(rng() & g.vertices().bits());
      CHECK(is_in_class(induced_subgraph(g, s), c));
    }
  }
  CHECK(members > 50);
}

TEST_CASE("P4+K1-free graphs have no induced P6") {
  const ClassSpec only_p4k1{"p4k1-free", {}, {pattern("P4+K1")}};
  std::mt19937_64 rng(21);
  int accepted = 0;
  for (int trial = 0; accepted < 500 && trial < 200000; ++trial) {
    const int n = 6 + static_cast<int>(rng() % 5);
    const Graph g = sample_gnp(n, 0.3 + static_cast<double>(rng() % 60) / 100.0, rng());
    if (!is_in_class(g, only_p4k1)) {
      continue;
    }
    ++accepted;
    CHECK_FALSE(contains_induced(g, path_graph(6)));
  }
  CHECK(accepted == 500);
}

TEST_CASE("is_self_complementary") {
  CHECK(is_self_complementary(cycle_graph(5)));
  CHECK(is_self_complementary(path_graph(4)));
  CHECK_FALSE(is_self_complementary(complete_graph(3)));
  CHECK_FALSE(is_self_complementary(pattern("Chair").graph));
}
