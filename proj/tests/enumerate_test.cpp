#include "oracles.hpp"

#include "reedcheck/enumerate.hpp"

#include <doctest.h>

#include <set>

using namespace reedcheck;

namespace {

std::set<std::string> forms(const std::vector<Graph> &graphs) {
  std::set<std::string> out;
  for (const Graph &g : graphs) {
    out.insert(canonical_form(g));
  }
  return out;
}

} // namespace

TEST_CASE("enumeration counts") {
  const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n <= 7; ++n) {
    CHECK(enumerate_graphs(n).size() == expected[n]);
  }
  CHECK(enumerate_graphs(1).front() == Graph(1));
}

TEST_CASE("enumeration matches labeled dedup for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(enumerate_graphs(n).size() == oracle::isomorphism_class_count(n));
  }
}

TEST_CASE("streamed graphs are canonical, distinct and sorted") {
  const auto graphs = enumerate_graphs(6);
  std::string previous;
  for (const Graph &g : graphs) {
    CHECK(canonical_graph(g) == g);
    const std::string text = to_graph6(g);
    CHECK(text > previous);
    previous = text;
  }
}

TEST_CASE("thread count does not change the output") {
  CHECK(enumerate_graphs(7, nullptr, {1}) == enumerate_graphs(7, nullptr, {3}));
  const ClassSpec &c = find_class("class2");
  CHECK(enumerate_graphs(7, &c, {1}) == enumerate_graphs(7, &c, {4}));
}

TEST_CASE("pruned enumeration equals filtered enumeration") {
  for (const auto &c : class_registry()) {
    for (int n = 1; n <= 7; ++n) {
      std::vector<Graph> filtered;
      for (const Graph &g : enumerate_graphs(n)) {
        if (is_in_class(g, c)) {
          filtered.push_back(g);
        }
      }
      CAPTURE(c.name);
      CAPTURE(n);
      CHECK(forms(enumerate_graphs(n, &c)) == forms(filtered));
    }
  }
}

TEST_CASE("enumeration refuses orders beyond 9") {
  CHECK_THROWS_AS(enumerate_graphs(10), EnumerationError);
  CHECK_THROWS_AS(enumerate_graphs(-1), EnumerationError);
}

TEST_CASE("sample_gnp") {
  CHECK(sample_gnp(5, 0.0, 123) == Graph(5));
  CHECK(sample_gnp(5, 1.0, 123) == complete_graph(5));
  CHECK(sample_gnp(12, 0.5, 42) == sample_gnp(12, 0.5, 42));
  CHECK(sample_gnp(12, 0.5, 42) != sample_gnp(12, 0.5, 43));
  CHECK_THROWS_AS(sample_gnp(5, 1.5, 0), std::invalid_argument);
  CHECK_THROWS_AS(sample_gnp(65, 0.5, 0), GraphError);

  // Edge density near p over many pairs.
  const Graph big = sample_gnp(64, 0.3, 9);
  const double density = static_cast<double>(big.edge_count()) / (64.0 * 63.0 / 2.0);
  CHECK(density == doctest::Approx(0.3).epsilon(0.1));
}

TEST_CASE("counterexample_search") {
  const SearchResult all = counterexample_search(all_graphs_class(), 5);
  CHECK_FALSE(all.counterexample.has_value());
  CHECK(all.graphs_checked == 1 + 2 + 4 + 11 + 34);
  CHECK(all.members_per_order == std::vector<std::uint64_t>{1, 2, 4, 11, 34});

  for (const auto &c : class_registry()) {
    const SearchResult r = counterexample_search(c, 7);
    CHECK_FALSE(r.counterexample.has_value());
    CHECK_FALSE(r.budget_exhausted_on.has_value());
    CHECK(r.graphs_checked > 0);
  }
  CHECK_THROWS_AS(counterexample_search(all_graphs_class(), 10), EnumerationError);
}

TEST_CASE("search stops on budget exhaustion") {
  SearchOptions options;
  options.limits.node_limit = 1;
  const SearchResult r = counterexample_search(all_graphs_class(), 3, options);
  REQUIRE(r.budget_exhausted_on.has_value());
  CHECK(r.graphs_checked < 1 + 2 + 4);
  CHECK_FALSE(r.counterexample.has_value());
  const auto j = to_json(r);
  CHECK(j["budget_exhausted_on"] == to_graph6(*r.budget_exhausted_on));
  CHECK(j["counterexample"].is_null());
}
