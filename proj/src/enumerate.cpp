#include "reedcheck/enumerate.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <thread>
#include <unordered_map>

namespace reedcheck {

namespace {

using Keyed = std::unordered_map<std::string, Graph>;

// Children of parents[begin, end) in steps of `stride`, deduplicated by
// canonical form.
void extend_slice(std::span<const Graph> parents, const ClassSpec *prune, std::size_t begin, std::size_t stride,
                  Keyed &out) {
  for (std::size_t i = begin; i < parents.size(); i += stride) {
    const Graph &parent = parents[i];
    const int m = parent.order();
    std::vector<std::uint64_t> rows(parent.rows().begin(), parent.rows().end());
    rows.push_back(0);
    const std::uint64_t neighborhoods = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < neighborhoods; ++mask) {
      for (int v = 0; v < m; ++v) {
        rows[v] = (parent.row(v) & ~(std::uint64_t{1} << m)) | (((mask >> v) & 1U) << m);
      }
      rows[m] = mask;
      const Graph child = Graph::from_rows(rows);
      if (prune != nullptr && !is_in_class_extension(child, *prune, m)) {
        continue;
      }
      Graph canon = canonical_graph(child);
      std::string key = to_graph6(canon);
      out.try_emplace(std::move(key), std::move(canon));
    }
  }
}

void check_enumeration_order(int n) {
  if (n < 0 || n > kMaxEnumerationOrder) {
    throw EnumerationError("enumeration order " + std::to_string(n) + " outside 0.." +
                           std::to_string(kMaxEnumerationOrder));
  }
}

} // namespace

std::vector<Graph> extend_level(std::span<const Graph> parents, const ClassSpec *prune,
                                const EnumerateOptions &options) {
  if (!parents.empty()) {
    check_enumeration_order(parents.front().order() + 1);
  }
  unsigned workers = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(parents.size(), 1)));

  std::vector<Keyed> partial(workers);
  if (workers == 1) {
    extend_slice(parents, prune, 0, 1, partial[0]);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] { extend_slice(parents, prune, w, workers, partial[w]); });
    }
  }

  std::map<std::string, Graph> merged;
  for (auto &part : partial) {
    for (auto &[key, g] : part) {
      merged.try_emplace(key, std::move(g));
    }
  }
  std::vector<Graph> out;
  out.reserve(merged.size());
  for (auto &[key, g] : merged) {
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> enumerate_graphs(int n, const ClassSpec *prune, const EnumerateOptions &options) {
  check_enumeration_order(n);
  std::vector<Graph> level{Graph()};
  for (int m = 1; m <= n; ++m) {
    level = extend_level(level, prune, options);
  }
  return level;
}

Graph sample_gnp(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  }
  if (n < 0 || n > kMaxOrder) {
    throw GraphError("graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxOrder));
  }
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      // 53 random bits -> uniform in [0, 1); identical on every platform,
      // unlike std::bernoulli_distribution.
      const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < p) {
        edges.emplace_back(i, j);
      }
    }
  }
  return Graph::build(n, edges);
}

SearchResult counterexample_search(const ClassSpec &c, int n_max, const SearchOptions &options) {
  check_enumeration_order(n_max);
  SearchResult result;
  result.class_name = c.name;
  result.n_max = n_max;
  std::vector<Graph> level{Graph()};
  for (int n = 1; n <= n_max; ++n) {
    level = extend_level(level, &c, options.enumerate);
    result.members_per_order.push_back(level.size());
    for (const Graph &g : level) {
      ReedReport report;
      try {
        report = check_reed(g, options.limits);
      } catch (const BudgetExhausted &) {
        result.budget_exhausted_on = g;
        return result;
      }
      ++result.graphs_checked;
      if (!report.holds) {
        result.counterexample.emplace(g, std::move(report));
        return result;
      }
    }
  }
  return result;
}

nlohmann::ordered_json to_json(const SearchResult &result) {
  nlohmann::ordered_json j;
  j["class"] = result.class_name;
  j["n_max"] = result.n_max;
  j["graphs_checked"] = result.graphs_checked;
  j["members_per_order"] = result.members_per_order;
  if (result.counterexample) {
    j["counterexample"] = to_json(result.counterexample->first, result.counterexample->second);
  } else {
    j["counterexample"] = nullptr;
  }
  if (result.budget_exhausted_on) {
    j["budget_exhausted_on"] = to_graph6(*result.budget_exhausted_on);
  }
  return j;
}

} // namespace reedcheck
