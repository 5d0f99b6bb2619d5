#ifndef REEDCHECK_ENUMERATE_HPP
#define REEDCHECK_ENUMERATE_HPP

#include "reedcheck/graph.hpp"
#include "reedcheck/invariants.hpp"
#include "reedcheck/patterns.hpp"
#include "reedcheck/reed.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace reedcheck {

inline constexpr int kMaxEnumerationOrder = 9;

class EnumerationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct EnumerateOptions {
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// One canonical representative per isomorphism class of order-m+1 graphs
/// obtained by adding a vertex to each parent. Parents must be the complete
/// (pruned) set of order-m representatives. With `prune`, children outside
/// the class are dropped; since the classes are hereditary the result is
/// exactly the class members. Sorted by canonical graph6 text.
std::vector<Graph> extend_level(std::span<const Graph> parents, const ClassSpec *prune = nullptr,
                                const EnumerateOptions &options = {});

/// All graphs of order n up to isomorphism (only class members when `prune`
/// is given), each equal to its own canonical_graph, sorted by canonical
/// graph6 text. Throws EnumerationError for n outside 0..9.
std::vector<Graph> enumerate_graphs(int n, const ClassSpec *prune = nullptr, const EnumerateOptions &options = {});

/// G(n, p) with a seeded 64-bit Mersenne Twister; pairs are visited in
/// graph6 order, one draw per pair.
Graph sample_gnp(int n, double p, std::uint64_t seed);

struct SearchResult {
  std::string class_name;
  int n_max = 0;
  std::uint64_t graphs_checked = 0;
  /// Class members of order 1..n_max actually checked.
  std::vector<std::uint64_t> members_per_order;
  std::optional<std::pair<Graph, ReedReport>> counterexample;
  /// Graph on which a solver ran out of budget; the search stops there.
  std::optional<Graph> budget_exhausted_on;
};

struct SearchOptions {
  SolverLimits limits;
  EnumerateOptions enumerate;
};

/// Checks the bound on every class member of order 1..n_max. Stops at the
/// first violation or budget failure.
SearchResult counterexample_search(const ClassSpec &c, int n_max, const SearchOptions &options = {});

nlohmann::ordered_json to_json(const SearchResult &result);

} // namespace reedcheck

#endif // REEDCHECK_ENUMERATE_HPP
