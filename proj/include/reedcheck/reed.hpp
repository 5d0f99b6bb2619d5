#ifndef REEDCHECK_REED_HPP
#define REEDCHECK_REED_HPP

#include "reedcheck/graph.hpp"
#include "reedcheck/invariants.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace reedcheck {

/// Per-graph verdict for chi <= ceil((delta + omega + 1) / 2).
struct ReedReport {
  int n = 0;
  int delta = 0;
  int omega = 0;
  int chi = 0;
  int bound = 0;
  bool holds = false;
  bool tight = false;
  /// Set for the null graph, where the bound says nothing.
  bool vacuous = false;
  std::vector<std::string> classes;
};

/// ceil((delta + omega + 1) / 2), computed as (delta + omega + 2) / 2.
int reed_bound(int delta, int omega);

ReedReport check_reed(const Graph &g, const SolverLimits &limits = {});

/// Names of the registry classes containing g, in registry order.
std::vector<std::string> classify(const Graph &g);

/// Keys n, graph6, delta, omega, chi, bound, holds, tight, classes (plus
/// vacuous when set), in that order.
nlohmann::ordered_json to_json(const Graph &g, const ReedReport &report);

} // namespace reedcheck

#endif // REEDCHECK_REED_HPP
