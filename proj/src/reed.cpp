#include "reedcheck/reed.hpp"

#include "reedcheck/patterns.hpp"

#include <stdexcept>

namespace reedcheck {

int reed_bound(int delta, int omega) {
  if (delta < 0 || omega < 0) {
    throw std::invalid_argument("reed_bound: negative argument");
  }
  return (delta + omega + 2) / 2;
}

std::vector<std::string> classify(const Graph &g) {
  std::vector<std::string> names;
  for (const auto &c : class_registry()) {
    if (is_in_class(g, c)) {
      names.push_back(c.name);
    }
  }
  return names;
}

ReedReport check_reed(const Graph &g, const SolverLimits &limits) {
  ReedReport r;
  r.n = g.order();
  r.delta = max_degree(g);
  r.omega = clique_number(g, limits);
  r.chi = chromatic_number(g, limits);
  r.bound = reed_bound(r.delta, r.omega);
  r.holds = r.chi <= r.bound;
  r.tight = r.chi == r.bound;
  r.vacuous = g.order() == 0;
  r.classes = classify(g);
  return r;
}

nlohmann::ordered_json to_json(const Graph &g, const ReedReport &report) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["graph6"] = to_graph6(g);
  j["delta"] = report.delta;
  j["omega"] = report.omega;
  j["chi"] = report.chi;
  j["bound"] = report.bound;
  j["holds"] = report.holds;
  j["tight"] = report.tight;
  j["classes"] = report.classes;
  if (report.vacuous) {
    j["vacuous"] = true;
  }
  return j;
}

} // namespace reedcheck
