#include "reedcheck/cli.hpp"

#include "reedcheck/enumerate.hpp"
#include "reedcheck/graph.hpp"
#include "reedcheck/invariants.hpp"
#include "reedcheck/kempe.hpp"
#include "reedcheck/patterns.hpp"
#include "reedcheck/reed.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace reedcheck::cli {

namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct NamedGraph {
  std::string token;
  Graph graph;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

Graph decode(const std::string &token, const std::string &where) {
  try {
    return from_graph6(token);
  } catch (const GraphError &e) {
    throw UsageError("malformed graph6 '" + token + "'" + where + ": " + e.what());
  }
}

std::vector<NamedGraph> read_graphs(const RunConfig &config) {
  std::vector<NamedGraph> out;
  for (const auto &token : config.graphs) {
    out.push_back({token, decode(token, "")});
  }
  if (!config.input.empty()) {
    std::ifstream file;
    std::istream *in = &std::cin;
    if (config.input != "-") {
      file.open(config.input);
      if (!file) {
        throw UsageError("cannot open input '" + config.input + "'");
      }
      in = &file;
    }
    std::string line;
    for (int lineno = 1; std::getline(*in, line); ++lineno) {
      std::string token = trim(line);
      if (token.empty()) {
        continue;
      }
      Graph g = decode(token, " (line " + std::to_string(lineno) + ")");
      out.push_back({std::move(token), std::move(g)});
    }
  }
  if (out.empty()) {
    throw UsageError("no input graphs: pass graph6 strings or --input FILE");
  }
  return out;
}

SolverLimits limits_for(const RunConfig &config) {
  SolverLimits limits;
  if (config.node_limit != 0) {
    limits.node_limit = config.node_limit;
  } else if (const char *env = std::getenv(kNodeBudgetEnv); env != nullptr && *env != '\0') {
    char *end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (*end != '\0' || value == 0) {
      throw UsageError(std::string("invalid ") + kNodeBudgetEnv + " '" + env + "'");
    }
    limits.node_limit = value;
  }
  return limits;
}

const ClassSpec &class_for(const std::string &name) {
  try {
    return find_class(name);
  } catch (const UnknownNameError &) {
    throw UsageError("unknown class '" + name + "'");
  }
}

void check_order_arg(const char *flag, int value, int lo, int hi) {
  if (value < lo || value > hi) {
    throw UsageError(std::string(flag) + " " + std::to_string(value) + " outside " + std::to_string(lo) + ".." +
                     std::to_string(hi));
  }
}

std::string join(const std::vector<std::string> &items, const char *sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    out += (i ? sep : "") + items[i];
  }
  return out;
}

std::string edge_list(const Graph &g) {
  std::vector<std::string> parts;
  for (auto [a, b] : g.edges()) {
    parts.push_back(std::to_string(a) + "-" + std::to_string(b));
  }
  return join(parts, ",");
}

int run_check(const RunConfig &config, std::ostream &out, std::ostream &err) {
  const SolverLimits limits = limits_for(config);
  int status = kOk;
  for (const auto &[token, g] : read_graphs(config)) {
    ReedReport report;
    try {
      report = check_reed(g, limits);
    } catch (const BudgetExhausted &e) {
      err << "reedcheck: " << token << ": " << e.what() << "\n";
      status = kBudgetExhausted;
      continue;
    }
    if (config.json) {
      out << to_json(g, report).dump() << "\n";
    } else {
      out << token << "  n=" << report.n << " delta=" << report.delta << " omega=" << report.omega
          << " chi=" << report.chi << " bound=" << report.bound << (report.holds ? " holds" : " VIOLATED")
          << (report.tight ? " tight" : "") << " classes=[" << join(report.classes, ",") << "]\n";
    }
    if (!report.holds && status == kOk) {
      status = kCounterexample;
    }
  }
  return status;
}

int run_enumerate(const RunConfig &config, std::ostream &out) {
  check_order_arg("--n", config.n, 0, kMaxEnumerationOrder);
  const ClassSpec *prune = config.class_name.empty() ? nullptr : &class_for(config.class_name);
  for (const Graph &g : enumerate_graphs(config.n, prune, {config.threads})) {
    out << to_graph6(g) << "\n";
  }
  return kOk;
}

int run_search(const RunConfig &config, std::ostream &out) {
  if (config.class_name.empty()) {
    throw UsageError("search needs --class");
  }
  check_order_arg("--max-n", config.max_n, 1, kMaxEnumerationOrder);
  const ClassSpec &c = class_for(config.class_name);
  const SearchResult result = counterexample_search(c, config.max_n, {limits_for(config), {config.threads}});
  if (config.json) {
    out << to_json(result).dump() << "\n";
  } else {
    out << "class " << result.class_name << " up to order " << result.n_max << ": " << result.graphs_checked
        << " graphs checked, ";
    if (result.counterexample) {
      out << "counterexample " << to_graph6(result.counterexample->first) << "\n";
    } else if (result.budget_exhausted_on) {
      out << "budget exhausted on " << to_graph6(*result.budget_exhausted_on) << "\n";
    } else {
      out << "no counterexample\n";
    }
  }
  if (result.budget_exhausted_on) {
    return kBudgetExhausted;
  }
  return result.counterexample ? kCounterexample : kOk;
}

int run_sample(const RunConfig &config, std::ostream &out) {
  check_order_arg("--n", config.n, 0, kMaxOrder);
  if (!(config.p >= 0.0 && config.p <= 1.0)) {
    throw UsageError("--p " + std::to_string(config.p) + " outside [0,1]");
  }
  if (config.count < 0) {
    throw UsageError("--count must be non-negative");
  }
  for (int i = 0; i < config.count; ++i) {
    out << to_graph6(sample_gnp(config.n, config.p, config.seed + static_cast<std::uint64_t>(i))) << "\n";
  }
  return kOk;
}

int run_color(const RunConfig &config, std::ostream &out, std::ostream &err) {
  const SolverLimits limits = limits_for(config);
  int status = kOk;
  for (const auto &[token, g] : read_graphs(config)) {
    try {
      const auto [coloring, palette] = reed_color(g);
      const int delta = max_degree(g);
      const int omega = clique_number(g, limits);
      const int bound = reed_bound(delta, omega);
      nlohmann::ordered_json j;
      j["n"] = g.order();
      j["graph6"] = token;
      j["palette"] = palette;
      j["bound"] = bound;
      j["within_bound"] = palette <= bound;
      if (config.exact) {
        j["chi"] = chromatic_number(g, limits);
      }
      j["coloring"] = coloring.colors();
      if (config.json) {
        out << j.dump() << "\n";
      } else {
        out << token << "  palette=" << palette << " bound=" << bound
            << (palette <= bound ? " within" : " exceeds");
        if (config.exact) {
          out << " chi=" << j["chi"].get<int>();
        }
        out << "\n";
      }
    } catch (const BudgetExhausted &e) {
      err << "reedcheck: " << token << ": " << e.what() << "\n";
      status = kBudgetExhausted;
    }
  }
  return status;
}

int run_patterns(const RunConfig &config, std::ostream &out) {
  for (const auto &p : catalog()) {
    if (config.json) {
      nlohmann::ordered_json j;
      j["name"] = p.name;
      j["order"] = p.graph.order();
      j["graph6"] = to_graph6(p.graph);
      j["edges"] = p.graph.edges();
      out << j.dump() << "\n";
    } else {
      out << p.name << " " << p.graph.order() << " " << to_graph6(p.graph) << " " << edge_list(p.graph) << "\n";
    }
  }
  return kOk;
}

int dispatch(const RunConfig &config, std::ostream &out, std::ostream &err) {
  switch (config.command) {
  case Command::check:
    return run_check(config, out, err);
  case Command::enumerate:
    return run_enumerate(config, out);
  case Command::search:
    return run_search(config, out);
  case Command::sample:
    return run_sample(config, out);
  case Command::color:
    return run_color(config, out, err);
  case Command::patterns:
    return run_patterns(config, out);
  }
  return kUsage;
}

} // namespace

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
  try {
    if (config.out.empty()) {
      return dispatch(config, out, err);
    }
    std::ofstream file(config.out);
    if (!file) {
      throw UsageError("cannot open output '" + config.out + "'");
    }
    return dispatch(config, file, err);
  } catch (const UsageError &e) {
    err << "reedcheck: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExhausted &e) {
    err << "reedcheck: " << e.what() << "\n";
    return kBudgetExhausted;
  } catch (const std::invalid_argument &e) {
    err << "reedcheck: " << e.what() << "\n";
    return kUsage;
  }
}

int main(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exhaustive and randomized checks of chi <= ceil((Delta + omega + 1) / 2)", "reedcheck"};
  app.require_subcommand(1);

  RunConfig config;
  bool plain = false;
  bool json = false;

  const auto add_common = [&](CLI::App *sub) {
    sub->add_option("--out", config.out, "Write results to FILE");
    sub->add_option("--threads", config.threads, "Worker threads (0: hardware concurrency)");
    sub->add_option("--node-limit", config.node_limit,
                    std::string("Solver node budget (default: $") + kNodeBudgetEnv + " or built-in)");
  };
  const auto add_format = [&](CLI::App *sub) {
    sub->add_flag("--json", json, "JSON-lines output");
    sub->add_flag("--plain", plain, "Human-readable output");
  };
  const auto add_inputs = [&](CLI::App *sub) {
    sub->add_option("graphs", config.graphs, "Inline graph6 strings");
    sub->add_option("--input", config.input, "File of graph6 lines, or - for stdin");
  };

  auto *check = app.add_subcommand("check", "Reed bound report per input graph");
  add_inputs(check);
  add_format(check);
  add_common(check);

  auto *enumerate = app.add_subcommand("enumerate", "Graphs of order n up to isomorphism, as graph6");
  enumerate->add_option("--n", config.n, "Order")->required();
  enumerate->add_option("--class", config.class_name, "Only members of this class");
  add_common(enumerate);

  auto *search = app.add_subcommand("search", "Exhaustive counterexample search over a class");
  search->add_option("--class", config.class_name, "Class name or alias")->required();
  search->add_option("--max-n", config.max_n, "Largest order")->required();
  add_format(search);
  add_common(search);

  auto *sample = app.add_subcommand("sample", "Seeded G(n,p) samples, as graph6");
  sample->add_option("--n", config.n, "Order")->required();
  sample->add_option("--p", config.p, "Edge probability");
  sample->add_option("--seed", config.seed, "Seed of the first sample");
  sample->add_option("--count", config.count, "Number of samples (seeds seed, seed+1, ...)");
  add_common(sample);

  auto *color = app.add_subcommand("color", "Kempe-chain coloring report per input graph");
  add_inputs(color);
  color->add_flag("--exact", config.exact, "Also compute the chromatic number");
  add_format(color);
  add_common(color);

  auto *patterns = app.add_subcommand("patterns", "List the forbidden-pattern catalog");
  patterns->add_option("action", "Only 'list' is supported")->check(CLI::IsMember({"list"}));
  add_format(patterns);
  add_common(patterns);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (json && plain) {
    err << "reedcheck: --json and --plain are exclusive\n";
    return kUsage;
  }
  if (check->parsed()) {
    config.command = Command::check;
  } else if (enumerate->parsed()) {
    config.command = Command::enumerate;
  } else if (search->parsed()) {
    config.command = Command::search;
  } else if (sample->parsed()) {
    config.command = Command::sample;
  } else if (color->parsed()) {
    config.command = Command::color;
  } else {
    config.command = Command::patterns;
  }
  // Reports default to JSON lines; the catalog listing defaults to text.
  config.json = config.command == Command::patterns ? json : !plain;
  return run(config, out, err);
}

} // namespace reedcheck::cli
