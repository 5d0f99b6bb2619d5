#ifndef REEDCHECK_PATTERNS_HPP
#define REEDCHECK_PATTERNS_HPP

#include "reedcheck/graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace reedcheck {

/// A named small graph (order 2..6) used as a forbidden induced subgraph.
struct Pattern {
  std::string name;
  Graph graph;
};

/// Injective map pattern vertex -> host vertex; map[i] is the image of i.
struct Embedding {
  std::vector<int> map;

  VertexSet image() const;
};

/// Hereditary class given by forbidden induced subgraphs. An empty
/// forbidden list is the class of all graphs.
struct ClassSpec {
  std::string name;
  std::vector<std::string> aliases;
  std::vector<Pattern> forbidden;
};

class UnknownNameError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// P4, P4+K1, 2K2, K2+co-K2, Chair, Kite, House, H, M.
const std::vector<Pattern> &catalog();
/// Catalog lookup; throws UnknownNameError.
const Pattern &pattern(std::string_view name);

/// The four classes: class1 {P4+K1, Kite}, class2 {Chair, Kite},
/// class3 {K2+co-K2, H}, class4 {2K2, M}.
const std::vector<ClassSpec> &class_registry();
/// Looks up a registry class by name or alias ("all" gives the class of all
/// graphs). Throws UnknownNameError.
const ClassSpec &find_class(std::string_view name);
const ClassSpec &all_graphs_class();

bool contains_induced(const Graph &host, const Graph &pattern);
bool contains_induced(const Graph &host, const Pattern &p);

std::optional<Embedding> find_induced(const Graph &host, const Graph &pattern);
std::optional<Embedding> find_induced(const Graph &host, const Pattern &p);

/// Like find_induced, restricted to occurrences whose image contains v.
/// Used to test a one-vertex extension of a graph already known to be free.
std::optional<Embedding> find_induced_through(const Graph &host, const Graph &pattern, int v);

/// True iff emb is injective and maps pattern edges and non-edges exactly.
bool verify_embedding(const Graph &host, const Graph &pattern, const Embedding &emb);

bool is_in_class(const Graph &g, const ClassSpec &c);

/// Membership of g given that g minus vertex v is already a member.
bool is_in_class_extension(const Graph &g, const ClassSpec &c, int v);

bool is_self_complementary(const Graph &g);

} // namespace reedcheck

#endif // REEDCHECK_PATTERNS_HPP
