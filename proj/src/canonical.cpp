// Canonical labeling by individualization-refinement.
//
// The vertex set is kept as an ordered partition that is refined by neighbor
// counts until equitable. Each leaf of the search tree (a discrete partition)
// fixes a labeling; the canonical labeling is the one whose upper-triangle
// adjacency code is lexicographically smallest among all leaves. Refinement
// and cell order depend only on isomorphism-invariant data, so isomorphic
// graphs explore the same multiset of codes.
//
// Twins (N(a)-b == N(b)-a) inside a target cell are interchanged by a
// transposition automorphism, so only one of them is individualized.

#include "reedcheck/graph.hpp"

#include <algorithm>

namespace reedcheck {

namespace {

using Cells = std::vector<std::vector<int>>;
using Code = std::vector<std::uint64_t>;

class Canonizer {
public:
  explicit Canonizer(const Graph &g) : g_(g), cell_of_(g.order()) {}

  std::vector<int> run() {
    Cells start;
    if (g_.order() > 0) {
      std::vector<int> all(g_.order());
      for (int v = 0; v < g_.order(); ++v) {
        all[v] = v;
      }
      start.push_back(std::move(all));
    }
    search(std::move(start));
    return best_order_;
  }

private:
  void refine(Cells &cells) {
    const int n = g_.order();
    std::vector<std::pair<std::vector<int>, int>> keyed;
    bool split = true;
    while (split) {
      split = false;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        for (int v : cells[c]) {
          cell_of_[v] = static_cast<int>(c);
        }
      }
      Cells next;
      next.reserve(n);
      for (const auto &cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        keyed.clear();
        for (int v : cell) {
          std::vector<int> counts(cells.size(), 0);
          g_.neighbors(v).for_each([&](int w) { ++counts[cell_of_[w]]; });
          keyed.emplace_back(std::move(counts), v);
        }
        std::sort(keyed.begin(), keyed.end());
        std::size_t begin = 0;
        for (std::size_t i = 1; i <= keyed.size(); ++i) {
          if (i == keyed.size() || keyed[i].first != keyed[begin].first) {
            std::vector<int> part;
            for (std::size_t k = begin; k < i; ++k) {
              part.push_back(keyed[k].second);
            }
            next.push_back(std::move(part));
            begin = i;
          }
        }
      }
      split = next.size() != cells.size();
      cells = std::move(next);
    }
  }

  Code encode(const std::vector<int> &order) const {
    const int n = g_.order();
    Code code(n, 0);
    for (int j = 1; j < n; ++j) {
      std::uint64_t column = 0;
      for (int i = 0; i < j; ++i) {
        column = (column << 1) | (g_.adjacent(order[i], order[j]) ? 1U : 0U);
      }
      code[j] = column;
    }
    return code;
  }

  bool twins(int a, int b) const {
    const std::uint64_t mask = ~((std::uint64_t{1} << a) | (std::uint64_t{1} << b));
    return (g_.row(a) & mask) == (g_.row(b) & mask);
  }

  void search(Cells cells) {
    refine(cells);
    const auto target = std::find_if(cells.begin(), cells.end(), [](const auto &c) { return c.size() > 1; });
    if (target == cells.end()) {
      std::vector<int> order;
      order.reserve(cells.size());
      for (const auto &c : cells) {
        order.push_back(c.front());
      }
      Code code = encode(order);
      if (best_order_.empty() || code < best_code_) {
        best_code_ = std::move(code);
        best_order_ = std::move(order);
      }
      return;
    }
    const auto t = static_cast<std::size_t>(target - cells.begin());
    std::vector<int> tried;
    for (int v : cells[t]) {
      if (std::any_of(tried.begin(), tried.end(), [&](int w) { return twins(v, w); })) {
        continue;
      }
      tried.push_back(v);
      Cells child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + t);
      child.push_back({v});
      std::vector<int> rest;
      for (int w : cells[t]) {
        if (w != v) {
          rest.push_back(w);
        }
      }
      child.push_back(std::move(rest));
      child.insert(child.end(), cells.begin() + t + 1, cells.end());
      search(std::move(child));
    }
  }

  const Graph &g_;
  std::vector<int> cell_of_;
  Code best_code_;
  std::vector<int> best_order_;
};

} // namespace

Graph canonical_graph(const Graph &g) {
  if (g.order() == 0) {
    return g;
  }
  const std::vector<int> order = Canonizer(g).run();
  return relabel(g, order);
}

std::string canonical_form(const Graph &g) { return to_graph6(canonical_graph(g)); }

} // namespace reedcheck
