#include "hc3/activity_graph.hpp"

#include <stdexcept>

namespace hc3 {

ActivityGraph ActivityGraph::wand() {
  return ActivityGraph({{{0, 1, 1}, {1, 1, 0}, {1, 0, 1}}}, "wand");
}

ActivityGraph ActivityGraph::hinge() {
  return ActivityGraph({{{1, 1, 1}, {1, 1, 0}, {1, 0, 1}}}, "hinge");
}

ActivityGraph ActivityGraph::preset(std::string_view name) {
  if (name == "wand") return wand();
  if (name == "hinge") return hinge();
  if (name == "wrench" || name == "pipe") {
    throw std::invalid_argument("activity graph '" + std::string(name) +
                                "' is unsupported: its edge set is not published");
  }
  throw std::invalid_argument("unknown activity graph preset '" + std::string(name) + "'");
}

ActivityGraph ActivityGraph::custom(std::span<const int, 9> row_major) {
  std::array<std::array<int, 3>, 3> adj{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int v = row_major[static_cast<std::size_t>(3 * i + j)];
      if (v != 0 && v != 1) {
        throw std::invalid_argument("activity graph entries must be 0 or 1");
      }
      adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
          adj[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
        throw std::invalid_argument("activity graph must be symmetric");
      }
    }
  }
  return ActivityGraph(adj, "custom");
}

}  // namespace hc3
