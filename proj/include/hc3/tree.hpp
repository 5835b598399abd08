#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hc3/activity_graph.hpp"

namespace hc3 {

/// Number of children at the root: Full = k+1 (ball around a vertex of the
/// (k+1)-regular tree), Half = k (rooted half-tree).
enum class RootDegree { Full, Half };

/// Finite ball V_n of generations 0..n, vertices indexed breadth-first from
/// the root so that every child list is a contiguous index range.
class FiniteVolume {
 public:
  FiniteVolume(int k, int n, RootDegree root_degree);

  int k() const { return k_; }
  int generations() const { return n_; }
  RootDegree root_degree() const { return root_degree_; }

  std::size_t vertex_count() const { return offsets_.back(); }
  std::size_t level_begin(int level) const { return offsets_[static_cast<std::size_t>(level)]; }
  std::size_t level_end(int level) const { return offsets_[static_cast<std::size_t>(level) + 1]; }
  std::size_t level_size(int level) const { return level_end(level) - level_begin(level); }

  int level_of(std::size_t v) const;
  std::size_t parent(std::size_t v) const;  // v >= 1
  std::size_t children_begin(std::size_t v) const;
  std::size_t children_end(std::size_t v) const;  // == children_begin for leaves
  bool is_leaf(std::size_t v) const { return children_begin(v) == children_end(v); }

 private:
  int k_;
  int n_;
  RootDegree root_degree_;
  std::vector<std::size_t> offsets_;  // offsets_[m] = first index of generation m
};

/// Total spin assignment on a FiniteVolume, one value in {0,1,2} per vertex,
/// BFS order.
using Configuration = std::vector<std::uint8_t>;

/// True iff every tree edge <x,y> carries an edge of the activity graph.
bool is_admissible(const ActivityGraph& graph, const FiniteVolume& volume,
                   const Configuration& config);

/// Number of occupied vertices, i.e. those with spin >= 1.
std::size_t occupied_count(const Configuration& config);

}  // namespace hc3
