#include "hc3/tree.hpp"

#include <stdexcept>

namespace hc3 {

FiniteVolume::FiniteVolume(int k, int n, RootDegree root_degree)
    : k_(k), n_(n), root_degree_(root_degree) {
  if (k < 2) throw std::invalid_argument("tree order k must be >= 2");
  if (n < 0) throw std::invalid_argument("generation count must be >= 0");
  offsets_.reserve(static_cast<std::size_t>(n) + 2);
  offsets_.push_back(0);
  offsets_.push_back(1);
  std::size_t level_size = 1;
  for (int m = 1; m <= n; ++m) {
    level_size *= (m == 1 && root_degree == RootDegree::Full)
                      ? static_cast<std::size_t>(k + 1)
                      : static_cast<std::size_t>(k);
    offsets_.push_back(offsets_.back() + level_size);
  }
}

int FiniteVolume::level_of(std::size_t v) const {
  for (int m = 0; m <= n_; ++m) {
    if (v < offsets_[static_cast<std::size_t>(m) + 1]) return m;
  }
  throw std::out_of_range("vertex index outside volume");
}

std::size_t FiniteVolume::parent(std::size_t v) const {
  const int m = level_of(v);
  if (m == 0) throw std::out_of_range("root has no parent");
  if (m == 1) return 0;
  const std::size_t idx = v - level_begin(m);
  return level_begin(m - 1) + idx / static_cast<std::size_t>(k_);
}

std::size_t FiniteVolume::children_begin(std::size_t v) const {
  const int m = level_of(v);
  if (m == n_) return vertex_count();
  const std::size_t idx = v - level_begin(m);
  const std::size_t stride = (m == 0) ? level_size(1) : static_cast<std::size_t>(k_);
  return level_begin(m + 1) + idx * stride;
}

std::size_t FiniteVolume::children_end(std::size_t v) const {
  const int m = level_of(v);
  if (m == n_) return vertex_count();
  const std::size_t stride = (m == 0) ? level_size(1) : static_cast<std::size_t>(k_);
  return children_begin(v) + stride;
}

bool is_admissible(const ActivityGraph& graph, const FiniteVolume& volume,
                   const Configuration& config) {
  if (config.size() != volume.vertex_count()) {
    throw std::invalid_argument("configuration must assign every vertex of the volume");
  }
  for (std::size_t v = 1; v < config.size(); ++v) {
    if (!graph.admits(config[volume.parent(v)], config[v])) return false;
  }
  return true;
}

std::size_t occupied_count(const Configuration& config) {
  std::size_t n = 0;
  for (auto s : config) n += (s >= 1);
  return n;
}

}  // namespace hc3
