#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>

namespace hc3 {

/// Symmetric 0/1 adjacency matrix over the spin set {0,1,2}.
///
/// Spin 0 is the vacant state; spins 1 and 2 are the two occupied species.
/// An entry a(i,j)=1 means spins i and j may occupy neighboring vertices.
/// Two named presets are supported:
///   wand : {0,1} {0,2} {1,1} {2,2}
///   hinge: {0,0} {0,1} {0,2} {1,1} {2,2}
class ActivityGraph {
 public:
  static ActivityGraph wand();
  static ActivityGraph hinge();

  /// Preset by name. "wrench" and "pipe" are recognized names whose edge
  /// sets are not published anywhere we trust, so they are rejected with a
  /// message saying so rather than guessed.
  static ActivityGraph preset(std::string_view name);

  /// Arbitrary symmetric 0/1 matrix, row-major. Throws std::invalid_argument
  /// on asymmetry or entries outside {0,1}.
  static ActivityGraph custom(std::span<const int, 9> row_major);

  bool admits(int i, int j) const { return adj_[i][j] != 0; }
  int entry(int i, int j) const { return adj_[i][j]; }
  const std::string& name() const { return name_; }

  /// a(i,0) + a(i,1)*z1 + a(i,2)*z2, the neighbor sum the recursion divides by.
  double row_sum(int i, double z1, double z2) const {
    return adj_[i][0] + adj_[i][1] * z1 + adj_[i][2] * z2;
  }

  bool operator==(const ActivityGraph& o) const { return adj_ == o.adj_; }

 private:
  ActivityGraph(const std::array<std::array<int, 3>, 3>& adj, std::string name)
      : adj_(adj), name_(std::move(name)) {}

  std::array<std::array<int, 3>, 3> adj_;
  std::string name_;
};

}  // namespace hc3
