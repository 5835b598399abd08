#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hc3/recursion.hpp"
#include "hc3/tree.hpp"

namespace hc3 {

/// Hard cap on exhaustive enumeration. The oracle is ground truth: it
/// refuses outright rather than truncating or approximating.
struct EnumerationBudget {
  std::uint64_t max_configurations = 43046721;  // 3^16
};

class EnumerationBudgetError : public std::runtime_error {
 public:
  EnumerationBudgetError(std::uint64_t required, std::uint64_t budget);
  std::uint64_t required;
  std::uint64_t budget;
};

/// 3^|V_n|, saturating at uint64 max.
std::uint64_t configuration_space_size(const FiniteVolume& volume);

/// Visits every admissible configuration exactly once, in lexicographic
/// order of the BFS-indexed spin string.
void for_each_admissible(const ActivityGraph& graph, const FiniteVolume& volume,
                         const std::function<void(const Configuration&)>& visit,
                         const EnumerationBudget& budget = {});

std::uint64_t count_admissible(const ActivityGraph& graph, const FiniteVolume& volume,
                               const EnumerationBudget& budget = {});

/// Normalized boundary fields attached to every vertex of a finite volume.
class FieldAssignment {
 public:
  /// The same field everywhere (translation-invariant boundary condition).
  static FieldAssignment uniform(const FiniteVolume& volume, BoundaryField field);

  /// Two-class assignment on the half-tree: under a z-class vertex the first
  /// m children (in index order) are z-class and the rest t-class; under a
  /// t-class vertex the first r children are t-class and the rest z-class.
  static FieldAssignment two_class(const FiniteVolume& volume, const AgmPattern& pattern,
                                   BoundaryField z, BoundaryField t, bool root_is_z = true);

  static FieldAssignment per_vertex(const FiniteVolume& volume,
                                    std::vector<BoundaryField> fields);

  const BoundaryField& at(std::size_t v) const { return fields_[v]; }
  std::vector<BoundaryField> on_level(const FiniteVolume& volume, int level) const;

  /// Max relative defect of the recursion at non-root interior vertices:
  /// how far each assigned field is from the image of its children's fields.
  double recursion_defect(const ActivityGraph& graph, const FiniteVolume& volume,
                          double lambda) const;

 private:
  explicit FieldAssignment(std::vector<BoundaryField> fields)
      : fields_(std::move(fields)) {}
  std::vector<BoundaryField> fields_;
};

/// Exact finite-volume measure: P(sigma) proportional to
/// lambda^(#occupied) * prod_{x in W_n} w(sigma(x), x), where the boundary
/// weight vector at x is (1, z1/lambda, z2/lambda) for normalized fields
/// (z1, z2), so an occupied boundary vertex contributes its normalized field
/// component net of the activity factor.
struct FiniteMeasure {
  FiniteVolume volume;
  double lambda;
  std::vector<std::uint64_t> codes;  // base-3 packed configurations, BFS digit order
  std::vector<double> probabilities;
  double partition = 0.0;

  static std::uint64_t encode(const Configuration& config);
  static Configuration decode(std::uint64_t code, std::size_t vertex_count);
};

FiniteMeasure finite_measure(const ActivityGraph& graph, const FiniteVolume& volume,
                             double lambda, std::span<const BoundaryField> boundary_fields,
                             const EnumerationBudget& budget = {});

std::array<double, 3> exact_marginal(const FiniteMeasure& measure, std::size_t vertex);

/// Kolmogorov-consistency defect between generations n and n-1: builds the
/// generation-n measure from the assignment's fields on W_n and the
/// generation-(n-1) measure from the same assignment's fields on W_{n-1},
/// and returns the max absolute difference between the coarse measure and
/// the fine measure's marginal. Zero (to round-off) exactly when the
/// assignment satisfies the recursion at every W_{n-1} vertex.
double check_consistency(const ActivityGraph& graph, const FiniteVolume& volume_n,
                         double lambda, const FieldAssignment& assignment,
                         const EnumerationBudget& budget = {});

}  // namespace hc3
