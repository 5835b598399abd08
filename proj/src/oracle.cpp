#include "hc3/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace hc3 {

namespace {

// Compensated (Kahan) accumulator; the partition sums reach ~1e7 terms.
struct Kahan {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

EnumerationBudgetError::EnumerationBudgetError(std::uint64_t required_, std::uint64_t budget_)
    : std::runtime_error("enumeration refused: " + std::to_string(required_) +
                         " configurations exceed the budget of " + std::to_string(budget_)),
      required(required_),
      budget(budget_) {}

std::uint64_t configuration_space_size(const FiniteVolume& volume) {
  std::uint64_t size = 1;
  for (std::size_t v = 0; v < volume.vertex_count(); ++v) {
    if (size > UINT64_MAX / 3) return UINT64_MAX;
    size *= 3;
  }
  return size;
}

void for_each_admissible(const ActivityGraph& graph, const FiniteVolume& volume,
                         const std::function<void(const Configuration&)>& visit,
                         const EnumerationBudget& budget) {
  const std::uint64_t required = configuration_space_size(volume);
  if (required > budget.max_configurations) {
    throw EnumerationBudgetError(required, budget.max_configurations);
  }
  const std::size_t n = volume.vertex_count();
  std::vector<std::size_t> parents(n, 0);
  for (std::size_t v = 1; v < n; ++v) parents[v] = volume.parent(v);

  Configuration config(n, 0);
  // Iterative DFS over BFS-indexed vertices; state[v] is the next spin to try.
  std::size_t v = 0;
  std::vector<std::uint8_t> next(n, 0);
  while (true) {
    if (next[v] == 3) {
      next[v] = 0;
      if (v == 0) return;
      --v;
      ++next[v];
      continue;
    }
    const std::uint8_t s = next[v];
    if (v > 0 && !graph.admits(config[parents[v]], s)) {
      ++next[v];
      continue;
    }
    config[v] = s;
    if (v + 1 == n) {
      visit(config);
      ++next[v];
    } else {
      ++v;
    }
  }
}

std::uint64_t count_admissible(const ActivityGraph& graph, const FiniteVolume& volume,
                               const EnumerationBudget& budget) {
  std::uint64_t count = 0;
  for_each_admissible(graph, volume, [&](const Configuration&) { ++count; }, budget);
  return count;
}

FieldAssignment FieldAssignment::uniform(const FiniteVolume& volume, BoundaryField field) {
  return FieldAssignment(std::vector<BoundaryField>(volume.vertex_count(), field));
}

FieldAssignment FieldAssignment::two_class(const FiniteVolume& volume,
                                           const AgmPattern& pattern, BoundaryField z,
                                           BoundaryField t, bool root_is_z) {
  if (volume.root_degree() != RootDegree::Half) {
    throw std::invalid_argument("two-class assignments are defined on the half-tree");
  }
  if (volume.k() != pattern.k) {
    throw std::invalid_argument("pattern order must match the volume order");
  }
  const std::size_t n = volume.vertex_count();
  std::vector<std::uint8_t> cls(n, 0);
  cls[0] = root_is_z ? 0 : 1;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t cb = volume.children_begin(v);
    const std::size_t ce = volume.children_end(v);
    const int same_count = (cls[v] == 0) ? pattern.m : pattern.r;
    for (std::size_t c = cb; c < ce; ++c) {
      const bool same = static_cast<int>(c - cb) < same_count;
      cls[c] = same ? cls[v] : static_cast<std::uint8_t>(1 - cls[v]);
    }
  }
  std::vector<BoundaryField> fields(n);
  for (std::size_t v = 0; v < n; ++v) fields[v] = (cls[v] == 0) ? z : t;
  return FieldAssignment(std::move(fields));
}

FieldAssignment FieldAssignment::per_vertex(const FiniteVolume& volume,
                                            std::vector<BoundaryField> fields) {
  if (fields.size() != volume.vertex_count()) {
    throw std::invalid_argument("per-vertex assignment must cover every vertex");
  }
  return FieldAssignment(std::move(fields));
}

std::vector<BoundaryField> FieldAssignment::on_level(const FiniteVolume& volume,
                                                     int level) const {
  return {fields_.begin() + static_cast<std::ptrdiff_t>(volume.level_begin(level)),
          fields_.begin() + static_cast<std::ptrdiff_t>(volume.level_end(level))};
}

double FieldAssignment::recursion_defect(const ActivityGraph& graph,
                                         const FiniteVolume& volume, double lambda) const {
  double worst = 0.0;
  for (std::size_t v = 1; v < volume.vertex_count(); ++v) {
    if (volume.is_leaf(v)) continue;
    std::vector<BoundaryField> children(
        fields_.begin() + static_cast<std::ptrdiff_t>(volume.children_begin(v)),
        fields_.begin() + static_cast<std::ptrdiff_t>(volume.children_end(v)));
    const BoundaryField image = generic_step(graph, lambda, children);
    worst = std::max({worst, std::abs(image.z1 - fields_[v].z1) / fields_[v].z1,
                      std::abs(image.z2 - fields_[v].z2) / fields_[v].z2});
  }
  return worst;
}

std::uint64_t FiniteMeasure::encode(const Configuration& config) {
  std::uint64_t code = 0;
  std::uint64_t base = 1;
  for (auto s : config) {
    code += s * base;
    base *= 3;
  }
  return code;
}

Configuration FiniteMeasure::decode(std::uint64_t code, std::size_t vertex_count) {
  Configuration config(vertex_count);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    config[v] = static_cast<std::uint8_t>(code % 3);
    code /= 3;
  }
  return config;
}

FiniteMeasure finite_measure(const ActivityGraph& graph, const FiniteVolume& volume,
                             double lambda, std::span<const BoundaryField> boundary_fields,
                             const EnumerationBudget& budget) {
  if (!(lambda > 0.0)) throw std::invalid_argument("activity must be positive");
  const int n = volume.generations();
  if (boundary_fields.size() != volume.level_size(n)) {
    throw std::invalid_argument("need one boundary field per outer-generation vertex");
  }
  for (const auto& f : boundary_fields) {
    if (!(f.z1 > 0.0) || !(f.z2 > 0.0)) {
      throw std::invalid_argument("boundary fields must be positive");
    }
  }

  // Per-vertex spin weights. Interior occupied vertices contribute the
  // activity; boundary ones contribute their normalized field component
  // (activity times the un-normalized weight z_i = z'_i / lambda).
  const std::size_t nv = volume.vertex_count();
  std::vector<std::array<double, 3>> weight(nv, {1.0, lambda, lambda});
  const std::size_t wb = volume.level_begin(n);
  for (std::size_t v = wb; v < volume.level_end(n); ++v) {
    const auto& f = boundary_fields[v - wb];
    weight[v] = {1.0, f.z1, f.z2};
  }

  FiniteMeasure measure{volume, lambda, {}, {}, 0.0};
  std::vector<double> raw;
  Kahan z;
  for_each_admissible(
      graph, volume,
      [&](const Configuration& config) {
        double w = 1.0;
        for (std::size_t v = 0; v < nv; ++v) w *= weight[v][config[v]];
        measure.codes.push_back(FiniteMeasure::encode(config));
        raw.push_back(w);
        z.add(w);
      },
      budget);
  measure.partition = z.sum;
  measure.probabilities.resize(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) measure.probabilities[i] = raw[i] / z.sum;
  return measure;
}

std::array<double, 3> exact_marginal(const FiniteMeasure& measure, std::size_t vertex) {
  if (vertex >= measure.volume.vertex_count()) {
    throw std::out_of_range("marginal requested for a vertex outside the volume");
  }
  std::uint64_t shift = 1;
  for (std::size_t v = 0; v < vertex; ++v) shift *= 3;
  std::array<Kahan, 3> acc;
  for (std::size_t i = 0; i < measure.codes.size(); ++i) {
    acc[(measure.codes[i] / shift) % 3].add(measure.probabilities[i]);
  }
  return {acc[0].sum, acc[1].sum, acc[2].sum};
}

double check_consistency(const ActivityGraph& graph, const FiniteVolume& volume_n,
                         double lambda, const FieldAssignment& assignment,
                         const EnumerationBudget& budget) {
  const int n = volume_n.generations();
  if (n < 1) throw std::invalid_argument("consistency needs at least one generation");
  const FiniteVolume volume_m(volume_n.k(), n - 1, volume_n.root_degree());

  const auto fields_n = assignment.on_level(volume_n, n);
  const auto fields_m = assignment.on_level(volume_n, n - 1);
  const FiniteMeasure mu_n = finite_measure(graph, volume_n, lambda, fields_n, budget);
  const FiniteMeasure mu_m = finite_measure(graph, volume_m, lambda, fields_m, budget);

  std::uint64_t modulus = 1;
  for (std::size_t v = 0; v < volume_m.vertex_count(); ++v) modulus *= 3;

  std::unordered_map<std::uint64_t, double> marginal;
  marginal.reserve(mu_m.codes.size() * 2);
  for (std::size_t i = 0; i < mu_n.codes.size(); ++i) {
    marginal[mu_n.codes[i] % modulus] += mu_n.probabilities[i];
  }

  double defect = 0.0;
  for (std::size_t i = 0; i < mu_m.codes.size(); ++i) {
    const auto it = marginal.find(mu_m.codes[i]);
    const double sum = (it == marginal.end()) ? 0.0 : it->second;
    defect = std::max(defect, std::abs(sum - mu_m.probabilities[i]));
  }
  return defect;
}

}  // namespace hc3
