#include "hc3/sampler.hpp"

#include <cmath>
#include <ostream>

namespace hc3 {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

int draw3(const std::array<double, 3>& w, double u) {
  const double total = w[0] + w[1] + w[2];
  double x = u * total;
  if (x < w[0]) return 0;
  x -= w[0];
  return (x < w[1]) ? 1 : 2;
}

}  // namespace

std::uint64_t counter_mix(std::uint64_t seed, std::uint64_t sample, std::uint64_t vertex) {
  return splitmix64(splitmix64(splitmix64(seed) ^ sample) ^ vertex);
}

double counter_uniform01(std::uint64_t seed, std::uint64_t sample, std::uint64_t vertex) {
  return static_cast<double>(counter_mix(seed, sample, vertex) >> 11) * 0x1.0p-53;
}

NotAFixedPointError::NotAFixedPointError(double defect, double tolerance)
    : std::runtime_error("sampler refused: fields are not a recursion fixed point (defect " +
                         std::to_string(defect) + " > tolerance " + std::to_string(tolerance) +
                         "); the sampled law would not match the finite-volume measure") {}

SampleBatch sample(const ActivityGraph& graph, const FiniteVolume& volume, double lambda,
                   const FieldAssignment& fields, std::uint64_t seed, std::size_t count,
                   double fixed_point_tolerance) {
  const double defect = fields.recursion_defect(graph, volume, lambda);
  if (!(defect <= fixed_point_tolerance)) {
    throw NotAFixedPointError(defect, fixed_point_tolerance);
  }

  const std::size_t nv = volume.vertex_count();

  // Root weights: product of child row sums, one activity factor if occupied.
  std::array<double, 3> root_weight = {1.0, lambda, lambda};
  for (std::size_t c = volume.children_begin(0); c < volume.children_end(0); ++c) {
    const auto& f = fields.at(c);
    for (int i = 0; i < 3; ++i) root_weight[i] *= graph.row_sum(i, f.z1, f.z2);
  }

  // Conditional weights per non-root vertex, indexed by parent spin.
  std::vector<std::array<std::array<double, 3>, 3>> cond(nv);
  for (std::size_t v = 1; v < nv; ++v) {
    const auto& f = fields.at(v);
    const std::array<double, 3> vec = {1.0, f.z1, f.z2};
    for (int p = 0; p < 3; ++p) {
      for (int j = 0; j < 3; ++j) cond[v][p][j] = graph.entry(p, j) * vec[j];
    }
  }

  std::vector<std::size_t> parents(nv, 0);
  for (std::size_t v = 1; v < nv; ++v) parents[v] = volume.parent(v);

  SampleBatch batch;
  batch.seed = seed;
  batch.count = count;
  batch.configurations.reserve(count);
  std::vector<std::array<std::uint64_t, 3>> tally(nv, {0, 0, 0});

  Configuration config(nv);
  for (std::size_t s = 0; s < count; ++s) {
    config[0] = static_cast<std::uint8_t>(draw3(root_weight, counter_uniform01(seed, s, 0)));
    for (std::size_t v = 1; v < nv; ++v) {
      const int p = config[parents[v]];
      config[v] = static_cast<std::uint8_t>(
          draw3(cond[v][p], counter_uniform01(seed, s, v)));
    }
    for (std::size_t v = 0; v < nv; ++v) ++tally[v][config[v]];
    batch.configurations.push_back(config);
  }

  batch.empirical_marginals.resize(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    for (int i = 0; i < 3; ++i) {
      batch.empirical_marginals[v][i] =
          static_cast<double>(tally[v][i]) / static_cast<double>(count);
    }
  }
  return batch;
}

void write_sample_matrix(std::ostream& os, const SampleBatch& batch) {
  for (const auto& config : batch.configurations) {
    for (std::size_t v = 0; v < config.size(); ++v) {
      if (v) os << ' ';
      os << static_cast<int>(config[v]);
    }
    os << '\n';
  }
}

}  // namespace hc3
