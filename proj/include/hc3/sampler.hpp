#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "hc3/oracle.hpp"

namespace hc3 {

/// Counter-based RNG: chained SplitMix64 finalizers keyed by
/// (seed, sample, vertex). Every (sample, vertex) cell is an independent
/// reproducible stream, so batches are bit-identical for a given seed and
/// may be drawn in parallel in any order.
std::uint64_t counter_mix(std::uint64_t seed, std::uint64_t sample, std::uint64_t vertex);

/// Uniform double in [0, 1) from the top 53 bits of counter_mix.
double counter_uniform01(std::uint64_t seed, std::uint64_t sample, std::uint64_t vertex);

class NotAFixedPointError : public std::runtime_error {
 public:
  explicit NotAFixedPointError(double defect, double tolerance);
};

struct SampleBatch {
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::vector<Configuration> configurations;            // canonical (sample-index) order
  std::vector<std::array<double, 3>> empirical_marginals;  // per vertex
};

/// Exact top-down sampler for the splitting measure of a boundary-law fixed
/// point. The root spin i is drawn with weight lambda^[i>=1] times the
/// product over root children y of (a_i0 + a_i1 z1_y + a_i2 z2_y); every
/// other vertex y draws spin j given its parent's spin p with weight
/// a_pj * (1, z1_y, z2_y)_j. Refuses (NotAFixedPointError) unless the
/// assignment satisfies the recursion at every non-root interior vertex to
/// within fixed_point_tolerance — otherwise the sampled law would not be the
/// finite-volume measure.
SampleBatch sample(const ActivityGraph& graph, const FiniteVolume& volume, double lambda,
                   const FieldAssignment& fields, std::uint64_t seed, std::size_t count,
                   double fixed_point_tolerance = 1e-8);

/// One row per sample, one space-separated spin value per vertex.
void write_sample_matrix(std::ostream& os, const SampleBatch& batch);

}  // namespace hc3
