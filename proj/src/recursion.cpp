#include "hc3/recursion.hpp"

#include <cmath>
#include <stdexcept>

namespace hc3 {

ModelParams::ModelParams(int k_, double lambda_) : k(k_), lambda(lambda_) {
  if (k < 2) throw std::invalid_argument("model requires k >= 2");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("activity lambda must be positive and finite");
  }
}

AgmPattern::AgmPattern(int k_, int m_, int r_) : k(k_), m(m_), r(r_) {
  if (k < 2) throw std::invalid_argument("pattern requires k >= 2");
  if (m < 0 || m > k || r < 0 || r > k) {
    throw std::invalid_argument("pattern requires 0 <= m, r <= k");
  }
}

WeaklyPeriodicPattern::WeaklyPeriodicPattern(int k_, int i_) : k(k_), i(i_) {
  if (k < 2) throw std::invalid_argument("pattern requires k >= 2");
  if (i < 1 || i > k) throw std::invalid_argument("pattern requires 1 <= i <= k");
}

double pow_pos(double base, int exponent) {
  double result = 1.0;
  double b = base;
  unsigned e = static_cast<unsigned>(exponent);
  while (e > 0) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1u;
  }
  return result;
}

BoundaryField generic_step(const ActivityGraph& graph, double lambda,
                           std::span<const BoundaryField> children) {
  double p1 = 1.0, p2 = 1.0;
  for (const auto& c : children) {
    const double d = graph.row_sum(0, c.z1, c.z2);
    if (!(d > 0.0)) {
      throw std::domain_error("singular field: vacant row sum is zero at a child");
    }
    p1 *= graph.row_sum(1, c.z1, c.z2) / d;
    p2 *= graph.row_sum(2, c.z1, c.z2) / d;
  }
  return {lambda * p1, lambda * p2};
}

BoundaryField ti_map(const ActivityGraph& graph, const ModelParams& params,
                     const BoundaryField& field) {
  const double d = graph.row_sum(0, field.z1, field.z2);
  if (!(d > 0.0)) throw std::domain_error("singular field: vacant row sum is zero");
  const double r1 = graph.row_sum(1, field.z1, field.z2) / d;
  const double r2 = graph.row_sum(2, field.z1, field.z2) / d;
  return {params.lambda * pow_pos(r1, params.k), params.lambda * pow_pos(r2, params.k)};
}

FieldVector4 agm_map(const ModelParams& params, const AgmPattern& pattern,
                     const FieldVector4& f) {
  const double dz = f.z.z1 + f.z.z2;
  const double dt = f.t.z1 + f.t.z2;
  const double rz1 = (1.0 + f.z.z1) / dz, rz2 = (1.0 + f.z.z2) / dz;
  const double rt1 = (1.0 + f.t.z1) / dt, rt2 = (1.0 + f.t.z2) / dt;
  const int k = pattern.k, m = pattern.m, r = pattern.r;
  const double lam = params.lambda;
  return {{lam * pow_pos(rz1, m) * pow_pos(rt1, k - m),
           lam * pow_pos(rz2, m) * pow_pos(rt2, k - m)},
          {lam * pow_pos(rt1, r) * pow_pos(rz1, k - r),
           lam * pow_pos(rt2, r) * pow_pos(rz2, k - r)}};
}

BoundaryField i3_map(const ModelParams& params, int m, const BoundaryField& field) {
  if (m < 0 || m > params.k) throw std::invalid_argument("i3_map requires 0 <= m <= k");
  const double d = field.z1 + field.z2;
  const double r1 = (1.0 + field.z1) / d, r2 = (1.0 + field.z2) / d;
  return {params.lambda * pow_pos(r1, m) * pow_pos(r2, params.k - m),
          params.lambda * pow_pos(r2, m) * pow_pos(r1, params.k - m)};
}

std::pair<double, double> i4_map(const ModelParams& params, const AgmPattern& pattern,
                                 double z, double t) {
  const double u = (1.0 + z) / (2.0 * z);
  const double v = (1.0 + t) / (2.0 * t);
  const int k = pattern.k, m = pattern.m, r = pattern.r;
  return {params.lambda * pow_pos(u, m) * pow_pos(v, k - m),
          params.lambda * pow_pos(v, r) * pow_pos(u, k - r)};
}

FieldVector8 weakly_periodic_map(const ModelParams& params,
                                 const WeaklyPeriodicPattern& pattern,
                                 const FieldVector8& f) {
  const double dz = f.z.z1 + f.z.z2, dt = f.t.z1 + f.t.z2;
  const double dq = f.q.z1 + f.q.z2, dp = f.p.z1 + f.p.z2;
  const double Rz1 = (1.0 + f.z.z1) / dz, Rz2 = (1.0 + f.z.z2) / dz;
  const double Rt1 = (1.0 + f.t.z1) / dt, Rt2 = (1.0 + f.t.z2) / dt;
  const double Rq1 = (1.0 + f.q.z1) / dq, Rq2 = (1.0 + f.q.z2) / dq;
  const double Rp1 = (1.0 + f.p.z1) / dp, Rp2 = (1.0 + f.p.z2) / dp;
  const int k = pattern.k, i = pattern.i;
  const double lam = params.lambda;
  return {{lam * pow_pos(Rz1, k - i) * pow_pos(Rq1, i),
           lam * pow_pos(Rz2, k - i) * pow_pos(Rq2, i)},
          {lam * pow_pos(Rz1, k + 1 - i) * pow_pos(Rq1, i - 1),
           lam * pow_pos(Rz2, k + 1 - i) * pow_pos(Rq2, i - 1)},
          {lam * pow_pos(Rp1, k + 1 - i) * pow_pos(Rt1, i - 1),
           lam * pow_pos(Rp2, k + 1 - i) * pow_pos(Rt2, i - 1)},
          {lam * pow_pos(Rp1, k - i) * pow_pos(Rt1, i),
           lam * pow_pos(Rp2, k - i) * pow_pos(Rt2, i)}};
}

namespace {
bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}
}  // namespace

std::set<InvariantSet> invariant_set_of(const FieldVector4& f, double tolerance) {
  std::set<InvariantSet> labels;
  const bool z_eq = close_rel(f.z.z1, f.z.z2, tolerance);
  const bool t_eq = close_rel(f.t.z1, f.t.z2, tolerance);
  const bool straight = close_rel(f.z.z1, f.t.z1, tolerance) &&
                        close_rel(f.z.z2, f.t.z2, tolerance);
  const bool swapped = close_rel(f.z.z1, f.t.z2, tolerance) &&
                       close_rel(f.z.z2, f.t.z1, tolerance);
  if (z_eq && t_eq && straight) labels.insert(InvariantSet::I1);
  if (straight) labels.insert(InvariantSet::I2);
  if (swapped) labels.insert(InvariantSet::I3);
  if (z_eq && t_eq) labels.insert(InvariantSet::I4);
  return labels;
}

}  // namespace hc3
