#pragma once

#include <set>
#include <span>
#include <utility>

#include "hc3/activity_graph.hpp"

namespace hc3 {

/// Normalized boundary-law pair attached to a vertex or vertex class.
/// z1 and z2 are the occupied-spin weights relative to the vacant weight,
/// with the activity already absorbed (the vacant component is fixed at 1).
struct BoundaryField {
  double z1;
  double z2;
};

struct ModelParams {
  int k;
  double lambda;
  ModelParams(int k, double lambda);  // requires k >= 2, lambda > 0
};

/// Two-class child pattern on the half-tree: a z-class vertex has m z-class
/// and k-m t-class children; a t-class vertex has r t-class and k-r z-class
/// children.
struct AgmPattern {
  int k;
  int m;
  int r;
  AgmPattern(int k, int m, int r);  // requires 0 <= m, r <= k

  int i3_index() const { return 2 * m - k; }      // n governing the z1=t2 set
  int i4_index() const { return m + r - k; }      // n governing the z1=z2 set
};

/// Index-two coset pattern with i = |A| flipping generators, 1 <= i <= k
/// (i = k+1 would collapse to ordinary periodicity).
struct WeaklyPeriodicPattern {
  int k;
  int i;
  WeaklyPeriodicPattern(int k, int i);
};

struct FieldVector4 {
  BoundaryField z;
  BoundaryField t;
};

struct FieldVector8 {
  BoundaryField z;
  BoundaryField t;
  BoundaryField q;
  BoundaryField p;
};

/// Integer power by repeated squaring; keeps fixed-point residuals at
/// machine precision where log/exp would not.
double pow_pos(double base, int exponent);  // exponent >= 0

/// One application of the compatibility recursion at a vertex whose children
/// carry the given fields:
///   z_i = lambda * prod_children (a_i0 + a_i1 z1 + a_i2 z2) / (a_00 + a_01 z1 + a_02 z2).
/// An empty child list yields (lambda, lambda). Throws std::domain_error if a
/// child's vacant row sum vanishes (possible only for custom graphs with an
/// all-zero vacant row).
BoundaryField generic_step(const ActivityGraph& graph, double lambda,
                           std::span<const BoundaryField> children);

/// Translation-invariant specialization: generic_step with k equal children.
BoundaryField ti_map(const ActivityGraph& graph, const ModelParams& params,
                     const BoundaryField& field);

/// Two-class map on the wand graph:
///   z_i = lambda * Rz_i^m * Rt_i^(k-m),  t_i = lambda * Rt_i^r * Rz_i^(k-r),
/// with Rz_i = (1+z_i)/(z1+z2), Rt_i = (1+t_i)/(t1+t2).
FieldVector4 agm_map(const ModelParams& params, const AgmPattern& pattern,
                     const FieldVector4& fields);

/// agm_map restricted to the swap-symmetric set (z1,z2,t1,t2)=(z1,z2,z2,z1):
///   z1' = lambda * R1^m * R2^(k-m), z2' = lambda * R2^m * R1^(k-m).
/// Well-defined for any 0 <= m <= k; the m=r requirement is a labeling
/// concern, not a property of the formula.
BoundaryField i3_map(const ModelParams& params, int m, const BoundaryField& field);

/// agm_map restricted to the constant-pair set z1=z2=z, t1=t2=t:
///   z' = lambda * u^m * v^(k-m), t' = lambda * v^r * u^(k-r),
/// with u = (1+z)/(2z), v = (1+t)/(2t).
std::pair<double, double> i4_map(const ModelParams& params, const AgmPattern& pattern,
                                 double z, double t);

/// Index-two coset map on the wand graph (eight components, classes z,t,q,p).
FieldVector8 weakly_periodic_map(const ModelParams& params,
                                 const WeaklyPeriodicPattern& pattern,
                                 const FieldVector8& fields);

enum class InvariantSet { I1, I2, I3, I4 };

/// Labels whose defining equalities hold within the given relative tolerance:
///   I1: all four equal; I2: z1=t1, z2=t2; I3: z1=t2, z2=t1; I4: z1=z2, t1=t2.
/// I3 membership of a solution additionally requires a pattern with m=r;
/// that is the caller's responsibility, not checked here.
std::set<InvariantSet> invariant_set_of(const FieldVector4& fields, double tolerance);

}  // namespace hc3
