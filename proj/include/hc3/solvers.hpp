#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hc3/activity_graph.hpp"
#include "hc3/exact_poly.hpp"
#include "hc3/recursion.hpp"

namespace hc3 {

/// Relative half-width of the band around a critical activity inside which a
/// solver reports the merged (double) solution instead of a near-degenerate
/// pair. Floating comparison cannot distinguish lambda == lambda_cr exactly.
inline constexpr double kCriticalBand = 1e-12;

enum class SolutionLabel {
  TiSymmetric,
  TiAsymmetric,
  AgmI3,
  AgmI4,
  Periodic,        // two-class pattern with m = r = 0
  WeaklyPeriodic,
};

const char* to_string(SolutionLabel label);

struct Solution {
  /// Canonical embedding into the four-field vector: translation-invariant
  /// solutions as z = t, swap-symmetric ones as t = (z2, z1), constant-pair
  /// ones as z = (z,z), t = (t,t).
  FieldVector4 fields{};
  double residual = 0.0;  // max componentwise relative defect under the scenario map
  SolutionLabel label = SolutionLabel::TiSymmetric;
  bool critical = false;  // merged solution at the critical activity
  int pair_index = -1;    // index of the swap conjugate within the same report
};

struct SolutionReport {
  std::vector<Solution> solutions;
  bool at_critical = false;
  std::optional<double> lambda_cr;  // advertised critical activity, when known
};

/// Closed-form critical activity: 2^k/((k-1) k^k) for wand,
/// (k+1)^k/((k-1) k^k) for hinge. Throws for other graphs.
double critical_lambda(const ActivityGraph& graph, int k);
BigRat critical_lambda_rational(const ActivityGraph& graph, int k);

/// Activity parameterized by the ratio t = (1+z1)/(1+z2) along the
/// translation-invariant curve; equal at t and 1/t, minimal at t = 1 where it
/// touches the critical activity.
double lambda_of_t(double t, int k);        // wand
double lambda_of_t_hinge(double t, int k);

/// Unique positive solution of z = lambda ((1+z)/(2z))^k (wand) or
/// z = lambda ((1+z)/(1+2z))^k (hinge), to relative residual <= 1e-12.
double solve_symmetric(const ActivityGraph& graph, const ModelParams& params);

/// All translation-invariant solutions: the symmetric one always, plus the
/// asymmetric swap pair recovered through the t-curve when lambda exceeds the
/// critical activity.
SolutionReport solve_ti(const ActivityGraph& graph, const ModelParams& params);

/// w(z1, z2) of the swap-symmetric reduction, n = 2m - k >= 2:
///   w = z1 z2 (C(n,2) + C(n,3)(z1+z2) + ... + C(n,n)(z1^(n-2)+...+z2^(n-2))) - 1.
/// The system has an asymmetric solution exactly on { w = 0 }.
double i3_w_eval(int n, double z1, double z2);
/// w specialized at integer z2, as an exact polynomial in z1.
IntPolynomial i3_w_specialized(int n, long long z2);

/// Critical activity of the swap-symmetric family (requires 2k > 2m >= k+2):
/// the minimum of the implied activity along the w-curve, attained where the
/// curve crosses the diagonal.
double i3_critical_lambda(int k, int m);

/// Solutions of the swap-symmetric system for given m: symmetric always;
/// asymmetric pairs (z1, z2)/(z2, z1) found on the w-curve when
/// 2k > 2m >= k+2 and the activity admits them. For k >= 2m-1 the symmetric
/// solution is provably the only one.
SolutionReport solve_i3(const ModelParams& params, int m);

/// Critical activity of the constant-pair family when known in closed or
/// curve form: all patterns with m + r = k - 2 (activity 2^k z0^(m+1)/(1+z0)^k
/// at z0 = (m+1)/(r+1)) and the k=4, {m,r}={1,0} curve maximum. Returns
/// nullopt for deeper patterns, where only existence is known.
std::optional<double> i4_critical_lambda(int k, int m, int r);

/// Solutions of the constant-pair system: symmetric always; asymmetric (z,t)
/// pairs when m + r <= k - 2. Dedicated routes: Cardano cubic for k=3 (1,0),
/// curve inversion for k=4 (1,0), closed form for k=4 (1,1), quartic analysis
/// for k=4 (2,0) (and their swaps); otherwise a dense scan with an inner
/// monotone solve, every candidate residual-verified.
SolutionReport solve_i4(const ModelParams& params, const AgmPattern& pattern);

/// The positive activity branch lambda_3(z) of the k=4, (m,r)=(1,0) system;
/// its maximum is that system's critical activity.
double i4_lambda3_curve(double z);

// Fixed-point residuals (max componentwise relative defect).
double ti_residual(const ActivityGraph& graph, const ModelParams& params,
                   const BoundaryField& field);
double i3_residual(const ModelParams& params, int m, const BoundaryField& field);
double i4_residual(const ModelParams& params, const AgmPattern& pattern, double z, double t);
double agm_residual(const ModelParams& params, const AgmPattern& pattern,
                    const FieldVector4& fields);

/// Bisection on a bracketing interval; runs to floating-point interval
/// exhaustion. Requires f(lo) and f(hi) of opposite sign (or zero).
double bisect(const std::function<double(double)>& f, double lo, double hi);

/// Log-spaced grid, endpoints included.
std::vector<double> log_grid(double lo, double hi, int points);

}  // namespace hc3
