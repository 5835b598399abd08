#include "hc3/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hc3/cubic.hpp"

namespace hc3 {

namespace {

bool is_wand(const ActivityGraph& g) { return g == ActivityGraph::wand(); }
bool is_hinge(const ActivityGraph& g) { return g == ActivityGraph::hinge(); }

double rel_close(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

bool same_fields(const FieldVector4& a, const FieldVector4& b, double tol = 1e-8) {
  return rel_close(a.z.z1, b.z.z1) <= tol && rel_close(a.z.z2, b.z.z2) <= tol &&
         rel_close(a.t.z1, b.t.z1) <= tol && rel_close(a.t.z2, b.t.z2) <= tol;
}

FieldVector4 embed_ti(double z1, double z2) { return {{z1, z2}, {z1, z2}}; }
FieldVector4 embed_i3(double z1, double z2) { return {{z1, z2}, {z2, z1}}; }
FieldVector4 embed_i4(double z, double t) { return {{z, z}, {t, t}}; }

}  // namespace

const char* to_string(SolutionLabel label) {
  switch (label) {
    case SolutionLabel::TiSymmetric:
      return "TI_symmetric";
    case SolutionLabel::TiAsymmetric:
      return "TI_asymmetric";
    case SolutionLabel::AgmI3:
      return "AGM_I3";
    case SolutionLabel::AgmI4:
      return "AGM_I4";
    case SolutionLabel::Periodic:
      return "Periodic";
    case SolutionLabel::WeaklyPeriodic:
      return "WeaklyPeriodic";
  }
  return "?";
}

double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw std::invalid_argument("bisect: endpoints do not bracket a root");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo) || !(mid < hi)) break;  // interval exhausted
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (fhi > 0.0)) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> log_grid(double lo, double hi, int points) {
  if (points < 2 || !(lo > 0.0) || !(hi > lo)) {
    throw std::invalid_argument("log_grid requires 0 < lo < hi and points >= 2");
  }
  std::vector<double> g(static_cast<std::size_t>(points));
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < points; ++i) {
    g[static_cast<std::size_t>(i)] = std::exp(llo + (lhi - llo) * i / (points - 1));
  }
  g.front() = lo;
  g.back() = hi;
  return g;
}

BigRat critical_lambda_rational(const ActivityGraph& graph, int k) {
  if (k < 2) throw std::invalid_argument("critical_lambda requires k >= 2");
  using boost::multiprecision::pow;
  const BigInt kk = pow(BigInt(k), static_cast<unsigned>(k));
  if (is_wand(graph)) {
    return BigRat(pow(BigInt(2), static_cast<unsigned>(k)), BigInt(k - 1) * kk);
  }
  if (is_hinge(graph)) {
    return BigRat(pow(BigInt(k + 1), static_cast<unsigned>(k)), BigInt(k - 1) * kk);
  }
  throw std::invalid_argument("critical activity is known only for the wand and hinge graphs");
}

double critical_lambda(const ActivityGraph& graph, int k) {
  return critical_lambda_rational(graph, k).convert_to<double>();
}

double lambda_of_t(double t, int k) {
  double s1 = 0.0;  // t + t^2 + ... + t^(k-1)
  for (int i = 1; i < k; ++i) s1 += pow_pos(t, i);
  const double s0 = 1.0 + s1;
  const double tk = pow_pos(t, k);
  return pow_pos(tk + 1.0, k) / (s1 * pow_pos(s0, k));
}

double lambda_of_t_hinge(double t, int k) {
  double s1 = 0.0;
  for (int i = 1; i < k; ++i) s1 += pow_pos(t, i);
  const double s0 = 1.0 + s1;
  const double sk = s0 + pow_pos(t, k);
  return pow_pos(sk, k) / (s1 * pow_pos(s0, k));
}

double solve_symmetric(const ActivityGraph& graph, const ModelParams& params) {
  const bool wand = is_wand(graph);
  if (!wand && !is_hinge(graph)) {
    throw std::invalid_argument("solve_symmetric supports the wand and hinge graphs");
  }
  const int k = params.k;
  const double lam = params.lambda;
  auto defect = [&](double z) {
    const double ratio = wand ? (1.0 + z) / (2.0 * z) : (1.0 + z) / (1.0 + 2.0 * z);
    return z - lam * pow_pos(ratio, k);
  };
  double lo = 1.0, hi = 1.0;
  while (defect(lo) > 0.0) lo *= 0.5;
  while (defect(hi) < 0.0) hi *= 2.0;
  return bisect(defect, lo, hi);
}

double ti_residual(const ActivityGraph& graph, const ModelParams& params,
                   const BoundaryField& field) {
  const BoundaryField image = ti_map(graph, params, field);
  return std::max(std::abs(image.z1 - field.z1) / field.z1,
                  std::abs(image.z2 - field.z2) / field.z2);
}

double i3_residual(const ModelParams& params, int m, const BoundaryField& field) {
  const BoundaryField image = i3_map(params, m, field);
  return std::max(std::abs(image.z1 - field.z1) / field.z1,
                  std::abs(image.z2 - field.z2) / field.z2);
}

double i4_residual(const ModelParams& params, const AgmPattern& pattern, double z, double t) {
  const auto [fz, ft] = i4_map(params, pattern, z, t);
  return std::max(std::abs(fz - z) / z, std::abs(ft - t) / t);
}

double agm_residual(const ModelParams& params, const AgmPattern& pattern,
                    const FieldVector4& fields) {
  const FieldVector4 image = agm_map(params, pattern, fields);
  return std::max(std::max(std::abs(image.z.z1 - fields.z.z1) / fields.z.z1,
                           std::abs(image.z.z2 - fields.z.z2) / fields.z.z2),
                  std::max(std::abs(image.t.z1 - fields.t.z1) / fields.t.z1,
                           std::abs(image.t.z2 - fields.t.z2) / fields.t.z2));
}

SolutionReport solve_ti(const ActivityGraph& graph, const ModelParams& params) {
  const bool wand = is_wand(graph);
  if (!wand && !is_hinge(graph)) {
    throw std::invalid_argument("solve_ti supports the wand and hinge graphs");
  }
  const int k = params.k;
  const double lam = params.lambda;
  const double lam_cr = critical_lambda(graph, k);

  SolutionReport rep;
  rep.lambda_cr = lam_cr;

  const double zs = solve_symmetric(graph, params);
  Solution sym;
  sym.fields = embed_ti(zs, zs);
  sym.residual = ti_residual(graph, params, {zs, zs});
  sym.label = SolutionLabel::TiSymmetric;

  if (std::abs(lam - lam_cr) <= kCriticalBand * lam_cr) {
    sym.critical = true;
    rep.at_critical = true;
    rep.solutions.push_back(sym);
    return rep;
  }
  rep.solutions.push_back(sym);
  if (lam < lam_cr) return rep;

  // lambda above critical: exactly one t > 1 on the increasing branch.
  auto curve = [&](double t) { return wand ? lambda_of_t(t, k) : lambda_of_t_hinge(t, k); };
  double hi = 2.0;
  while (curve(hi) < lam) hi *= 2.0;
  const double t = bisect([&](double x) { return curve(x) - lam; }, 1.0, hi);

  double s1 = 0.0;
  for (int i = 1; i < k; ++i) s1 += pow_pos(t, i);
  const double y = 1.0 / s1;
  const double x = pow_pos(t, k) * y;

  Solution a, b;
  a.fields = embed_ti(x, y);
  a.residual = ti_residual(graph, params, {x, y});
  a.label = SolutionLabel::TiAsymmetric;
  a.pair_index = 2;
  b.fields = embed_ti(y, x);
  b.residual = ti_residual(graph, params, {y, x});
  b.label = SolutionLabel::TiAsymmetric;
  b.pair_index = 1;
  rep.solutions.push_back(a);
  rep.solutions.push_back(b);
  return rep;
}

// ---------------------------------------------------------------------------
// Swap-symmetric (I3) machinery
// ---------------------------------------------------------------------------

double i3_w_eval(int n, double z1, double z2) {
  if (n < 2) throw std::invalid_argument("w polynomial requires n >= 2");
  double acc = 0.0;
  double binom = n * (n - 1) / 2.0;  // C(n,2)
  double h = 1.0;                    // complete homogeneous h_0
  double z2p = z2;                   // z2^(d+1) for the h recurrence
  for (int i = 2; i <= n; ++i) {
    acc += binom * h;
    h = z1 * h + z2p;
    z2p *= z2;
    binom = binom * (n - i) / (i + 1.0);
  }
  return z1 * z2 * acc - 1.0;
}

IntPolynomial i3_w_specialized(int n, long long z2) {
  if (n < 2) throw std::invalid_argument("w polynomial requires n >= 2");
  // binomials C(n, 0..n)
  std::vector<BigInt> binom(static_cast<std::size_t>(n) + 1, BigInt(1));
  for (std::size_t i = 1; i < binom.size(); ++i) {
    binom[i] = binom[i - 1] * BigInt(n - static_cast<int>(i) + 1) / BigInt(i);
  }
  std::vector<BigInt> coeffs(static_cast<std::size_t>(n));  // degree n-1 in z1
  coeffs[0] = -1;
  const BigInt zz(z2);
  for (int i = 2; i <= n; ++i) {
    BigInt z2pow = zz;  // z2^(j+1)
    for (int j = 0; j <= i - 2; ++j) {
      coeffs[static_cast<std::size_t>(i - 1 - j)] += binom[static_cast<std::size_t>(i)] * z2pow;
      z2pow *= zz;
    }
  }
  return IntPolynomial(std::move(coeffs));
}

namespace {

// Unique positive root of w(., z2); w is increasing in z1 with w(0,.) = -1.
double i3_w_root(int n, double z2) {
  auto f = [&](double z1) { return i3_w_eval(n, z1, z2); };
  double lo = 1e-12, hi = 1.0;
  while (f(lo) > 0.0) lo *= 0.5;
  while (f(hi) < 0.0) hi *= 2.0;
  return bisect(f, lo, hi);
}

// Activity implied by the first equation along the w-curve.
double i3_implied_lambda(int k, int m, double z2, double* z1_out) {
  const int n = 2 * m - k;
  const double z1 = i3_w_root(n, z2);
  if (z1_out) *z1_out = z1;
  return z1 * pow_pos(z1 + z2, k) / (pow_pos(1.0 + z1, m) * pow_pos(1.0 + z2, k - m));
}

// Diagonal point of the w-curve, where the asymmetric family is born.
double i3_diagonal_point(int n) {
  auto f = [&](double z) { return i3_w_eval(n, z, z); };
  double lo = 1e-12, hi = 1.0;
  while (f(lo) > 0.0) lo *= 0.5;
  while (f(hi) < 0.0) hi *= 2.0;
  return bisect(f, lo, hi);
}

}  // namespace

double i3_critical_lambda(int k, int m) {
  const int n = 2 * m - k;
  if (n < 2 || m >= k) {
    throw std::invalid_argument("the swap-symmetric family requires 2k > 2m >= k+2");
  }
  const double zc = i3_diagonal_point(n);
  return zc * pow_pos(2.0 * zc / (1.0 + zc), k);
}

SolutionReport solve_i3(const ModelParams& params, int m) {
  const int k = params.k;
  if (m < 0 || m > k) throw std::invalid_argument("solve_i3 requires 0 <= m <= k");
  const double lam = params.lambda;

  SolutionReport rep;
  const double zs = solve_symmetric(ActivityGraph::wand(), params);
  Solution sym;
  sym.fields = embed_i3(zs, zs);
  sym.residual = i3_residual(params, m, {zs, zs});
  sym.label = SolutionLabel::TiSymmetric;
  rep.solutions.push_back(sym);

  const int n = 2 * m - k;
  // Outside 2k > 2m >= k+2 the swap-symmetric family carries nothing new:
  // for k >= 2m-1 the comparison function is increasing and forces z1 = z2;
  // for m = k the system is the translation-invariant one.
  if (n <= 1 || m == k) return rep;

  const double lam_min = i3_critical_lambda(k, m);
  rep.lambda_cr = lam_min;
  if (std::abs(lam - lam_min) <= kCriticalBand * lam_min) {
    // The asymmetric branch is born on the diagonal, i.e. merged into the
    // symmetric solution.
    rep.at_critical = true;
    rep.solutions[0].critical = true;
    return rep;
  }
  if (lam < lam_min) return rep;

  const double zc = i3_diagonal_point(n);
  auto g = [&](double z2) { return i3_implied_lambda(k, m, z2, nullptr) - lam; };
  const auto grid = log_grid(zc * (1.0 + 1e-9), 1e8, 4000);
  double prev = g(grid[0]);
  double prev_z = grid[0];
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double cur = g(grid[i]);
    if ((prev < 0.0 && cur >= 0.0) || (prev > 0.0 && cur <= 0.0)) {
      const double z2 = bisect(g, prev_z, grid[i]);
      double z1 = 0.0;
      i3_implied_lambda(k, m, z2, &z1);
      Solution a, b;
      a.fields = embed_i3(z1, z2);
      a.residual = i3_residual(params, m, {z1, z2});
      a.label = SolutionLabel::AgmI3;
      b.fields = embed_i3(z2, z1);
      b.residual = i3_residual(params, m, {z2, z1});
      b.label = SolutionLabel::AgmI3;
      bool duplicate = false;
      for (const auto& s : rep.solutions) duplicate |= same_fields(s.fields, a.fields);
      if (!duplicate) {
        a.pair_index = static_cast<int>(rep.solutions.size()) + 1;
        b.pair_index = static_cast<int>(rep.solutions.size());
        rep.solutions.push_back(a);
        rep.solutions.push_back(b);
      }
    }
    prev = cur;
    prev_z = grid[i];
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Constant-pair (I4) machinery
// ---------------------------------------------------------------------------

double i4_lambda3_curve(double z) {
  const double s = std::sqrt(4.0 * z * z * z + 9.0 * z * z + 6.0 * z + 1.0);
  return (24.0 * z + 8.0 + 8.0 * s) * z * z / pow_pos(1.0 + z, 4);
}

namespace {

// t-equation of the constant-pair system solved for t at fixed z; the left
// side t (2t/(1+t))^r is strictly increasing from 0 to infinity.
double i4_inner_t(int k, int r, double lambda, double z) {
  const double c = lambda * pow_pos((1.0 + z) / (2.0 * z), k - r);
  if (r == 0) return c;
  auto f = [&](double t) { return t * pow_pos(2.0 * t / (1.0 + t), r) - c; };
  double lo = std::min(1.0, c), hi = std::max(1.0, c);
  while (f(lo) > 0.0) lo *= 0.5;
  while (f(hi) < 0.0) hi *= 2.0;
  return bisect(f, lo, hi);
}

double i4_first_defect(int k, int m, int r, double lambda, double z) {
  const double t = i4_inner_t(k, r, lambda, z);
  return z - lambda * pow_pos((1.0 + z) / (2.0 * z), m) * pow_pos((1.0 + t) / (2.0 * t), k - m);
}

// Maximizer of lambda_3 inside the squaring bracket, recovered through the
// cubic its stationarity condition reduces to.
double i4_lambda3_maximizer() {
  const double lo = (7.0 + std::sqrt(73.0)) / 6.0;
  const double hi = (9.0 + std::sqrt(97.0)) / 4.0;
  for (const auto& root : solve_cubic_cardano(1.0, -16.0, 41.0, 10.0)) {
    if (root.value >= lo && root.value <= hi) return root.value;
  }
  throw std::logic_error("lambda_3 maximizer not found in its bracket");
}

struct I4Branch {
  std::vector<std::pair<double, double>> pairs;  // asymmetric (z, t)
  bool merged = false;
  std::pair<double, double> merged_pair{0.0, 0.0};
};

// Asymmetric branch of the pattern-(m,r) constant-pair system with m >= r
// special cases; callers mirror (z,t) for the swapped pattern.
I4Branch i4_asymmetric_branch(int k, int m, int r, double lam,
                              std::optional<double> lam_cr, double z_sym) {
  I4Branch out;
  const bool at_critical =
      lam_cr && std::abs(lam - *lam_cr) <= kCriticalBand * *lam_cr;

  if (k == 3 && m == 1 && r == 0) {
    // z^3 + (3 - 8/lambda) z^2 + 3 z + 1 = 0 on the zt = 1 branch.
    if (at_critical) {
      out.merged = true;
      out.merged_pair = {2.0, 0.5};
      return out;
    }
    if (lam > *lam_cr) return out;
    for (const auto& root : solve_cubic_cardano(1.0, 3.0 - 8.0 / lam, 3.0, 1.0)) {
      if (root.value > 0.0) out.pairs.emplace_back(root.value, 1.0 / root.value);
    }
    return out;
  }

  if (k == 4 && m == 1 && r == 0) {
    const double z3 = i4_lambda3_maximizer();
    auto t_of = [&](double z) { return lam * pow_pos((1.0 + z) / (2.0 * z), 4); };
    if (at_critical) {
      out.merged = true;
      out.merged_pair = {z3, t_of(z3)};
      return out;
    }
    if (lam > *lam_cr) return out;
    auto g = [&](double z) { return i4_lambda3_curve(z) - lam; };
    double lo = 1e-9;
    while (g(lo) > 0.0) lo *= 0.5;
    double hi = 1e9;
    while (g(hi) > 0.0) hi *= 2.0;
    const double z_low = bisect(g, lo, z3);
    const double z_high = bisect(g, z3, hi);
    out.pairs.emplace_back(z_low, t_of(z_low));
    out.pairs.emplace_back(z_high, t_of(z_high));
    return out;
  }

  if (k == 4 && m == 1 && r == 1) {
    if (at_critical || lam >= *lam_cr) {
      if (at_critical) {
        out.merged = true;
        out.merged_pair = {1.0, 1.0};
      }
      return out;
    }
    const double sq = std::sqrt(lam);
    const double d = std::sqrt(1.0 - sq);
    const double z1 = (2.0 - sq - 2.0 * d) / sq;
    const double z2 = (2.0 - sq + 2.0 * d) / sq;
    out.pairs.emplace_back(z1, 1.0 / z1);
    out.pairs.emplace_back(z2, 1.0 / z2);
    return out;
  }

  if (k == 4 && m == 2 && r == 0) {
    // x^4 - 2 a x^3 + 1 with x = z^(1/4), a = lambda^(-1/4); minimum at 3a/2.
    if (at_critical) {
      out.merged = true;
      out.merged_pair = {3.0, 1.0 / 3.0};
      return out;
    }
    if (lam > *lam_cr) return out;
    const double a = std::pow(lam, -0.25);
    const double x0 = 1.5 * a;
    auto f = [&](double x) { return pow_pos(x, 4) - 2.0 * a * pow_pos(x, 3) + 1.0; };
    double lo = 1e-6;
    while (f(lo) < 0.0) lo *= 0.5;
    double hi = std::max(2.0 * x0, 4.0 * a);
    while (f(hi) < 0.0) hi *= 2.0;
    const double x_low = bisect(f, lo, x0);
    const double x_high = bisect(f, x0, hi);
    for (double x : {x_low, x_high}) {
      const double z = pow_pos(x, 4);
      out.pairs.emplace_back(z, 1.0 / z);
    }
    return out;
  }

  if (m + r == k - 2) {
    // Both equations reduce to lambda = 2^k z^(m+1) / (1+z)^k on zt = 1,
    // a curve with a single interior maximum at z0 = (m+1)/(r+1).
    const double z0 = (m + 1.0) / (r + 1.0);
    auto curve = [&](double z) {
      return pow_pos(2.0, k) * pow_pos(z, m + 1) / pow_pos(1.0 + z, k);
    };
    if (at_critical) {
      out.merged = true;
      out.merged_pair = {z0, 1.0 / z0};
      return out;
    }
    if (lam > *lam_cr) return out;
    auto g = [&](double z) { return curve(z) - lam; };
    double lo = 1e-9;
    while (g(lo) > 0.0) lo *= 0.5;
    double hi = std::max(2.0 * z0, 4.0);
    while (g(hi) > 0.0) hi *= 2.0;
    const double z_low = bisect(g, lo, z0);
    const double z_high = bisect(g, z0, hi);
    out.pairs.emplace_back(z_low, 1.0 / z_low);
    out.pairs.emplace_back(z_high, 1.0 / z_high);
    return out;
  }

  // Deeper patterns: dense log scan with the inner monotone solve; no
  // critical activity is claimed, candidates are residual-verified later.
  auto F = [&](double z) { return i4_first_defect(k, m, r, lam, z); };
  const auto grid = log_grid(1e-4, 1e4, 10000);
  double prev = F(grid[0]);
  double prev_z = grid[0];
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double cur = F(grid[i]);
    if ((prev < 0.0 && cur >= 0.0) || (prev > 0.0 && cur <= 0.0)) {
      const double z = bisect(F, prev_z, grid[i]);
      const double t = i4_inner_t(k, r, lam, z);
      if (rel_close(z, z_sym) > 1e-8 || rel_close(t, z_sym) > 1e-8) {
        out.pairs.emplace_back(z, t);
      }
    }
    prev = cur;
    prev_z = grid[i];
  }
  return out;
}

}  // namespace

std::optional<double> i4_critical_lambda(int k, int m, int r) {
  if (m + r > k - 2) return std::nullopt;
  if (k == 4 && ((m == 1 && r == 0) || (m == 0 && r == 1))) {
    return i4_lambda3_curve(i4_lambda3_maximizer());
  }
  if (m + r == k - 2) {
    const double z0 = (m + 1.0) / (r + 1.0);
    return pow_pos(2.0, k) * pow_pos(z0, m + 1) / pow_pos(1.0 + z0, k);
  }
  return std::nullopt;
}

SolutionReport solve_i4(const ModelParams& params, const AgmPattern& pattern) {
  if (pattern.k != params.k) {
    throw std::invalid_argument("pattern order must match the model order");
  }
  const int k = params.k, m = pattern.m, r = pattern.r;
  const double lam = params.lambda;

  SolutionReport rep;
  const double zs = solve_symmetric(ActivityGraph::wand(), params);
  Solution sym;
  sym.fields = embed_i4(zs, zs);
  sym.residual = i4_residual(params, pattern, zs, zs);
  sym.label = SolutionLabel::TiSymmetric;
  rep.solutions.push_back(sym);

  if (m + r >= k - 1) return rep;  // only z = t solves the ratio equation

  rep.lambda_cr = i4_critical_lambda(k, m, r);
  const SolutionLabel asym_label =
      (m == 0 && r == 0) ? SolutionLabel::Periodic : SolutionLabel::AgmI4;

  // The mirrored pattern (r, m) has the same solutions with z and t swapped.
  const bool mirrored = m < r;
  I4Branch branch = i4_asymmetric_branch(k, mirrored ? r : m, mirrored ? m : r, lam,
                                         rep.lambda_cr, zs);
  if (mirrored) {
    for (auto& p : branch.pairs) std::swap(p.first, p.second);
    std::swap(branch.merged_pair.first, branch.merged_pair.second);
  }

  if (branch.merged) {
    rep.at_critical = true;
    const auto [z, t] = branch.merged_pair;
    if (rel_close(z, zs) <= 1e-8 && rel_close(t, zs) <= 1e-8) {
      rep.solutions[0].critical = true;  // branch is born on the diagonal
    } else {
      Solution s;
      s.fields = embed_i4(z, t);
      s.residual = i4_residual(params, pattern, z, t);
      s.label = asym_label;
      s.critical = true;
      rep.solutions.push_back(s);
    }
    return rep;
  }

  for (const auto& [z, t] : branch.pairs) {
    Solution s;
    s.fields = embed_i4(z, t);
    s.residual = i4_residual(params, pattern, z, t);
    s.label = asym_label;
    if (s.residual > 1e-9) continue;  // scan artifact, not a solution
    bool duplicate = false;
    for (const auto& existing : rep.solutions) {
      duplicate |= same_fields(existing.fields, s.fields);
    }
    if (!duplicate) rep.solutions.push_back(s);
  }

  // Link swap-conjugate pairs (z,t) <-> (t,z) when both are present.
  for (std::size_t i = 1; i < rep.solutions.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.solutions.size(); ++j) {
      const auto& a = rep.solutions[i].fields;
      const auto& b = rep.solutions[j].fields;
      if (rel_close(a.z.z1, b.t.z1) <= 1e-8 && rel_close(a.t.z1, b.z.z1) <= 1e-8) {
        rep.solutions[i].pair_index = static_cast<int>(j);
        rep.solutions[j].pair_index = static_cast<int>(i);
      }
    }
  }
  return rep;
}

}  // namespace hc3
