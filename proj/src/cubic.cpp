#include "hc3/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hc3 {

namespace {

double eval3(double a, double b, double c, double d, double x) {
  return ((a * x + b) * x + c) * x + d;
}

double eval3d(double a, double b, double c, double x) {
  return (3.0 * a * x + 2.0 * b) * x + c;
}

// A few Newton steps; falls back to the derivative's root when the root is
// (numerically) multiple, where Newton on p itself stalls at sqrt(eps).
double polish(double a, double b, double c, double d, double x, int multiplicity) {
  if (multiplicity >= 2) {
    // double root of p == simple root of p'
    for (int it = 0; it < 60; ++it) {
      const double f = eval3d(a, b, c, x);
      const double fp = 6.0 * a * x + 2.0 * b;
      if (fp == 0.0) break;
      const double step = f / fp;
      x -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    return x;
  }
  for (int it = 0; it < 60; ++it) {
    const double f = eval3(a, b, c, d, x);
    const double fp = eval3d(a, b, c, x);
    if (fp == 0.0) break;
    const double step = f / fp;
    x -= step;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
  }
  return x;
}

}  // namespace

std::vector<RealRoot> solve_cubic_cardano(double c3, double c2, double c1, double c0) {
  if (c3 == 0.0) throw std::invalid_argument("cubic solver requires a nonzero leading coefficient");

  // Normalize to x^3 + a x^2 + b x + c.
  const double a = c2 / c3, b = c1 / c3, c = c0 / c3;
  const double q = (a * a - 3.0 * b) / 9.0;
  const double r = (a * (2.0 * a * a - 9.0 * b) + 27.0 * c) / 54.0;
  const double r2 = r * r, q3 = q * q * q;

  std::vector<RealRoot> roots;
  const double shift = a / 3.0;
  if (r2 < q3) {
    // three distinct real roots
    double ct = r / std::sqrt(q3);
    ct = std::clamp(ct, -1.0, 1.0);
    const double theta = std::acos(ct);
    const double s = -2.0 * std::sqrt(q);
    for (double off : {0.0, 2.0 * std::numbers::pi, -2.0 * std::numbers::pi}) {
      roots.push_back({s * std::cos((theta + off) / 3.0) - shift, 1});
    }
  } else {
    const double u3 = -r - std::copysign(std::sqrt(std::max(r2 - q3, 0.0)), r);
    const double u = std::cbrt(u3);
    const double v = (u == 0.0) ? 0.0 : q / u;
    roots.push_back({u + v - shift, 1});
    // The conjugate pair is real exactly when u == v (discriminant zero).
    const double imag = 0.5 * std::sqrt(3.0) * (u - v);
    const double scale = std::max({1.0, std::abs(u), std::abs(v)});
    if (std::abs(imag) <= 1e-9 * scale) {
      roots.push_back({-0.5 * (u + v) - shift, 2});
    }
  }

  for (auto& root : roots) {
    root.value = polish(c3, c2, c1, c0, root.value, root.multiplicity);
  }
  std::sort(roots.begin(), roots.end(),
            [](const RealRoot& x, const RealRoot& y) { return x.value < y.value; });
  // Collapse roots that are indistinguishable at machine precision (triple
  // roots arrive as a simple plus a double entry).
  std::vector<RealRoot> merged;
  for (const auto& root : roots) {
    if (!merged.empty() &&
        std::abs(root.value - merged.back().value) <=
            1e-12 * std::max(1.0, std::abs(root.value))) {
      merged.back().multiplicity =
          std::min(3, merged.back().multiplicity + root.multiplicity);
    } else {
      merged.push_back(root);
    }
  }
  return merged;
}

}  // namespace hc3
