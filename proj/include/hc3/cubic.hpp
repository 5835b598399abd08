#pragma once

#include <vector>

namespace hc3 {

struct RealRoot {
  double value;
  int multiplicity;
};

/// All real roots of c3 x^3 + c2 x^2 + c1 x + c0, ascending. Uses the
/// trigonometric form when the discriminant indicates three real roots and
/// Newton-polishes every root (double roots are polished through the
/// derivative, where they are simple). Throws std::invalid_argument when
/// c3 == 0. Each returned root satisfies |p(root)| <= 1e-9 * scale with
/// scale = sum_i |c_i| max(1,|root|)^i.
std::vector<RealRoot> solve_cubic_cardano(double c3, double c2, double c1, double c0);

}  // namespace hc3
