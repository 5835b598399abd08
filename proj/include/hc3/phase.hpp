#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hc3/solvers.hpp"

namespace hc3 {

enum class Scenario { TiWand, TiHinge, I3, I4, WeaklyPeriodic };

struct ScenarioSpec {
  Scenario scenario = Scenario::TiWand;
  int k = 2;
  int m = -1;  // I3 / I4
  int r = -1;  // I4
  int i = -1;  // WeaklyPeriodic: |A|
};

std::string scenario_tag(const ScenarioSpec& spec);  // "TI-wand", "I3(3)", "I4(1,0)", "WP(2)"

struct PhasePoint {
  ScenarioSpec spec;
  double lambda = 0.0;
  int count = 0;
  bool critical = false;
  std::vector<Solution> solutions;
};

/// 256 log-spaced points per decade across [lambda_cr/10, 10 lambda_cr],
/// plus {lambda_cr (1-1e-6), lambda_cr, lambda_cr (1+1e-6)}, sorted; the
/// jumps happen at lambda_cr so the grid must straddle it tightly.
std::vector<double> default_lambda_grid(double lambda_cr);

SolutionReport solve_scenario(const ScenarioSpec& spec, double lambda);

/// One PhasePoint per grid value, deterministic given the grid.
std::vector<PhasePoint> sweep(const ScenarioSpec& spec, std::span<const double> lambdas);

inline constexpr const char* kPhaseCsvSchema = "hc3-phase-v1";

/// One row per solution:
/// scenario,k,m,r,lambda,count,critical,z1,z2,t1,t2,residual
/// (12 significant digits; m/r empty where the scenario has none).
void write_phase_csv(std::ostream& os, std::span<const PhasePoint> points);

struct ClaimCheck {
  std::string statement;  // what was compared, with the numbers involved
  bool pass = false;
};

struct ClaimReport {
  std::string claim_id;  // "theorem2".."theorem9", "prop1".."prop5"
  std::string anchor;    // "Theorem 2", ...
  int k = 0;
  int m = -1;
  int r = -1;
  bool pass = false;
  std::vector<ClaimCheck> checks;
  /// Nearest grid pair bracketing a solution-count change, when one exists;
  /// makes failures reproducible from the report alone.
  std::optional<std::pair<double, double>> count_jump_bracket;
};

/// Runs the verification procedure for one structural claim and reports
/// structured pass/fail evidence. Claims needing m (or m and r) reject
/// missing arguments. A failed check is a result, not an error.
ClaimReport verify_claim(const std::string& claim_id, int k, int m = -1, int r = -1);

std::vector<std::string> known_claims();

std::string claim_report_json(const ClaimReport& report);

/// %.12g formatting used for every floating value we print.
std::string format_sig12(double x);

}  // namespace hc3
