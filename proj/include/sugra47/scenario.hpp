#ifndef SUGRA47_SCENARIO_HPP
#define SUGRA47_SCENARIO_HPP

#include "sugra47/io.hpp"
#include "sugra47/scenarios.hpp"

namespace sugra47 {

/// A parsed scenario: geometry (either a Lie algebra split or a coframe DGA),
/// an invariant metric, optional candidate data, and the tasks to run.
struct Scenario {
  std::string name;
  ReductiveSpace space;  // orthonormalized for the scenario metric
  int orientation = 1;
  std::optional<KForm> phi;
  std::optional<Scalar> f;
  std::vector<std::string> tasks;
  ToleranceConfig tol;
};

/// Schema 1. Exactly one of geometry.lie_algebra / geometry.coframe_dga.
/// force_float downgrades every scalar to float mode.
Scenario scenario_from_json(const Json& j, bool force_float, double tolerance);

struct RunResult {
  int exit_code = 0;  // 0 pass, 1 Maxwell failed, 2 Maxwell ok Einstein failed, 3 structural
  Json report;
};

RunResult run_tasks(const Scenario& s);

const std::vector<std::string>& demo_names();
RunResult run_demo(const std::string& name, bool force_float, double tolerance);

std::string render_text(const Json& report);

}  // namespace sugra47

#endif
