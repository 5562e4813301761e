#pragma once

#include <string>
#include <vector>

#include "formation_lab/csvio.hpp"
#include "formation_lab/motion.hpp"
#include "formation_lab/scenario.hpp"

namespace formlab {

// One finished run, reduced to the numbers the experiment tables report.
struct ExperimentRecord {
    int trial = 0;
    std::uint64_t seed = 0;
    double estimated_cost = 0.0;
    double practical_cost = 0.0;
    double formation_bias = 0.0;
    int slots_to_converge = 0;
    int collision_count = 0;
    bool converged = false;
};

// Sample starts for trial `t` of the scenario and run it to the scenario's
// formation. Optional CSV/SVG outputs; `out` receives the full trajectory.
ExperimentRecord run_demo(const Scenario& sc, int trial = 0,
                          const std::string& csv_path = "",
                          const std::string& svg_path = "",
                          Trajectory* out = nullptr);

// Start on the scenario's [formation] slots and convert to its [convert]
// target (two-phase when the convert center is far away).
ExperimentRecord run_convert_demo(const Scenario& sc, int trial = 0,
                                  const std::string& csv_path = "",
                                  const std::string& svg_path = "",
                                  Trajectory* out = nullptr);

struct CostComparison {
    std::vector<CostComparisonRow> rows;   // practical cost per trial
    std::vector<CostComparisonRow> rows_estimated;
    double mean[3] = {0, 0, 0};            // solver, fixed, random
    double stddev[3] = {0, 0, 0};          // sample std across trials
    int solver_best = 0;                   // trials where the solver is <= both
    int collision_total = 0;               // collision events summed over every run
};

// Paired comparison of arrangement strategies on shared starts: the matching
// solver, a fixed identity arrangement, and a random permutation.
CostComparison run_cost_comparison(const Scenario& sc);

enum class SweepAxis { Samples, Sigma, Partitions };

SweepAxis parse_sweep_axis(const std::string& name);
std::vector<double> default_axis_values(SweepAxis axis);

// Mean closing error over repeated runs at each axis value, with the matching
// accuracy floor for the sensing budget at that point. When `collisions_out`
// is given, collision events from every trial are added to it.
std::vector<SweepPoint> run_bias_sweep(const Scenario& base, SweepAxis axis,
                                       const std::vector<double>& values,
                                       int trials_per_point,
                                       int* collisions_out = nullptr);

}  // namespace formlab
