#include "formation_lab/experiment.hpp"

#include <cmath>

#include "formation_lab/assignment.hpp"
#include "formation_lab/bounds.hpp"
#include "formation_lab/svg.hpp"

namespace formlab {

namespace {

// Substream tags. Trials are paired across strategies and sweep points by
// construction: anything that depends on the trial index alone (starts,
// random arrangements) is drawn from streams keyed only by that index.
constexpr std::uint64_t kInitTag = 1;
constexpr std::uint64_t kRunTag = 2;
constexpr std::uint64_t kPermTag = 3;
constexpr std::uint64_t kSweepTag = 4;
constexpr std::uint64_t kStrategyTag0 = 10;

ExperimentRecord to_record(const Trajectory& t, int trial, std::uint64_t seed) {
    ExperimentRecord r;
    r.trial = trial;
    r.seed = seed;
    r.estimated_cost = t.estimated_cost;
    r.practical_cost = t.practical_cost;
    r.formation_bias = t.final_bias;
    r.slots_to_converge = t.slots_used;
    r.collision_count = static_cast<int>(t.collisions.size());
    r.converged = t.converged;
    return r;
}

void emit_outputs(const Trajectory& t, const std::string& csv_path,
                  const std::string& svg_path) {
    if (!csv_path.empty()) write_trajectory_csv(csv_path, t);
    if (!svg_path.empty()) write_overlay_svg(svg_path, t);
}

double mean_of(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

double sample_std(const std::vector<double>& v, double mean) {
    if (v.size() < 2) return 0.0;
    double s = 0.0;
    for (double x : v) s += (x - mean) * (x - mean);
    return std::sqrt(s / static_cast<double>(v.size() - 1));
}

}  // namespace

ExperimentRecord run_demo(const Scenario& sc, int trial, const std::string& csv_path,
                          const std::string& svg_path, Trajectory* out) {
    validate_scenario(sc);
    RngStream root(sc.seed);
    RngStream init_rng = root.substream(kInitTag, static_cast<std::uint64_t>(trial));
    std::vector<Vec2> initial = sample_initial_positions(sc, init_rng);

    Formation f = make_formation_from_spec(sc.formation_spec());
    ModeSpec mode = sc.leader_mode
                        ? ModeSpec::Leader()
                        : ModeSpec::Center(sc.given_center ? *sc.given_center
                                                           : optimal_center(initial));
    Trajectory t = run_to_formation(initial, f, mode, sc.sim, sc.sensor, sc.quantizer(),
                                    root.substream(kRunTag, static_cast<std::uint64_t>(trial)));
    emit_outputs(t, csv_path, svg_path);
    ExperimentRecord r = to_record(t, trial, sc.seed);
    if (out) *out = std::move(t);
    return r;
}

ExperimentRecord run_convert_demo(const Scenario& sc, int trial, const std::string& csv_path,
                                  const std::string& svg_path, Trajectory* out) {
    validate_scenario(sc);
    if (!sc.has_convert || !sc.convert_to)
        throw InvalidInput("run_convert_demo: scenario has no [convert] section");

    // The swarm starts already formed up on the [formation] slots.
    Formation from = make_formation_from_spec(sc.formation_spec());
    Formation to = make_formation_from_spec(sc.convert_spec());

    RngStream root(sc.seed);
    Trajectory t = convert_formation(from.slots, to, sc.convert_center, sc.sim, sc.sensor,
                                     sc.quantizer(),
                                     root.substream(kRunTag, static_cast<std::uint64_t>(trial)),
                                     sc.d0);
    emit_outputs(t, csv_path, svg_path);
    ExperimentRecord r = to_record(t, trial, sc.seed);
    if (out) *out = std::move(t);
    return r;
}

CostComparison run_cost_comparison(const Scenario& sc) {
    validate_scenario(sc);
    Formation f = make_formation_from_spec(sc.formation_spec());
    int n = sc.robot_count;
    RngStream root(sc.seed);

    int lead_slot = sc.leader_mode ? leading_slot(f) : -1;
    CostComparison out;
    std::vector<double> cost[3];

    for (int trial = 0; trial < sc.trials; ++trial) {
        std::uint64_t tr = static_cast<std::uint64_t>(trial);
        RngStream init_rng = root.substream(kInitTag, tr);
        std::vector<Vec2> initial = sample_initial_positions(sc, init_rng);
        std::optional<Vec2> center;
        if (!sc.leader_mode)
            center = sc.given_center ? *sc.given_center : optimal_center(initial);

        AssignmentResult ar[3];
        // solved arrangement
        ar[0] = center ? assign_with_center(initial, f, *center)
                       : assign_with_leader(initial, f);

        // fixed arrangement: robot i takes slot i, forever
        Assignment fixed;
        fixed.slot_of.resize(n);
        for (int i = 0; i < n; ++i) fixed.slot_of[i] = i;
        if (!center) {
            fixed.leader = lead_slot;  // the robot whose index equals the leading slot
            fixed.leader_slot = lead_slot;
        }
        ar[1] = {fixed, assignment_cost(initial, f, fixed, center)};

        // fresh random arrangement every trial
        Assignment rnd;
        rnd.slot_of = root.substream(kPermTag, tr).permutation(n);
        if (!center) {
            for (int i = 0; i < n; ++i)
                if (rnd.slot_of[i] == lead_slot) rnd.leader = i;
            rnd.leader_slot = lead_slot;
        }
        ar[2] = {rnd, assignment_cost(initial, f, rnd, center)};

        CostComparisonRow practical{trial, 0, 0, 0};
        CostComparisonRow estimated{trial, 0, 0, 0};
        double p[3];
        for (int s = 0; s < 3; ++s) {
            Trajectory t = run_assigned(initial, f, ar[s], center, sc.sim, sc.sensor,
                                        sc.quantizer(),
                                        root.substream(kStrategyTag0 + s, tr));
            p[s] = t.practical_cost;
            cost[s].push_back(t.practical_cost);
            out.collision_total += static_cast<int>(t.collisions.size());
        }
        practical.hungarian = p[0];
        practical.fixed = p[1];
        practical.random = p[2];
        estimated.hungarian = ar[0].total_cost;
        estimated.fixed = ar[1].total_cost;
        estimated.random = ar[2].total_cost;
        out.rows.push_back(practical);
        out.rows_estimated.push_back(estimated);
        if (p[0] <= p[1] && p[0] <= p[2]) ++out.solver_best;
    }

    for (int s = 0; s < 3; ++s) {
        out.mean[s] = mean_of(cost[s]);
        out.stddev[s] = sample_std(cost[s], out.mean[s]);
    }
    return out;
}

SweepAxis parse_sweep_axis(const std::string& name) {
    if (name == "samples" || name == "n") return SweepAxis::Samples;
    if (name == "sigma") return SweepAxis::Sigma;
    if (name == "partitions" || name == "b") return SweepAxis::Partitions;
    throw InvalidInput("sweep axis must be samples (n), sigma, or partitions (b)");
}

std::vector<double> default_axis_values(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::Samples: return {1, 5, 10, 20, 40, 60};
        case SweepAxis::Sigma: return {0.1, 0.5, 0.9, 1.3};
        case SweepAxis::Partitions: return {50, 100, 150, 200};
    }
    return {};
}

std::vector<SweepPoint> run_bias_sweep(const Scenario& base, SweepAxis axis,
                                       const std::vector<double>& values,
                                       int trials_per_point, int* collisions_out) {
    if (values.empty()) throw InvalidInput("bias sweep: no axis values");
    if (trials_per_point < 1) throw InvalidInput("bias sweep: trials_per_point must be >= 1");

    RngStream root(base.seed);
    std::vector<SweepPoint> points;
    points.reserve(values.size());

    for (size_t pi = 0; pi < values.size(); ++pi) {
        Scenario sc = base;
        switch (axis) {
            case SweepAxis::Samples:
                sc.sensor.n_samples = static_cast<int>(values[pi]);
                break;
            case SweepAxis::Sigma:
                sc.sensor.sigma = values[pi];
                break;
            case SweepAxis::Partitions:
                sc.sim.n_r = static_cast<int>(values[pi]);
                break;
        }
        validate_scenario(sc);

        Formation f = make_formation_from_spec(sc.formation_spec());
        QuantizerSpec q = sc.quantizer();
        RngStream point_root = root.substream(kSweepTag, pi);

        std::vector<double> biases;
        biases.reserve(trials_per_point);
        for (int trial = 0; trial < trials_per_point; ++trial) {
            std::uint64_t tr = static_cast<std::uint64_t>(trial);
            RngStream init_rng = point_root.substream(kInitTag, tr);
            std::vector<Vec2> initial = sample_initial_positions(sc, init_rng);
            ModeSpec mode = sc.leader_mode
                                ? ModeSpec::Leader()
                                : ModeSpec::Center(sc.given_center ? *sc.given_center
                                                                   : optimal_center(initial));
            Trajectory t = run_to_formation(initial, f, mode, sc.sim, sc.sensor, q,
                                            point_root.substream(kRunTag, tr));
            biases.push_back(t.final_bias);
            if (collisions_out) *collisions_out += static_cast<int>(t.collisions.size());
        }

        SweepPoint p;
        p.param = values[pi];
        p.mean_bias = mean_of(biases);
        p.std_bias = sample_std(biases, p.mean_bias);
        p.bound = bayes_lower_bound(
            BoundParams{sc.sensor.n_samples, sc.sensor.sigma, sc.l0, quant_bits(sc.sim.n_r)});
        points.push_back(p);
    }
    return points;
}

}  // namespace formlab
