#include "formation_lab/cli.hpp"

#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "formation_lab/bounds.hpp"
#include "formation_lab/experiment.hpp"

namespace formlab {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotConverged = 2;
constexpr int kExitUsage = 64;

Scenario load_for_cli(const std::string& path) {
    Scenario sc = load_scenario_file(path);
    apply_env_seed(sc);
    validate_scenario(sc);
    return sc;
}

void print_record(const ExperimentRecord& r) {
    std::printf("trial %d (seed %llu)\n", r.trial,
                static_cast<unsigned long long>(r.seed));
    std::printf("  converged       %s (%d slots)\n", r.converged ? "yes" : "no",
                r.slots_to_converge);
    std::printf("  estimated cost  %.6f\n", r.estimated_cost);
    std::printf("  practical cost  %.6f\n", r.practical_cost);
    std::printf("  formation bias  %.6f\n", r.formation_bias);
    std::printf("  collisions      %d\n", r.collision_count);
}

int cmd_assign(const std::string& scenario_path, int trial) {
    Scenario sc = load_for_cli(scenario_path);
    RngStream init_rng = RngStream(sc.seed).substream(1, static_cast<std::uint64_t>(trial));
    std::vector<Vec2> initial = sample_initial_positions(sc, init_rng);
    Formation f = make_formation_from_spec(sc.formation_spec());

    AssignmentResult ar;
    if (sc.leader_mode) {
        ar = assign_with_leader(initial, f);
    } else {
        Vec2 c = sc.given_center ? *sc.given_center : optimal_center(initial);
        std::printf("center %.6f %.6f\n", c.x, c.y);
        ar = assign_with_center(initial, f, c);
    }
    if (ar.assignment.leader)
        std::printf("leader robot %d on slot %d\n", *ar.assignment.leader + 1,
                    *ar.assignment.leader_slot + 1);
    for (int i = 0; i < static_cast<int>(ar.assignment.slot_of.size()); ++i)
        std::printf("robot %d -> slot %d\n", i + 1, ar.assignment.slot_of[i] + 1);
    std::printf("total cost %.6f\n", ar.total_cost);
    return kExitOk;
}

int cmd_simulate(const std::string& scenario_path, int trial, const std::string& csv,
                 const std::string& svg) {
    Scenario sc = load_for_cli(scenario_path);
    ExperimentRecord r = run_demo(sc, trial, csv, svg);
    print_record(r);
    return r.converged ? kExitOk : kExitNotConverged;
}

int cmd_convert(const std::string& scenario_path, int trial, const std::string& csv,
                const std::string& svg) {
    Scenario sc = load_for_cli(scenario_path);
    ExperimentRecord r = run_convert_demo(sc, trial, csv, svg);
    print_record(r);
    return r.converged ? kExitOk : kExitNotConverged;
}

int cmd_bound(int samples, double sigma, double l0, double bits, int partitions,
              bool nats) {
    if (partitions > 0) bits = quant_bits(partitions);
    BoundParams p{samples, sigma, l0, bits};
    validate_bound_params(p);
    LogBase base = nats ? LogBase::Nats : LogBase::Bits;
    const char* unit = nats ? "nats" : "bits";

    std::printf("samples %d, sigma %.6g, l0 %.6g, %.6g %s of quantization\n", p.n, p.sigma,
                p.l0, p.b, unit);
    std::printf("  prior entropy        %.9g %s\n", differential_entropy(p.l0, base), unit);
    std::printf("  fisher information   %.9g\n", fisher_information(p.n, p.sigma));
    std::printf("  gaussian info cap    %.9g %s\n", mi_upper_gaussian(p, base), unit);
    std::printf("  contraction (eta<=)  %.9g\n", sdpi_eta_upper(p));
    std::printf("  info upper bound     %.9g %s\n", mi_upper(p, base), unit);
    std::printf("  accuracy floor       %.9g\n", bayes_lower_bound(p, base));
    return kExitOk;
}

int cmd_experiment_cost(const std::string& scenario_path, const std::string& out_csv) {
    Scenario sc = load_for_cli(scenario_path);
    CostComparison c = run_cost_comparison(sc);
    if (!out_csv.empty()) write_comparison_csv(out_csv, c.rows);

    static const char* kNames[3] = {"hungarian", "fixed", "random"};
    std::printf("practical cost over %d trials\n", static_cast<int>(c.rows.size()));
    for (int s = 0; s < 3; ++s)
        std::printf("  %-9s mean %14.3f  std %14.3f\n", kNames[s], c.mean[s], c.stddev[s]);
    std::printf("solver best in %d/%d trials\n", c.solver_best,
                static_cast<int>(c.rows.size()));
    return kExitOk;
}

int cmd_experiment_bias(const std::string& scenario_path, const std::string& axis_name,
                        std::vector<double> values, int trials,
                        const std::string& out_csv) {
    Scenario sc = load_for_cli(scenario_path);
    SweepAxis axis = parse_sweep_axis(axis_name);
    if (values.empty()) values = default_axis_values(axis);
    if (trials <= 0) trials = sc.trials;

    std::vector<SweepPoint> points = run_bias_sweep(sc, axis, values, trials);
    if (!out_csv.empty()) write_sweep_csv(out_csv, points);

    std::printf("%-12s %14s %14s %14s\n", axis_name.c_str(), "mean bias", "std bias",
                "accuracy floor");
    for (const SweepPoint& p : points)
        std::printf("%-12.6g %14.6f %14.6f %14.6f\n", p.param, p.mean_bias, p.std_bias,
                    p.bound);
    return kExitOk;
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv) {
    CLI::App app{"multi-robot formation toolkit"};
    app.require_subcommand(1);

    std::string scenario_path, csv_path, svg_path, axis_name = "samples", out_csv;
    int trial = 0;
    int sweep_trials = 0;
    std::vector<double> axis_values;

    auto add_scenario = [&](CLI::App* cmd) {
        cmd->add_option("-s,--scenario", scenario_path, "scenario file")->required();
        cmd->add_option("-t,--trial", trial, "trial index (selects starting positions)");
    };

    CLI::App* assign = app.add_subcommand("assign", "solve the slot assignment only");
    add_scenario(assign);

    CLI::App* simulate = app.add_subcommand("simulate", "run a full formation attempt");
    add_scenario(simulate);
    simulate->add_option("--csv", csv_path, "write the trajectory table here");
    simulate->add_option("--svg", svg_path, "write a path overlay drawing here");

    CLI::App* convert = app.add_subcommand("convert", "reshape an already-formed swarm");
    add_scenario(convert);
    convert->add_option("--csv", csv_path, "write the trajectory table here");
    convert->add_option("--svg", svg_path, "write a path overlay drawing here");

    CLI::App* bound = app.add_subcommand("bound", "print the sensing accuracy floor");
    int b_samples = 10, b_partitions = 0;
    double b_sigma = 1.0, b_l0 = 120.0, b_bits = 7.0;
    bool b_nats = false;
    bound->add_option("-n,--n,--samples", b_samples, "distance samples per slot");
    bound->add_option("--sigma", b_sigma, "sensor noise (std dev)");
    bound->add_option("--l0", b_l0, "prior interval width");
    bound->add_option("-b,--bits", b_bits, "quantizer budget in bits");
    bound->add_option("--partitions", b_partitions, "ring count (overrides --bits)");
    bound->add_flag("--nats", b_nats, "report in nats instead of bits");

    CLI::App* experiment = app.add_subcommand("experiment", "batched study runs");
    experiment->require_subcommand(1);
    CLI::App* exp_cost = experiment->add_subcommand(
        "cost", "compare arrangement strategies on shared starts");
    add_scenario(exp_cost);
    exp_cost->add_option("-o,--out", out_csv, "write per-trial costs here");
    CLI::App* exp_bias = experiment->add_subcommand(
        "bias", "closing error vs one sensing parameter, with the accuracy floor");
    add_scenario(exp_bias);
    exp_bias->add_option("--axis", axis_name, "samples, sigma, or partitions");
    exp_bias->add_option("--values", axis_values, "axis values (default: built-in grid)");
    exp_bias->add_option("--trials", sweep_trials, "runs per point (default: scenario trials)");
    exp_bias->add_option("-o,--out", out_csv, "write the sweep table here");

    try {
        app.parse(argc, const_cast<char**>(argv));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(assign)) return cmd_assign(scenario_path, trial);
        if (app.got_subcommand(simulate))
            return cmd_simulate(scenario_path, trial, csv_path, svg_path);
        if (app.got_subcommand(convert))
            return cmd_convert(scenario_path, trial, csv_path, svg_path);
        if (app.got_subcommand(bound))
            return cmd_bound(b_samples, b_sigma, b_l0, b_bits, b_partitions, b_nats);
        if (app.got_subcommand(experiment)) {
            if (experiment->got_subcommand(exp_cost))
                return cmd_experiment_cost(scenario_path, out_csv);
            return cmd_experiment_bias(scenario_path, axis_name, axis_values, sweep_trials,
                                       out_csv);
        }
    } catch (const InvalidInput& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace formlab
