#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <utility>
#include <vector>

#include "formation_lab/bounds.hpp"
#include "formation_lab/experiment.hpp"

namespace py = pybind11;
using namespace formlab;

namespace {

using PyPoint = std::pair<double, double>;

std::vector<Vec2> to_vecs(const std::vector<PyPoint>& pts) {
    std::vector<Vec2> out;
    out.reserve(pts.size());
    for (const PyPoint& p : pts) out.push_back({p.first, p.second});
    return out;
}

std::vector<PyPoint> to_pairs(const std::vector<Vec2>& pts) {
    std::vector<PyPoint> out;
    out.reserve(pts.size());
    for (const Vec2& p : pts) out.push_back({p.x, p.y});
    return out;
}

Formation formation_of(const std::vector<PyPoint>& slots) {
    return make_formation(to_vecs(slots));
}

py::dict record_dict(const ExperimentRecord& r) {
    py::dict d;
    d["trial"] = r.trial;
    d["seed"] = r.seed;
    d["estimated_cost"] = r.estimated_cost;
    d["practical_cost"] = r.practical_cost;
    d["formation_bias"] = r.formation_bias;
    d["slots_to_converge"] = r.slots_to_converge;
    d["collision_count"] = r.collision_count;
    d["converged"] = r.converged;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "semi-centralized multi-robot formation toolkit";

    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);

    m.def(
        "make_formation",
        [](const std::string& shape, int count, double area, int bottom) {
            FormationSpec spec{shape_from_name(shape), count, area,
                               bottom > 0 ? std::optional<int>(bottom) : std::nullopt};
            return to_pairs(make_formation_from_spec(spec).slots);
        },
        py::arg("shape"), py::arg("count"), py::arg("area"), py::arg("bottom") = -1,
        "Zero-centroid slot coordinates for a circle, square, or triangle.");

    m.def(
        "leading_slot",
        [](const std::vector<PyPoint>& slots) { return leading_slot(formation_of(slots)); },
        py::arg("slots"), "Index of the topmost slot (ties to the left).");

    m.def(
        "optimal_center",
        [](const std::vector<PyPoint>& pts) {
            Vec2 c = optimal_center(to_vecs(pts));
            return PyPoint{c.x, c.y};
        },
        py::arg("points"), "Placement center minimizing total squared travel.");

    m.def(
        "hungarian",
        [](const std::vector<std::vector<double>>& cost) {
            double total = 0.0;
            std::vector<int> perm = solve_square(cost, &total);
            return py::make_tuple(perm, total);
        },
        py::arg("cost"), "Minimum-cost perfect matching on a square cost matrix.");

    m.def(
        "assign_leader",
        [](const std::vector<PyPoint>& pts, const std::vector<PyPoint>& slots) {
            AssignmentResult r = assign_with_leader(to_vecs(pts), formation_of(slots));
            py::dict d;
            d["slot_of"] = r.assignment.slot_of;
            d["leader"] = *r.assignment.leader;
            d["leader_slot"] = *r.assignment.leader_slot;
            d["cost"] = r.total_cost;
            return d;
        },
        py::arg("points"), py::arg("slots"),
        "Leader choice plus slot assignment with the cheapest total squared travel.");

    m.def(
        "assign_center",
        [](const std::vector<PyPoint>& pts, const std::vector<PyPoint>& slots,
           const PyPoint& center) {
            AssignmentResult r = assign_with_center(to_vecs(pts), formation_of(slots),
                                                    {center.first, center.second});
            py::dict d;
            d["slot_of"] = r.assignment.slot_of;
            d["cost"] = r.total_cost;
            return d;
        },
        py::arg("points"), py::arg("slots"), py::arg("center"),
        "Slot assignment for a formation anchored at an explicit center.");

    m.def(
        "quant_bits", [](int n_r) { return quant_bits(n_r); }, py::arg("partitions"),
        "Bits carried by a ring index with this many partitions.");

    m.def(
        "accuracy_floor",
        [](int n, double sigma, double l0, double bits, bool nats) {
            return bayes_lower_bound(BoundParams{n, sigma, l0, bits},
                                     nats ? LogBase::Nats : LogBase::Bits);
        },
        py::arg("samples"), py::arg("sigma"), py::arg("l0"), py::arg("bits"),
        py::arg("nats") = false,
        "Best achievable mean distance-estimation error for this sensing budget.");

    m.def(
        "info_upper",
        [](int n, double sigma, double l0, double bits, bool nats) {
            return mi_upper(BoundParams{n, sigma, l0, bits},
                            nats ? LogBase::Nats : LogBase::Bits);
        },
        py::arg("samples"), py::arg("sigma"), py::arg("l0"), py::arg("bits"),
        py::arg("nats") = false,
        "Information ceiling between true and estimated distance.");

    m.def(
        "parse_scenario",
        [](const std::string& text) {
            Scenario sc = parse_scenario(text);
            py::dict d;
            d["robot_count"] = sc.robot_count;
            d["trials"] = sc.trials;
            d["seed"] = sc.seed;
            d["leader_mode"] = sc.leader_mode;
            d["shape"] = shape_name(sc.formation_spec().shape);
            d["area"] = sc.formation_spec().area;
            return d;
        },
        py::arg("text"), "Parse a scenario file body and report its headline settings.");

    m.def(
        "simulate",
        [](const std::string& text, int trial, const std::string& csv,
           const std::string& svg) {
            Scenario sc = parse_scenario(text);
            apply_env_seed(sc);
            return record_dict(run_demo(sc, trial, csv, svg));
        },
        py::arg("scenario_text"), py::arg("trial") = 0, py::arg("csv") = "",
        py::arg("svg") = "", "Run one formation attempt described by a scenario body.");

    m.def(
        "convert",
        [](const std::string& text, int trial) {
            Scenario sc = parse_scenario(text);
            apply_env_seed(sc);
            return record_dict(run_convert_demo(sc, trial));
        },
        py::arg("scenario_text"), py::arg("trial") = 0,
        "Reshape a formed swarm into the scenario's convert target.");

    m.def(
        "cost_comparison",
        [](const std::string& text) {
            Scenario sc = parse_scenario(text);
            apply_env_seed(sc);
            CostComparison c = run_cost_comparison(sc);
            py::dict d;
            d["mean"] = std::vector<double>(c.mean, c.mean + 3);
            d["stddev"] = std::vector<double>(c.stddev, c.stddev + 3);
            d["solver_best"] = c.solver_best;
            d["trials"] = static_cast<int>(c.rows.size());
            return d;
        },
        py::arg("scenario_text"),
        "Practical-cost comparison of solver, fixed, and random arrangements.");

    m.def(
        "bias_sweep",
        [](const std::string& text, const std::string& axis, std::vector<double> values,
           int trials) {
            Scenario sc = parse_scenario(text);
            apply_env_seed(sc);
            SweepAxis ax = parse_sweep_axis(axis);
            if (values.empty()) values = default_axis_values(ax);
            if (trials <= 0) trials = sc.trials;
            py::list out;
            for (const SweepPoint& p : run_bias_sweep(sc, ax, values, trials)) {
                py::dict d;
                d["param"] = p.param;
                d["mean_bias"] = p.mean_bias;
                d["std_bias"] = p.std_bias;
                d["bound"] = p.bound;
                out.append(d);
            }
            return out;
        },
        py::arg("scenario_text"), py::arg("axis"),
        py::arg("values") = std::vector<double>{}, py::arg("trials") = 0,
        "Mean closing error per axis value, with the matching accuracy floor.");
}
