#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "formation_lab/core.hpp"
#include "formation_lab/formations.hpp"
#include "formation_lab/motion.hpp"
#include "formation_lab/rng.hpp"
#include "formation_lab/sensing.hpp"

namespace formlab {

// A runnable experiment description. Loaded from flat "key = value" files
// with [section] headers; see docs/scenario-format.md for the schema.
struct Scenario {
    // [scenario]
    int robot_count = 15;
    double init_width = 300.0;
    double init_height = 300.0;
    int trials = 20;
    std::uint64_t seed = 1;

    // [formation] — count 0 means "use robot_count"
    FormationSpec formation{Shape::Square, 0, 28800.0, std::nullopt};

    // [mode]
    bool leader_mode = true;
    std::optional<Vec2> given_center;  // center mode only; nullopt = auto
    double d0 = -1.0;                  // approach threshold; <0 = radius/2

    // [sim] / [sensor] / [quantizer]
    SimConfig sim;
    SensorModel sensor;
    double l0 = 120.0;

    // [convert] (optional)
    std::optional<FormationSpec> convert_to;
    std::optional<Vec2> convert_center;  // nullopt = auto
    bool has_convert = false;

    QuantizerSpec quantizer() const {
        return QuantizerSpec{sim.radius, sim.n_r, sim.n_theta, l0};
    }
    FormationSpec formation_spec() const {
        FormationSpec f = formation;
        if (f.count == 0) f.count = robot_count;
        return f;
    }
    FormationSpec convert_spec() const {
        FormationSpec f = *convert_to;
        if (f.count == 0) f.count = robot_count;
        return f;
    }
};

Scenario parse_scenario(const std::string& text);
Scenario load_scenario_file(const std::string& path);

// FORMATION_LAB_SEED, when set, overrides the scenario seed.
void apply_env_seed(Scenario& sc);

void validate_scenario(const Scenario& sc);

// Uniform positions in the centred init box, redrawn so all pairs stay
// farther than 2 * safety_radius apart (touching starts would wedge the
// conflict rules immediately).
std::vector<Vec2> sample_initial_positions(const Scenario& sc, RngStream& rng);

}  // namespace formlab
