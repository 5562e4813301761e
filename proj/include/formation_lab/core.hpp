#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "formation_lab/vec2.hpp"

namespace formlab {

// Thrown on contract violations (bad dimensions, non-finite input, broken
// invariants). The CLI maps it to the usage exit code.
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// Robot ids are 0-based indices into the swarm; reference id kCenterRef in a
// follower graph means "follow the virtual center", not another robot.
inline constexpr int kCenterRef = -1;

struct RobotState {
    int id = 0;
    Vec2 position;
    Vec2 velocity;
    bool arrived = false;
};

inline Vec2 centroid(const std::vector<Vec2>& pts) {
    if (pts.empty()) throw InvalidInput("centroid: empty point set");
    Vec2 c;
    for (const Vec2& p : pts) {
        if (!p.finite()) throw InvalidInput("centroid: non-finite point");
        c += p;
    }
    return c / static_cast<double>(pts.size());
}

// A formation is a list of slot positions whose centroid is the origin, so a
// placed formation is always "slots + center". Slots must be pairwise
// distinct. Construct via make_formation, which validates both properties.
struct Formation {
    std::vector<Vec2> slots;

    int size() const { return static_cast<int>(slots.size()); }
};

inline constexpr double kCentroidTol = 1e-9;

inline Formation make_formation(std::vector<Vec2> slots) {
    if (slots.empty()) throw InvalidInput("formation: needs at least one slot");
    Vec2 c = centroid(slots);
    if (std::abs(c.x) > kCentroidTol || std::abs(c.y) > kCentroidTol)
        throw InvalidInput("formation: slot centroid is not the origin");
    for (size_t i = 0; i < slots.size(); ++i)
        for (size_t j = i + 1; j < slots.size(); ++j)
            if (dist2(slots[i], slots[j]) == 0.0)
                throw InvalidInput("formation: duplicate slot positions");
    return Formation{std::move(slots)};
}

// Robot -> slot bijection. In leader mode the leader robot is pinned to the
// leading slot and the rest come out of the assignment solve.
struct Assignment {
    std::vector<int> slot_of;             // slot_of[robot] = slot index
    std::optional<int> leader;            // leader robot id, leader mode only
    std::optional<int> leader_slot;       // slot held by the leader

    int size() const { return static_cast<int>(slot_of.size()); }
};

inline void validate_assignment(const Assignment& a) {
    int n = a.size();
    std::vector<char> seen(n, 0);
    for (int s : a.slot_of) {
        if (s < 0 || s >= n) throw InvalidInput("assignment: slot index out of range");
        if (seen[s]) throw InvalidInput("assignment: mapping is not a bijection");
        seen[s] = 1;
    }
    if (a.leader.has_value() != a.leader_slot.has_value())
        throw InvalidInput("assignment: leader and leader_slot must come together");
    if (a.leader) {
        if (*a.leader < 0 || *a.leader >= n)
            throw InvalidInput("assignment: leader id out of range");
        if (a.slot_of[*a.leader] != *a.leader_slot)
            throw InvalidInput("assignment: leader is not on the leader slot");
    }
}

// Who each robot takes its position reference from, plus the offset that
// puts it on its own slot: destination_i = position(reference_i) + offset_i.
// reference kCenterRef means the destination is center + offset_i.
struct FollowerGraph {
    std::vector<int> reference;   // robot id or kCenterRef
    std::vector<Vec2> offset;

    int size() const { return static_cast<int>(reference.size()); }
};

// Slot-synchronous simulation parameters. The polar partition around each
// destination has n_r rings over sensing radius R and n_theta sector
// boundaries (n_theta - 1 sectors), matching the quantizer.
struct SimConfig {
    double u_max = 5.0;            // per-slot speed cap
    double radius = 300.0;         // sensing/partition radius R
    int n_r = 128;                 // ring boundary count
    int n_theta = 25;              // sector boundary count
    double safety_radius = 1.0;
    double arrival_tolerance = -1.0;  // <0: default to one ring width
    int max_slots = 3000;

    double ring_width() const { return radius / (n_r - 1); }
    double arrival_tol() const {
        return arrival_tolerance < 0.0 ? ring_width() : arrival_tolerance;
    }
};

inline void validate_config(const SimConfig& c) {
    if (!(c.u_max > 0.0)) throw InvalidInput("config: u_max must be > 0");
    if (!(c.radius > 0.0)) throw InvalidInput("config: radius must be > 0");
    if (c.n_r < 2) throw InvalidInput("config: need at least 2 ring boundaries");
    if (c.n_theta < 3) throw InvalidInput("config: need at least 3 sector boundaries");
    if (!(c.safety_radius > 0.0)) throw InvalidInput("config: safety_radius must be > 0");
    if (c.max_slots < 1) throw InvalidInput("config: max_slots must be >= 1");
    // The innermost ring is where arrival is declared, so the tolerance ball
    // must fit inside it.
    if (c.arrival_tol() > c.ring_width() + 1e-12)
        throw InvalidInput("config: arrival_tolerance exceeds one ring width");
    if (!(c.arrival_tol() > 0.0)) throw InvalidInput("config: arrival_tolerance must be > 0");
}

// One slot of motion: clamp the commanded displacement to u_max and apply it.
// Returns the state advanced by the clamped displacement.
inline RobotState step_kinematics(const RobotState& s, const Vec2& commanded, double u_max) {
    if (!commanded.finite() || !s.position.finite())
        throw InvalidInput("step_kinematics: non-finite input");
    if (!(u_max >= 0.0)) throw InvalidInput("step_kinematics: negative u_max");
    RobotState out = s;
    out.velocity = clamp_norm(commanded, u_max);
    out.position = s.position + out.velocity;
    return out;
}

}  // namespace formlab
