#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "formation_lab/assignment.hpp"
#include "formation_lab/core.hpp"
#include "formation_lab/rng.hpp"
#include "formation_lab/sensing.hpp"

namespace formlab {

// Ring/sector cell of the polar partition around a robot's own destination.
// h = 1 is the innermost ring (arrival), j counts sectors counterclockwise.
struct PolarRegion {
    int h = 1;
    int j = 1;
    bool operator==(const PolarRegion& o) const { return h == o.h && j == o.j; }
};

enum class StepAction {
    Inward,    // move to the next ring in, same sector
    SideCCW,   // sidestep to the counterclockwise neighbour sector
    SideCW,    // sidestep to the clockwise neighbour sector
    Stop,      // no safe move this slot
    Arrived,   // innermost ring reached, hold position
    Direct,    // outside the partition (or fine positioning): head straight in
};

struct StepDecision {
    StepAction action = StepAction::Stop;
    PolarRegion target;      // meaningful for Inward / Side moves
    Vec2 claim;              // predicted world position after the move
};

// A robot's declared landing point for the coming slot.
struct Claim {
    int robot = 0;
    Vec2 point;
};

enum class Phase { Forming, ApproachCenter };

struct SwarmState {
    int slot = 0;
    Phase phase = Phase::Forming;
    std::vector<RobotState> robots;
    FollowerGraph graph;
    std::optional<Vec2> center;        // set in center mode
    std::optional<int> leader;         // set in leader mode
    std::vector<Vec2> prev_destination;  // destinations seen last slot (arrival latching)

    int size() const { return static_cast<int>(robots.size()); }
};

struct CollisionEvent {
    int slot = 0;
    int a = 0;
    int b = 0;
    double distance = 0.0;
};

struct SlotSnapshot {
    int slot = 0;
    Phase phase = Phase::Forming;
    std::vector<Vec2> positions;
    std::vector<char> arrived;
};

// Full run record. practical/estimated costs use the same squared-distance
// convention the assignment objective uses: estimated sums squared
// straight-line distances, practical sums squared per-robot path lengths.
struct Trajectory {
    std::vector<SlotSnapshot> snapshots;
    std::vector<double> path_length;       // per robot, plain arc length
    std::vector<CollisionEvent> collisions;
    std::vector<StepDecision> last_decisions;
    bool converged = false;
    int slots_used = 0;
    double estimated_cost = 0.0;
    double practical_cost = 0.0;
    double final_bias = 0.0;
    std::vector<Vec2> destinations;        // final world slot targets
    Assignment assignment;
};

// Leader mode anchors the formation on a stationary leader; center mode
// anchors it on an explicit center point.
struct ModeSpec {
    std::optional<Vec2> center;  // nullopt: leader mode

    static ModeSpec Leader() { return ModeSpec{}; }
    static ModeSpec Center(const Vec2& c) { return ModeSpec{c}; }
};

// Reference structure for a solved assignment. Leader mode: k-nearest-
// neighbour graph over the formation slots (k = 3, grown until connected),
// BFS tree rooted at the leader slot; each robot follows the robot on its
// parent slot with offset = own slot - parent slot. Center mode: everyone
// follows the virtual center with offset = own slot.
FollowerGraph build_follower_graph(const Formation& f, const Assignment& a);

// destination_i = reference position + offset (center + offset in center
// mode). The reference position is read directly from the current state.
Vec2 current_destination(int robot, const SwarmState& s);

// Landing points within 2*safety_radius of each other, or within
// 2*safety_radius of another robot's current position (boundary inclusive).
std::vector<std::pair<int, int>> detect_conflicts(const std::vector<Claim>& claims,
                                                  const std::vector<Vec2>& positions,
                                                  double safety_radius);

// One robot's move choice: Arrived in ring 1, otherwise Inward, then
// sidesteps counterclockwise-first, then Stop — taking the first candidate
// whose landing point clears the binding claims (lower ids and holders) and
// every other robot's current position.
StepDecision plan_step(int robot, const PolarRegion& region, const Vec2& position,
                       const Vec2& perceived_delta,
                       const std::vector<Vec2>& positions,
                       const std::vector<Claim>& binding_claims, const SimConfig& cfg,
                       const QuantizerSpec& q);

// Advance one slot: every robot senses its own destination, plans in
// ascending id order, then all move simultaneously. report (optional)
// receives the per-robot decisions.
SwarmState step_swarm(const SwarmState& s, const SimConfig& cfg, const SensorModel& sensor,
                      const QuantizerSpec& q, const RngStream& run_rng,
                      std::vector<StepDecision>* report = nullptr);

// Translate the whole swarm toward center c until the swarm centroid is
// within d0 of it. Returns the visited states, initial state excluded.
std::vector<SwarmState> approach_center(const SwarmState& s, const Vec2& c, double d0,
                                        const SimConfig& cfg);

// Assign (leader enumeration or given center), then iterate step_swarm until
// every robot has arrived and stayed arrived for a full slot, or max_slots.
Trajectory run_to_formation(const std::vector<Vec2>& initial, const Formation& f,
                            const ModeSpec& mode, const SimConfig& cfg,
                            const SensorModel& sensor, const QuantizerSpec& q,
                            const RngStream& rng);

// Same run, but with a caller-chosen assignment (the arrangement-strategy
// comparison injects identity and random mappings through this).
Trajectory run_assigned(const std::vector<Vec2>& initial, const Formation& f,
                        const AssignmentResult& ar, std::optional<Vec2> center,
                        const SimConfig& cfg, const SensorModel& sensor,
                        const QuantizerSpec& q, const RngStream& rng);

// Conversion to a new formation from wherever the robots stand. Auto center
// (nullopt) places the new formation on the swarm centroid. A given center
// farther than d0 from the centroid triggers the approach phase first;
// d0 < 0 defaults to half the sensing radius.
Trajectory convert_formation(const std::vector<Vec2>& current, const Formation& target,
                             std::optional<Vec2> center, const SimConfig& cfg,
                             const SensorModel& sensor, const QuantizerSpec& q,
                             const RngStream& rng, double d0 = -1.0);

}  // namespace formlab
