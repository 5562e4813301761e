#include "formation_lab/motion.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace formlab {

namespace {

// A latched arrival only unlatches when the robot's destination actually
// moves (a follower's reference stepping away), not on sensing noise.
constexpr double kDestMoveTol = 1e-9;

int wrap_sector(int j, const QuantizerSpec& q) {
    int sectors = q.n_theta - 1;
    return (j - 1 + sectors) % sectors + 1;
}

Vec2 region_representative(const PolarRegion& r, const QuantizerSpec& q) {
    return from_polar(ring_midpoint(r.h, q), sector_midpoint(r.j, q));
}

bool claim_clear(const Vec2& claim, int robot, const std::vector<Vec2>& positions,
                 const std::vector<Claim>& binding_claims, double safety_radius) {
    double guard = 2.0 * safety_radius;
    for (const Claim& c : binding_claims) {
        if (c.robot == robot) continue;
        if (dist(claim, c.point) <= guard) return false;
    }
    for (size_t k = 0; k < positions.size(); ++k) {
        if (static_cast<int>(k) == robot) continue;
        if (dist(claim, positions[k]) <= guard) return false;
    }
    return true;
}

}  // namespace

FollowerGraph build_follower_graph(const Formation& f, const Assignment& a) {
    int n = f.size();
    if (a.size() != n) throw InvalidInput("follower graph: assignment/formation size mismatch");
    validate_assignment(a);

    FollowerGraph g;
    g.reference.assign(n, kCenterRef);
    g.offset.assign(n, Vec2{});

    if (!a.leader) {
        for (int i = 0; i < n; ++i) g.offset[i] = f.slots[a.slot_of[i]];
        return g;
    }

    int leader = *a.leader;
    int lead_slot = *a.leader_slot;
    std::vector<int> robot_of_slot(n, -1);
    for (int i = 0; i < n; ++i) robot_of_slot[a.slot_of[i]] = i;

    // k-nearest-neighbour adjacency over slots, symmetrized; grow k until
    // every slot is reachable from the leader slot.
    std::vector<int> parent(n, -1);
    for (int k = std::min(3, n - 1); k <= n - 1; ++k) {
        std::vector<std::vector<int>> adj(n);
        for (int u = 0; u < n; ++u) {
            std::vector<int> order;
            for (int v = 0; v < n; ++v)
                if (v != u) order.push_back(v);
            std::sort(order.begin(), order.end(), [&](int x, int y) {
                double dx = dist2(f.slots[u], f.slots[x]);
                double dy = dist2(f.slots[u], f.slots[y]);
                return dx != dy ? dx < dy : x < y;
            });
            for (int t = 0; t < k && t < static_cast<int>(order.size()); ++t) {
                adj[u].push_back(order[t]);
                adj[order[t]].push_back(u);
            }
        }
        for (auto& lst : adj) {
            std::sort(lst.begin(), lst.end());
            lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
        }

        std::fill(parent.begin(), parent.end(), -1);
        parent[lead_slot] = lead_slot;
        std::queue<int> bfs;
        bfs.push(lead_slot);
        int seen = 1;
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            for (int v : adj[u])
                if (parent[v] < 0) {
                    parent[v] = u;
                    bfs.push(v);
                    ++seen;
                }
        }
        if (seen == n) break;
        if (k == n - 1) throw InvalidInput("follower graph: slots not connectable");
    }

    g.reference[leader] = leader;
    g.offset[leader] = Vec2{};
    for (int s = 0; s < n; ++s) {
        if (s == lead_slot) continue;
        int robot = robot_of_slot[s];
        int parent_robot = robot_of_slot[parent[s]];
        g.reference[robot] = parent_robot;
        g.offset[robot] = f.slots[s] - f.slots[parent[s]];
    }
    return g;
}

Vec2 current_destination(int robot, const SwarmState& s) {
    if (robot < 0 || robot >= s.size()) throw InvalidInput("current_destination: bad robot id");
    int ref = s.graph.reference[robot];
    if (ref == kCenterRef) {
        if (!s.center) throw InvalidInput("current_destination: no center set");
        return *s.center + s.graph.offset[robot];
    }
    return s.robots[ref].position + s.graph.offset[robot];
}

std::vector<std::pair<int, int>> detect_conflicts(const std::vector<Claim>& claims,
                                                  const std::vector<Vec2>& positions,
                                                  double safety_radius) {
    double guard = 2.0 * safety_radius;
    std::vector<std::pair<int, int>> out;
    for (size_t a = 0; a < claims.size(); ++a)
        for (size_t b = a + 1; b < claims.size(); ++b) {
            const Claim& ca = claims[a];
            const Claim& cb = claims[b];
            if (ca.robot == cb.robot) continue;
            bool hit = dist(ca.point, cb.point) <= guard;
            if (!hit && cb.robot < static_cast<int>(positions.size()))
                hit = dist(ca.point, positions[cb.robot]) <= guard;
            if (!hit && ca.robot < static_cast<int>(positions.size()))
                hit = dist(cb.point, positions[ca.robot]) <= guard;
            if (hit) out.emplace_back(ca.robot, cb.robot);
        }
    return out;
}

StepDecision plan_step(int robot, const PolarRegion& region, const Vec2& position,
                       const Vec2& perceived_delta,
                       const std::vector<Vec2>& positions,
                       const std::vector<Claim>& binding_claims, const SimConfig& cfg,
                       const QuantizerSpec& q) {
    StepDecision d;
    if (region.h == 1) {
        d.action = StepAction::Arrived;
        d.target = region;
        d.claim = position;
        return d;
    }

    const StepAction order[] = {StepAction::Inward, StepAction::SideCCW, StepAction::SideCW};
    for (StepAction action : order) {
        PolarRegion target;
        switch (action) {
            case StepAction::Inward:
                target = {region.h - 1, region.j};
                break;
            case StepAction::SideCCW:
                target = {region.h, wrap_sector(region.j + 1, q)};
                break;
            default:
                target = {region.h, wrap_sector(region.j - 1, q)};
                break;
        }
        Vec2 command = region_representative(target, q) - perceived_delta;
        Vec2 claim = position + clamp_norm(command, cfg.u_max);
        if (claim_clear(claim, robot, positions, binding_claims, cfg.safety_radius)) {
            d.action = action;
            d.target = target;
            d.claim = claim;
            return d;
        }
    }
    d.action = StepAction::Stop;
    d.target = region;
    d.claim = position;
    return d;
}

SwarmState step_swarm(const SwarmState& s, const SimConfig& cfg, const SensorModel& sensor,
                      const QuantizerSpec& q, const RngStream& run_rng,
                      std::vector<StepDecision>* report) {
    validate_config(cfg);
    validate_sensor(sensor);
    validate_quantizer(q);
    int n = s.size();
    if (s.graph.size() != n) throw InvalidInput("step_swarm: graph/robot size mismatch");

    SwarmState next = s;
    next.slot = s.slot + 1;

    std::vector<Vec2> positions(n);
    for (int i = 0; i < n; ++i) positions[i] = s.robots[i].position;

    // Destinations for this slot, from current reference positions.
    std::vector<Vec2> dest(n);
    for (int i = 0; i < n; ++i) dest[i] = current_destination(i, s);

    // Unlatch arrivals whose destination moved since last slot.
    for (int i = 0; i < n; ++i)
        if (next.robots[i].arrived && s.leader != i &&
            dist(dest[i], s.prev_destination[i]) > kDestMoveTol)
            next.robots[i].arrived = false;

    std::vector<StepDecision> decisions(n);
    std::vector<Vec2> commands(n, Vec2{});

    // Holders bind everyone: an arrived robot (and a stationary leader)
    // cannot deviate, so its spot is claimed up front regardless of id.
    std::vector<Claim> binding;
    for (int i = 0; i < n; ++i)
        if (next.robots[i].arrived) {
            binding.push_back({i, positions[i]});
            decisions[i] = {StepAction::Arrived, PolarRegion{1, 1}, positions[i]};
        }

    for (int i = 0; i < n; ++i) {
        if (next.robots[i].arrived) continue;

        // Per-(robot, slot) sensing stream: draw order is the distance
        // samples, then the bearing.
        RngStream sense = run_rng.substream(static_cast<std::uint64_t>(i),
                                            static_cast<std::uint64_t>(s.slot));
        Vec2 delta = positions[i] - dest[i];
        double r_true = delta.norm();
        double theta_true = polar_angle(delta);
        std::vector<double> samples = sample_distances(r_true, sensor, sense);
        double r_raw = estimate_distance(samples);
        double theta = theta_true;
        if (sensor.sigma_theta > 0.0) theta = sense.normal(theta_true, sensor.sigma_theta);
        double r_est = std::min(std::max(r_raw, 0.0), q.radius);
        double t_norm = std::fmod(theta, 2.0 * M_PI);
        if (t_norm < 0.0) t_norm += 2.0 * M_PI;
        Vec2 perceived_delta = from_polar(r_est, t_norm);

        StepDecision d;
        if (r_raw > q.radius) {
            // Outside the partition: head straight for the perceived
            // destination, or hold if that spot is not safe.
            Vec2 claim = positions[i] + clamp_norm(perceived_delta * -1.0, cfg.u_max);
            if (claim_clear(claim, i, positions, binding, cfg.safety_radius)) {
                d = {StepAction::Direct, PolarRegion{q.n_r - 1, 1}, claim};
            } else {
                d = {StepAction::Stop, PolarRegion{q.n_r - 1, 1}, positions[i]};
            }
        } else {
            PolarRegion region{quantize_ring(r_est, q), quantize_sector(t_norm, q)};
            if (region.h == 1 && r_est <= cfg.arrival_tol()) {
                next.robots[i].arrived = true;
                d = {StepAction::Arrived, region, positions[i]};
            } else if (region.h == 1) {
                // Inside the innermost ring but outside a tighter arrival
                // tolerance: fine positioning straight at the destination.
                Vec2 claim = positions[i] + clamp_norm(perceived_delta * -1.0, cfg.u_max);
                if (claim_clear(claim, i, positions, binding, cfg.safety_radius))
                    d = {StepAction::Direct, region, claim};
                else
                    d = {StepAction::Stop, region, positions[i]};
            } else {
                d = plan_step(i, region, positions[i], perceived_delta, positions, binding,
                              cfg, q);
            }
        }
        decisions[i] = d;
        commands[i] = d.claim - positions[i];
        binding.push_back({i, d.claim});
    }

    for (int i = 0; i < n; ++i) {
        RobotState moved = step_kinematics(s.robots[i], commands[i], cfg.u_max);
        next.robots[i].position = moved.position;
        next.robots[i].velocity = next.robots[i].arrived ? Vec2{} : moved.velocity;
        if (next.robots[i].arrived) next.robots[i].position = s.robots[i].position;
    }
    next.prev_destination = dest;

    if (report) *report = std::move(decisions);
    return next;
}

std::vector<SwarmState> approach_center(const SwarmState& s, const Vec2& c, double d0,
                                        const SimConfig& cfg) {
    validate_config(cfg);
    if (!c.finite()) throw InvalidInput("approach_center: non-finite center");
    if (!(d0 >= 0.0)) throw InvalidInput("approach_center: d0 must be >= 0");

    std::vector<SwarmState> out;
    SwarmState cur = s;
    cur.phase = Phase::ApproachCenter;
    while (true) {
        std::vector<Vec2> pts(cur.size());
        for (int i = 0; i < cur.size(); ++i) pts[i] = cur.robots[i].position;
        Vec2 gap = c - centroid(pts);
        double g = gap.norm();
        if (g <= d0) break;
        // Common translation step: every robot moves the same vector, so
        // pairwise distances are preserved and no collision checks needed.
        Vec2 step = gap * (std::min(cfg.u_max, g - d0) / g);
        SwarmState nxt = cur;
        nxt.slot = cur.slot + 1;
        for (int i = 0; i < nxt.size(); ++i) {
            nxt.robots[i].position = cur.robots[i].position + step;
            nxt.robots[i].velocity = step;
        }
        out.push_back(nxt);
        cur = std::move(nxt);
        if (cur.slot > cfg.max_slots)
            throw InvalidInput("approach_center: exceeded max_slots");
    }
    return out;
}

namespace {

void scan_collisions(Trajectory& t, const SlotSnapshot& snap, double safety_radius) {
    const auto& p = snap.positions;
    for (size_t a = 0; a < p.size(); ++a)
        for (size_t b = a + 1; b < p.size(); ++b) {
            double d = dist(p[a], p[b]);
            if (d < safety_radius)
                t.collisions.push_back({snap.slot, static_cast<int>(a),
                                        static_cast<int>(b), d});
        }
}

SlotSnapshot snapshot_of(const SwarmState& s) {
    SlotSnapshot snap;
    snap.slot = s.slot;
    snap.phase = s.phase;
    snap.positions.resize(s.size());
    snap.arrived.resize(s.size());
    for (int i = 0; i < s.size(); ++i) {
        snap.positions[i] = s.robots[i].position;
        snap.arrived[i] = s.robots[i].arrived ? 1 : 0;
    }
    return snap;
}

SwarmState init_swarm(const std::vector<Vec2>& initial, const FollowerGraph& g,
                      std::optional<Vec2> center, std::optional<int> leader) {
    SwarmState s;
    s.robots.resize(initial.size());
    for (size_t i = 0; i < initial.size(); ++i) {
        if (!initial[i].finite()) throw InvalidInput("init: non-finite initial position");
        s.robots[i].id = static_cast<int>(i);
        s.robots[i].position = initial[i];
    }
    s.graph = g;
    s.center = center;
    s.leader = leader;
    if (leader) s.robots[*leader].arrived = true;  // the anchor never moves
    s.prev_destination.resize(initial.size());
    for (int i = 0; i < s.size(); ++i) s.prev_destination[i] = current_destination(i, s);
    return s;
}

// Drive a prepared swarm until two consecutive all-arrived slots (arrived
// robots hold still, so the second slot certifies stationary destinations).
void drive(Trajectory& t, SwarmState& s, const SimConfig& cfg, const SensorModel& sensor,
           const QuantizerSpec& q, const RngStream& rng) {
    auto all_arrived = [](const SwarmState& st) {
        for (const RobotState& r : st.robots)
            if (!r.arrived) return false;
        return true;
    };
    bool prev_all = all_arrived(s);
    while (s.slot < cfg.max_slots) {
        std::vector<StepDecision> decisions;
        SwarmState nxt = step_swarm(s, cfg, sensor, q, rng, &decisions);
        for (int i = 0; i < nxt.size(); ++i)
            t.path_length[i] += dist(nxt.robots[i].position, s.robots[i].position);
        s = std::move(nxt);
        SlotSnapshot snap = snapshot_of(s);
        scan_collisions(t, snap, cfg.safety_radius);
        t.snapshots.push_back(std::move(snap));
        t.last_decisions = std::move(decisions);
        bool now_all = all_arrived(s);
        if (now_all && prev_all) {
            t.converged = true;
            break;
        }
        prev_all = now_all;
    }
    t.slots_used = s.slot;
}

void finalize(Trajectory& t, const SwarmState& s) {
    std::vector<Vec2> finals(s.size());
    for (int i = 0; i < s.size(); ++i) finals[i] = s.robots[i].position;
    t.final_bias = formation_bias(finals, t.destinations);
    t.practical_cost = 0.0;
    for (double len : t.path_length) t.practical_cost += len * len;
}

}  // namespace

Trajectory run_assigned(const std::vector<Vec2>& initial, const Formation& f,
                        const AssignmentResult& ar, std::optional<Vec2> center,
                        const SimConfig& cfg, const SensorModel& sensor,
                        const QuantizerSpec& q, const RngStream& rng) {
    validate_config(cfg);
    validate_sensor(sensor);
    validate_quantizer(q);
    int n = static_cast<int>(initial.size());
    if (n != f.size()) throw InvalidInput("run_assigned: robot/slot count mismatch");
    if (ar.assignment.size() != n)
        throw InvalidInput("run_assigned: arrangement size mismatch");
    validate_assignment(ar.assignment);
    if (!center && !ar.assignment.leader)
        throw InvalidInput("run_assigned: no center and no leader in assignment");

    FollowerGraph g = build_follower_graph(f, ar.assignment);
    SwarmState s = init_swarm(initial, g, center, center ? std::nullopt : ar.assignment.leader);

    Trajectory t;
    t.assignment = ar.assignment;
    t.estimated_cost = ar.total_cost;
    t.path_length.assign(n, 0.0);
    t.destinations.resize(n);
    if (center) {
        for (int i = 0; i < n; ++i)
            t.destinations[i] = *center + f.slots[ar.assignment.slot_of[i]];
    } else {
        Vec2 anchor = initial[*ar.assignment.leader] - f.slots[*ar.assignment.leader_slot];
        for (int i = 0; i < n; ++i)
            t.destinations[i] = anchor + f.slots[ar.assignment.slot_of[i]];
    }

    SlotSnapshot snap = snapshot_of(s);
    scan_collisions(t, snap, cfg.safety_radius);
    t.snapshots.push_back(std::move(snap));

    drive(t, s, cfg, sensor, q, rng);
    finalize(t, s);
    return t;
}

Trajectory run_to_formation(const std::vector<Vec2>& initial, const Formation& f,
                            const ModeSpec& mode, const SimConfig& cfg,
                            const SensorModel& sensor, const QuantizerSpec& q,
                            const RngStream& rng) {
    AssignmentResult ar = mode.center ? assign_with_center(initial, f, *mode.center)
                                      : assign_with_leader(initial, f);
    return run_assigned(initial, f, ar, mode.center, cfg, sensor, q, rng);
}

Trajectory convert_formation(const std::vector<Vec2>& current, const Formation& target,
                             std::optional<Vec2> center, const SimConfig& cfg,
                             const SensorModel& sensor, const QuantizerSpec& q,
                             const RngStream& rng, double d0) {
    validate_config(cfg);
    if (d0 < 0.0) d0 = cfg.radius / 2.0;
    int n = static_cast<int>(current.size());
    if (n != target.size()) throw InvalidInput("convert_formation: robot/slot count mismatch");

    if (!center) {
        // No caller-chosen center: put the new formation where the swarm
        // already is, which minimizes the total squared travel.
        Vec2 c = optimal_center(current);
        return run_to_formation(current, target, ModeSpec::Center(c), cfg, sensor, q, rng);
    }

    Vec2 c = *center;
    double gap = dist(c, centroid(current));
    if (gap <= d0)
        return run_to_formation(current, target, ModeSpec::Center(c), cfg, sensor, q, rng);

    // Far center: translate the swarm first, then assign and form. The
    // assignment is priced at the handover positions; the estimated cost is
    // still quoted from the true start for comparison with the straight-line
    // plan.
    FollowerGraph idle;
    idle.reference.assign(n, kCenterRef);
    idle.offset.assign(n, Vec2{});
    SwarmState s0 = init_swarm(current, idle, c, std::nullopt);
    std::vector<SwarmState> phase1 = approach_center(s0, c, d0, cfg);

    Trajectory t;
    t.path_length.assign(n, 0.0);
    // record the true start, then the walked states
    SlotSnapshot start = snapshot_of(s0);
    start.phase = Phase::ApproachCenter;
    scan_collisions(t, start, cfg.safety_radius);
    t.snapshots.push_back(std::move(start));
    const SwarmState* prev = &s0;
    for (const SwarmState& st : phase1) {
        for (int i = 0; i < n; ++i)
            t.path_length[i] += dist(st.robots[i].position, prev->robots[i].position);
        SlotSnapshot snap = snapshot_of(st);
        scan_collisions(t, snap, cfg.safety_radius);
        t.snapshots.push_back(std::move(snap));
        prev = &st;
    }

    std::vector<Vec2> handover(n);
    for (int i = 0; i < n; ++i) handover[i] = prev->robots[i].position;
    AssignmentResult ar = assign_with_center(handover, target, c);
    FollowerGraph g = build_follower_graph(target, ar.assignment);
    SwarmState s = init_swarm(handover, g, c, std::nullopt);
    s.slot = prev->slot;

    t.assignment = ar.assignment;
    t.estimated_cost = 0.0;
    t.destinations.resize(n);
    for (int i = 0; i < n; ++i) {
        t.destinations[i] = c + target.slots[ar.assignment.slot_of[i]];
        t.estimated_cost += dist2(current[i], t.destinations[i]);
    }

    drive(t, s, cfg, sensor, q, rng);
    finalize(t, s);
    return t;
}

}  // namespace formlab
