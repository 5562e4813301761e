#pragma once

#include <optional>
#include <vector>

#include "formation_lab/core.hpp"
#include "formation_lab/formations.hpp"

namespace formlab {

// Square cost matrix plus the bookkeeping needed to turn a dense row->col
// solution back into a robot->slot assignment. Leader mode pins one robot to
// the leading slot and prices the remaining (n-1)x(n-1) pairs relative to the
// leader; center mode prices all n robots against slots around a center.
struct CostMatrix {
    std::vector<std::vector<double>> entries;
    std::vector<int> row_robot;            // dense row -> robot id
    std::vector<int> col_slot;             // dense col -> slot id
    std::optional<int> leader;             // leader mode
    std::optional<int> leader_slot;
    std::optional<Vec2> center;            // center mode

    int size() const { return static_cast<int>(entries.size()); }

    // Wrap a raw matrix with identity row/col maps.
    static CostMatrix plain(std::vector<std::vector<double>> m);
};

struct AssignmentResult {
    Assignment assignment;
    double total_cost = 0.0;
};

// Minimum-cost perfect matching on a square matrix with non-negative
// entries. Row/column reductions expose zeros; a minimum cover certifies
// optimality and drives further reductions until a full zero matching
// exists. Returns perm with perm[row] = col, and the matched cost.
std::vector<int> solve_square(const std::vector<std::vector<double>>& cost,
                              double* total_cost = nullptr);

AssignmentResult hungarian_solve(const CostMatrix& m);

// Cost of moving robot i to slot j when the whole formation is anchored so
// the leader never moves: squared norm of (x_i - f_j) - (x_lead - f_lead).
CostMatrix leader_cost_matrix(const std::vector<Vec2>& initial, const Formation& f,
                              int leader, int leader_slot);

// Cost of moving robot i to slot j of the formation centred at c: squared
// norm of x_i - f_j - c.
CostMatrix center_cost_matrix(const std::vector<Vec2>& initial, const Formation& f,
                              const Vec2& c);

// Try every robot as the leader on the leading slot, solve the residual
// matching, keep the cheapest (ties to the smallest leader id).
AssignmentResult assign_with_leader(const std::vector<Vec2>& initial, const Formation& f);

AssignmentResult assign_with_center(const std::vector<Vec2>& initial, const Formation& f,
                                    const Vec2& c);

// Objective value of an arbitrary arrangement under the same pricing the
// solvers use: squared distances to the anchored slots (leader pins the
// formation to its own start, a center pins it to c).
double assignment_cost(const std::vector<Vec2>& initial, const Formation& f,
                       const Assignment& a, std::optional<Vec2> center);

}  // namespace formlab
