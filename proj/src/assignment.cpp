#include "formation_lab/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace formlab {

namespace {

constexpr double kZeroTol = 1e-9;

bool near_zero(double v) { return std::abs(v) <= kZeroTol; }

void validate_matrix(const std::vector<std::vector<double>>& cost) {
    size_t n = cost.size();
    if (n == 0) throw InvalidInput("hungarian: empty matrix");
    for (const auto& row : cost) {
        if (row.size() != n) throw InvalidInput("hungarian: matrix is not square");
        for (double v : row) {
            if (!std::isfinite(v)) throw InvalidInput("hungarian: non-finite entry");
            if (v < 0.0) throw InvalidInput("hungarian: negative entry");
        }
    }
}

}  // namespace

CostMatrix CostMatrix::plain(std::vector<std::vector<double>> m) {
    CostMatrix out;
    out.entries = std::move(m);
    int n = out.size();
    out.row_robot.resize(n);
    out.col_slot.resize(n);
    for (int i = 0; i < n; ++i) {
        out.row_robot[i] = i;
        out.col_slot[i] = i;
    }
    return out;
}

std::vector<int> solve_square(const std::vector<std::vector<double>>& cost,
                              double* total_cost) {
    validate_matrix(cost);
    int n = static_cast<int>(cost.size());
    std::vector<std::vector<double>> m = cost;

    // Row then column reduction: subtracting a constant from a line shifts
    // every assignment's cost equally, so the argmin is preserved and each
    // line gains at least one zero.
    for (int i = 0; i < n; ++i) {
        double lo = *std::min_element(m[i].begin(), m[i].end());
        for (double& v : m[i]) v -= lo;
    }
    for (int j = 0; j < n; ++j) {
        double lo = m[0][j];
        for (int i = 1; i < n; ++i) lo = std::min(lo, m[i][j]);
        for (int i = 0; i < n; ++i) m[i][j] -= lo;
    }

    // mask: 0 none, 1 starred zero (tentative matching), 2 primed zero.
    std::vector<std::vector<char>> mask(n, std::vector<char>(n, 0));
    std::vector<char> row_cover(n, 0), col_cover(n, 0);

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (near_zero(m[i][j]) && !row_cover[i] && !col_cover[j]) {
                mask[i][j] = 1;
                row_cover[i] = 1;
                col_cover[j] = 1;
            }
    std::fill(row_cover.begin(), row_cover.end(), 0);
    std::fill(col_cover.begin(), col_cover.end(), 0);

    auto cover_starred_columns = [&]() {
        int covered = 0;
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i)
                if (mask[i][j] == 1) {
                    col_cover[j] = 1;
                    break;
                }
            covered += col_cover[j];
        }
        return covered;
    };

    while (cover_starred_columns() < n) {
        // Grow the matching. Prime uncovered zeros; a primed zero in a row
        // without a star starts an augmenting path.
        int path_row = -1, path_col = -1;
        while (path_row < 0) {
            int zr = -1, zc = -1;
            for (int i = 0; i < n && zr < 0; ++i) {
                if (row_cover[i]) continue;
                for (int j = 0; j < n; ++j)
                    if (!col_cover[j] && near_zero(m[i][j])) {
                        zr = i;
                        zc = j;
                        break;
                    }
            }
            if (zr < 0) {
                // No uncovered zero: the covered lines form a minimum cover
                // smaller than n. Shift by the smallest uncovered value to
                // create one without touching covered zeros.
                double delta = std::numeric_limits<double>::infinity();
                for (int i = 0; i < n; ++i)
                    if (!row_cover[i])
                        for (int j = 0; j < n; ++j)
                            if (!col_cover[j]) delta = std::min(delta, m[i][j]);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        if (row_cover[i]) m[i][j] += delta;
                        if (!col_cover[j]) m[i][j] -= delta;
                    }
                continue;
            }
            mask[zr][zc] = 2;
            int star_col = -1;
            for (int j = 0; j < n; ++j)
                if (mask[zr][j] == 1) {
                    star_col = j;
                    break;
                }
            if (star_col < 0) {
                path_row = zr;
                path_col = zc;
            } else {
                row_cover[zr] = 1;
                col_cover[star_col] = 0;
            }
        }

        // Alternate primed and starred zeros from the loose primed zero;
        // flipping the path grows the matching by one.
        std::vector<std::pair<int, int>> path{{path_row, path_col}};
        while (true) {
            int r = -1;
            for (int i = 0; i < n; ++i)
                if (mask[i][path.back().second] == 1) {
                    r = i;
                    break;
                }
            if (r < 0) break;
            path.push_back({r, path.back().second});
            int c = -1;
            for (int j = 0; j < n; ++j)
                if (mask[r][j] == 2) {
                    c = j;
                    break;
                }
            path.push_back({r, c});
        }
        for (auto [r, c] : path) mask[r][c] = (mask[r][c] == 1) ? 0 : 1;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (mask[i][j] == 2) mask[i][j] = 0;
        std::fill(row_cover.begin(), row_cover.end(), 0);
        std::fill(col_cover.begin(), col_cover.end(), 0);
    }

    std::vector<int> perm(n, -1);
    double total = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (mask[i][j] == 1) {
                perm[i] = j;
                total += cost[i][j];
            }
    if (total_cost) *total_cost = total;
    return perm;
}

AssignmentResult hungarian_solve(const CostMatrix& m) {
    int dense = m.size();
    if (dense == 0) throw InvalidInput("hungarian: empty cost matrix");
    if (static_cast<int>(m.row_robot.size()) != dense ||
        static_cast<int>(m.col_slot.size()) != dense)
        throw InvalidInput("hungarian: row/col maps do not match matrix size");

    double total = 0.0;
    std::vector<int> perm = solve_square(m.entries, &total);

    int n = dense + (m.leader ? 1 : 0);
    Assignment a;
    a.slot_of.assign(n, -1);
    if (m.leader) {
        a.leader = m.leader;
        a.leader_slot = m.leader_slot;
        a.slot_of[*m.leader] = *m.leader_slot;
    }
    for (int r = 0; r < dense; ++r) a.slot_of[m.row_robot[r]] = m.col_slot[perm[r]];
    validate_assignment(a);
    return AssignmentResult{std::move(a), total};
}

CostMatrix leader_cost_matrix(const std::vector<Vec2>& initial, const Formation& f,
                              int leader, int leader_slot) {
    int n = static_cast<int>(initial.size());
    if (n != f.size()) throw InvalidInput("leader_cost_matrix: robot/slot count mismatch");
    if (n < 2) throw InvalidInput("leader_cost_matrix: need at least 2 robots");
    if (leader < 0 || leader >= n) throw InvalidInput("leader_cost_matrix: leader out of range");
    if (leader_slot < 0 || leader_slot >= n)
        throw InvalidInput("leader_cost_matrix: leader slot out of range");
    for (const Vec2& p : initial)
        if (!p.finite()) throw InvalidInput("leader_cost_matrix: non-finite position");

    // Anchoring the formation on the stationary leader shifts every slot by
    // x_lead - f_lead, so robot i's trip to slot j costs
    // |(x_i - f_j) - (x_lead - f_lead)|^2.
    Vec2 anchor = initial[leader] - f.slots[leader_slot];
    CostMatrix m;
    m.leader = leader;
    m.leader_slot = leader_slot;
    for (int i = 0; i < n; ++i)
        if (i != leader) m.row_robot.push_back(i);
    for (int j = 0; j < n; ++j)
        if (j != leader_slot) m.col_slot.push_back(j);
    m.entries.resize(n - 1, std::vector<double>(n - 1));
    for (int r = 0; r < n - 1; ++r)
        for (int c = 0; c < n - 1; ++c) {
            int i = m.row_robot[r], j = m.col_slot[c];
            m.entries[r][c] = (initial[i] - f.slots[j] - anchor).norm2();
        }
    return m;
}

CostMatrix center_cost_matrix(const std::vector<Vec2>& initial, const Formation& f,
                              const Vec2& c) {
    int n = static_cast<int>(initial.size());
    if (n != f.size()) throw InvalidInput("center_cost_matrix: robot/slot count mismatch");
    if (n < 1) throw InvalidInput("center_cost_matrix: empty input");
    if (!c.finite()) throw InvalidInput("center_cost_matrix: non-finite center");
    for (const Vec2& p : initial)
        if (!p.finite()) throw InvalidInput("center_cost_matrix: non-finite position");

    CostMatrix m;
    m.center = c;
    m.row_robot.resize(n);
    m.col_slot.resize(n);
    for (int i = 0; i < n; ++i) {
        m.row_robot[i] = i;
        m.col_slot[i] = i;
    }
    m.entries.resize(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.entries[i][j] = (initial[i] - f.slots[j] - c).norm2();
    return m;
}

AssignmentResult assign_with_leader(const std::vector<Vec2>& initial, const Formation& f) {
    int n = static_cast<int>(initial.size());
    if (n != f.size()) throw InvalidInput("assign_with_leader: robot/slot count mismatch");
    if (n < 2) throw InvalidInput("assign_with_leader: need at least 2 robots");

    int lead_slot = leading_slot(f);
    AssignmentResult best;
    bool have = false;
    for (int lead = 0; lead < n; ++lead) {
        AssignmentResult r = hungarian_solve(leader_cost_matrix(initial, f, lead, lead_slot));
        if (!have || r.total_cost < best.total_cost) {
            best = std::move(r);
            have = true;
        }
    }
    return best;
}

AssignmentResult assign_with_center(const std::vector<Vec2>& initial, const Formation& f,
                                    const Vec2& c) {
    return hungarian_solve(center_cost_matrix(initial, f, c));
}

double assignment_cost(const std::vector<Vec2>& initial, const Formation& f,
                       const Assignment& a, std::optional<Vec2> center) {
    int n = static_cast<int>(initial.size());
    if (n != f.size()) throw InvalidInput("assignment_cost: robot/slot count mismatch");
    if (a.size() != n) throw InvalidInput("assignment_cost: arrangement size mismatch");
    validate_assignment(a);

    Vec2 anchor;
    if (center) {
        anchor = *center;
    } else {
        if (!a.leader) throw InvalidInput("assignment_cost: no center and no leader");
        anchor = initial[*a.leader] - f.slots[*a.leader_slot];
    }
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        if (!center && i == *a.leader) continue;  // the anchor contributes nothing
        total += (initial[i] - f.slots[a.slot_of[i]] - anchor).norm2();
    }
    return total;
}

}  // namespace formlab
