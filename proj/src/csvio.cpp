#include "formation_lab/csvio.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace formlab {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("csv: cannot open " + path);
    CsvTable t;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (first) {
            t.header = std::move(cells);
            first = false;
        } else {
            t.rows.push_back(std::move(cells));
        }
    }
    return t;
}

void write_trajectory_csv(const std::string& path, const Trajectory& t) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("csv: cannot write " + path);
    out << "slot,robot_id,x,y\n";
    for (const SlotSnapshot& snap : t.snapshots)
        for (size_t i = 0; i < snap.positions.size(); ++i)
            out << snap.slot << ',' << (i + 1) << ',' << fmt_double(snap.positions[i].x)
                << ',' << fmt_double(snap.positions[i].y) << '\n';
}

void write_sweep_csv(const std::string& path, const std::vector<SweepPoint>& points) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("csv: cannot write " + path);
    out << "param,mean_bias,std_bias,bound\n";
    for (const SweepPoint& p : points)
        out << fmt_double(p.param) << ',' << fmt_double(p.mean_bias) << ','
            << fmt_double(p.std_bias) << ',' << fmt_double(p.bound) << '\n';
}

void write_comparison_csv(const std::string& path, const std::vector<CostComparisonRow>& rows) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("csv: cannot write " + path);
    out << "trial,hungarian,fixed,random\n";
    for (const CostComparisonRow& r : rows)
        out << r.trial << ',' << fmt_double(r.hungarian) << ',' << fmt_double(r.fixed)
            << ',' << fmt_double(r.random) << '\n';
}

}  // namespace formlab
