#pragma once

#include <string>
#include <vector>

#include "formation_lab/motion.hpp"

namespace formlab {

// All CSV output goes through one double formatter (%.17g: shortest exact
// round-trip form) so identical runs produce byte-identical files.
std::string fmt_double(double v);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

CsvTable read_csv(const std::string& path);

// slot,robot_id,x,y — one row per robot per recorded slot, robot ids 1-based.
void write_trajectory_csv(const std::string& path, const Trajectory& t);

struct SweepPoint {
    double param = 0.0;
    double mean_bias = 0.0;
    double std_bias = 0.0;
    double bound = 0.0;
};

// param,mean_bias,std_bias,bound
void write_sweep_csv(const std::string& path, const std::vector<SweepPoint>& points);

struct CostComparisonRow {
    int trial = 0;
    double hungarian = 0.0;
    double fixed = 0.0;
    double random = 0.0;
};

// trial,hungarian,fixed,random
void write_comparison_csv(const std::string& path, const std::vector<CostComparisonRow>& rows);

}  // namespace formlab
