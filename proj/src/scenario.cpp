#include "formation_lab/scenario.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace formlab {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double parse_num(const std::string& v, const std::string& key) {
    try {
        size_t used = 0;
        double out = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument("trailing junk");
        return out;
    } catch (const std::exception&) {
        throw InvalidInput("scenario: bad numeric value for " + key + ": '" + v + "'");
    }
}

int parse_int(const std::string& v, const std::string& key) {
    double d = parse_num(v, key);
    int i = static_cast<int>(d);
    if (static_cast<double>(i) != d)
        throw InvalidInput("scenario: expected integer for " + key + ": '" + v + "'");
    return i;
}

// "x y" pair, e.g. "center = 1200 0".
Vec2 parse_vec(const std::string& v, const std::string& key) {
    std::istringstream in(v);
    double x, y;
    if (!(in >> x >> y)) throw InvalidInput("scenario: expected two numbers for " + key);
    std::string rest;
    if (in >> rest) throw InvalidInput("scenario: trailing junk in " + key);
    return {x, y};
}

void apply_formation_key(FormationSpec& f, const std::string& key, const std::string& value,
                         const std::string& section) {
    if (key == "shape")
        f.shape = shape_from_name(value);
    else if (key == "count")
        f.count = parse_int(value, key);
    else if (key == "area")
        f.area = parse_num(value, key);
    else if (key == "triangle_bottom")
        f.triangle_bottom = parse_int(value, key);
    else
        throw InvalidInput("scenario: unknown key '" + key + "' in [" + section + "]");
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
    Scenario sc;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;

    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw InvalidInput("scenario: malformed section header at line " +
                                   std::to_string(lineno));
            section = trim(line.substr(1, line.size() - 2));
            if (section != "scenario" && section != "formation" && section != "mode" &&
                section != "sim" && section != "sensor" && section != "quantizer" &&
                section != "convert")
                throw InvalidInput("scenario: unknown section [" + section + "] at line " +
                                   std::to_string(lineno));
            if (section == "convert") sc.has_convert = true;
            continue;
        }

        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw InvalidInput("scenario: expected 'key = value' at line " +
                               std::to_string(lineno));
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw InvalidInput("scenario: empty key or value at line " + std::to_string(lineno));

        if (section == "scenario") {
            if (key == "robot_count") sc.robot_count = parse_int(value, key);
            else if (key == "init_width") sc.init_width = parse_num(value, key);
            else if (key == "init_height") sc.init_height = parse_num(value, key);
            else if (key == "trials") sc.trials = parse_int(value, key);
            else if (key == "seed") sc.seed = static_cast<std::uint64_t>(parse_num(value, key));
            else throw InvalidInput("scenario: unknown key '" + key + "' in [scenario]");
        } else if (section == "formation") {
            apply_formation_key(sc.formation, key, value, section);
        } else if (section == "mode") {
            if (key == "type") {
                if (value == "leader") sc.leader_mode = true;
                else if (value == "center") sc.leader_mode = false;
                else throw InvalidInput("scenario: mode type must be leader or center");
            } else if (key == "center") {
                if (value == "auto") sc.given_center.reset();
                else sc.given_center = parse_vec(value, key);
            } else if (key == "d0") {
                sc.d0 = parse_num(value, key);
            } else {
                throw InvalidInput("scenario: unknown key '" + key + "' in [mode]");
            }
        } else if (section == "sim") {
            if (key == "u_max") sc.sim.u_max = parse_num(value, key);
            else if (key == "radius") sc.sim.radius = parse_num(value, key);
            else if (key == "rings") sc.sim.n_r = parse_int(value, key);
            else if (key == "sectors") sc.sim.n_theta = parse_int(value, key);
            else if (key == "safety_radius") sc.sim.safety_radius = parse_num(value, key);
            else if (key == "arrival_tolerance") sc.sim.arrival_tolerance = parse_num(value, key);
            else if (key == "max_slots") sc.sim.max_slots = parse_int(value, key);
            else throw InvalidInput("scenario: unknown key '" + key + "' in [sim]");
        } else if (section == "sensor") {
            if (key == "sigma") sc.sensor.sigma = parse_num(value, key);
            else if (key == "samples") sc.sensor.n_samples = parse_int(value, key);
            else if (key == "sigma_theta") sc.sensor.sigma_theta = parse_num(value, key);
            else throw InvalidInput("scenario: unknown key '" + key + "' in [sensor]");
        } else if (section == "quantizer") {
            if (key == "l0") sc.l0 = parse_num(value, key);
            else throw InvalidInput("scenario: unknown key '" + key + "' in [quantizer]");
        } else if (section == "convert") {
            if (!sc.convert_to) sc.convert_to = FormationSpec{Shape::Circle, 0, 0.0, std::nullopt};
            if (key == "center") {
                if (value == "auto") sc.convert_center.reset();
                else sc.convert_center = parse_vec(value, key);
            } else {
                apply_formation_key(*sc.convert_to, key, value, section);
            }
        } else if (section.empty()) {
            throw InvalidInput("scenario: key '" + key + "' before any [section]");
        } else {
            throw InvalidInput("scenario: unknown section [" + section + "]");
        }
    }

    validate_scenario(sc);
    return sc;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("scenario: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

void apply_env_seed(Scenario& sc) {
    const char* env = std::getenv("FORMATION_LAB_SEED");
    if (!env || !*env) return;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (!end || *end != '\0')
        throw InvalidInput("FORMATION_LAB_SEED is not an unsigned integer");
    sc.seed = static_cast<std::uint64_t>(v);
}

void validate_scenario(const Scenario& sc) {
    if (sc.robot_count < 1) throw InvalidInput("scenario: robot_count must be >= 1");
    if (!(sc.init_width > 0.0) || !(sc.init_height > 0.0))
        throw InvalidInput("scenario: init box must have positive extent");
    if (sc.trials < 1) throw InvalidInput("scenario: trials must be >= 1");
    if (sc.leader_mode && sc.robot_count < 2)
        throw InvalidInput("scenario: leader mode needs at least 2 robots");
    SimConfig sim = sc.sim;
    validate_config(sim);
    validate_sensor(sc.sensor);
    validate_quantizer(sc.quantizer());
    FormationSpec f = sc.formation_spec();
    if (f.count != sc.robot_count)
        throw InvalidInput("scenario: formation count differs from robot_count");
    if (!(f.area > 0.0)) throw InvalidInput("scenario: formation area must be > 0");
    if (sc.has_convert) {
        if (!sc.convert_to) throw InvalidInput("scenario: [convert] section is empty");
        FormationSpec cf = sc.convert_spec();
        if (cf.count != sc.robot_count)
            throw InvalidInput("scenario: convert count differs from robot_count");
        if (!(cf.area > 0.0)) throw InvalidInput("scenario: convert area must be > 0");
    }
}

std::vector<Vec2> sample_initial_positions(const Scenario& sc, RngStream& rng) {
    std::vector<Vec2> out;
    out.reserve(sc.robot_count);
    double hw = sc.init_width / 2.0, hh = sc.init_height / 2.0;
    double guard = 2.0 * sc.sim.safety_radius;
    int attempts = 0;
    while (static_cast<int>(out.size()) < sc.robot_count) {
        if (++attempts > 1000000)
            throw InvalidInput("scenario: init box too crowded for the safety radius");
        Vec2 p{rng.uniform(-hw, hw), rng.uniform(-hh, hh)};
        bool ok = true;
        for (const Vec2& q : out)
            if (dist(p, q) <= guard) {
                ok = false;
                break;
            }
        if (ok) out.push_back(p);
    }
    return out;
}

}  // namespace formlab
