#include "swarmsim/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace swarmsim {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& value, const std::string& field) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(value, &pos);
        if (trim(value.substr(pos)).empty()) return d;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(field + ": expected a number, got '" + value + "'");
}

long parse_long(const std::string& value, const std::string& field) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(value, &pos);
        if (trim(value.substr(pos)).empty()) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(field + ": expected an integer, got '" + value + "'");
}

std::vector<Vec2> parse_vertices(const std::string& value, const std::string& field) {
    std::vector<Vec2> vertices;
    std::stringstream ss(value);
    std::string pair;
    while (std::getline(ss, pair, ',')) {
        pair = trim(pair);
        if (pair.empty()) continue;
        std::stringstream ps(pair);
        double x = 0.0, y = 0.0;
        if (!(ps >> x >> y))
            throw std::invalid_argument(field + ": expected 'x y' pairs separated by commas");
        std::string rest;
        if (ps >> rest) throw std::invalid_argument(field + ": trailing content in vertex '" + pair + "'");
        vertices.push_back({x, y});
    }
    return vertices;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

const char* to_string(SimMode mode) { return mode == SimMode::Dfrpsr ? "dfrpsr" : "baseline"; }

SimMode sim_mode_from_string(const std::string& s) {
    if (s == "dfrpsr") return SimMode::Dfrpsr;
    if (s == "baseline") return SimMode::Baseline;
    throw std::invalid_argument("mode: expected 'dfrpsr' or 'baseline', got '" + s + "'");
}

void ScenarioConfig::validate() const {
    if (n_agents < 1) throw std::invalid_argument("n_agents: must be >= 1");
    if (formation.n_agents != n_agents)
        throw std::invalid_argument("formation.n_agents: must equal n_agents");
    try {
        formation.validate();
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("formation.") + e.what());
    }
    if (!(agent_speed > 0.0)) throw std::invalid_argument("agent_speed: must be positive");
    if (!(dt > 0.0 && dt <= 1.0)) throw std::invalid_argument("dt: must lie in (0, 1]");
    if (!(detection_range > 0.0)) throw std::invalid_argument("detection_range: must be positive");
    if (!(safe_dist > 0.0)) throw std::invalid_argument("safe_dist: must be positive");
    if (!(queue_gap > 0.0)) throw std::invalid_argument("queue_gap: must be positive");
    if (!(clearance > 0.0)) throw std::invalid_argument("clearance: must be positive");
    if (!(arrival_radius > 0.0)) throw std::invalid_argument("arrival_radius: must be positive");
    if (!(turnback_tol > 0.0)) throw std::invalid_argument("turnback_tol: must be positive");
    if (!(avoid_react_distance > 0.0))
        throw std::invalid_argument("avoid_react_distance: must be positive");
    if (!(weave_angle >= 0.0 && weave_angle < std::numbers::pi / 2.0))
        throw std::invalid_argument("weave_angle: must lie in [0, pi/2)");
    if (!(weave_period > 0.0)) throw std::invalid_argument("weave_period: must be positive");
    if (!(max_time > 0.0)) throw std::invalid_argument("max_time: must be positive");
    try {
        anneal.validate();
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("anneal.") + e.what());
    }
    if (!start_leader_pose.position.finite() || !std::isfinite(start_leader_pose.heading))
        throw std::invalid_argument("leader: non-finite start pose");
    if (!destination.finite()) throw std::invalid_argument("destination: non-finite");
    for (std::size_t i = 0; i < obstacles.size(); ++i) {
        const auto& verts = obstacles[i];
        const std::string field = "obstacles[" + std::to_string(i) + "]";
        if (verts.size() < 3) throw std::invalid_argument(field + ": needs >= 3 vertices");
        for (const Vec2& v : verts)
            if (!v.finite()) throw std::invalid_argument(field + ": non-finite vertex");
        if (!is_strictly_convex_ccw(verts))
            throw std::invalid_argument(field + ": vertices must form a strictly convex CCW polygon");
    }
}

ScenarioConfig parse_scenario(const std::string& text) {
    ScenarioConfig config;
    std::string section;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::invalid_argument("line " + std::to_string(line_no) + ": unterminated section");
            section = trim(line.substr(1, line.size() - 2));
            if (section == "obstacle") config.obstacles.emplace_back();
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const std::string field = section.empty() ? key : section + "." + key;

        if (section.empty() || section == "scenario") {
            if (key == "n_agents") {
                config.n_agents = static_cast<int>(parse_long(value, field));
                config.formation.n_agents = config.n_agents;
            } else if (key == "agent_speed") config.agent_speed = parse_double(value, field);
            else if (key == "dt") config.dt = parse_double(value, field);
            else if (key == "detection_range") config.detection_range = parse_double(value, field);
            else if (key == "safe_dist") config.safe_dist = parse_double(value, field);
            else if (key == "queue_gap") config.queue_gap = parse_double(value, field);
            else if (key == "clearance") config.clearance = parse_double(value, field);
            else if (key == "arrival_radius") config.arrival_radius = parse_double(value, field);
            else if (key == "turnback_tol") config.turnback_tol = parse_double(value, field);
            else if (key == "avoid_react_distance")
                config.avoid_react_distance = parse_double(value, field);
            else if (key == "weave_angle") config.weave_angle = parse_double(value, field);
            else if (key == "weave_period") config.weave_period = parse_double(value, field);
            else if (key == "max_time") config.max_time = parse_double(value, field);
            else if (key == "seed") config.seed = parse_long(value, field);
            else if (key == "mode") config.mode = sim_mode_from_string(value);
            else throw std::invalid_argument(field + ": unknown key");
        } else if (section == "formation") {
            if (key == "spacing") config.formation.spacing = parse_double(value, field);
            else if (key == "half_angle") config.formation.half_angle = parse_double(value, field);
            else throw std::invalid_argument(field + ": unknown key");
        } else if (section == "leader") {
            if (key == "x") config.start_leader_pose.position.x = parse_double(value, field);
            else if (key == "y") config.start_leader_pose.position.y = parse_double(value, field);
            else if (key == "heading") config.start_leader_pose.heading = parse_double(value, field);
            else throw std::invalid_argument(field + ": unknown key");
        } else if (section == "destination") {
            if (key == "x") config.destination.x = parse_double(value, field);
            else if (key == "y") config.destination.y = parse_double(value, field);
            else throw std::invalid_argument(field + ": unknown key");
        } else if (section == "anneal") {
            if (key == "t0") config.anneal.t0 = parse_double(value, field);
            else if (key == "t_final") config.anneal.t_final = parse_double(value, field);
            else if (key == "t_final_ratio") config.anneal.t_final_ratio = parse_double(value, field);
            else if (key == "decay") config.anneal.decay = parse_double(value, field);
            else if (key == "max_sinkhorn_iterations")
                config.anneal.max_sinkhorn_iterations = static_cast<int>(parse_long(value, field));
            else if (key == "sinkhorn_tolerance")
                config.anneal.sinkhorn_tolerance = parse_double(value, field);
            else throw std::invalid_argument(field + ": unknown key");
        } else if (section == "obstacle") {
            if (key == "vertices") config.obstacles.back() = parse_vertices(value, field);
            else throw std::invalid_argument(field + ": unknown key");
        } else {
            throw std::invalid_argument("unknown section [" + section + "]");
        }
    }
    config.formation.n_agents = config.n_agents;
    config.start_leader_pose.heading = wrap_angle(config.start_leader_pose.heading);
    config.validate();
    return config;
}

ScenarioConfig load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_scenario(buffer.str());
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

std::string serialize_scenario(const ScenarioConfig& config) {
    std::ostringstream out;
    out << "[scenario]\n";
    out << "n_agents = " << config.n_agents << "\n";
    out << "agent_speed = " << format_double(config.agent_speed) << "\n";
    out << "dt = " << format_double(config.dt) << "\n";
    out << "detection_range = " << format_double(config.detection_range) << "\n";
    out << "safe_dist = " << format_double(config.safe_dist) << "\n";
    out << "queue_gap = " << format_double(config.queue_gap) << "\n";
    out << "clearance = " << format_double(config.clearance) << "\n";
    out << "arrival_radius = " << format_double(config.arrival_radius) << "\n";
    out << "turnback_tol = " << format_double(config.turnback_tol) << "\n";
    out << "avoid_react_distance = " << format_double(config.avoid_react_distance) << "\n";
    out << "weave_angle = " << format_double(config.weave_angle) << "\n";
    out << "weave_period = " << format_double(config.weave_period) << "\n";
    out << "max_time = " << format_double(config.max_time) << "\n";
    out << "seed = " << config.seed << "\n";
    out << "mode = " << to_string(config.mode) << "\n";
    out << "\n[formation]\n";
    out << "spacing = " << format_double(config.formation.spacing) << "\n";
    out << "half_angle = " << format_double(config.formation.half_angle) << "\n";
    out << "\n[leader]\n";
    out << "x = " << format_double(config.start_leader_pose.position.x) << "\n";
    out << "y = " << format_double(config.start_leader_pose.position.y) << "\n";
    out << "heading = " << format_double(config.start_leader_pose.heading) << "\n";
    out << "\n[destination]\n";
    out << "x = " << format_double(config.destination.x) << "\n";
    out << "y = " << format_double(config.destination.y) << "\n";
    out << "\n[anneal]\n";
    out << "t0 = " << format_double(config.anneal.t0) << "\n";
    out << "t_final = " << format_double(config.anneal.t_final) << "\n";
    out << "t_final_ratio = " << format_double(config.anneal.t_final_ratio) << "\n";
    out << "decay = " << format_double(config.anneal.decay) << "\n";
    out << "max_sinkhorn_iterations = " << config.anneal.max_sinkhorn_iterations << "\n";
    out << "sinkhorn_tolerance = " << format_double(config.anneal.sinkhorn_tolerance) << "\n";
    for (const auto& verts : config.obstacles) {
        out << "\n[obstacle]\n";
        out << "vertices = ";
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (i) out << ", ";
            out << format_double(verts[i].x) << " " << format_double(verts[i].y);
        }
        out << "\n";
    }
    return out.str();
}

void save_scenario(const ScenarioConfig& config, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write scenario file: " + path);
    out << serialize_scenario(config);
    if (!out) throw std::runtime_error("failed writing scenario file: " + path);
}

}  // namespace swarmsim
