#include "ks/scenario.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "ks/errors.hpp"

namespace ks {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        const double d = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return d;
    } catch (const std::exception&) {
        throw config_error("config: bad numeric value for '" + key + "': " + value);
    }
}

int parse_int(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        const int v = std::stoi(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw config_error("config: bad integer value for '" + key + "': " + value);
    }
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "on" || value == "1") return true;
    if (value == "false" || value == "off" || value == "0") return false;
    throw config_error("config: bad boolean value for '" + key + "': " + value);
}

std::vector<double> parse_params(const std::string& value) {
    std::vector<double> out;
    std::istringstream in(value);
    double d = 0.0;
    while (in >> d) out.push_back(d);
    if (!in.eof()) throw config_error("config: bad u0.params: " + value);
    return out;
}

InitialData make_initial_data(const std::string& kind, const std::vector<double>& p) {
    if (kind == "bump") {
        if (p.size() != 3) throw config_error("config: bump expects u0.params = center width height");
        return BumpData{p[0], p[1], p[2]};
    }
    if (kind == "two_bumps") {
        if (p.size() != 4) throw config_error("config: two_bumps expects u0.params = c1 c2 width height");
        return TwoBumpsData{p[0], p[1], p[2], p[3]};
    }
    if (kind == "barenblatt") {
        if (p.size() != 2) throw config_error("config: barenblatt expects u0.params = t0 mass");
        return BarenblattData{p[0], p[1]};
    }
    if (kind == "zero") {
        if (!p.empty()) throw config_error("config: zero takes no u0.params");
        return ZeroData{};
    }
    throw config_error("config: unknown u0.kind: " + kind);
}

} // namespace

void validate(const Scenario& s) {
    if (!(s.m > 1.0)) throw config_error("scenario: m must be > 1");
    if (!(s.gamma > 0.0)) throw config_error("scenario: gamma must be > 0");
    if (!(s.q >= 2.0)) throw config_error("scenario: q must be >= 2");
    if (!(s.epsilon >= 0.0)) throw config_error("scenario: epsilon must be >= 0");
    if (!(s.t_end > 0.0)) throw config_error("scenario: t_end must be > 0");
    if (!(s.cfl_sigma > 0.0 && s.cfl_sigma < 1.0))
        throw config_error("scenario: cfl_sigma must lie in (0, 1)");
    if (s.n_frames < 1) throw config_error("scenario: n_frames must be >= 1");
    if (s.grid.n_cells < 16) throw config_error("scenario: grid not built");

    InitialData checked = s.u0;
    try {
        (void)initial_value(checked, s.grid.x_min, s.m);
    } catch (const std::invalid_argument& e) {
        throw config_error(std::string("scenario: ") + e.what());
    }

    const auto supp = analytic_support(s.u0, s.m);
    if (!supp.empty()) {
        const double lo_limit = s.grid.x_min + 10.0 * s.grid.dx;
        const double hi_limit = s.grid.x_max - 10.0 * s.grid.dx;
        if (!(supp.lo > lo_limit && supp.hi < hi_limit))
            throw config_error("scenario: supp u0 must lie strictly inside "
                               "[x_min + 10 dx, x_max - 10 dx]");
    }

    if (s.hole) {
        if (!(s.hole->a < s.hole->b)) throw config_error("scenario: hole.a must be < hole.b");
        if (!(s.hole->a > s.grid.x_min && s.hole->b < s.grid.x_max))
            throw config_error("scenario: hole must lie inside the domain");
        for (int i = 0; i < s.grid.n_cells; ++i) {
            const double x = s.grid.center(i);
            if (x >= s.hole->a && x <= s.hole->b &&
                initial_value(s.u0, x, s.m) != 0.0)
                throw config_error("scenario: u0 must vanish on the hole interval");
        }
    }
}

Scenario scenario_from_config(std::istream& in) {
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("config: line " + std::to_string(lineno) +
                               " is not 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw config_error("config: empty key or value on line " + std::to_string(lineno));
        if (kv.count(key)) throw config_error("config: duplicate key '" + key + "'");
        kv[key] = value;
    }

    auto take = [&](const char* key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        std::string v = it->second;
        kv.erase(it);
        return v;
    };
    auto require = [&](const char* key) -> std::string {
        auto v = take(key);
        if (!v) throw config_error(std::string("config: missing required key '") + key + "'");
        return *v;
    };

    Scenario s;
    s.m = parse_double("m", require("m"));
    s.gamma = parse_double("gamma", require("gamma"));
    s.q = parse_double("q", require("q"));
    if (auto v = take("epsilon")) s.epsilon = parse_double("epsilon", *v);
    if (auto v = take("drift_enabled")) s.drift_enabled = parse_bool("drift_enabled", *v);

    const double x_min = parse_double("x_min", require("x_min"));
    const double x_max = parse_double("x_max", require("x_max"));
    const int n_cells = parse_int("n_cells", require("n_cells"));
    try {
        s.grid = build_grid(x_min, x_max, n_cells);
    } catch (const std::invalid_argument& e) {
        throw config_error(std::string("config: ") + e.what());
    }

    s.t_end = parse_double("t_end", require("t_end"));
    if (auto v = take("cfl_sigma")) s.cfl_sigma = parse_double("cfl_sigma", *v);
    if (auto v = take("n_frames")) s.n_frames = parse_int("n_frames", *v);

    const std::string kind = require("u0.kind");
    std::vector<double> params;
    if (auto v = take("u0.params")) params = parse_params(*v);
    s.u0 = make_initial_data(kind, params);

    const auto ha = take("hole.a");
    const auto hb = take("hole.b");
    if (ha.has_value() != hb.has_value())
        throw config_error("config: hole.a and hole.b must be given together");
    if (ha) s.hole = Hole{parse_double("hole.a", *ha), parse_double("hole.b", *hb)};

    if (!kv.empty()) throw config_error("config: unknown key '" + kv.begin()->first + "'");

    validate(s);
    return s;
}

Scenario scenario_from_config_text(const std::string& text) {
    std::istringstream in(text);
    return scenario_from_config(in);
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("config: cannot open '" + path + "'");
    return scenario_from_config(in);
}

std::string scenario_to_config(const Scenario& s) {
    std::ostringstream out;
    out.precision(17);
    out << "m = " << s.m << "\n"
        << "gamma = " << s.gamma << "\n"
        << "q = " << s.q << "\n"
        << "epsilon = " << s.epsilon << "\n"
        << "drift_enabled = " << (s.drift_enabled ? "true" : "false") << "\n"
        << "x_min = " << s.grid.x_min << "\n"
        << "x_max = " << s.grid.x_max << "\n"
        << "n_cells = " << s.grid.n_cells << "\n"
        << "t_end = " << s.t_end << "\n"
        << "cfl_sigma = " << s.cfl_sigma << "\n"
        << "n_frames = " << s.n_frames << "\n";
    std::visit(
        [&](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, BumpData>) {
                out << "u0.kind = bump\n"
                    << "u0.params = " << d.center << " " << d.width << " " << d.height << "\n";
            } else if constexpr (std::is_same_v<T, TwoBumpsData>) {
                out << "u0.kind = two_bumps\n"
                    << "u0.params = " << d.c1 << " " << d.c2 << " " << d.width << " "
                    << d.height << "\n";
            } else if constexpr (std::is_same_v<T, BarenblattData>) {
                out << "u0.kind = barenblatt\n"
                    << "u0.params = " << d.t0 << " " << d.mass << "\n";
            } else {
                out << "u0.kind = zero\n";
            }
        },
        s.u0);
    if (s.hole) out << "hole.a = " << s.hole->a << "\n"
                    << "hole.b = " << s.hole->b << "\n";
    return out.str();
}

} // namespace ks
