// Config parsing and deterministic file emission.
//
// Configs are versioned JSON (schema 1). All floating-point output is
// printed with %.17g so doubles round-trip exactly and repeated runs of the
// same binary on the same config are byte-identical (there is no RNG and no
// nondeterministic reduction anywhere in the pipeline).

#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rqo/homodyne.hpp"
#include "rqo/scenario.hpp"

namespace rqo {

using json = nlohmann::json;

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

template <typename T>
T require_field(const json& j, const std::string& path, const std::string& key) {
    if (!j.contains(key))
        throw ConfigError("missing required field '" + (path.empty() ? key : path + "." + key) + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError("field '" + (path.empty() ? key : path + "." + key) + "' has the wrong type");
    }
}

template <typename T>
T optional_field(const json& j, const std::string& path, const std::string& key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError("field '" + (path.empty() ? key : path + "." + key) + "' has the wrong type");
    }
}

}  // namespace detail

inline ScenarioConfig parse_config(const json& j) {
    ScenarioConfig cfg;
    cfg.schema = detail::require_field<int>(j, "", "schema");
    if (cfg.schema != 1) throw ConfigError("unsupported schema version " + std::to_string(cfg.schema));

    const auto scen = detail::require_field<std::string>(j, "", "scenario");
    if (scen == "minkowski_to_rindler")
        cfg.scenario = Scenario::minkowski_to_rindler;
    else if (scen == "rindler_to_delayed")
        cfg.scenario = Scenario::rindler_to_delayed;
    else
        throw ConfigError("field 'scenario' must be 'minkowski_to_rindler' or 'rindler_to_delayed'");

    cfg.a = detail::require_field<double>(j, "", "a");

    const json wp = detail::require_field<json>(j, "", "wavepacket");
    cfg.wp_center = detail::require_field<double>(wp, "wavepacket", "center");
    cfg.wp_width = detail::require_field<double>(wp, "wavepacket", "width");
    cfg.wp_offset = detail::require_field<double>(wp, "wavepacket", "offset");

    const json sig = detail::require_field<json>(j, "", "signal");
    cfg.beta_abs = detail::require_field<double>(sig, "signal", "beta_abs");
    cfg.psi = detail::require_field<double>(sig, "signal", "psi");

    const json cut = detail::require_field<json>(j, "", "cutoffs");
    cfg.omega_min = detail::require_field<double>(cut, "cutoffs", "omega_min");
    cfg.omega_max = detail::require_field<double>(cut, "cutoffs", "omega_max");

    const json grid = detail::optional_field<json>(j, "", "grid", json::object());
    cfg.n_omega = detail::optional_field<std::size_t>(grid, "grid", "n_omega", cfg.n_omega);
    cfg.n_phi = detail::optional_field<std::size_t>(grid, "grid", "n_phi", cfg.n_phi);

    if (cfg.scenario == Scenario::rindler_to_delayed)
        cfg.delay = detail::require_field<double>(j, "", "delay");

    const json orc = detail::optional_field<json>(j, "", "oracle", json::object());
    cfg.oracle.enabled = detail::optional_field<bool>(orc, "oracle", "enabled", cfg.oracle.enabled);
    cfg.oracle.n_modes = detail::optional_field<std::size_t>(orc, "oracle", "n_modes", cfg.oracle.n_modes);
    cfg.oracle.lo_amplitude =
        detail::optional_field<double>(orc, "oracle", "lo_amplitude", cfg.oracle.lo_amplitude);

    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

inline ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    return parse_config(j);
}

inline std::string sweep_csv(const HomodyneSweep& sw) {
    std::ostringstream out;
    out << "phi,X_balanced,V_balanced,X_self,V_self,X_ideal,V_ideal\n";
    for (std::size_t i = 0; i < sw.balanced.phi.size(); ++i) {
        out << format_double(sw.balanced.phi[i]) << ',' << format_double(sw.balanced.X[i]) << ','
            << format_double(sw.balanced.V[i]) << ',' << format_double(sw.self_homodyne.X[i])
            << ',' << format_double(sw.self_homodyne.V[i]) << ',' << format_double(sw.ideal.X[i])
            << ',' << format_double(sw.ideal.V[i]) << '\n';
    }
    return out.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file '" + path + "'");
    out << content;
}

}  // namespace rqo
