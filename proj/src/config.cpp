// SPDX-License-Identifier: Apache-2.0
#include "iftw/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "iftw/error.hpp"

namespace iftw {

namespace {

std::string join_problems(const std::vector<std::string>& problems)
{
    std::string out = "invalid configuration";
    for (const auto& p : problems)
        out += "\n  " + p;
    return out;
}

class Reader
{
  public:
    explicit Reader(std::string source) : source_(std::move(source)) {}

    std::vector<std::string> errors;

    std::string where(const YAML::Node& node) const
    {
        const YAML::Mark m = node.Mark();
        if (m.line < 0)
            return source_;
        return source_ + ":" + std::to_string(m.line + 1) + ":" + std::to_string(m.column + 1);
    }

    void error(const YAML::Node& node, const std::string& path, const std::string& msg)
    {
        errors.push_back(where(node) + ": " + path + ": " + msg);
    }

    void semantic(const std::string& msg) { errors.push_back(source_ + ": " + msg); }

    // Returns false (after recording) if `node` is present but not a mapping.
    bool check_keys(const YAML::Node& node, const std::string& path, const std::set<std::string>& allowed)
    {
        if (!node.IsMap())
        {
            error(node, path, "expected a mapping");
            return false;
        }
        for (const auto& kv : node)
        {
            const auto key = kv.first.as<std::string>();
            if (!allowed.contains(key))
                error(kv.first, path.empty() ? key : path + "." + key, "unknown key");
        }
        return true;
    }

    template <class T>
    bool read(const YAML::Node& map, const std::string& path, const char* key, T& target)
    {
        const YAML::Node node = map[key];
        if (!node)
            return false;
        try
        {
            target = node.as<T>();
            return true;
        }
        catch (const YAML::Exception&)
        {
            error(node, path + "." + key, "cannot convert '" + scalar_text(node) + "'");
            return false;
        }
    }

    template <class T>
    void read_optional(const YAML::Node& map, const std::string& path, const char* key,
                       std::optional<T>& target)
    {
        T value{};
        if (read(map, path, key, value))
            target = value;
    }

  private:
    static std::string scalar_text(const YAML::Node& node)
    {
        return node.IsScalar() ? node.Scalar() : std::string("<non-scalar>");
    }

    std::string source_;
};

void read_topology(Reader& r, const YAML::Node& n, TopologySpec& t)
{
    if (!r.check_keys(n, "topology", {"node_count", "spacing_d0", "theta", "lateral_offset",
                                      "height_side_a", "height_side_b"}))
        return;
    r.read(n, "topology", "node_count", t.node_count);
    r.read(n, "topology", "spacing_d0", t.spacing_d0);
    r.read_optional(n, "topology", "theta", t.theta_deg);
    r.read_optional(n, "topology", "lateral_offset", t.lateral_offset);
    r.read(n, "topology", "height_side_a", t.height_side_a);
    r.read(n, "topology", "height_side_b", t.height_side_b);
}

void read_antenna(Reader& r, const YAML::Node& n, AntennaPattern& a)
{
    if (!r.check_keys(n, "antenna", {"phi", "main_gain", "side_gain"}))
        return;
    r.read(n, "antenna", "phi", a.beamwidth_phi);
    r.read(n, "antenna", "main_gain", a.main_gain);
    r.read(n, "antenna", "side_gain", a.side_gain);
}

void read_radio(Reader& r, const YAML::Node& n, ScenarioConfig& c)
{
    if (!r.check_keys(n, "radio", {"tx_power", "carrier_frequency", "bandwidth", "path_loss_exponent",
                                   "attenuation_alpha", "noise_figure", "snr_cap", "utility_beta",
                                   "calibrate_to_sinr"}))
        return;
    RadioParams& p = c.radio;
    r.read(n, "radio", "tx_power", p.tx_power);
    r.read(n, "radio", "carrier_frequency", p.carrier_frequency);
    r.read(n, "radio", "bandwidth", p.bandwidth);
    r.read(n, "radio", "path_loss_exponent", p.path_loss_exponent);
    r.read(n, "radio", "attenuation_alpha", p.attenuation_alpha);
    r.read(n, "radio", "noise_figure", p.noise_figure);
    r.read(n, "radio", "snr_cap", p.snr_cap);
    r.read(n, "radio", "utility_beta", p.utility_beta);
    r.read_optional(n, "radio", "calibrate_to_sinr", c.calibrate_to_sinr);
}

void read_traffic(Reader& r, const YAML::Node& n, ScenarioConfig& c)
{
    if (!r.check_keys(n, "traffic", {"width_mean", "width_sd", "length_mean", "length_sd", "height_mean",
                                     "height_sd", "density", "vehicles", "gamma_angle", "road_length",
                                     "carriageway_width"}))
        return;
    VehicleStats& s = c.traffic;
    r.read(n, "traffic", "width_mean", s.width_mean);
    r.read(n, "traffic", "width_sd", s.width_sd);
    r.read(n, "traffic", "length_mean", s.length_mean);
    r.read(n, "traffic", "length_sd", s.length_sd);
    r.read(n, "traffic", "height_mean", s.height_mean);
    r.read(n, "traffic", "height_sd", s.height_sd);
    r.read(n, "traffic", "gamma_angle", c.gamma_angle_deg);
    r.read(n, "traffic", "road_length", c.density_mapping.road_length);
    r.read(n, "traffic", "carriageway_width", c.density_mapping.carriageway_width);

    const bool has_density = r.read(n, "traffic", "density", s.density_lambda);
    double vehicles = 0.0;
    if (r.read(n, "traffic", "vehicles", vehicles))
    {
        if (has_density)
            r.error(n["vehicles"], "traffic.vehicles", "give either density or vehicles, not both");
        else if (c.density_mapping.road_length > 0.0 && c.density_mapping.carriageway_width > 0.0
                 && vehicles >= 0.0)
            s.density_lambda = c.density_mapping.density_for(vehicles);
        else
            r.error(n["vehicles"], "traffic.vehicles", "needs a positive road area and vehicles >= 0");
    }
}

void read_building(Reader& r, const YAML::Node& n, BuildingConfig& b)
{
    if (!r.check_keys(n, "building", {"setback_d1", "gamma", "material", "bounces"}))
        return;
    r.read(n, "building", "setback_d1", b.setback_d1);
    r.read(n, "building", "bounces", b.bounces);
    const bool has_gamma = r.read(n, "building", "gamma", b.reflection_coeff_gamma);
    std::string material;
    if (r.read(n, "building", "material", material))
    {
        if (has_gamma)
            r.error(n["material"], "building.material", "give either gamma or material, not both");
        else if (auto g = material_gamma(material))
            b.reflection_coeff_gamma = *g;
        else
            r.error(n["material"], "building.material",
                    "unknown material '" + material + "' (metal, concrete, glass, brick)");
    }
}

void read_mitigation(Reader& r, const YAML::Node& n, MitigationConfig& m)
{
    if (!r.check_keys(n, "mitigation", {"delta_h", "road_width", "phi"}))
        return;
    r.read(n, "mitigation", "delta_h", m.delta_h);
    r.read(n, "mitigation", "road_width", m.road_width);
    r.read(n, "mitigation", "phi", m.phi_deg);
}

void read_sweep(Reader& r, const YAML::Node& n, ExperimentConfig& e)
{
    if (!r.check_keys(n, "experiment.sweep", {"axis", "from", "to", "points", "values"}))
        return;
    SweepSpec spec;
    std::string axis;
    if (!r.read(n, "experiment.sweep", "axis", axis))
    {
        r.error(n, "experiment.sweep.axis", "missing");
        return;
    }
    if (auto a = sweep_axis_from_string(axis))
        spec.axis = *a;
    else
    {
        r.error(n["axis"], "experiment.sweep.axis",
                "unknown axis '" + axis + "' (building_gamma, building_d1, density, relay_height)");
        return;
    }

    if (n["values"])
    {
        if (n["from"] || n["to"] || n["points"])
            r.error(n["values"], "experiment.sweep", "give either values or from/to/points");
        r.read(n, "experiment.sweep", "values", spec.range.values);
    }
    else
    {
        double from = 0.0, to = 0.0;
        int points = 0;
        const bool ok = r.read(n, "experiment.sweep", "from", from) && r.read(n, "experiment.sweep", "to", to)
                        && r.read(n, "experiment.sweep", "points", points);
        if (!ok)
        {
            r.error(n, "experiment.sweep", "needs values, or from/to/points");
            return;
        }
        if (points < 1)
        {
            r.error(n["points"], "experiment.sweep.points", "must be >= 1");
            return;
        }
        spec.range = SweepRange::linspace(from, to, points);
    }
    e.sweep = spec;
}

void read_experiment(Reader& r, const YAML::Node& n, ExperimentConfig& e)
{
    if (!r.check_keys(n, "experiment", {"effects", "sweep", "trials", "seed", "threads", "output"}))
        return;
    std::vector<std::string> effects;
    if (r.read(n, "experiment", "effects", effects))
    {
        for (std::size_t i = 0; i < effects.size(); ++i)
        {
            const auto kind = effect_kind_from_string(effects[i]);
            if (!kind)
                r.error(n["effects"][i], "experiment.effects", "unknown effect '" + effects[i] + "'");
            else if (*kind == EffectKind::VehicleTypeI || *kind == EffectKind::BuildingDouble)
                r.error(n["effects"][i], "experiment.effects",
                        "'" + effects[i] + "' is not a table effect (use side_lobe_*, vehicle_type_ii/iii)");
            else
                e.effects.push_back(*kind);
        }
    }
    long long trials = 0;
    if (r.read(n, "experiment", "trials", trials))
    {
        if (trials < 1)
            r.error(n["trials"], "experiment.trials", "must be >= 1");
        else
            e.trials = static_cast<std::uint64_t>(trials);
    }
    r.read(n, "experiment", "seed", e.seed);
    r.read(n, "experiment", "threads", e.threads);
    r.read(n, "experiment", "output", e.output);
    if (n["sweep"])
        read_sweep(r, n["sweep"], e);
}

void validate_semantics(Reader& r, const ScenarioConfig& c)
{
    auto check = [&r](const std::function<void()>& fn) {
        try
        {
            fn();
        }
        catch (const ValidationError& e)
        {
            r.semantic(e.what());
        }
    };
    bool topology_ok = false;
    check([&] {
        (void)c.build();
        topology_ok = true;
    });
    check([&] { c.antenna.validate(); });
    check([&] { c.radio.validate(); });
    check([&] { c.traffic.validate(); });
    check([&] { c.building.validate(); });
    check([&] { (void)mitigation_tilt(c.mitigation.delta_h, c.mitigation.road_width); });
    check([&] {
        if (!(c.mitigation.phi_deg > 0.0 && c.mitigation.phi_deg < 180.0))
            throw ValidationError("mitigation.phi", "must lie in (0, 180) degrees");
    });
    check([&] {
        if (topology_ok)
            c.region().validate();
    });
    check([&] {
        if (c.experiment.sweep)
            c.experiment.sweep->range.validate();
    });
    check([&] {
        if (c.calibrate_to_sinr && !std::isfinite(*c.calibrate_to_sinr))
            throw ValidationError("radio.calibrate_to_sinr", "must be finite");
    });
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> problems)
    : std::runtime_error(join_problems(problems)), problems_(std::move(problems))
{
}

ReflectionRegionParams ScenarioConfig::region() const
{
    const Topology topo = build();
    ReflectionRegionParams g;
    g.d = topo.spacing_d0();
    g.theta_deg = topo.theta_deg();
    g.gamma_angle_deg = gamma_angle_deg;
    g.phi_deg = antenna.beamwidth_phi;
    g.relay_height = topo.height_side_a();
    return g;
}

RadioParams ScenarioConfig::calibrated_radio() const
{
    RadioParams r = radio;
    if (calibrate_to_sinr)
    {
        const Topology topo = build();
        r.tx_power = calibrate_tx_power(radio, antenna.main_gain, antenna.main_gain, topo.hop_length(),
                                        *calibrate_to_sinr);
    }
    return r;
}

ScenarioConfig paper_baseline_config()
{
    ScenarioConfig c;
    c.topology.node_count = 10;
    c.topology.spacing_d0 = 75.0;
    c.topology.theta_deg = 11.7;
    c.topology.height_side_a = 3.5;
    c.topology.height_side_b = 3.5;
    c.antenna = baseline_antenna_preset();
    c.radio = radio_preset_60ghz();
    c.calibrate_to_sinr = 41.1808;
    c.traffic = VehicleStats{};
    c.traffic.density_lambda = 8e-4;
    c.gamma_angle_deg = 5.0;
    c.building = BuildingConfig{4.0, material::kGlass, 2};
    c.mitigation = MitigationConfig{0.7, 10.0, 8.0};
    c.experiment.effects = {EffectKind::SideLobeShort, EffectKind::SideLobeLong, EffectKind::VehicleTypeII,
                            EffectKind::VehicleTypeIII};
    c.experiment.sweep = SweepSpec{SweepAxis::Density, SweepRange::linspace(0.0, 1.5e-3, 16)};
    c.experiment.trials = 100000;
    c.experiment.seed = 20190601;
    return c;
}

std::optional<ScenarioConfig> preset_config(std::string_view name)
{
    if (name == "paper_baseline")
        return paper_baseline_config();
    return std::nullopt;
}

ScenarioConfig parse_config(const std::string& text, const std::string& source)
{
    YAML::Node root;
    try
    {
        root = YAML::Load(text);
    }
    catch (const YAML::ParserException& e)
    {
        throw ConfigError({source + ":" + std::to_string(e.mark.line + 1) + ":"
                           + std::to_string(e.mark.column + 1) + ": parse error: " + e.msg});
    }
    if (root.IsNull())
        throw ConfigError({source + ":1:1: parse error: empty configuration"});

    Reader r(source);
    ScenarioConfig c;
    if (r.check_keys(root, "", {"topology", "antenna", "radio", "traffic", "building", "mitigation",
                                "experiment"}))
    {
        if (root["topology"]) read_topology(r, root["topology"], c.topology);
        if (root["antenna"]) read_antenna(r, root["antenna"], c.antenna);
        if (root["radio"]) read_radio(r, root["radio"], c);
        if (root["traffic"]) read_traffic(r, root["traffic"], c);
        if (root["building"]) read_building(r, root["building"], c.building);
        if (root["mitigation"]) read_mitigation(r, root["mitigation"], c.mitigation);
        if (root["experiment"]) read_experiment(r, root["experiment"], c.experiment);
        validate_semantics(r, c);
    }
    if (!r.errors.empty())
        throw ConfigError(std::move(r.errors));
    return c;
}

ScenarioConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError({path.string() + ": cannot open file"});
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path.string());
}

}  // namespace iftw
