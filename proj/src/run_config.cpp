#include "lotterycpt/run_config.hpp"

#include <fstream>
#include <initializer_list>

#include "lotterycpt/errors.hpp"

namespace lotterycpt {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& j, std::string_view where,
                         std::initializer_list<std::string_view> allowed) {
    if (!j.is_object()) {
        throw ConfigError(std::string(where) + " must be a JSON object");
    }
    for (const auto& item : j.items()) {
        bool known = false;
        for (auto key : allowed) known = known || item.key() == key;
        if (!known) {
            throw ConfigError("unknown key '" + item.key() + "' in " + std::string(where));
        }
    }
}

template <typename T>
void read_if_present(const json& j, const char* key, T& out) {
    if (auto it = j.find(key); it != j.end()) {
        try {
            out = it->get<T>();
        } catch (const json::exception& e) {
            throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
        }
    }
}

json mechanism_to_json(const Mechanism& m) {
    json j{{"kind", std::string(to_string(m.kind))}};
    if (m.k) j["k"] = *m.k;
    return j;
}

Mechanism mechanism_from_json(const json& j) {
    reject_unknown_keys(j, "mechanism", {"kind", "k"});
    std::string kind = "top-k-linear";
    read_if_present(j, "kind", kind);
    Mechanism m;
    try {
        m.kind = parse_mechanism_kind(kind);
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    if (j.contains("k")) {
        double k = 0.0;
        read_if_present(j, "k", k);
        m.k = k;
    }
    return m;
}

}  // namespace

std::string_view to_string(WeightingKind kind) {
    switch (kind) {
        case WeightingKind::TverskyKahneman: return "tk";
        case WeightingKind::Prelec: return "prelec";
        case WeightingKind::Identity: return "identity";
    }
    return "unknown";
}

WeightingKind parse_weighting_kind(std::string_view name) {
    if (name == "tk") return WeightingKind::TverskyKahneman;
    if (name == "prelec") return WeightingKind::Prelec;
    if (name == "identity") return WeightingKind::Identity;
    throw ConfigError("unknown weighting function '" + std::string(name) +
                      "' (expected tk, prelec or identity)");
}

OutputFormat parse_output_format(std::string_view name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw ConfigError("unknown output format '" + std::string(name) + "' (expected csv or json)");
}

void RunConfig::validate() const {
    try {
        mechanism.validate();
        if (compare.empty()) throw DomainError("compare list must not be empty");
        for (const auto& m : compare) m.validate();
        value_fn.validate();
        weight_fn.validate();
        GameConfig{std::max(n, 1), fee, rake}.validate();
        if (n < 1) throw DomainError("n must be >= 1");
        grid.validate();
    } catch (const DomainError& e) {
        throw ConfigError(std::string("invalid configuration: ") + e.what());
    }
}

void to_json(json& j, const RunConfig& c) {
    json weight{{"kind", std::string(to_string(c.weight_fn.kind))}};
    switch (c.weight_fn.kind) {
        case WeightingKind::TverskyKahneman:
            weight["delta"] = c.weight_fn.delta;
            break;
        case WeightingKind::Prelec:
            weight["alpha"] = c.weight_fn.prelec_alpha;
            weight["beta"] = c.weight_fn.prelec_beta;
            break;
        case WeightingKind::Identity:
            break;
    }
    json compare = json::array();
    for (const auto& m : c.compare) compare.push_back(mechanism_to_json(m));

    j = json{
        {"mechanism", mechanism_to_json(c.mechanism)},
        {"compare", compare},
        {"value_fn", {{"alpha", c.value_fn.alpha}, {"lambda", c.value_fn.lambda}}},
        {"weight_fn", weight},
        {"game", {{"fee", c.fee}, {"rake", c.rake}}},
        {"n", c.n},
        {"grid",
         {{"n_min", c.grid.n.min},
          {"n_max", c.grid.n.max},
          {"k_values", c.grid.k_values},
          {"f_values", c.grid.f_values},
          {"r_values", c.grid.r_values}}},
        {"output",
         {{"path", c.output}, {"format", c.format == OutputFormat::Csv ? "csv" : "json"}}},
    };
}

void from_json(const json& j, RunConfig& c) {
    reject_unknown_keys(j, "config",
                        {"mechanism", "compare", "value_fn", "weight_fn", "game", "n", "grid",
                         "output"});
    if (auto it = j.find("mechanism"); it != j.end()) c.mechanism = mechanism_from_json(*it);
    if (auto it = j.find("compare"); it != j.end()) {
        if (!it->is_array()) throw ConfigError("compare must be an array");
        c.compare.clear();
        for (const auto& m : *it) c.compare.push_back(mechanism_from_json(m));
    }
    if (auto it = j.find("value_fn"); it != j.end()) {
        reject_unknown_keys(*it, "value_fn", {"alpha", "lambda"});
        read_if_present(*it, "alpha", c.value_fn.alpha);
        read_if_present(*it, "lambda", c.value_fn.lambda);
    }
    if (auto it = j.find("weight_fn"); it != j.end()) {
        reject_unknown_keys(*it, "weight_fn", {"kind", "delta", "alpha", "beta"});
        std::string kind(to_string(c.weight_fn.kind));
        read_if_present(*it, "kind", kind);
        c.weight_fn.kind = parse_weighting_kind(kind);
        read_if_present(*it, "delta", c.weight_fn.delta);
        read_if_present(*it, "alpha", c.weight_fn.prelec_alpha);
        read_if_present(*it, "beta", c.weight_fn.prelec_beta);
    }
    if (auto it = j.find("game"); it != j.end()) {
        reject_unknown_keys(*it, "game", {"fee", "rake"});
        read_if_present(*it, "fee", c.fee);
        read_if_present(*it, "rake", c.rake);
    }
    read_if_present(j, "n", c.n);
    if (auto it = j.find("grid"); it != j.end()) {
        reject_unknown_keys(*it, "grid", {"n_min", "n_max", "k_values", "f_values", "r_values"});
        read_if_present(*it, "n_min", c.grid.n.min);
        read_if_present(*it, "n_max", c.grid.n.max);
        read_if_present(*it, "k_values", c.grid.k_values);
        read_if_present(*it, "f_values", c.grid.f_values);
        read_if_present(*it, "r_values", c.grid.r_values);
    }
    if (auto it = j.find("output"); it != j.end()) {
        reject_unknown_keys(*it, "output", {"path", "format"});
        read_if_present(*it, "path", c.output);
        std::string format = c.format == OutputFormat::Csv ? "csv" : "json";
        read_if_present(*it, "format", format);
        c.format = parse_output_format(format);
    }
}

RunConfig load_run_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file " + path.string());
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("cannot parse config file " + path.string() + ": " + e.what());
    }
    RunConfig config = j.get<RunConfig>();
    config.validate();
    return config;
}

void save_run_config(const RunConfig& config, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw ConfigError("cannot write config file " + path.string());
    }
    out << json(config).dump(2) << '\n';
}

}  // namespace lotterycpt
