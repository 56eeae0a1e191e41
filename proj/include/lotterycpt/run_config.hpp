#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lotterycpt/analysis.hpp"
#include "lotterycpt/cpt.hpp"
#include "lotterycpt/mechanisms.hpp"

namespace lotterycpt {

/// Malformed or out-of-range run configuration.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { Csv, Json };

/// Everything a CLI run needs. Every field has a default, so an empty JSON
/// object is a complete configuration.
struct RunConfig {
    /// Used by eval, optimal-k, sweep-f, sweep-r and profit.
    Mechanism mechanism = Mechanism::top_k_linear(0.16);
    /// Used by sweep-n and break-even.
    std::vector<Mechanism> compare = {Mechanism::top_k_linear(0.16),
                                      Mechanism::top_k_exponential(0.06),
                                      Mechanism::winner_take_all(), Mechanism::three_bands()};
    ValueFunction value_fn;
    WeightingFunction weight_fn;
    double fee = 1.0;
    double rake = 0.1;
    /// Participant count for eval.
    int n = 100;
    SweepGrid grid = SweepGrid::defaults();
    std::string output;  // empty means stdout
    OutputFormat format = OutputFormat::Csv;

    /// Throws ConfigError when any nested spec is invalid.
    void validate() const;

    bool operator==(const RunConfig&) const = default;
};

void to_json(nlohmann::json& j, const RunConfig& config);
/// Missing keys keep their defaults; unknown keys and wrong types are ConfigError.
void from_json(const nlohmann::json& j, RunConfig& config);

RunConfig load_run_config(const std::filesystem::path& path);
void save_run_config(const RunConfig& config, const std::filesystem::path& path);

std::string_view to_string(WeightingKind kind);
WeightingKind parse_weighting_kind(std::string_view name);
OutputFormat parse_output_format(std::string_view name);

}  // namespace lotterycpt
