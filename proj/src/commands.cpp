#include "lotterycpt/commands.hpp"

#include <string>

#include "lotterycpt/errors.hpp"

namespace lotterycpt {

namespace {

Cell k_cell(const Mechanism& m) {
    if (m.k) return *m.k;
    return std::monostate{};
}

Cell optional_cell(const std::optional<double>& x) {
    if (x) return *x;
    return std::monostate{};
}

Cell optional_cell(const std::optional<int>& x) {
    if (x) return static_cast<std::int64_t>(*x);
    return std::monostate{};
}

Table eval(const RunConfig& c) {
    const GameConfig game{c.n, c.fee, c.rake};
    Table t{{"mechanism", "k", "n", "f", "r", "utility", "eut_utility"}, {}};
    t.rows.push_back({std::string(to_string(c.mechanism.kind)), k_cell(c.mechanism),
                      static_cast<std::int64_t>(c.n), c.fee, c.rake,
                      utility_at(c.mechanism, game, c.value_fn, c.weight_fn),
                      eut_utility_at(c.mechanism, game)});
    return t;
}

Table sweep_n(const RunConfig& c) {
    Table t{{"mechanism", "n", "utility"}, {}};
    auto emit = [&](const std::string& label, const UtilityCurve& curve) {
        for (const auto& p : curve.points) {
            t.rows.push_back({label, static_cast<std::int64_t>(p.n), optional_cell(p.utility)});
        }
    };
    for (const auto& m : c.compare) {
        emit(std::string(to_string(m.kind)),
             utility_curve(m, c.value_fn, c.weight_fn, c.fee, c.rake, c.grid.n));
    }
    for (const auto& m : c.compare) {
        emit(std::string(to_string(m.kind)) + ":eut", eut_curve(m, c.fee, c.rake, c.grid.n));
    }
    return t;
}

Table optimal(const RunConfig& c) {
    const auto result = optimal_k(c.mechanism.kind, c.value_fn, c.weight_fn, c.fee, c.rake,
                                  c.grid.n, c.grid.k_values);
    Table t{{"k", "avg_utility"}, {}};
    for (const auto& point : result.curve) {
        t.rows.push_back({point.k, point.average_utility});
    }
    return t;
}

Table sweep_f(const RunConfig& c) {
    Table t{{"f", "n", "utility"}, {}};
    for (double f : c.grid.f_values) {
        const auto curve = utility_curve(c.mechanism, c.value_fn, c.weight_fn, f, c.rake, c.grid.n);
        for (const auto& p : curve.points) {
            t.rows.push_back({f, static_cast<std::int64_t>(p.n), optional_cell(p.utility)});
        }
    }
    return t;
}

Table sweep_r(const RunConfig& c) {
    Table t{{"r", "n", "utility"}, {}};
    for (double r : c.grid.r_values) {
        const auto curve = utility_curve(c.mechanism, c.value_fn, c.weight_fn, c.fee, r, c.grid.n);
        for (const auto& p : curve.points) {
            t.rows.push_back({r, static_cast<std::int64_t>(p.n), optional_cell(p.utility)});
        }
    }
    return t;
}

Table profit(const RunConfig& c) {
    Table t{{"n", "f", "r", "profit", "viable"}, {}};
    for (const auto& row : profit_frontier(c.mechanism, c.value_fn, c.weight_fn, c.grid)) {
        t.rows.push_back(
            {static_cast<std::int64_t>(row.n), row.fee, row.rake, row.profit, row.viable});
    }
    return t;
}

Table break_even(const RunConfig& c) {
    Table t{{"mechanism", "k", "r", "f", "n_star"}, {}};
    for (const auto& m : c.compare) {
        t.rows.push_back({std::string(to_string(m.kind)), k_cell(m), c.rake, c.fee,
                          optional_cell(break_even_n(m, c.value_fn, c.weight_fn, c.fee, c.rake,
                                                     c.grid.n))});
    }
    return t;
}

}  // namespace

const std::vector<std::string_view>& command_names() {
    static const std::vector<std::string_view> names = {
        "eval", "sweep-n", "optimal-k", "sweep-f", "sweep-r", "profit", "break-even"};
    return names;
}

Table run_command(std::string_view command, const RunConfig& config) {
    config.validate();
    if (command == "eval") return eval(config);
    if (command == "sweep-n") return sweep_n(config);
    if (command == "optimal-k") return optimal(config);
    if (command == "sweep-f") return sweep_f(config);
    if (command == "sweep-r") return sweep_r(config);
    if (command == "profit") return profit(config);
    if (command == "break-even") return break_even(config);
    throw ConfigError("unknown command '" + std::string(command) + "'");
}

}  // namespace lotterycpt
