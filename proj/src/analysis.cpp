#include "lotterycpt/analysis.hpp"

#include <string>

#include "lotterycpt/errors.hpp"

namespace lotterycpt {

void NRange::validate() const {
    if (min < 1 || max < min) {
        throw DomainError("participant range must satisfy 1 <= min <= max, got [" +
                          std::to_string(min) + ", " + std::to_string(max) + "]");
    }
}

SweepGrid SweepGrid::defaults() {
    return SweepGrid{NRange{1, 200}, percent_grid(1, 100, 1), {1.0, 10.0, 100.0, 10000.0},
                     percent_grid(5, 90, 5)};
}

void SweepGrid::validate() const {
    n.validate();
    if (k_values.empty() || f_values.empty() || r_values.empty()) {
        throw DomainError("sweep grid lists must be non-empty");
    }
    for (double k : k_values) {
        if (!(k > 0.0 && k <= 1.0)) throw DomainError("grid k must lie in (0, 1]");
    }
    for (double f : f_values) {
        if (!(f > 0.0)) throw DomainError("grid fee must be > 0");
    }
    for (double r : r_values) {
        if (!(r >= 0.0 && r < 1.0)) throw DomainError("grid rake must lie in [0, 1)");
    }
}

std::vector<double> percent_grid(int lo, int hi, int step) {
    if (step <= 0 || lo > hi) {
        throw DomainError("percent grid needs lo <= hi and a positive step");
    }
    std::vector<double> out;
    for (int i = lo; i <= hi; i += step) {
        out.push_back(i / 100.0);
    }
    return out;
}

double utility_at(const Mechanism& mech, const GameConfig& config, const ValueFunction& v,
                  const WeightingFunction& w) {
    const auto schedule = build_schedule(mech, config);
    return cpt_utility(to_prospects(schedule, config), v, w);
}

double eut_utility_at(const Mechanism& mech, const GameConfig& config) {
    const auto schedule = build_schedule(mech, config);
    return eut_utility(to_prospects(schedule, config));
}

namespace {

template <typename Eval>
UtilityCurve sweep_n(NRange range, Eval&& eval) {
    range.validate();
    UtilityCurve curve;
    curve.points.reserve(static_cast<std::size_t>(range.size()));
    for (int n = range.min; n <= range.max; ++n) {
        CurvePoint point{n, std::nullopt};
        try {
            point.utility = eval(n);
        } catch (const GameTerminated&) {
        }
        curve.points.push_back(point);
    }
    return curve;
}

}  // namespace

UtilityCurve utility_curve(const Mechanism& mech, const ValueFunction& v,
                           const WeightingFunction& w, double fee, double rake, NRange range) {
    return sweep_n(range, [&](int n) { return utility_at(mech, {n, fee, rake}, v, w); });
}

UtilityCurve eut_curve(const Mechanism& mech, double fee, double rake, NRange range) {
    return sweep_n(range, [&](int n) { return eut_utility_at(mech, {n, fee, rake}); });
}

OptimalKResult optimal_k(MechanismKind kind, const ValueFunction& v, const WeightingFunction& w,
                         double fee, double rake, NRange range, std::span<const double> k_values) {
    if (kind != MechanismKind::TopKLinear && kind != MechanismKind::TopKExponential) {
        throw UnsupportedMechanism("optimal k is only defined for top-k mechanisms, got " +
                                   std::string(to_string(kind)));
    }
    if (k_values.empty()) {
        throw DomainError("k grid must not be empty");
    }
    OptimalKResult result;
    bool have_best = false;
    for (double k : k_values) {
        const Mechanism mech{kind, k};
        const auto curve = utility_curve(mech, v, w, fee, rake, range);
        double sum = 0.0;
        int count = 0;
        for (const auto& p : curve.points) {
            if (p.utility) {
                sum += *p.utility;
                ++count;
            }
        }
        // top-k mechanisms never terminate, so count == range.size()
        const double avg = sum / count;
        result.curve.push_back({k, avg});
        if (!have_best || avg > result.average_utility ||
            (avg == result.average_utility && k < result.k_star)) {
            result.k_star = k;
            result.average_utility = avg;
            have_best = true;
        }
    }
    return result;
}

std::optional<int> break_even_n(const Mechanism& mech, const ValueFunction& v,
                                const WeightingFunction& w, double fee, double rake,
                                NRange range) {
    range.validate();
    for (int n = range.min; n <= range.max; ++n) {
        try {
            if (utility_at(mech, {n, fee, rake}, v, w) >= 0.0) {
                return n;
            }
        } catch (const GameTerminated&) {
        }
    }
    return std::nullopt;
}

double operator_profit(const GameConfig& config) {
    config.validate();
    return config.n_participants * config.entry_fee * config.rake;
}

std::vector<FrontierRow> profit_frontier(const Mechanism& mech, const ValueFunction& v,
                                         const WeightingFunction& w, const SweepGrid& grid) {
    grid.validate();
    std::vector<FrontierRow> rows;
    for (int n = grid.n.min; n <= grid.n.max; ++n) {
        for (double f : grid.f_values) {
            for (double r : grid.r_values) {
                const GameConfig config{n, f, r};
                bool viable = false;
                try {
                    viable = utility_at(mech, config, v, w) >= 0.0;
                } catch (const GameTerminated&) {
                }
                rows.push_back({n, f, r, operator_profit(config), viable});
            }
        }
    }
    return rows;
}

}  // namespace lotterycpt
