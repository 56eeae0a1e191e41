#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lotterycpt/cpt.hpp"
#include "lotterycpt/mechanisms.hpp"

namespace lotterycpt {

/// Inclusive participant-count range.
struct NRange {
    int min = 1;
    int max = 200;

    void validate() const;
    int size() const noexcept { return max - min + 1; }

    bool operator==(const NRange&) const = default;
};

/// Grid over participant counts, winner fractions, fees and rakes.
struct SweepGrid {
    NRange n;
    std::vector<double> k_values;
    std::vector<double> f_values;
    std::vector<double> r_values;

    /// N 1..200, k 1%..100% in 1% steps, f in {1, 10, 100, 10000},
    /// r 5%..90% in 5% steps.
    static SweepGrid defaults();

    void validate() const;

    bool operator==(const SweepGrid&) const = default;
};

/// Evenly spaced percentages lo%, lo+step%, ..., hi% as fractions. Each value
/// is computed as i / 100 so the grid points are reproducible.
std::vector<double> percent_grid(int lo, int hi, int step);

struct CurvePoint {
    int n = 0;
    /// Empty where the mechanism terminates the game.
    std::optional<double> utility;
};

struct UtilityCurve {
    std::vector<CurvePoint> points;
};

struct KAverage {
    double k = 0.0;
    double average_utility = 0.0;
};

struct OptimalKResult {
    double k_star = 0.0;
    double average_utility = 0.0;
    std::vector<KAverage> curve;
};

struct FrontierRow {
    int n = 0;
    double fee = 0.0;
    double rake = 0.0;
    double profit = 0.0;
    bool viable = false;
};

/// Prospect-theory utility of one participant joining the game.
/// Propagates GameTerminated from the mechanism.
double utility_at(const Mechanism& mech, const GameConfig& config, const ValueFunction& v,
                  const WeightingFunction& w);

/// Risk-neutral expected profit of one participant (the reference curve).
double eut_utility_at(const Mechanism& mech, const GameConfig& config);

UtilityCurve utility_curve(const Mechanism& mech, const ValueFunction& v,
                           const WeightingFunction& w, double fee, double rake, NRange range);

/// Risk-neutral counterpart of utility_curve.
UtilityCurve eut_curve(const Mechanism& mech, double fee, double rake, NRange range);

/// For each k, averages utility over the N range and returns the maximiser.
/// Ties go to the smaller k. `kind` must be one of the two top-k kinds,
/// otherwise UnsupportedMechanism is thrown.
OptimalKResult optimal_k(MechanismKind kind, const ValueFunction& v, const WeightingFunction& w,
                         double fee, double rake, NRange range, std::span<const double> k_values);

/// Smallest N in the range with utility >= 0, or nullopt.
std::optional<int> break_even_n(const Mechanism& mech, const ValueFunction& v,
                                const WeightingFunction& w, double fee, double rake,
                                NRange range);

/// N * f * r.
double operator_profit(const GameConfig& config);

/// One row per (N, f, r) in grid order: N outermost, then f, then r.
std::vector<FrontierRow> profit_frontier(const Mechanism& mech, const ValueFunction& v,
                                         const WeightingFunction& w, const SweepGrid& grid);

}  // namespace lotterycpt
