#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "lotterycpt/analysis.hpp"
#include "lotterycpt/errors.hpp"

using namespace lotterycpt;

namespace {

const ValueFunction kTkValue{0.88, 2.25};
const WeightingFunction kTkWeight = WeightingFunction::tversky_kahneman(0.65);
const NRange kPaperRange{1, 200};

// Direct two-outcome formula for winner-take-all, written without the library.
double wta_oracle(int n, double fee, double rake) {
    const double a = 0.88, lambda = 2.25, d = 0.65;
    auto w = [d](double p) {
        return std::pow(p, d) / std::pow(std::pow(p, d) + std::pow(1 - p, d), 1 / d);
    };
    const double win = n * fee * (1 - rake) - fee;
    const double v_win = win >= 0 ? std::pow(win, a) : -lambda * std::pow(-win, a);
    if (n == 1) return v_win;
    return w(1.0 / n) * v_win + w((n - 1.0) / n) * (-lambda * std::pow(fee, a));
}

}  // namespace

TEST(UtilityAt, Examples) {
    EXPECT_NEAR(utility_at(Mechanism::winner_take_all(), {2, 1.0, 0.1}, kTkValue, kTkWeight),
                -0.6266910165001254, 1e-14);
    EXPECT_EQ(utility_at(Mechanism::winner_take_all(), {1, 1.0, 0.0}, kTkValue, kTkWeight), 0.0);
    for (const auto& m : {Mechanism::winner_take_all(), Mechanism::top_k_linear(0.16),
                          Mechanism::top_k_exponential(0.06), Mechanism::three_bands()}) {
        EXPECT_NEAR(utility_at(m, {120, 3.0, 0.15}, {1.0, 1.0}, WeightingFunction::identity()),
                    -0.45, 1e-12);
    }
    EXPECT_THROW(utility_at(Mechanism::three_bands(), {49, 1.0, 0.1}, kTkValue, kTkWeight),
                 GameTerminated);
}

TEST(UtilityAt, WinnerTakeAllMatchesTwoOutcomeOracle) {
    // 40-digit values at the zero crossing
    EXPECT_NEAR(utility_at(Mechanism::winner_take_all(), {53, 1.0, 0.1}, kTkValue, kTkWeight),
                0.006593949666329447, 1e-12);
    EXPECT_NEAR(utility_at(Mechanism::winner_take_all(), {52, 1.0, 0.1}, kTkValue, kTkWeight),
                -0.002516102070696641, 1e-12);
    for (int n = 1; n <= 200; ++n) {
        for (double rake : {0.0, 0.1, 0.5}) {
            ASSERT_NEAR(utility_at(Mechanism::winner_take_all(), {n, 2.0, rake}, kTkValue, kTkWeight),
                        wta_oracle(n, 2.0, rake), 1e-10)
                << n;
        }
    }
}

TEST(UtilityCurve, ThreeBandsGapsBelowFifty) {
    const auto curve = utility_curve(Mechanism::three_bands(), kTkValue, kTkWeight, 1.0, 0.1, {1, 60});
    ASSERT_EQ(curve.points.size(), 60u);
    for (const auto& p : curve.points) {
        EXPECT_EQ(p.utility.has_value(), p.n >= 50) << p.n;
    }
}

TEST(UtilityCurve, WinnerTakeAllCrossesZeroAt53) {
    const auto curve = utility_curve(Mechanism::winner_take_all(), kTkValue, kTkWeight, 1.0, 0.1,
                                     kPaperRange);
    ASSERT_EQ(curve.points.size(), 200u);
    EXPECT_LT(*curve.points[51].utility, 0.0);
    EXPECT_GT(*curve.points[52].utility, 0.0);
    for (std::size_t i = 1; i < curve.points.size(); ++i) {
        ASSERT_GT(curve.points[i].n, curve.points[i - 1].n);
    }
}

TEST(UtilityCurve, RejectsBadRange) {
    EXPECT_THROW(utility_curve(Mechanism::winner_take_all(), kTkValue, kTkWeight, 1.0, 0.1, {0, 5}),
                 DomainError);
    EXPECT_THROW(utility_curve(Mechanism::winner_take_all(), kTkValue, kTkWeight, 1.0, 0.1, {5, 4}),
                 DomainError);
}

TEST(OptimalK, SingletonGrid) {
    const std::vector<double> grid{1.0};
    const auto r = optimal_k(MechanismKind::TopKLinear, kTkValue, kTkWeight, 1.0, 0.1, kPaperRange, grid);
    EXPECT_EQ(r.k_star, 1.0);
    ASSERT_EQ(r.curve.size(), 1u);
}

TEST(OptimalK, TiesGoToSmallerK) {
    // A single participant always has one winner, so every k ties.
    const std::vector<double> grid{0.9, 0.3, 0.6};
    const auto r = optimal_k(MechanismKind::TopKExponential, kTkValue, kTkWeight, 1.0, 0.1, {1, 1}, grid);
    EXPECT_EQ(r.k_star, 0.3);
}

TEST(OptimalK, RejectsNonTopKAndEmptyGrid) {
    const std::vector<double> grid{0.5};
    EXPECT_THROW(optimal_k(MechanismKind::WinnerTakeAll, kTkValue, kTkWeight, 1.0, 0.1, kPaperRange, grid),
                 UnsupportedMechanism);
    EXPECT_THROW(optimal_k(MechanismKind::ThreeBands, kTkValue, kTkWeight, 1.0, 0.1, kPaperRange, grid),
                 UnsupportedMechanism);
    EXPECT_THROW(optimal_k(MechanismKind::TopKLinear, kTkValue, kTkWeight, 1.0, 0.1, kPaperRange, {}),
                 DomainError);
}

TEST(OptimalK, InteriorOptimum) {
    const auto grid = percent_grid(1, 100, 1);
    for (auto kind : {MechanismKind::TopKLinear, MechanismKind::TopKExponential}) {
        const auto r = optimal_k(kind, kTkValue, kTkWeight, 1.0, 0.1, kPaperRange, grid);
        ASSERT_EQ(r.curve.size(), 100u);
        EXPECT_LT(r.curve.front().average_utility, r.average_utility);
        EXPECT_LT(r.curve.back().average_utility, r.average_utility);
        for (const auto& p : r.curve) EXPECT_LE(p.average_utility, r.average_utility);
    }
}

TEST(BreakEven, HighRakeNeverBreaksEven) {
    const auto curve = utility_curve(Mechanism::winner_take_all(), kTkValue, kTkWeight, 1.0, 0.9,
                                     kPaperRange);
    for (const auto& p : curve.points) ASSERT_LT(*p.utility, 0.0);
    EXPECT_FALSE(
        break_even_n(Mechanism::winner_take_all(), kTkValue, kTkWeight, 1.0, 0.9, kPaperRange));
}

TEST(BreakEven, AgreesWithCurveScan) {
    for (const auto& m : {Mechanism::winner_take_all(), Mechanism::top_k_linear(0.16),
                          Mechanism::top_k_exponential(0.06), Mechanism::three_bands()}) {
        const auto curve = utility_curve(m, kTkValue, kTkWeight, 1.0, 0.1, kPaperRange);
        std::optional<int> scan;
        for (const auto& p : curve.points) {
            if (p.utility && *p.utility >= 0.0) {
                scan = p.n;
                break;
            }
        }
        EXPECT_EQ(break_even_n(m, kTkValue, kTkWeight, 1.0, 0.1, kPaperRange), scan);
    }
}

TEST(BreakEven, RespectsRangeStart) {
    EXPECT_EQ(break_even_n(Mechanism::winner_take_all(), kTkValue, kTkWeight, 1.0, 0.1, {60, 70}), 60);
}

TEST(OperatorProfit, Examples) {
    EXPECT_DOUBLE_EQ(operator_profit({30, 1.0, 0.2}), 6.0);
    EXPECT_EQ(operator_profit({21, 2.0, 0.05}), operator_profit({21, 1.0, 0.1}));
    EXPECT_DOUBLE_EQ(operator_profit({21, 1.0, 0.1}), 2.1);
    EXPECT_EQ(operator_profit({21, 1.0, 0.0}), 0.0);
}

TEST(ProfitFrontier, RowsAndViability) {
    SweepGrid grid{{20, 31}, {0.16}, {1.0, 2.0}, {0.05, 0.1, 0.2}};
    const auto mech = Mechanism::top_k_linear(0.16);
    const auto rows = profit_frontier(mech, kTkValue, kTkWeight, grid);
    ASSERT_EQ(rows.size(), 12u * 2 * 3);
    EXPECT_EQ(rows[0].n, 20);
    EXPECT_EQ(rows[0].fee, 1.0);
    EXPECT_EQ(rows[0].rake, 0.05);
    EXPECT_EQ(rows[1].rake, 0.1);
    EXPECT_EQ(rows[3].fee, 2.0);

    const auto be20 = break_even_n(mech, kTkValue, kTkWeight, 1.0, 0.2, kPaperRange);
    const auto be10 = break_even_n(mech, kTkValue, kTkWeight, 1.0, 0.1, kPaperRange);
    ASSERT_TRUE(be20 && be10);
    for (const auto& row : rows) {
        EXPECT_EQ(row.profit, operator_profit({row.n, row.fee, row.rake}));
        if (row.fee == 1.0 && row.rake == 0.2) EXPECT_EQ(row.viable, row.n >= *be20) << row.n;
        if (row.fee == 1.0 && row.rake == 0.1) EXPECT_EQ(row.viable, row.n >= *be10) << row.n;
        if (row.n == 21 && row.fee == 1.0 && row.rake == 0.1) EXPECT_TRUE(row.viable);
    }
}

TEST(ProfitFrontier, ThreeBandsBelowFiftyIsNotViable) {
    SweepGrid grid{{48, 52}, {0.5}, {1.0}, {0.0}};
    for (const auto& row : profit_frontier(Mechanism::three_bands(), kTkValue, kTkWeight, grid)) {
        if (row.n < 50) EXPECT_FALSE(row.viable);
    }
}

TEST(Properties, FeeHomogeneity) {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<int> n(50, 250);
    std::uniform_real_distribution<double> rake(0.0, 0.9);
    std::uniform_real_distribution<double> log_c(-2.0, 4.0);
    const Mechanism mechs[] = {Mechanism::winner_take_all(), Mechanism::top_k_linear(0.16),
                               Mechanism::top_k_exponential(0.06), Mechanism::three_bands()};
    for (int i = 0; i < 400; ++i) {
        const auto& m = mechs[i % 4];
        const GameConfig base{n(rng), 1.0, rake(rng)};
        const double c = std::pow(10.0, log_c(rng));
        const double u = utility_at(m, base, kTkValue, kTkWeight);
        const double uc = utility_at(m, {base.n_participants, c, base.rake}, kTkValue, kTkWeight);
        const double expected = std::pow(c, 0.88) * u;
        ASSERT_NEAR(uc, expected, 1e-9 * std::abs(expected));
    }
}

TEST(Properties, RakeMonotonicity) {
    const auto rakes = percent_grid(5, 90, 5);
    for (const auto& m : {Mechanism::winner_take_all(), Mechanism::top_k_linear(0.16),
                          Mechanism::top_k_exponential(0.06), Mechanism::three_bands()}) {
        for (int n = 50; n <= 200; n += 10) {
            double prev = utility_at(m, {n, 1.0, rakes.front()}, kTkValue, kTkWeight);
            for (std::size_t i = 1; i < rakes.size(); ++i) {
                const double cur = utility_at(m, {n, 1.0, rakes[i]}, kTkValue, kTkWeight);
                ASSERT_LE(cur, prev) << n << " " << rakes[i];
                prev = cur;
            }
        }
    }
}

TEST(Properties, EutAlwaysNegative) {
    for (const auto& m : {Mechanism::winner_take_all(), Mechanism::top_k_linear(0.16),
                          Mechanism::top_k_exponential(0.06), Mechanism::three_bands()}) {
        for (double r : percent_grid(5, 90, 5)) {
            const auto curve = eut_curve(m, 1.0, r, {50, 200});
            for (const auto& p : curve.points) {
                ASSERT_LT(*p.utility, 0.0);
                ASSERT_NEAR(*p.utility, -r, 1e-12);
            }
        }
    }
}

TEST(Properties, Deterministic) {
    const auto grid = percent_grid(1, 30, 1);
    const auto a = optimal_k(MechanismKind::TopKLinear, kTkValue, kTkWeight, 1.0, 0.1, kPaperRange, grid);
    const auto b = optimal_k(MechanismKind::TopKLinear, kTkValue, kTkWeight, 1.0, 0.1, kPaperRange, grid);
    ASSERT_EQ(a.curve.size(), b.curve.size());
    for (std::size_t i = 0; i < a.curve.size(); ++i) {
        EXPECT_EQ(a.curve[i].average_utility, b.curve[i].average_utility);
    }
    // evaluating a single point out of order gives the same bits
    std::vector<double> reversed(grid.rbegin(), grid.rend());
    const auto c = optimal_k(MechanismKind::TopKLinear, kTkValue, kTkWeight, 1.0, 0.1, kPaperRange, reversed);
    for (std::size_t i = 0; i < a.curve.size(); ++i) {
        EXPECT_EQ(a.curve[i].average_utility, c.curve[c.curve.size() - 1 - i].average_utility);
    }
    EXPECT_EQ(a.k_star, c.k_star);
}

TEST(SweepGrid, DefaultsAndValidation) {
    const auto g = SweepGrid::defaults();
    EXPECT_EQ(g.n, (NRange{1, 200}));
    ASSERT_EQ(g.k_values.size(), 100u);
    EXPECT_EQ(g.k_values[15], 0.16);
    EXPECT_EQ(g.f_values, (std::vector<double>{1, 10, 100, 10000}));
    ASSERT_EQ(g.r_values.size(), 18u);
    EXPECT_EQ(g.r_values.front(), 0.05);
    EXPECT_EQ(g.r_values.back(), 0.9);
    SweepGrid bad = g;
    bad.r_values = {1.0};
    EXPECT_THROW(bad.validate(), DomainError);
    bad = g;
    bad.k_values.clear();
    EXPECT_THROW(bad.validate(), DomainError);
}
