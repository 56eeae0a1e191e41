#pragma once

#include <span>
#include <vector>

namespace lotterycpt {

/// Power value function: x^alpha for gains, -lambda * (-x)^alpha for losses.
struct ValueFunction {
    double alpha = 0.88;
    double lambda = 2.25;

    /// Throws DomainError unless 0 < alpha <= 1 and lambda >= 1.
    void validate() const;

    bool operator==(const ValueFunction&) const = default;
};

enum class WeightingKind { TverskyKahneman, Prelec, Identity };

/// Probability weighting function. Only the parameters of `kind` are read.
struct WeightingFunction {
    WeightingKind kind = WeightingKind::TverskyKahneman;
    double delta = 0.65;         // TverskyKahneman curvature
    double prelec_alpha = 0.65;  // Prelec curvature
    double prelec_beta = 1.0;    // Prelec elevation

    static WeightingFunction tversky_kahneman(double delta);
    static WeightingFunction prelec(double alpha, double beta);
    static WeightingFunction identity();

    void validate() const;

    bool operator==(const WeightingFunction&) const = default;
};

struct Prospect {
    double profit = 0.0;
    double probability = 0.0;

    bool operator==(const Prospect&) const = default;
};

/// Non-empty list of outcomes whose probabilities sum to one, best rank first.
class ProspectSet {
public:
    static constexpr double kProbabilityTolerance = 1e-9;

    /// Throws DomainError on an empty list, a probability outside [0, 1],
    /// or a total that misses 1 by more than kProbabilityTolerance.
    explicit ProspectSet(std::vector<Prospect> outcomes);

    std::span<const Prospect> outcomes() const noexcept { return outcomes_; }
    std::size_t size() const noexcept { return outcomes_.size(); }

private:
    std::vector<Prospect> outcomes_;
};

double value(const ValueFunction& spec, double x);

/// Throws DomainError when p is outside [0, 1].
double weight(const WeightingFunction& spec, double p);

/// Outcomes with identical profit merged into one, probabilities summed.
/// Order of first appearance is kept.
std::vector<Prospect> merge_identical(std::span<const Prospect> outcomes);

/// Prospect-theory utility sum_i w(p_i) v(x_i) over the distinct outcomes of
/// the set. Each distinct outcome's probability is weighted on its own; there
/// is no rank-dependent cumulative transform.
double cpt_utility(const ProspectSet& prospects, const ValueFunction& v,
                   const WeightingFunction& w);

/// The same sum taken over every listed outcome without merging duplicates.
/// With many equal losing outcomes this overweights each one separately.
double separable_utility(const ProspectSet& prospects, const ValueFunction& v,
                         const WeightingFunction& w);

/// Risk-neutral expected profit.
double eut_utility(const ProspectSet& prospects);

}  // namespace lotterycpt
