#include "lotterycpt/cpt.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "lotterycpt/errors.hpp"

namespace lotterycpt {

namespace {

void require_unit_exponent(double x, const char* name) {
    if (!(x > 0.0 && x <= 1.0)) {
        throw DomainError(std::string(name) + " must lie in (0, 1], got " + std::to_string(x));
    }
}

}  // namespace

void ValueFunction::validate() const {
    require_unit_exponent(alpha, "value alpha");
    if (!(lambda >= 1.0) || !std::isfinite(lambda)) {
        throw DomainError("loss aversion lambda must be >= 1, got " + std::to_string(lambda));
    }
}

WeightingFunction WeightingFunction::tversky_kahneman(double delta) {
    WeightingFunction w;
    w.kind = WeightingKind::TverskyKahneman;
    w.delta = delta;
    return w;
}

WeightingFunction WeightingFunction::prelec(double alpha, double beta) {
    WeightingFunction w;
    w.kind = WeightingKind::Prelec;
    w.prelec_alpha = alpha;
    w.prelec_beta = beta;
    return w;
}

WeightingFunction WeightingFunction::identity() {
    WeightingFunction w;
    w.kind = WeightingKind::Identity;
    return w;
}

void WeightingFunction::validate() const {
    switch (kind) {
        case WeightingKind::TverskyKahneman:
            require_unit_exponent(delta, "weighting delta");
            break;
        case WeightingKind::Prelec:
            require_unit_exponent(prelec_alpha, "prelec alpha");
            if (!(prelec_beta > 0.0) || !std::isfinite(prelec_beta)) {
                throw DomainError("prelec beta must be > 0, got " + std::to_string(prelec_beta));
            }
            break;
        case WeightingKind::Identity:
            break;
    }
}

ProspectSet::ProspectSet(std::vector<Prospect> outcomes) : outcomes_(std::move(outcomes)) {
    if (outcomes_.empty()) {
        throw DomainError("prospect set must not be empty");
    }
    double total = 0.0;
    for (const auto& o : outcomes_) {
        if (!(o.probability >= 0.0 && o.probability <= 1.0)) {
            throw DomainError("outcome probability must lie in [0, 1], got " +
                              std::to_string(o.probability));
        }
        if (!std::isfinite(o.profit)) {
            throw DomainError("outcome profit must be finite");
        }
        total += o.probability;
    }
    if (std::abs(total - 1.0) > kProbabilityTolerance) {
        throw DomainError("outcome probabilities must sum to 1, got " + std::to_string(total));
    }
}

double value(const ValueFunction& spec, double x) {
    spec.validate();
    if (x >= 0.0) {
        return std::pow(x, spec.alpha);
    }
    return -spec.lambda * std::pow(-x, spec.alpha);
}

double weight(const WeightingFunction& spec, double p) {
    spec.validate();
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("probability must lie in [0, 1], got " + std::to_string(p));
    }
    switch (spec.kind) {
        case WeightingKind::TverskyKahneman: {
            const double a = std::pow(p, spec.delta);
            const double b = std::pow(1.0 - p, spec.delta);
            return a / std::pow(a + b, 1.0 / spec.delta);
        }
        case WeightingKind::Prelec:
            // Singular at both ends; use the continuous limits.
            if (p == 0.0) return 0.0;
            if (p == 1.0) return 1.0;
            return std::exp(-spec.prelec_beta * std::pow(-std::log(p), spec.prelec_alpha));
        case WeightingKind::Identity:
            return p;
    }
    return p;
}

std::vector<Prospect> merge_identical(std::span<const Prospect> outcomes) {
    std::vector<Prospect> merged;
    std::unordered_map<double, std::size_t> index;
    for (const auto& o : outcomes) {
        // +0.0 so that -0.0 and 0.0 share a key
        auto [it, inserted] = index.try_emplace(o.profit + 0.0, merged.size());
        if (inserted) {
            merged.push_back(o);
        } else {
            merged[it->second].probability += o.probability;
        }
    }
    for (auto& m : merged) {
        m.probability = std::min(m.probability, 1.0);
    }
    return merged;
}

double cpt_utility(const ProspectSet& prospects, const ValueFunction& v,
                   const WeightingFunction& w) {
    v.validate();
    w.validate();
    double total = 0.0;
    for (const auto& o : merge_identical(prospects.outcomes())) {
        total += weight(w, o.probability) * value(v, o.profit);
    }
    return total;
}

double separable_utility(const ProspectSet& prospects, const ValueFunction& v,
                         const WeightingFunction& w) {
    double total = 0.0;
    for (const auto& o : prospects.outcomes()) {
        total += weight(w, o.probability) * value(v, o.profit);
    }
    return total;
}

double eut_utility(const ProspectSet& prospects) {
    double total = 0.0;
    for (const auto& o : prospects.outcomes()) {
        total += o.probability * o.profit;
    }
    return total;
}

}  // namespace lotterycpt
