#include "lotterycpt/mechanisms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lotterycpt/errors.hpp"

namespace lotterycpt {

void GameConfig::validate() const {
    if (n_participants < 1) {
        throw DomainError("participant count must be >= 1, got " + std::to_string(n_participants));
    }
    if (!(entry_fee > 0.0) || !std::isfinite(entry_fee)) {
        throw DomainError("entry fee must be > 0, got " + std::to_string(entry_fee));
    }
    if (!(rake >= 0.0 && rake < 1.0)) {
        throw DomainError("rake must lie in [0, 1), got " + std::to_string(rake));
    }
}

Mechanism Mechanism::winner_take_all() { return {MechanismKind::WinnerTakeAll, std::nullopt}; }
Mechanism Mechanism::top_k_linear(double k) { return {MechanismKind::TopKLinear, k}; }
Mechanism Mechanism::top_k_exponential(double k) { return {MechanismKind::TopKExponential, k}; }
Mechanism Mechanism::three_bands() { return {MechanismKind::ThreeBands, std::nullopt}; }

void Mechanism::validate() const {
    if (is_top_k()) {
        if (!k) {
            throw DomainError(std::string(to_string(kind)) + " requires a winner fraction k");
        }
        if (!(*k > 0.0 && *k <= 1.0)) {
            throw DomainError("winner fraction k must lie in (0, 1], got " + std::to_string(*k));
        }
    } else if (k) {
        throw DomainError(std::string(to_string(kind)) + " does not take a winner fraction k");
    }
}

std::string_view to_string(MechanismKind kind) {
    switch (kind) {
        case MechanismKind::WinnerTakeAll: return "winner-take-all";
        case MechanismKind::TopKLinear: return "top-k-linear";
        case MechanismKind::TopKExponential: return "top-k-exponential";
        case MechanismKind::ThreeBands: return "three-bands";
    }
    return "unknown";
}

MechanismKind parse_mechanism_kind(std::string_view name) {
    if (name == "winner-take-all" || name == "wta") return MechanismKind::WinnerTakeAll;
    if (name == "top-k-linear" || name == "linear") return MechanismKind::TopKLinear;
    if (name == "top-k-exponential" || name == "exponential") return MechanismKind::TopKExponential;
    if (name == "three-bands" || name == "bands") return MechanismKind::ThreeBands;
    throw DomainError("unknown mechanism '" + std::string(name) + "'");
}

double PrizeSchedule::total() const { return std::accumulate(prizes.begin(), prizes.end(), 0.0); }

double prize_pool(const GameConfig& config) {
    config.validate();
    return config.n_participants * config.entry_fee * (1.0 - config.rake);
}

int winners_count(const GameConfig& config, double k) {
    config.validate();
    if (!(k > 0.0 && k <= 1.0)) {
        throw DomainError("winner fraction k must lie in (0, 1], got " + std::to_string(k));
    }
    const double scaled = k * config.n_participants;
    const int m = static_cast<int>(std::ceil(scaled - 1e-9));
    return std::clamp(m, 1, config.n_participants);
}

PrizeSchedule build_schedule(const Mechanism& mech, const GameConfig& config) {
    mech.validate();
    config.validate();
    const int n = config.n_participants;
    const double pool = prize_pool(config);
    std::vector<double> prizes(static_cast<std::size_t>(n), 0.0);

    switch (mech.kind) {
        case MechanismKind::WinnerTakeAll:
            prizes[0] = pool;
            break;
        case MechanismKind::TopKLinear: {
            const int m = winners_count(config, *mech.k);
            const double denom = m * (m + 1) / 2.0;
            for (int j = 1; j <= m; ++j) {
                prizes[j - 1] = pool * (m - j + 1) / denom;
            }
            break;
        }
        case MechanismKind::TopKExponential: {
            const int m = winners_count(config, *mech.k);
            for (int j = 1; j <= m; ++j) {
                prizes[j - 1] = std::ldexp(pool, -j);
            }
            prizes[0] += std::ldexp(pool, -m);
            break;
        }
        case MechanismKind::ThreeBands:
            if (n < kThreeBandsMinParticipants) {
                throw GameTerminated(n, kThreeBandsMinParticipants);
            }
            prizes[0] = pool / 3.0;
            for (int j = 2; j <= 10; ++j) prizes[j - 1] = pool / 27.0;
            for (int j = 11; j <= 50; ++j) prizes[j - 1] = pool / 120.0;
            break;
    }
    return PrizeSchedule{std::move(prizes)};
}

ProspectSet to_prospects(const PrizeSchedule& schedule, const GameConfig& config) {
    config.validate();
    if (schedule.prizes.size() != static_cast<std::size_t>(config.n_participants)) {
        throw ShapeError("schedule has " + std::to_string(schedule.prizes.size()) +
                         " prizes but the game has " + std::to_string(config.n_participants) +
                         " participants");
    }
    const double p = 1.0 / config.n_participants;
    std::vector<Prospect> outcomes;
    outcomes.reserve(schedule.prizes.size());
    for (double prize : schedule.prizes) {
        outcomes.push_back({prize - config.entry_fee, p});
    }
    return ProspectSet(std::move(outcomes));
}

}  // namespace lotterycpt
