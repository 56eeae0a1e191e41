#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lotterycpt/cpt.hpp"

namespace lotterycpt {

/// Participant count, entry fee and operator rake of one game.
struct GameConfig {
    int n_participants = 1;
    double entry_fee = 1.0;
    double rake = 0.1;

    /// Throws DomainError unless n >= 1, fee > 0 and 0 <= rake < 1.
    void validate() const;

    bool operator==(const GameConfig&) const = default;
};

enum class MechanismKind { WinnerTakeAll, TopKLinear, TopKExponential, ThreeBands };

/// A prize rule. `k` is the paid fraction and is set only for the top-k kinds.
struct Mechanism {
    MechanismKind kind = MechanismKind::WinnerTakeAll;
    std::optional<double> k;

    static Mechanism winner_take_all();
    static Mechanism top_k_linear(double k);
    static Mechanism top_k_exponential(double k);
    static Mechanism three_bands();

    bool is_top_k() const noexcept {
        return kind == MechanismKind::TopKLinear || kind == MechanismKind::TopKExponential;
    }

    void validate() const;

    bool operator==(const Mechanism&) const = default;
};

inline constexpr int kThreeBandsMinParticipants = 50;

std::string_view to_string(MechanismKind kind);

/// Accepts the canonical names ("winner-take-all", "top-k-linear",
/// "top-k-exponential", "three-bands") and the short forms "wta",
/// "linear", "exponential", "bands". Throws DomainError otherwise.
MechanismKind parse_mechanism_kind(std::string_view name);

/// Prizes by rank, best rank first.
struct PrizeSchedule {
    std::vector<double> prizes;

    double total() const;
};

/// N * f * (1 - r).
double prize_pool(const GameConfig& config);

/// Number of paid ranks for a top-k fraction: ceil(k * N), at least one and at
/// most N. A slack of 1e-9 keeps products such as 0.07 * 100 from rounding up
/// past the intended integer.
int winners_count(const GameConfig& config, double k);

/// Prize schedule of `mech` for `config`.
///
/// Top-k exponential pays P / 2^j to ranks 1..m and adds the residual P / 2^m
/// to rank 1, so every mechanism except three bands with N < 50 pays out the
/// full pool. Three bands throws GameTerminated below 50 participants.
PrizeSchedule build_schedule(const Mechanism& mech, const GameConfig& config);

/// Outcome j has profit prizes[j] - f and probability 1/N.
/// Throws ShapeError when the schedule length differs from N.
ProspectSet to_prospects(const PrizeSchedule& schedule, const GameConfig& config);

}  // namespace lotterycpt
