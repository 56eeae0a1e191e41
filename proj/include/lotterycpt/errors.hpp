#pragma once

#include <stdexcept>
#include <string>

namespace lotterycpt {

/// A parameter or argument lies outside its mathematical domain.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two sequences that must agree in length do not.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The mechanism refuses to run the game (three bands below its participant floor).
class GameTerminated : public std::runtime_error {
public:
    GameTerminated(int participants, int minimum)
        : std::runtime_error("game terminated: three-bands mechanism requires at least " +
                             std::to_string(minimum) + " participants, got " +
                             std::to_string(participants)),
          participants_(participants), minimum_(minimum) {}

    int participants() const noexcept { return participants_; }
    int minimum() const noexcept { return minimum_; }

private:
    int participants_;
    int minimum_;
};

/// The requested operation is not defined for this mechanism kind.
class UnsupportedMechanism : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace lotterycpt
