#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "latcheq/signal.hpp"

namespace latcheq {

/// Inputs of a latch were simultaneously 1.
class AdmissibilityError : public std::runtime_error {
public:
    explicit AdmissibilityError(Instant at, const std::string& context = "set and reset inputs");
    const Instant& at() const { return at_; }

private:
    Instant at_;
};

/// A requested initial state contradicts the equations before the first change.
class InitialStateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Table 1: next state of a latch holding `previous` under (set, reset).
/// Both inputs at 1 is a precondition violation.
constexpr Bit latch_next(Bit previous, Bit set, Bit reset) {
    if (is_one(set))
        return Bit::One;
    if (is_one(reset))
        return Bit::Zero;
    return previous;
}

/// Earliest instant where u·v = 1, or nullopt when the pair is admissible.
std::optional<Instant> check_admissibility(const Signal& u, const Signal& v);

/// Initial values x(0-0) permitted by the inputs' initial values: both in
/// Case a, 1 when u(0-0) = 1, 0 when v(0-0) = 1.
std::vector<Bit> allowed_initials(const Signal& u, const Signal& v);

/// Interval-by-interval application of Table 1.
Signal solve_stepping(const Signal& u, const Signal& v, Bit init);

enum class Branch { AI, AII, B, C };

struct ConstructionTrace {
    Branch branch;
    /// Alternating rising-edge minima. Starts with an edge of u for
    /// initial state 0 and with an edge of v for initial state 1.
    std::vector<Time> schedule;

    /// Case-analysis path, e.g. "a.i.2.2.1" for two selected edges
    /// followed by an empty set.
    std::string path() const;
};

std::string to_string(Branch b);

/// The analytic construction from alternating rising-edge minima; x is the
/// exclusive-or of the characteristic functions of the selected intervals.
std::pair<Signal, ConstructionTrace> solve_construction(const Signal& u, const Signal& v, Bit init);

/// Outcome of solving the latch system.
class SolutionSet {
public:
    struct Unique {
        Signal x;
    };
    /// Case a: one solution per initial state.
    struct Pair {
        Signal x0;
        Signal x1;
        std::optional<Time> coincide_from;
    };

    SolutionSet(Unique u) : value_(std::move(u)) {} // NOLINT(google-explicit-constructor)
    SolutionSet(Pair p) : value_(std::move(p)) {}   // NOLINT(google-explicit-constructor)

    bool is_unique() const { return std::holds_alternative<Unique>(value_); }
    const Unique& unique() const { return std::get<Unique>(value_); }
    const Pair& pair() const { return std::get<Pair>(value_); }

    /// Solutions in order of their initial value.
    std::vector<Signal> solutions() const;
    /// The solution with x(0-0) = init; InitialStateError if there is none.
    const Signal& resolve(Bit init) const;

private:
    std::variant<Unique, Pair> value_;
};

SolutionSet solve(const Signal& u, const Signal& v);

/// Earliest failing clause of the latch system: 1 and 2 are the switching
/// equations, 3 is admissibility.
struct SystemViolation {
    Instant at;
    int clause;

    friend bool operator==(const SystemViolation&, const SystemViolation&) = default;
};

std::optional<SystemViolation> verify_system(const Signal& x, const Signal& u, const Signal& v);

/// The single-equation closed form; nullopt when it holds at every grid point.
std::optional<Instant> verify_closed_form(const Signal& x, const Signal& u, const Signal& v);

/// Pointwise closed form at one instant given x(t-0), x(t), u(t), v(t).
constexpr bool latch_closed_form(Bit prev, Bit x, Bit u, Bit v) {
    const Bit held = (~prev & ~x) | (prev & x);
    return is_one((x & u & ~v) | (~x & ~u & v) | (held & ~u & ~v));
}

} // namespace latcheq
