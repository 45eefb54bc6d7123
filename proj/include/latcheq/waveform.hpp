#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "latcheq/circuits.hpp"
#include "latcheq/table.hpp"

namespace latcheq {

/// Parsed stimulus (or full trace) document.
struct StimulusDocument {
    SignalTable signals;
    std::optional<CircuitKind> circuit;

    friend bool operator==(const StimulusDocument&, const StimulusDocument&) = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

/// Line-oriented stimulus language:
///
///     # comment
///     .circuit jk               (optional; also m=<int>, d=<time>)
///     S = 0, 1@1, 0@2
///     C = 0, 1@1/2, 0@0.75
///
/// Each signal line gives the initial value followed by `value@time`
/// changes; times are decimals or p/q and are converted exactly.
StimulusDocument parse_stimulus(std::string_view text);

std::string serialize_stimulus(const StimulusDocument& doc);

/// serialize then parse.
StimulusDocument round_trip(const StimulusDocument& doc);

/// One row per constancy interval, starting with (-inf, tau0).
std::string emit_text(const SignalTable& signals);

/// A value-change dump with integer timestamps: every time is multiplied
/// by `scale`, the least common denominator of all change times.
struct WaveDump {
    struct Variable {
        std::string name;
        std::string code;
        Bit initial;
    };
    struct Event {
        Integer tick;
        std::size_t variable;
        Bit value;
    };

    Integer scale = 1;
    std::vector<Variable> variables;
    /// Sorted by tick; changes at tick 0 come after the initial values.
    std::vector<Event> events;

    std::string serialize() const;
};

WaveDump make_dump(const SignalTable& signals);
std::string emit_dump(const SignalTable& signals);

/// {"circuit": {...}?, "signals": [{"name", "initial", "changes": [["p/q", bit], ...]}]}
std::string to_json(const StimulusDocument& doc);
StimulusDocument from_json(std::string_view text);

} // namespace latcheq
