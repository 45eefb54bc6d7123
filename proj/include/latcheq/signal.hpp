#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "latcheq/time.hpp"

namespace latcheq {

/// Element of the two-element Boolean algebra.
enum class Bit : std::uint8_t { Zero = 0, One = 1 };

constexpr Bit to_bit(bool b) { return b ? Bit::One : Bit::Zero; }
constexpr bool is_one(Bit b) { return b == Bit::One; }

constexpr Bit operator~(Bit a) { return to_bit(!is_one(a)); }
constexpr Bit operator&(Bit a, Bit b) { return to_bit(is_one(a) && is_one(b)); }
constexpr Bit operator|(Bit a, Bit b) { return to_bit(is_one(a) || is_one(b)); }
constexpr Bit operator^(Bit a, Bit b) { return to_bit(a != b); }

char to_char(Bit b);
std::ostream& operator<<(std::ostream& os, Bit b);

struct Change {
    Time at;
    Bit to;

    friend bool operator==(const Change&, const Change&) = default;
};

/// Raised by Signal::make when change times are not strictly increasing.
class SignalError : public std::invalid_argument {
public:
    SignalError(std::size_t index, const std::string& what)
        : std::invalid_argument(what), index_(index) {}

    /// Position of the offending entry in the change list given to make().
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

/// Piecewise-constant Boolean function of time. Holds `initial` on
/// (-inf, first change) and each change's value on [at, next change).
/// Always normalized: consecutive values alternate, so equality of
/// representations is equality of functions.
class Signal {
public:
    Signal() = default;

    static Signal make(Bit initial, std::vector<Change> changes);
    static Signal constant(Bit value);
    /// Characteristic function of [from, to).
    static Signal pulse(Time from, Time to);
    /// Characteristic function of [from, inf).
    static Signal step(Time from);
    /// Characteristic function of (-inf, to).
    static Signal until(Time to);

    Bit initial() const { return initial_; }
    const std::vector<Change>& changes() const { return changes_; }
    bool is_constant() const { return changes_.empty(); }
    /// Value from the last change on (initial when there are none).
    Bit final_value() const { return changes_.empty() ? initial_ : changes_.back().to; }

    friend bool operator==(const Signal&, const Signal&) = default;

private:
    Bit initial_ = Bit::Zero;
    std::vector<Change> changes_;
};

std::ostream& operator<<(std::ostream& os, const Signal& s);

/// x(t).
Bit eval(const Signal& s, const Time& t);
/// x(t-0); the initial value for t at or before the first change.
Bit left_limit(const Signal& s, const Time& t);

Signal complement(const Signal& s);
Signal combine(const std::function<Bit(Bit, Bit)>& op, const Signal& a, const Signal& b);
/// Pointwise application of `op` to any number of signals.
Signal combine_all(std::span<const Signal> operands, const std::function<Bit(std::span<const Bit>)>& op);

Signal operator~(const Signal& s);
Signal operator&(const Signal& a, const Signal& b);
Signal operator|(const Signal& a, const Signal& b);
Signal operator^(const Signal& a, const Signal& b);

/// Instants t >= 0 with x(t-0) = 0 and x(t) = 1.
std::vector<Time> rising_edges(const Signal& s);
std::vector<Time> falling_edges(const Signal& s);

/// 1 at t iff s is 1 on all of [t-d, t]. Throws std::invalid_argument for d <= 0.
Signal persistent(const Signal& s, const Time& d);

bool signals_equal(const Signal& a, const Signal& b);

/// Least t >= 0 with u(t) | v(t) = 1.
std::optional<Time> first_activation(const Signal& u, const Signal& v);

/// Sorted, deduplicated change times of all given signals.
std::vector<Time> change_times(std::span<const Signal> signals);

/// A sampling instant. The pre-start instant stands for the whole
/// interval before the first change (written 0-0), where every signal and
/// its left limit equal the initial value.
class Instant {
public:
    static Instant pre_start() { return Instant(true, Time{}); }
    static Instant at(Time t) { return Instant(false, std::move(t)); }

    bool is_pre_start() const { return pre_start_; }
    /// Meaningless for the pre-start instant.
    const Time& time() const { return time_; }
    std::string str() const;

    friend bool operator==(const Instant&, const Instant&) = default;
    friend std::strong_ordering operator<=>(const Instant& a, const Instant& b);

private:
    Instant(bool pre, Time t) : pre_start_(pre), time_(std::move(t)) {}

    bool pre_start_;
    Time time_;
};

std::ostream& operator<<(std::ostream& os, const Instant& i);

/// Value at the instant.
Bit sample(const Signal& s, const Instant& i);
/// Left limit at the instant.
Bit sample_before(const Signal& s, const Instant& i);

/// Points that determine every piecewise-constant function built from
/// `signals`: the pre-start instant, 0, every change time, midpoints of
/// consecutive times, and one unit past the last. Ascending order.
std::vector<Instant> sample_grid(std::span<const Signal> signals);

} // namespace latcheq
