#include "latcheq/signal.hpp"

#include <algorithm>

namespace latcheq {

char to_char(Bit b) { return is_one(b) ? '1' : '0'; }

std::ostream& operator<<(std::ostream& os, Bit b) { return os << to_char(b); }

Signal Signal::make(Bit initial, std::vector<Change> changes) {
    for (std::size_t i = 1; i < changes.size(); ++i) {
        if (!(changes[i - 1].at < changes[i].at)) {
            throw SignalError(i, "change " + std::to_string(i) + " at time " + changes[i].at.str() +
                                     " does not follow time " + changes[i - 1].at.str());
        }
    }
    Signal s;
    s.initial_ = initial;
    Bit current = initial;
    for (auto& c : changes) {
        if (c.to == current)
            continue;
        current = c.to;
        s.changes_.push_back(std::move(c));
    }
    return s;
}

Signal Signal::constant(Bit value) { return make(value, {}); }

Signal Signal::pulse(Time from, Time to) {
    return make(Bit::Zero, {{std::move(from), Bit::One}, {std::move(to), Bit::Zero}});
}

Signal Signal::step(Time from) { return make(Bit::Zero, {{std::move(from), Bit::One}}); }

Signal Signal::until(Time to) { return make(Bit::One, {{std::move(to), Bit::Zero}}); }

std::ostream& operator<<(std::ostream& os, const Signal& s) {
    os << s.initial();
    for (const auto& c : s.changes())
        os << ", " << c.to << '@' << c.at;
    return os;
}

Bit eval(const Signal& s, const Time& t) {
    const auto& cs = s.changes();
    auto it = std::upper_bound(cs.begin(), cs.end(), t,
                               [](const Time& x, const Change& c) { return x < c.at; });
    return it == cs.begin() ? s.initial() : std::prev(it)->to;
}

Bit left_limit(const Signal& s, const Time& t) {
    const auto& cs = s.changes();
    auto it = std::lower_bound(cs.begin(), cs.end(), t,
                               [](const Change& c, const Time& x) { return c.at < x; });
    return it == cs.begin() ? s.initial() : std::prev(it)->to;
}

Signal complement(const Signal& s) {
    std::vector<Change> out;
    out.reserve(s.changes().size());
    for (const auto& c : s.changes())
        out.push_back({c.at, ~c.to});
    return Signal::make(~s.initial(), std::move(out));
}

std::vector<Time> change_times(std::span<const Signal> signals) {
    std::vector<Time> times;
    for (const auto& s : signals)
        for (const auto& c : s.changes())
            times.push_back(c.at);
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    return times;
}

Signal combine_all(std::span<const Signal> operands, const std::function<Bit(std::span<const Bit>)>& op) {
    std::vector<Bit> values(operands.size());
    for (std::size_t i = 0; i < operands.size(); ++i)
        values[i] = operands[i].initial();
    Bit initial = op(values);

    std::vector<Change> out;
    for (auto& t : change_times(operands)) {
        for (std::size_t i = 0; i < operands.size(); ++i)
            values[i] = eval(operands[i], t);
        out.push_back({std::move(t), op(values)});
    }
    return Signal::make(initial, std::move(out));
}

Signal combine(const std::function<Bit(Bit, Bit)>& op, const Signal& a, const Signal& b) {
    const Signal operands[] = {a, b};
    return combine_all(operands, [&](std::span<const Bit> v) { return op(v[0], v[1]); });
}

Signal operator~(const Signal& s) { return complement(s); }

Signal operator&(const Signal& a, const Signal& b) {
    return combine([](Bit x, Bit y) { return x & y; }, a, b);
}

Signal operator|(const Signal& a, const Signal& b) {
    return combine([](Bit x, Bit y) { return x | y; }, a, b);
}

Signal operator^(const Signal& a, const Signal& b) {
    return combine([](Bit x, Bit y) { return x ^ y; }, a, b);
}

std::vector<Time> rising_edges(const Signal& s) {
    std::vector<Time> out;
    for (const auto& c : s.changes())
        if (is_one(c.to))
            out.push_back(c.at);
    return out;
}

std::vector<Time> falling_edges(const Signal& s) {
    std::vector<Time> out;
    for (const auto& c : s.changes())
        if (!is_one(c.to))
            out.push_back(c.at);
    return out;
}

Signal persistent(const Signal& s, const Time& d) {
    if (d == Time{0})
        throw std::invalid_argument("persistence window must be positive");

    // Each maximal 1-interval [a, b) becomes [a + d, b); one reaching back
    // to -inf is kept whole.
    std::vector<Change> out;
    const auto& cs = s.changes();
    std::size_t i = 0;
    if (is_one(s.initial())) {
        if (cs.empty())
            return s;
        out.push_back({cs[0].at, Bit::Zero});
        i = 1;
    }
    for (; i < cs.size(); i += 2) {
        const Time start = cs[i].at + d;
        if (i + 1 == cs.size()) {
            out.push_back({start, Bit::One});
            break;
        }
        if (start < cs[i + 1].at) {
            out.push_back({start, Bit::One});
            out.push_back({cs[i + 1].at, Bit::Zero});
        }
    }
    return Signal::make(s.initial(), std::move(out));
}

bool signals_equal(const Signal& a, const Signal& b) { return a == b; }

std::optional<Time> first_activation(const Signal& u, const Signal& v) {
    const Signal either = u | v;
    if (is_one(eval(either, Time{0})))
        return Time{0};
    for (const auto& c : either.changes())
        if (is_one(c.to))
            return c.at;
    return std::nullopt;
}

std::string Instant::str() const { return pre_start_ ? std::string("0-0") : time_.str(); }

std::strong_ordering operator<=>(const Instant& a, const Instant& b) {
    if (a.pre_start_ || b.pre_start_)
        return b.pre_start_ <=> a.pre_start_;
    return a.time_ <=> b.time_;
}

std::ostream& operator<<(std::ostream& os, const Instant& i) { return os << i.str(); }

Bit sample(const Signal& s, const Instant& i) {
    return i.is_pre_start() ? s.initial() : eval(s, i.time());
}

Bit sample_before(const Signal& s, const Instant& i) {
    return i.is_pre_start() ? s.initial() : left_limit(s, i.time());
}

std::vector<Instant> sample_grid(std::span<const Signal> signals) {
    std::vector<Time> times = change_times(signals);
    if (times.empty() || !(times.front() == Time{0}))
        times.insert(times.begin(), Time{0});

    std::vector<Instant> grid;
    grid.reserve(2 * times.size() + 2);
    grid.push_back(Instant::pre_start());
    for (std::size_t i = 0; i < times.size(); ++i) {
        grid.push_back(Instant::at(times[i]));
        if (i + 1 < times.size())
            grid.push_back(Instant::at(midpoint(times[i], times[i + 1])));
    }
    grid.push_back(Instant::at(times.back() + Time{1}));
    return grid;
}

} // namespace latcheq
