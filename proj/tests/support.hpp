#pragma once

// Test-only generators and brute-force oracles. The oracles sample every
// signal on a uniform rational grid and never use the library's change-time
// merging, so they check the solvers by an independent route.

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "latcheq/circuits.hpp"
#include "latcheq/signal.hpp"

namespace latcheq::testing {

inline Signal sig(Bit initial, std::vector<std::pair<Time, int>> changes) {
    std::vector<Change> cs;
    for (auto& [t, b] : changes)
        cs.push_back({t, to_bit(b != 0)});
    return Signal::make(initial, std::move(cs));
}

inline Signal zero() { return Signal::constant(Bit::Zero); }
inline Signal one() { return Signal::constant(Bit::One); }

class Generator {
public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    Bit bit() { return to_bit(uniform(0, 1) == 1); }

    /// p/q with q <= max_den, in [0, horizon].
    Time time(int horizon, int max_den = 16) {
        const int q = uniform(1, max_den);
        return Time(uniform(0, horizon * q), q);
    }

    /// Alternating signal with up to `max_changes` changes.
    Signal signal(int max_changes = 20, int horizon = 20, int max_den = 16) {
        const int n = uniform(0, max_changes);
        std::vector<Time> ts;
        for (int i = 0; i < n; ++i)
            ts.push_back(time(horizon, max_den));
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        const Bit initial = bit();
        Bit v = initial;
        std::vector<Change> cs;
        for (auto& t : ts) {
            v = ~v;
            cs.push_back({t, v});
        }
        return Signal::make(initial, std::move(cs));
    }

    /// Admissible pair: v is masked by the complement of u.
    std::pair<Signal, Signal> admissible_pair(int max_changes = 20) {
        Signal u = signal(max_changes);
        Signal v = signal(max_changes) & ~u;
        if (uniform(0, 1) == 1)
            std::swap(u, v);
        return {u, v};
    }

    /// Clock made of `pulses` disjoint pulses, starting low.
    Signal clock(int max_pulses = 8) {
        const int n = uniform(1, max_pulses);
        std::vector<Time> ts;
        while (static_cast<int>(ts.size()) < 2 * n) {
            ts.push_back(time(20, 8));
            std::sort(ts.begin(), ts.end());
            ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        }
        std::vector<Change> cs;
        for (std::size_t i = 0; i < ts.size(); ++i)
            cs.push_back({ts[i], to_bit(i % 2 == 0)});
        return Signal::make(Bit::Zero, std::move(cs));
    }

private:
    std::mt19937_64 rng_;
};

/// Uniform grid k/(2L) over [0, last + 1], where L is the least common
/// denominator of all change times (and of `extra`). Every change time and
/// every midpoint between changes lies on it.
inline std::vector<Time> dense_grid(const std::vector<Signal>& signals, const std::vector<Time>& extra = {}) {
    Integer den = 1;
    Rational last = 0;
    auto absorb = [&](const Time& t) {
        den = boost::multiprecision::lcm(den, t.denominator());
        last = std::max(last, t.value());
    };
    for (const auto& s : signals)
        for (const auto& c : s.changes())
            absorb(c.at);
    for (const auto& t : extra)
        absorb(t);
    const Rational step = Rational(1) / Rational(2 * den);
    std::vector<Time> grid;
    for (Rational t = 0; t <= last + 1; t += step)
        grid.push_back(Time(t));
    return grid;
}

/// Rebuilds a signal from its initial value and values on an ascending grid.
inline Signal from_samples(Bit initial, const std::vector<Time>& grid, const std::vector<Bit>& values) {
    std::vector<Change> cs;
    for (std::size_t i = 0; i < grid.size(); ++i)
        cs.push_back({grid[i], values[i]});
    return Signal::make(initial, std::move(cs));
}

/// Table 1 applied at every grid point.
inline Signal oracle_latch(const Signal& u, const Signal& v, Bit init) {
    const auto grid = dense_grid({u, v});
    std::vector<Bit> xs;
    Bit x = init;
    for (const auto& t : grid) {
        const Bit ut = eval(u, t), vt = eval(v, t);
        if (is_one(ut))
            x = Bit::One;
        else if (is_one(vt))
            x = Bit::Zero;
        xs.push_back(x);
    }
    return from_samples(init, grid, xs);
}

/// 1 at t iff s is 1 at every grid point of [t-d, t] and at every change
/// time inside it.
inline Signal oracle_persistent(const Signal& s, const Time& d) {
    const Time horizon = (s.changes().empty() ? Time(0) : s.changes().back().at) + d;
    const auto grid = dense_grid({s}, {d, horizon});
    auto holds = [&](const Rational& from, const Rational& to) {
        if (from < 0 && !is_one(s.initial()))
            return false;
        for (const auto& g : grid)
            if (g.value() >= from && g.value() <= to && !is_one(eval(s, g)))
                return false;
        return true;
    };
    std::vector<Bit> xs;
    for (const auto& t : grid)
        xs.push_back(to_bit(holds(t.value() - d.value(), t.value())));
    return from_samples(s.initial(), grid, xs);
}

/// Master-slave behaviour at grid resolution: master transparent while the
/// clock is 1, slave copies P while it is 0.
using DenseDrive = std::function<std::pair<Bit, Bit>(const std::map<std::string, Bit>& inputs, Bit q)>;

inline std::pair<Signal, Signal> oracle_master_slave(const std::map<std::string, Signal>& inputs,
                                                     const DenseDrive& drive, Bit p0, Bit q0) {
    std::vector<Signal> all;
    for (const auto& [name, s] : inputs)
        all.push_back(s);
    const auto grid = dense_grid(all);
    Bit p = p0, q = q0;
    std::vector<Bit> ps, qs;
    for (const auto& t : grid) {
        std::map<std::string, Bit> now;
        for (const auto& [name, s] : inputs)
            now[name] = eval(s, t);
        if (is_one(now.at("C"))) {
            auto [set, reset] = drive(now, q);
            if (is_one(set))
                p = Bit::One;
            else if (is_one(reset))
                p = Bit::Zero;
        } else {
            q = p;
        }
        ps.push_back(p);
        qs.push_back(q);
    }
    return {from_samples(p0, grid, ps), from_samples(q0, grid, qs)};
}

} // namespace latcheq::testing
