#include "latcheq/latch.hpp"

#include <algorithm>

namespace latcheq {

AdmissibilityError::AdmissibilityError(Instant at, const std::string& context)
    : std::runtime_error("inadmissible inputs: " + context + " both 1 at t=" + at.str()), at_(std::move(at)) {}

std::optional<Instant> check_admissibility(const Signal& u, const Signal& v) {
    const Signal both = u & v;
    if (is_one(both.initial()))
        return Instant::pre_start();
    if (auto edges = rising_edges(both); !edges.empty())
        return Instant::at(edges.front());
    return std::nullopt;
}

std::vector<Bit> allowed_initials(const Signal& u, const Signal& v) {
    if (is_one(u.initial()))
        return {Bit::One};
    if (is_one(v.initial()))
        return {Bit::Zero};
    return {Bit::Zero, Bit::One};
}

namespace {

void require_solvable(const Signal& u, const Signal& v, Bit init) {
    if (auto at = check_admissibility(u, v))
        throw AdmissibilityError(*at);
    auto allowed = allowed_initials(u, v);
    if (std::find(allowed.begin(), allowed.end(), init) == allowed.end()) {
        throw InitialStateError(std::string("initial state ") + to_char(init) + " is impossible: " +
                                (is_one(u.initial()) ? "u(0-0)=1 forces 1" : "v(0-0)=1 forces 0"));
    }
}

} // namespace

Signal solve_stepping(const Signal& u, const Signal& v, Bit init) {
    require_solvable(u, v, init);
    const Signal inputs[] = {u, v};
    std::vector<Change> out;
    Bit x = init;
    for (auto& t : change_times(inputs)) {
        x = latch_next(x, eval(u, t), eval(v, t));
        out.push_back({std::move(t), x});
    }
    return Signal::make(init, std::move(out));
}

std::string to_string(Branch b) {
    switch (b) {
    case Branch::AI:
        return "a.i";
    case Branch::AII:
        return "a.ii";
    case Branch::B:
        return "b";
    case Branch::C:
        return "c";
    }
    return "?";
}

std::string ConstructionTrace::path() const {
    std::string out = to_string(branch);
    for (std::size_t i = 0; i < schedule.size(); ++i)
        out += ".2";
    return out + ".1";
}

std::pair<Signal, ConstructionTrace> solve_construction(const Signal& u, const Signal& v, Bit init) {
    require_solvable(u, v, init);

    ConstructionTrace trace{};
    if (is_one(u.initial()))
        trace.branch = Branch::B;
    else if (is_one(v.initial()))
        trace.branch = Branch::C;
    else
        trace.branch = is_one(init) ? Branch::AII : Branch::AI;

    // U0 ⊃ U2 ⊃ ... and V1 ⊃ V3 ⊃ ... (or the primed dual starting from v):
    // each minimum is the first rising edge of the other input after the
    // previous minimum.
    const std::vector<Time> edges[] = {rising_edges(u), rising_edges(v)};
    std::size_t source = is_one(init) ? 1 : 0;
    for (;;) {
        const auto& set = edges[source];
        auto it = trace.schedule.empty()
                      ? set.begin()
                      : std::upper_bound(set.begin(), set.end(), trace.schedule.back());
        if (it == set.end())
            break;
        trace.schedule.push_back(*it);
        source ^= 1;
    }

    // x = φ[t0,t1) ⊕ φ[t2,t3) ⊕ ...   or   x' = φ(-inf,t0') ⊕ φ[t1',t2') ⊕ ...
    const auto& ts = trace.schedule;
    Signal x = Signal::constant(Bit::Zero);
    std::size_t k = 0;
    if (is_one(init)) {
        x = ts.empty() ? Signal::constant(Bit::One) : Signal::until(ts[0]);
        k = 1;
    }
    for (; k < ts.size(); k += 2)
        x = x ^ (k + 1 < ts.size() ? Signal::pulse(ts[k], ts[k + 1]) : Signal::step(ts[k]));

    return {std::move(x), std::move(trace)};
}

std::vector<Signal> SolutionSet::solutions() const {
    if (is_unique())
        return {unique().x};
    return {pair().x0, pair().x1};
}

const Signal& SolutionSet::resolve(Bit init) const {
    if (is_unique()) {
        if (unique().x.initial() != init)
            throw InitialStateError(std::string("initial state ") + to_char(init) +
                                    " is impossible: the solution is unique with initial state " +
                                    to_char(unique().x.initial()));
        return unique().x;
    }
    return is_one(init) ? pair().x1 : pair().x0;
}

SolutionSet solve(const Signal& u, const Signal& v) {
    if (auto at = check_admissibility(u, v))
        throw AdmissibilityError(*at);
    if (is_one(u.initial()))
        return SolutionSet::Unique{solve_stepping(u, v, Bit::One)};
    if (is_one(v.initial()))
        return SolutionSet::Unique{solve_stepping(u, v, Bit::Zero)};
    return SolutionSet::Pair{solve_stepping(u, v, Bit::Zero), solve_stepping(u, v, Bit::One),
                             first_activation(u, v)};
}

std::optional<SystemViolation> verify_system(const Signal& x, const Signal& u, const Signal& v) {
    const Signal all[] = {x, u, v};
    for (const auto& at : sample_grid(all)) {
        const Bit prev = sample_before(x, at);
        const Bit cur = sample(x, at);
        const Bit ui = sample(u, at);
        const Bit vi = sample(v, at);
        if (is_one(ui & vi))
            return SystemViolation{at, 3};
        if ((~prev & cur) != (~prev & ui))
            return SystemViolation{at, 1};
        if ((prev & ~cur) != (prev & vi))
            return SystemViolation{at, 2};
    }
    return std::nullopt;
}

std::optional<Instant> verify_closed_form(const Signal& x, const Signal& u, const Signal& v) {
    const Signal all[] = {x, u, v};
    for (const auto& at : sample_grid(all)) {
        if (!latch_closed_form(sample_before(x, at), sample(x, at), sample(u, at), sample(v, at)))
            return at;
    }
    return std::nullopt;
}

} // namespace latcheq
