#include "latcheq/circuits.hpp"

#include <algorithm>
#include <array>

namespace latcheq {

namespace {

struct KindName {
    CircuitType type;
    const char* name;
};

constexpr std::array<KindName, 10> kKindNames{{
    {CircuitType::CElement, "c-element"},
    {CircuitType::RSLatch, "rs"},
    {CircuitType::ClockedRS, "clocked-rs"},
    {CircuitType::DLatch, "d-latch"},
    {CircuitType::EdgeTriggeredRS, "edge-rs"},
    {CircuitType::DFlipFlop, "d-ff"},
    {CircuitType::JK, "jk"},
    {CircuitType::JKDVariant, "jk-d"},
    {CircuitType::TFlipFlop, "t-ff"},
    {CircuitType::InertialLatch, "inertial"},
}};

Signal all_of(std::span<const Signal> xs) {
    return combine_all(xs, [](std::span<const Bit> v) {
        return to_bit(std::all_of(v.begin(), v.end(), is_one));
    });
}

Signal none_of(std::span<const Signal> xs) {
    return combine_all(xs, [](std::span<const Bit> v) {
        return to_bit(std::none_of(v.begin(), v.end(), is_one));
    });
}

Bit held(Bit before, Bit now) { return (~before & ~now) | (before & now); }

// The kind's single closed-form equation at one instant. For the inertial
// latch `s` must already carry the persistent inputs.
bool closed_form(const CircuitKind& kind, const Snapshot& s) {
    auto slave = [&] {
        const Bit p0 = s.before("P"), p = s["P"], q = s["Q"];
        return (~q & ~p0 & ~p) | (q & p0 & p);
    };
    switch (kind.type()) {
    case CircuitType::CElement: {
        Bit all = Bit::One, none = Bit::One, any = Bit::Zero;
        for (unsigned i = 1; i <= kind.inputs(); ++i) {
            const Bit ui = s["u" + std::to_string(i)];
            all = all & ui;
            none = none & ~ui;
            any = any | ui;
        }
        const Bit x = s["x"];
        return is_one((x & all) | (~x & none) | (held(s.before("x"), x) & ~all & any));
    }
    case CircuitType::RSLatch:
        return latch_closed_form(s.before("Q"), s["Q"], s["S"], s["R"]);
    case CircuitType::ClockedRS: {
        const Bit q = s["Q"], r = s["R"], st = s["S"], c = s["C"], h = held(s.before("Q"), q);
        return is_one((c & ((q & ~r & st) | (~q & r & ~st) | (h & ~r & ~st))) | (~c & h));
    }
    case CircuitType::DLatch: {
        const Bit q = s["Q"], d = s["D"], c = s["C"];
        return is_one((c & ((~q & ~d) | (q & d))) | (~c & held(s.before("Q"), q)));
    }
    case CircuitType::EdgeTriggeredRS: {
        const Bit c = s["C"], r = s["R"], st = s["S"], p = s["P"];
        const Bit master = (p & ~r & st) | (~p & r & ~st) | (held(s.before("P"), p) & ~r & ~st);
        return is_one((c & held(s.before("Q"), s["Q"]) & master) | (~c & slave()));
    }
    case CircuitType::DFlipFlop: {
        const Bit c = s["C"], d = s["D"], p = s["P"];
        return is_one((c & held(s.before("Q"), s["Q"]) & ((~p & ~d) | (p & d))) | (~c & slave()));
    }
    case CircuitType::JK: {
        const Bit c = s["C"], j = s["J"], k = s["K"], p = s["P"], q = s["Q"];
        const Bit master = (p & j & ~q) | (~p & k & q) |
                           (held(s.before("P"), p) & ((~j & ~k) | (~j & ~q) | (~k & q)));
        return is_one((c & held(s.before("Q"), q) & master) | (~c & slave()));
    }
    case CircuitType::JKDVariant: {
        const Bit c = s["C"], j = s["J"], k = s["K"], p = s["P"], q = s["Q"];
        const Bit master = (p & j & ~q) | (~p & k & q) | (~p & ~j & ~q) | (p & ~k & q);
        return is_one((c & held(s.before("Q"), q) & master) | (~c & slave()));
    }
    case CircuitType::TFlipFlop: {
        const Bit c = s["C"], p = s["P"], q = s["Q"], q0 = s.before("Q");
        return is_one((c & ((~q0 & ~q & p) | (q0 & q & ~p))) | (~c & slave()));
    }
    case CircuitType::InertialLatch:
        return latch_closed_form(s.before("x"), s["x"], s["u"], s["v"]);
    }
    return false;
}

SignalTable with_persistent_inputs(const CircuitKind& kind, SignalTable table) {
    table.set("u", persistent(table.get("u"), kind.delay()));
    table.set("v", persistent(table.get("v"), kind.delay()));
    return table;
}

SignalTable initial_values(const SignalTable& table) {
    SignalTable out;
    for (const auto& [name, s] : table.entries())
        out.set(name, Signal::constant(s.initial()));
    return out;
}

} // namespace

CircuitKind CircuitKind::c_element(unsigned inputs) {
    if (inputs < 2)
        throw std::invalid_argument("C element needs at least 2 inputs, got " + std::to_string(inputs));
    CircuitKind k(CircuitType::CElement);
    k.inputs_ = inputs;
    return k;
}

CircuitKind CircuitKind::inertial(Time delay) {
    if (delay == Time{0})
        throw std::invalid_argument("inertial delay must be positive");
    CircuitKind k(CircuitType::InertialLatch);
    k.delay_ = std::move(delay);
    return k;
}

CircuitKind CircuitKind::parse(std::string_view name, std::optional<unsigned> inputs, std::optional<Time> delay) {
    for (const auto& kn : kKindNames) {
        if (name != kn.name)
            continue;
        switch (kn.type) {
        case CircuitType::CElement:
            return c_element(inputs.value_or(2));
        case CircuitType::InertialLatch:
            if (!delay)
                throw std::invalid_argument("inertial latch needs a delay d");
            return inertial(*delay);
        default:
            return CircuitKind(kn.type);
        }
    }
    throw std::invalid_argument("unknown circuit '" + std::string(name) + "'");
}

const std::vector<std::string>& CircuitKind::names() {
    static const std::vector<std::string> out = [] {
        std::vector<std::string> v;
        for (const auto& kn : kKindNames)
            v.emplace_back(kn.name);
        return v;
    }();
    return out;
}

std::string CircuitKind::name() const {
    for (const auto& kn : kKindNames)
        if (kn.type == type_)
            return kn.name;
    return "?";
}

bool CircuitKind::is_master_slave() const {
    switch (type_) {
    case CircuitType::EdgeTriggeredRS:
    case CircuitType::DFlipFlop:
    case CircuitType::JK:
    case CircuitType::JKDVariant:
    case CircuitType::TFlipFlop:
        return true;
    default:
        return false;
    }
}

std::vector<std::string> CircuitKind::input_roles() const {
    switch (type_) {
    case CircuitType::CElement: {
        std::vector<std::string> out;
        for (unsigned i = 1; i <= inputs_; ++i)
            out.push_back("u" + std::to_string(i));
        return out;
    }
    case CircuitType::RSLatch:
        return {"R", "S"};
    case CircuitType::ClockedRS:
    case CircuitType::EdgeTriggeredRS:
        return {"R", "S", "C"};
    case CircuitType::DLatch:
    case CircuitType::DFlipFlop:
        return {"D", "C"};
    case CircuitType::JK:
    case CircuitType::JKDVariant:
        return {"J", "K", "C"};
    case CircuitType::TFlipFlop:
        return {"C"};
    case CircuitType::InertialLatch:
        return {"u", "v"};
    }
    return {};
}

std::string CircuitKind::state_role() const {
    return type_ == CircuitType::CElement || type_ == CircuitType::InertialLatch ? "x" : "Q";
}

std::vector<std::string> CircuitKind::state_roles() const {
    if (is_master_slave())
        return {"P", "Q"};
    return {state_role()};
}

SignalTable Trace::signals() const {
    SignalTable out = inputs;
    for (const auto& [name, s] : states.entries())
        out.set(name, s);
    return out;
}

void require_roles(const CircuitKind& kind, const Stimulus& stimulus) {
    const auto roles = kind.input_roles();
    for (const auto& role : roles)
        stimulus.get(role);
    for (const auto& name : stimulus.names()) {
        if (std::find(roles.begin(), roles.end(), name) == roles.end())
            throw std::invalid_argument("signal '" + name + "' is not an input of " + kind.name());
    }
}

SolutionSet solve_c_element(std::span<const Signal> inputs) {
    if (inputs.size() < 2)
        throw std::invalid_argument("C element needs at least 2 inputs, got " + std::to_string(inputs.size()));
    return solve(all_of(inputs), none_of(inputs));
}

SolutionSet solve_rs(const Signal& reset, const Signal& set) {
    if (auto at = check_admissibility(set, reset))
        throw AdmissibilityError(*at, "R and S");
    return solve(set, reset);
}

SolutionSet solve_clocked_rs(const Signal& reset, const Signal& set, const Signal& clock) {
    const Signal u = set & clock;
    const Signal v = reset & clock;
    if (auto at = check_admissibility(u, v))
        throw AdmissibilityError(*at, "R, S and C");
    return solve(u, v);
}

SolutionSet solve_d_latch(const Signal& data, const Signal& clock) {
    return solve(data & clock, ~data & clock);
}

SolutionSet solve_inertial(const Signal& u, const Signal& v, const Time& delay) {
    if (delay == Time{0})
        throw std::invalid_argument("inertial delay must be positive");
    const Signal pu = persistent(u, delay);
    const Signal pv = persistent(v, delay);
    if (auto at = check_admissibility(pu, pv))
        throw AdmissibilityError(*at, "persistent u and v");
    return solve(pu, pv);
}

SolutionSet solve_single(const CircuitKind& kind, const Stimulus& st) {
    require_roles(kind, st);
    switch (kind.type()) {
    case CircuitType::CElement: {
        const auto inputs = st.signals();
        return solve_c_element(inputs);
    }
    case CircuitType::RSLatch:
        return solve_rs(st.get("R"), st.get("S"));
    case CircuitType::ClockedRS:
        return solve_clocked_rs(st.get("R"), st.get("S"), st.get("C"));
    case CircuitType::DLatch:
        return solve_d_latch(st.get("D"), st.get("C"));
    case CircuitType::InertialLatch:
        return solve_inertial(st.get("u"), st.get("v"), kind.delay());
    default:
        throw std::invalid_argument(kind.name() + " is a master-slave circuit");
    }
}

Trace make_trace(const CircuitKind& kind, const Stimulus& stimulus, const Signal& state) {
    Trace t{stimulus, {}};
    t.states.set(kind.state_role(), state);
    return t;
}

MasterRule master_rule(const CircuitKind& kind) {
    switch (kind.type()) {
    case CircuitType::EdgeTriggeredRS:
        return [](const Snapshot& in, Bit) { return LatchDrive{in["S"] & in["C"], in["R"] & in["C"]}; };
    case CircuitType::DFlipFlop:
        return [](const Snapshot& in, Bit) { return LatchDrive{in["D"] & in["C"], ~in["D"] & in["C"]}; };
    case CircuitType::JK:
        return [](const Snapshot& in, Bit q) {
            return LatchDrive{in["J"] & ~q & in["C"], in["K"] & q & in["C"]};
        };
    case CircuitType::JKDVariant:
        return [](const Snapshot& in, Bit q) {
            const Bit d = (in["J"] & ~q) | (~in["K"] & q);
            return LatchDrive{d & in["C"], ~d & in["C"]};
        };
    case CircuitType::TFlipFlop:
        return [](const Snapshot& in, Bit q) { return LatchDrive{~q & in["C"], q & in["C"]}; };
    default:
        throw std::invalid_argument(kind.name() + " is not a master-slave circuit");
    }
}

Trace run_master_slave(const Stimulus& stimulus, const MasterRule& rule, Bit init_p, Bit init_q) {
    Bit p = init_p;
    Bit q = init_q;

    // Resolve the held latch first, then let the transparent one read it.
    auto step = [&](const Instant& at) {
        const Snapshot in(stimulus, at);
        if (is_one(in["C"])) {
            const LatchDrive drive = rule(in, q);
            if (is_one(drive.set & drive.reset))
                throw AdmissibilityError(at, "master set and reset");
            p = latch_next(p, drive.set, drive.reset);
        } else {
            q = latch_next(q, p, ~p);
        }
    };

    step(Instant::pre_start());
    if (p != init_p || q != init_q) {
        throw InitialStateError(std::string("initial state P=") + to_char(init_p) + " Q=" + to_char(init_q) +
                                " is not stable before the first input change");
    }

    std::vector<Change> p_changes;
    std::vector<Change> q_changes;
    for (const auto& t : change_times(stimulus.signals())) {
        step(Instant::at(t));
        p_changes.push_back({t, p});
        q_changes.push_back({t, q});
    }
    Trace trace{stimulus, {}};
    trace.states.set("P", Signal::make(init_p, std::move(p_changes)));
    trace.states.set("Q", Signal::make(init_q, std::move(q_changes)));
    return trace;
}

Trace solve_master_slave(const CircuitKind& kind, const Stimulus& stimulus, Bit init_p, Bit init_q) {
    if (!kind.is_master_slave())
        throw std::invalid_argument(kind.name() + " is not a master-slave circuit");
    require_roles(kind, stimulus);
    if (kind.type() == CircuitType::EdgeTriggeredRS) {
        const Signal& c = stimulus.get("C");
        if (auto at = check_admissibility(stimulus.get("S") & c, stimulus.get("R") & c))
            throw AdmissibilityError(*at, "R, S and C");
    }
    const InitialState wanted{init_p, init_q};
    const auto allowed = enumerate_initial_states(kind, stimulus);
    if (std::find(allowed.begin(), allowed.end(), wanted) == allowed.end()) {
        throw InitialStateError(std::string("initial state P=") + to_char(init_p) + " Q=" + to_char(init_q) +
                                " violates the " + kind.name() + " equations before the first input change");
    }
    return run_master_slave(stimulus, master_rule(kind), init_p, init_q);
}

std::vector<InitialState> enumerate_initial_states(const CircuitKind& kind, const Stimulus& stimulus) {
    require_roles(kind, stimulus);
    const SignalTable inputs = initial_values(stimulus);
    const Instant at = Instant::pre_start();
    std::vector<InitialState> out;

    auto accepts = [&](const SignalTable& states) {
        SignalTable all = inputs;
        for (const auto& [name, s] : states.entries())
            all.set(name, s);
        return closed_form(kind, Snapshot(all, at));
    };

    for (Bit p : {Bit::Zero, Bit::One}) {
        for (Bit q : {Bit::Zero, Bit::One}) {
            if (kind.is_master_slave()) {
                if (accepts({{"P", Signal::constant(p)}, {"Q", Signal::constant(q)}}))
                    out.push_back({p, q});
            } else if (p == Bit::Zero && accepts({{kind.state_role(), Signal::constant(q)}})) {
                out.push_back({std::nullopt, q});
            }
        }
    }
    return out;
}

std::optional<Instant> verify_circuit(const CircuitKind& kind, const SignalTable& signals) {
    for (const auto& role : kind.input_roles())
        signals.get(role);
    for (const auto& role : kind.state_roles())
        signals.get(role);

    const SignalTable table =
        kind.type() == CircuitType::InertialLatch ? with_persistent_inputs(kind, signals) : signals;
    const auto all = table.signals();
    for (const auto& at : sample_grid(all)) {
        if (!closed_form(kind, Snapshot(table, at)))
            return at;
    }
    return std::nullopt;
}

std::optional<Instant> verify_circuit(const CircuitKind& kind, const Trace& trace) {
    return verify_circuit(kind, trace.signals());
}

std::vector<LatchView> latch_views(const CircuitKind& kind, const Trace& trace) {
    const SignalTable& in = trace.inputs;
    const Signal& state = trace.states.get(kind.state_role());
    switch (kind.type()) {
    case CircuitType::CElement: {
        const auto inputs = in.signals();
        return {{state, all_of(inputs), none_of(inputs)}};
    }
    case CircuitType::RSLatch:
        return {{state, in.get("S"), in.get("R")}};
    case CircuitType::ClockedRS:
        return {{state, in.get("S") & in.get("C"), in.get("R") & in.get("C")}};
    case CircuitType::DLatch:
        return {{state, in.get("D") & in.get("C"), ~in.get("D") & in.get("C")}};
    case CircuitType::InertialLatch:
        return {{state, persistent(in.get("u"), kind.delay()), persistent(in.get("v"), kind.delay())}};
    default:
        break;
    }

    // Master drive depends on Q, so rebuild it from the full trace.
    const SignalTable all = trace.signals();
    const MasterRule rule = master_rule(kind);
    const Signal& p = trace.states.get("P");
    const Signal& c = in.get("C");
    auto drive_at = [&](const Instant& at) { return rule(Snapshot(all, at), sample(state, at)); };

    const LatchDrive first = drive_at(Instant::pre_start());
    std::vector<Change> set_changes;
    std::vector<Change> reset_changes;
    for (const auto& t : change_times(all.signals())) {
        const LatchDrive d = drive_at(Instant::at(t));
        set_changes.push_back({t, d.set});
        reset_changes.push_back({t, d.reset});
    }
    return {
        {p, Signal::make(first.set, std::move(set_changes)), Signal::make(first.reset, std::move(reset_changes))},
        {state, p & ~c, ~p & ~c},
    };
}

} // namespace latcheq
