#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "latcheq/latch.hpp"
#include "latcheq/table.hpp"

namespace latcheq {

enum class CircuitType {
    CElement,
    RSLatch,
    ClockedRS,
    DLatch,
    EdgeTriggeredRS,
    DFlipFlop,
    JK,
    JKDVariant,
    TFlipFlop,
    InertialLatch,
};

class CircuitKind {
public:
    static CircuitKind c_element(unsigned inputs);
    static CircuitKind rs_latch() { return CircuitKind(CircuitType::RSLatch); }
    static CircuitKind clocked_rs() { return CircuitKind(CircuitType::ClockedRS); }
    static CircuitKind d_latch() { return CircuitKind(CircuitType::DLatch); }
    static CircuitKind edge_triggered_rs() { return CircuitKind(CircuitType::EdgeTriggeredRS); }
    static CircuitKind d_flip_flop() { return CircuitKind(CircuitType::DFlipFlop); }
    static CircuitKind jk() { return CircuitKind(CircuitType::JK); }
    static CircuitKind jk_d_variant() { return CircuitKind(CircuitType::JKDVariant); }
    static CircuitKind t_flip_flop() { return CircuitKind(CircuitType::TFlipFlop); }
    static CircuitKind inertial(Time delay);

    /// Names: c-element, rs, clocked-rs, d-latch, edge-rs, d-ff, jk, jk-d,
    /// t-ff, inertial. `inputs` defaults to 2, `delay` is required for inertial.
    static CircuitKind parse(std::string_view name, std::optional<unsigned> inputs = std::nullopt,
                             std::optional<Time> delay = std::nullopt);
    static const std::vector<std::string>& names();

    CircuitType type() const { return type_; }
    unsigned inputs() const { return inputs_; }
    const Time& delay() const { return delay_; }
    std::string name() const;

    bool is_master_slave() const;
    std::vector<std::string> input_roles() const;
    /// "Q" or "x".
    std::string state_role() const;
    /// {"P", "Q"} for master-slave kinds, otherwise {state_role()}.
    std::vector<std::string> state_roles() const;

    friend bool operator==(const CircuitKind&, const CircuitKind&) = default;

private:
    explicit CircuitKind(CircuitType t) : type_(t) {}

    CircuitType type_;
    unsigned inputs_ = 0;
    Time delay_{};
};

using Stimulus = SignalTable;

/// One circuit run: inputs in declaration order, then P (master-slave only),
/// then the state.
struct Trace {
    Stimulus inputs;
    SignalTable states;

    SignalTable signals() const;
    friend bool operator==(const Trace&, const Trace&) = default;
};

/// Throws MissingRoleError for an absent role and std::invalid_argument for
/// a role the kind does not use.
void require_roles(const CircuitKind& kind, const Stimulus& stimulus);

SolutionSet solve_c_element(std::span<const Signal> inputs);
SolutionSet solve_rs(const Signal& reset, const Signal& set);
SolutionSet solve_clocked_rs(const Signal& reset, const Signal& set, const Signal& clock);
SolutionSet solve_d_latch(const Signal& data, const Signal& clock);
SolutionSet solve_inertial(const Signal& u, const Signal& v, const Time& delay);

/// Dispatch for the single-latch kinds (everything but master-slave).
SolutionSet solve_single(const CircuitKind& kind, const Stimulus& stimulus);

/// Trace of a single-latch kind with the given state signal.
Trace make_trace(const CircuitKind& kind, const Stimulus& stimulus, const Signal& state);

/// Set and reset drive of the master latch.
struct LatchDrive {
    Bit set;
    Bit reset;
};

/// Input values at one instant, looked up by role.
class Snapshot {
public:
    Snapshot(const SignalTable& table, const Instant& at) : table_(&table), at_(&at) {}
    Bit operator[](std::string_view role) const { return sample(table_->get(role), *at_); }
    Bit before(std::string_view role) const { return sample_before(table_->get(role), *at_); }

private:
    const SignalTable* table_;
    const Instant* at_;
};

/// Master drive from the inputs and the current state Q.
using MasterRule = std::function<LatchDrive(const Snapshot& inputs, Bit q)>;

MasterRule master_rule(const CircuitKind& kind);

/// Steps the constancy intervals of `stimulus` (which must contain the
/// clock C). With C = 1 the slave holds and the master latch is driven by
/// `rule`; with C = 0 the master holds and the slave copies P.
Trace run_master_slave(const Stimulus& stimulus, const MasterRule& rule, Bit init_p, Bit init_q);

Trace solve_master_slave(const CircuitKind& kind, const Stimulus& stimulus, Bit init_p, Bit init_q);

struct InitialState {
    std::optional<Bit> next_state; // P, master-slave only
    Bit state;

    friend bool operator==(const InitialState&, const InitialState&) = default;
};

/// Initial assignments satisfying the circuit's equation on (-inf, tau0).
std::vector<InitialState> enumerate_initial_states(const CircuitKind& kind, const Stimulus& stimulus);

/// Earliest grid instant where the kind's closed-form equation is not 1.
std::optional<Instant> verify_circuit(const CircuitKind& kind, const SignalTable& signals);
std::optional<Instant> verify_circuit(const CircuitKind& kind, const Trace& trace);

/// The latches of a trace as (state, set input, reset input) after input
/// substitution: one for single-latch kinds, master then slave otherwise.
struct LatchView {
    Signal state;
    Signal set;
    Signal reset;
};

std::vector<LatchView> latch_views(const CircuitKind& kind, const Trace& trace);

} // namespace latcheq
