#include "latcheq/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "latcheq/circuits.hpp"
#include "latcheq/waveform.hpp"

namespace latcheq {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string circuit;
    std::string against;
    std::optional<unsigned> inputs;
    std::string delay;
    std::string stimulus = "-";
    std::vector<std::string> init;
    std::string format = "text";
    std::string out = "-";
};

std::string read_all(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

StimulusDocument load_document(const Options& opt, std::istream& in) {
    std::string text;
    if (opt.stimulus == "-") {
        text = read_all(in);
    } else {
        std::ifstream file(opt.stimulus, std::ios::binary);
        if (!file)
            throw UsageError("cannot open '" + opt.stimulus + "'");
        text = read_all(file);
    }
    try {
        return parse_stimulus(text);
    } catch (const ParseError& e) {
        const std::string where = opt.stimulus == "-" ? "<stdin>" : opt.stimulus;
        throw UsageError(where + ":" + e.what());
    }
}

CircuitKind resolve_kind(const std::string& name, const Options& opt, const StimulusDocument& doc) {
    if (name.empty()) {
        if (!doc.circuit)
            throw UsageError("no circuit given: use --circuit or a .circuit line");
        return *doc.circuit;
    }
    std::optional<unsigned> inputs = opt.inputs;
    if (!inputs && name == "c-element") {
        if (doc.circuit && doc.circuit->type() == CircuitType::CElement) {
            inputs = doc.circuit->inputs();
        } else {
            static const std::regex input_role("u[0-9]+");
            unsigned count = 0;
            for (const auto& n : doc.signals.names())
                count += std::regex_match(n, input_role) ? 1 : 0;
            inputs = std::max(count, 2u);
        }
    }
    std::optional<Time> delay;
    if (!opt.delay.empty())
        delay = Time::parse(opt.delay);
    else if (doc.circuit && doc.circuit->type() == CircuitType::InertialLatch)
        delay = doc.circuit->delay();
    return CircuitKind::parse(name, inputs, delay);
}

std::map<std::string, Bit> parse_inits(const std::vector<std::string>& assignments,
                                       const std::vector<std::string>& allowed) {
    std::map<std::string, Bit> out;
    for (const auto& assignment : assignments) {
        const auto eq = assignment.find('=');
        const std::string name = assignment.substr(0, eq);
        const std::string value = eq == std::string::npos ? "" : assignment.substr(eq + 1);
        if (value != "0" && value != "1")
            throw UsageError("--init expects NAME=0 or NAME=1, got '" + assignment + "'");
        if (std::find(allowed.begin(), allowed.end(), name) == allowed.end())
            throw UsageError("--init names a non-state signal '" + name + "'");
        out[name] = to_bit(value == "1");
    }
    return out;
}

Stimulus restrict_to(const CircuitKind& kind, const Stimulus& all) {
    Stimulus out;
    for (const auto& role : kind.input_roles())
        out.set(role, all.get(role));
    return out;
}

/// All state trajectories selected by the given initial values, in
/// ascending order of initial state.
std::vector<SignalTable> solve_runs(const CircuitKind& kind, const Stimulus& stimulus,
                                    const std::map<std::string, Bit>& inits) {
    std::vector<SignalTable> runs;
    if (!kind.is_master_slave()) {
        const SolutionSet solutions = solve_single(kind, stimulus);
        const std::string role = kind.state_role();
        if (auto it = inits.find(role); it != inits.end()) {
            runs.push_back({{role, solutions.resolve(it->second)}});
        } else {
            for (const auto& s : solutions.solutions())
                runs.push_back({{role, s}});
        }
        return runs;
    }

    std::vector<InitialState> candidates;
    for (const auto& st : enumerate_initial_states(kind, stimulus)) {
        auto p = inits.find("P");
        auto q = inits.find("Q");
        if ((p == inits.end() || p->second == *st.next_state) && (q == inits.end() || q->second == st.state))
            candidates.push_back(st);
    }
    if (candidates.empty())
        throw InitialStateError("no initial state of " + kind.name() + " is consistent with the inputs and --init");
    for (const auto& st : candidates)
        runs.push_back(solve_master_slave(kind, stimulus, *st.next_state, st.state).states);
    return runs;
}

void self_check(const CircuitKind& kind, const Stimulus& stimulus, const SignalTable& states) {
    const Trace trace{stimulus, states};
    if (auto at = verify_circuit(kind, trace))
        throw std::logic_error("internal: solver output violates the " + kind.name() + " equation at t=" + at->str());
}

std::string render(const StimulusDocument& doc, const std::string& format) {
    if (format == "dump")
        return emit_dump(doc.signals);
    if (format == "structured")
        return to_json(doc);
    return emit_text(doc.signals);
}

void write_output(const Options& opt, const std::string& text, std::ostream& out) {
    if (opt.out == "-") {
        out << text;
        return;
    }
    std::ofstream file(opt.out, std::ios::binary);
    if (!file)
        throw UsageError("cannot write '" + opt.out + "'");
    file << text;
}

int cmd_solve(const Options& opt, std::istream& in, std::ostream& out) {
    const StimulusDocument doc = load_document(opt, in);
    const CircuitKind kind = resolve_kind(opt.circuit, opt, doc);
    require_roles(kind, doc.signals);
    const auto inits = parse_inits(opt.init, kind.state_roles());
    const auto runs = solve_runs(kind, doc.signals, inits);

    StimulusDocument result{doc.signals, kind};
    std::string suffix;
    for (const auto& states : runs) {
        self_check(kind, doc.signals, states);
        for (const auto& [name, s] : states.entries())
            result.signals.set(name + suffix, s);
        suffix += '\'';
    }

    std::string text;
    if (opt.format == "text" && runs.size() > 1) {
        text = "# " + std::to_string(runs.size()) + " solutions, primes mark higher initial states";
        if (!kind.is_master_slave()) {
            const SolutionSet set = solve_single(kind, doc.signals);
            const auto& from = set.pair().coincide_from;
            text += from ? "; they coincide from t=" + from->str() : "; they never coincide";
        }
        text += '\n';
    }
    write_output(opt, text + render(result, opt.format), out);
    return kExitOk;
}

int cmd_verify(const Options& opt, std::istream& in, std::ostream& out) {
    const StimulusDocument doc = load_document(opt, in);
    const CircuitKind kind = resolve_kind(opt.circuit, opt, doc);
    if (auto at = verify_circuit(kind, doc.signals)) {
        write_output(opt, "violation at t=" + at->str() + "\n", out);
        return kExitFailed;
    }
    write_output(opt, "ok\n", out);
    return kExitOk;
}

int cmd_compare(const Options& opt, std::istream& in, std::ostream& out) {
    if (opt.against.empty())
        throw UsageError("compare needs --against");
    const StimulusDocument doc = load_document(opt, in);
    const CircuitKind a = resolve_kind(opt.circuit, opt, doc);
    const CircuitKind b = resolve_kind(opt.against, opt, doc);

    std::vector<std::string> roles = a.state_roles();
    for (const auto& r : b.state_roles())
        if (std::find(roles.begin(), roles.end(), r) == roles.end())
            roles.push_back(r);
    const auto inits = parse_inits(opt.init, roles);

    auto only_state = [&](const CircuitKind& kind) {
        std::map<std::string, Bit> mine;
        for (const auto& role : kind.state_roles())
            if (auto it = inits.find(role); it != inits.end())
                mine.insert(*it);
        const Stimulus stimulus = restrict_to(kind, doc.signals);
        const auto runs = solve_runs(kind, stimulus, mine);
        if (runs.size() != 1)
            throw UsageError(kind.name() + " has " + std::to_string(runs.size()) +
                             " solutions for this stimulus; fix them with --init");
        self_check(kind, stimulus, runs.front());
        return runs.front().get(kind.state_role());
    };

    const Signal qa = only_state(a);
    const Signal qb = only_state(b);
    const Signal both[] = {qa, qb};
    for (const auto& at : sample_grid(both)) {
        if (sample(qa, at) != sample(qb, at)) {
            write_output(opt, a.state_role() + " differs from t=" + at.str() + "\n", out);
            return kExitFailed;
        }
    }
    write_output(opt, "equal\n", out);
    return kExitOk;
}

int cmd_enumerate(const Options& opt, std::istream& in, std::ostream& out) {
    const StimulusDocument doc = load_document(opt, in);
    const CircuitKind kind = resolve_kind(opt.circuit, opt, doc);
    std::string text;
    for (const auto& st : enumerate_initial_states(kind, doc.signals)) {
        if (st.next_state)
            text += std::string("P=") + to_char(*st.next_state) + " ";
        text += kind.state_role() + "=" + to_char(st.state) + "\n";
    }
    write_output(opt, text.empty() ? "none\n" : text, out);
    return kExitOk;
}

void add_common(CLI::App* cmd, Options& opt, bool with_init) {
    cmd->add_option("--circuit", opt.circuit, "Circuit kind")
        ->check(CLI::IsMember(CircuitKind::names()));
    cmd->add_option("--m", opt.inputs, "Number of C element inputs");
    cmd->add_option("--d", opt.delay, "Inertial delay, decimal or p/q");
    cmd->add_option("--stimulus,stimulus", opt.stimulus, "Input document, '-' for standard input");
    cmd->add_option("--out", opt.out, "Output path, '-' for standard output");
    if (with_init)
        cmd->add_option("--init", opt.init, "Initial state, NAME=0|1 (repeatable)")
            ->allow_extra_args(false);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact solver for ideal latch and flip-flop equations", "latcheq"};
    app.require_subcommand(1);
    Options opt;

    auto* solve_cmd = app.add_subcommand("solve", "Solve a circuit and emit its trace");
    add_common(solve_cmd, opt, true);
    solve_cmd->add_option("--format", opt.format, "text | dump | structured")
        ->check(CLI::IsMember({"text", "dump", "structured"}));

    auto* verify_cmd = app.add_subcommand("verify", "Check a full trace against the circuit equation");
    add_common(verify_cmd, opt, false);

    auto* compare_cmd = app.add_subcommand("compare", "Report the first time two circuits' states differ");
    add_common(compare_cmd, opt, true);
    compare_cmd->add_option("--against", opt.against, "Second circuit kind")
        ->check(CLI::IsMember(CircuitKind::names()));

    auto* enumerate_cmd = app.add_subcommand("enumerate-init", "List the consistent initial states");
    add_common(enumerate_cmd, opt, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (solve_cmd->parsed())
            return cmd_solve(opt, in, out);
        if (verify_cmd->parsed())
            return cmd_verify(opt, in, out);
        if (compare_cmd->parsed())
            return cmd_compare(opt, in, out);
        return cmd_enumerate(opt, in, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace latcheq
