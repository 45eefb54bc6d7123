#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "latcheq/waveform.hpp"

namespace latcheq {

namespace {

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string vcd_code(std::size_t index) {
    constexpr std::size_t kFirst = 33; // '!'
    constexpr std::size_t kCount = 94; // '!' .. '~'
    std::string code;
    do {
        code.push_back(static_cast<char>(kFirst + index % kCount));
        index /= kCount;
    } while (index-- > 0);
    return code;
}

} // namespace

std::string emit_text(const SignalTable& signals) {
    const auto all = signals.signals();
    const auto times = change_times(all);

    std::vector<std::string> labels;
    if (times.empty()) {
        labels.push_back("(-inf, inf)");
    } else {
        labels.push_back("(-inf, " + times.front().str() + ")");
        for (std::size_t i = 0; i < times.size(); ++i) {
            const std::string upper = i + 1 < times.size() ? times[i + 1].str() : std::string("inf");
            labels.push_back("[" + times[i].str() + ", " + upper + ")");
        }
    }

    std::size_t first_width = std::string("interval").size();
    for (const auto& l : labels)
        first_width = std::max(first_width, l.size());

    std::ostringstream os;
    os << pad("interval", first_width);
    for (const auto& name : signals.names())
        os << "  " << name;
    os << '\n';
    for (std::size_t row = 0; row < labels.size(); ++row) {
        std::string line = pad(labels[row], first_width);
        for (const auto& [name, s] : signals.entries()) {
            const Bit value = row == 0 ? s.initial() : eval(s, times[row - 1]);
            line += "  " + pad(std::string(1, to_char(value)), name.size());
        }
        line.erase(line.find_last_not_of(' ') + 1);
        os << line << '\n';
    }
    return os.str();
}

WaveDump make_dump(const SignalTable& signals) {
    WaveDump dump;
    for (const auto& [name, s] : signals.entries())
        for (const auto& c : s.changes())
            dump.scale = boost::multiprecision::lcm(dump.scale, c.at.denominator());

    std::size_t index = 0;
    for (const auto& [name, s] : signals.entries()) {
        dump.variables.push_back({name, vcd_code(index), s.initial()});
        for (const auto& c : s.changes())
            dump.events.push_back({c.at.numerator() * (dump.scale / c.at.denominator()), index, c.to});
        ++index;
    }
    std::stable_sort(dump.events.begin(), dump.events.end(),
                     [](const WaveDump::Event& a, const WaveDump::Event& b) { return a.tick < b.tick; });
    return dump;
}

std::string WaveDump::serialize() const {
    std::ostringstream os;
    os << "$version latcheq $end\n";
    os << "$comment scale_factor " << scale << " $end\n";
    os << "$timescale 1 s $end\n";
    os << "$scope module trace $end\n";
    for (const auto& v : variables)
        os << "$var wire 1 " << v.code << ' ' << v.name << " $end\n";
    os << "$upscope $end\n";
    os << "$enddefinitions $end\n";
    if (variables.empty())
        return os.str();

    os << "#0\n$dumpvars\n";
    for (const auto& v : variables)
        os << to_char(v.initial) << v.code << '\n';
    os << "$end\n";
    Integer current = 0;
    for (const auto& e : events) {
        if (e.tick != current) {
            current = e.tick;
            os << '#' << current << '\n';
        }
        os << to_char(e.value) << variables[e.variable].code << '\n';
    }
    return os.str();
}

std::string emit_dump(const SignalTable& signals) { return make_dump(signals).serialize(); }

std::string to_json(const StimulusDocument& doc) {
    nlohmann::ordered_json root;
    if (doc.circuit) {
        nlohmann::ordered_json circuit{{"kind", doc.circuit->name()}};
        if (doc.circuit->type() == CircuitType::CElement)
            circuit["m"] = doc.circuit->inputs();
        if (doc.circuit->type() == CircuitType::InertialLatch)
            circuit["d"] = doc.circuit->delay().fraction();
        root["circuit"] = circuit;
    }
    auto signals = nlohmann::ordered_json::array();
    for (const auto& [name, s] : doc.signals.entries()) {
        auto changes = nlohmann::ordered_json::array();
        for (const auto& c : s.changes())
            changes.push_back({c.at.fraction(), is_one(c.to) ? 1 : 0});
        signals.push_back({{"name", name}, {"initial", is_one(s.initial()) ? 1 : 0}, {"changes", changes}});
    }
    root["signals"] = signals;
    return root.dump(2) + "\n";
}

namespace {

Bit json_bit(const nlohmann::json& j) {
    if (j.is_number_integer() && (j.get<int>() == 0 || j.get<int>() == 1))
        return to_bit(j.get<int>() == 1);
    throw std::invalid_argument("expected bit 0 or 1, got " + j.dump());
}

Time json_time(const nlohmann::json& j) {
    if (j.is_string())
        return Time::parse(j.get<std::string>());
    if (j.is_number_unsigned())
        return Time(static_cast<std::int64_t>(j.get<std::uint64_t>()));
    throw std::invalid_argument("expected a time string \"p/q\", got " + j.dump());
}

} // namespace

StimulusDocument from_json(std::string_view text) {
    StimulusDocument doc;
    const auto root = nlohmann::json::parse(text);
    if (root.contains("circuit")) {
        const auto& c = root.at("circuit");
        std::optional<unsigned> m;
        std::optional<Time> d;
        if (c.contains("m"))
            m = c.at("m").get<unsigned>();
        if (c.contains("d"))
            d = json_time(c.at("d"));
        doc.circuit = CircuitKind::parse(c.at("kind").get<std::string>(), m, d);
    }
    for (const auto& s : root.at("signals")) {
        const auto name = s.at("name").get<std::string>();
        if (doc.signals.contains(name))
            throw std::invalid_argument("duplicate signal '" + name + "'");
        std::vector<Change> changes;
        for (const auto& c : s.at("changes"))
            changes.push_back({json_time(c.at(0)), json_bit(c.at(1))});
        doc.signals.set(name, Signal::make(json_bit(s.at("initial")), std::move(changes)));
    }
    return doc;
}

} // namespace latcheq
