#include <cctype>
#include <regex>
#include <sstream>

#include "latcheq/waveform.hpp"

namespace latcheq {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line), column_(column), message_(message) {}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_time_char(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0 || c == '.' || c == '/'; }

/// Cursor over one line; columns are 1-based byte offsets.
class LineReader {
public:
    LineReader(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    void skip_space() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r'))
            ++pos_;
    }
    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }
    std::size_t column() const { return pos_ + 1; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, column(), msg); }
    [[noreturn]] void fail_at(std::size_t column, const std::string& msg) const {
        throw ParseError(line_, column, msg);
    }

    bool peek(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!accept(c))
            fail(std::string("expected ") + what);
    }

    std::string identifier() {
        skip_space();
        if (pos_ >= text_.size() || !is_ident_start(text_[pos_]))
            fail("expected a signal name");
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_ident_char(text_[pos_]))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string word() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != ' ' && text_[pos_] != '\t' && text_[pos_] != '\r' &&
               text_[pos_] != '=')
            ++pos_;
        if (start == pos_)
            fail("expected a word");
        return std::string(text_.substr(start, pos_ - start));
    }

    Bit bit() {
        skip_space();
        if (pos_ < text_.size() && (text_[pos_] == '0' || text_[pos_] == '1'))
            return to_bit(text_[pos_++] == '1');
        fail("expected 0 or 1");
    }

    Time time() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_time_char(text_[pos_]))
            ++pos_;
        if (start == pos_)
            fail("expected a time");
        try {
            return Time::parse(text_.substr(start, pos_ - start));
        } catch (const std::invalid_argument& e) {
            fail_at(start + 1, e.what());
        }
    }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

struct Directive {
    std::size_t line;
    std::size_t column;
    std::string kind;
    std::optional<unsigned> inputs;
    std::optional<Time> delay;
};

Directive parse_directive(LineReader& in, std::size_t line) {
    Directive d{line, in.column(), {}, {}, {}};
    in.expect('.', "'.'");
    if (in.word() != "circuit")
        in.fail_at(d.column, "unknown directive (only .circuit is supported)");
    d.kind = in.word();
    while (!in.at_end()) {
        const std::size_t col = in.column();
        const std::string key = in.identifier();
        in.expect('=', "'='");
        if (key == "m") {
            const Time m = in.time();
            if (m.denominator() != 1 || m.numerator() > 1000000)
                in.fail_at(col, "m must be a positive integer");
            d.inputs = m.numerator().convert_to<unsigned>();
        } else if (key == "d") {
            d.delay = in.time();
        } else {
            in.fail_at(col, "unknown parameter '" + key + "'");
        }
    }
    return d;
}

} // namespace

StimulusDocument parse_stimulus(std::string_view text) {
    StimulusDocument doc;
    std::optional<Directive> directive;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);

        LineReader in(line, line_no);
        if (in.at_end())
            continue;
        if (in.peek('.')) {
            if (directive)
                in.fail("duplicate .circuit directive");
            directive = parse_directive(in, line_no);
            continue;
        }

        const std::size_t name_col = in.column();
        const std::string name = in.identifier();
        if (doc.signals.contains(name))
            in.fail_at(name_col, "duplicate signal '" + name + "'");
        in.expect('=', "'='");
        const Bit initial = in.bit();
        std::vector<Change> changes;
        std::vector<std::size_t> change_cols;
        while (in.accept(',')) {
            const Bit value = in.bit();
            in.skip_space();
            change_cols.push_back(in.column());
            in.expect('@', "'@'");
            changes.push_back({in.time(), value});
        }
        if (!in.at_end())
            in.fail("unexpected character");
        try {
            doc.signals.set(name, Signal::make(initial, std::move(changes)));
        } catch (const SignalError& e) {
            in.fail_at(change_cols[e.index()], "time is not after the previous change");
        }
    }

    if (directive) {
        std::optional<unsigned> inputs = directive->inputs;
        if (directive->kind == "c-element" && !inputs) {
            static const std::regex input_role("u[0-9]+");
            unsigned count = 0;
            for (const auto& name : doc.signals.names())
                if (std::regex_match(name, input_role))
                    ++count;
            inputs = std::max(count, 2u);
        }
        try {
            doc.circuit = CircuitKind::parse(directive->kind, inputs, directive->delay);
        } catch (const std::invalid_argument& e) {
            throw ParseError(directive->line, directive->column, e.what());
        }
    }
    return doc;
}

std::string serialize_stimulus(const StimulusDocument& doc) {
    std::ostringstream os;
    if (doc.circuit) {
        os << ".circuit " << doc.circuit->name();
        if (doc.circuit->type() == CircuitType::CElement)
            os << " m=" << doc.circuit->inputs();
        if (doc.circuit->type() == CircuitType::InertialLatch)
            os << " d=" << doc.circuit->delay();
        os << '\n';
    }
    for (const auto& [name, s] : doc.signals.entries())
        os << name << " = " << s << '\n';
    return os.str();
}

StimulusDocument round_trip(const StimulusDocument& doc) { return parse_stimulus(serialize_stimulus(doc)); }

} // namespace latcheq
