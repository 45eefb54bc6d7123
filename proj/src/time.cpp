#include "latcheq/time.hpp"

#include <cctype>
#include <stdexcept>

namespace latcheq {

namespace {

Integer parse_digits(std::string_view digits) {
    Integer out = 0;
    for (char c : digits) {
        out *= 10;
        out += c - '0';
    }
    return out;
}

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Time::Time(std::int64_t whole) : Time(Rational(whole)) {}

Time::Time(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0)
        throw std::invalid_argument("time with zero denominator");
    *this = Time(Rational(numerator, denominator));
}

Time::Time(Rational value) : value_(std::move(value)) {
    if (value_ < 0)
        throw std::invalid_argument("negative time " + value_.str());
}

Time Time::parse(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        Integer d = parse_digits(den);
        if (d == 0)
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return Time(Rational(parse_digits(num), d));
    }
    auto dot = text.find('.');
    if (dot == std::string_view::npos) {
        if (!all_digits(text))
            throw std::invalid_argument("malformed time '" + std::string(text) + "'");
        return Time(Rational(parse_digits(text)));
    }
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac))
        throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i)
        scale *= 10;
    return Time(Rational(parse_digits(whole)) + Rational(parse_digits(frac), scale));
}

Integer Time::numerator() const { return boost::multiprecision::numerator(value_); }

Integer Time::denominator() const { return boost::multiprecision::denominator(value_); }

std::string Time::str() const {
    if (denominator() == 1)
        return numerator().str();
    return numerator().str() + "/" + denominator().str();
}

std::string Time::fraction() const { return numerator().str() + "/" + denominator().str(); }

std::strong_ordering operator<=>(const Time& a, const Time& b) {
    if (a.value_ < b.value_)
        return std::strong_ordering::less;
    if (b.value_ < a.value_)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Time midpoint(const Time& a, const Time& b) { return Time((a.value() + b.value()) / 2); }

std::ostream& operator<<(std::ostream& os, const Time& t) { return os << t.str(); }

} // namespace latcheq
