#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace latcheq {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// An exact nonnegative instant. Values are kept in lowest terms and all
/// arithmetic is exact.
class Time {
public:
    Time() = default;
    Time(std::int64_t whole); // NOLINT(google-explicit-constructor)
    Time(std::int64_t numerator, std::int64_t denominator);
    explicit Time(Rational value);

    /// Accepts "3", "0.25" or "7/16". Throws std::invalid_argument otherwise.
    static Time parse(std::string_view text);

    const Rational& value() const { return value_; }
    Integer numerator() const;
    Integer denominator() const;

    /// "3" for integers, "p/q" otherwise.
    std::string str() const;
    /// Always "p/q", integers included.
    std::string fraction() const;

    Time operator+(const Time& other) const { return Time(value_ + other.value_); }

    friend bool operator==(const Time& a, const Time& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Time& a, const Time& b);

private:
    Rational value_{0};
};

Time midpoint(const Time& a, const Time& b);

std::ostream& operator<<(std::ostream& os, const Time& t);

} // namespace latcheq
