#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace kummer {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Lowest-terms "p/q" with q > 0; plain "p" when the value is an integer.
std::string to_string(const Rational& value);

/// Parses "p" or "p/q" with an optional leading sign. Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// base^exponent, exponent may be negative. Throws std::domain_error for
/// 0 raised to a negative power.
Rational rational_pow(const Rational& base, std::int64_t exponent);

/// True iff value = k * unit for some integer k (unit = 0 divides only 0).
bool is_integer_multiple(const Rational& value, const Rational& unit);

bool is_integral(const Rational& value);

/// A point of the rational projective line: a number or the point at
/// infinity. Serializes as "inf".
class ExtendedRational {
public:
    ExtendedRational() = default;
    ExtendedRational(Rational value) : value_(std::move(value)) {}
    ExtendedRational(int value) : value_(value) {}
    static ExtendedRational infinity();

    bool is_infinite() const { return infinite_; }
    const Rational& value() const;  // throws std::domain_error at infinity

    bool operator==(const ExtendedRational&) const = default;

private:
    Rational value_{};
    bool infinite_ = false;
};

std::string to_string(const ExtendedRational& value);

/// "inf" or anything parse_rational accepts.
ExtendedRational parse_extended_rational(std::string_view text);

}  // namespace kummer
