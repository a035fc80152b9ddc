#include "kummer/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace kummer {

std::string to_string(const Rational& value) {
    const Int num = numerator(value);
    const Int den = denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }
    const auto slash = rest.find('/');
    std::string_view num_part = rest.substr(0, slash);
    if (!all_digits(num_part))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    Int num(std::string(num_part));
    Int den = 1;
    if (slash != std::string_view::npos) {
        std::string_view den_part = rest.substr(slash + 1);
        if (!all_digits(den_part))
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        den = Int(std::string(den_part));
        if (den == 0)
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    Rational value(num, den);
    return negative ? Rational(-value) : value;
}

Rational rational_pow(const Rational& base, std::int64_t exponent) {
    if (base == 0 && exponent < 0)
        throw std::domain_error("0 cannot be raised to a negative power");
    Rational factor = exponent >= 0 ? base : Rational(1) / base;
    std::uint64_t n = exponent >= 0 ? static_cast<std::uint64_t>(exponent)
                                    : static_cast<std::uint64_t>(-(exponent + 1)) + 1;
    Rational result = 1;
    while (n > 0) {
        if (n & 1) result *= factor;
        factor *= factor;
        n >>= 1;
    }
    return result;
}

bool is_integer_multiple(const Rational& value, const Rational& unit) {
    if (unit == 0) return value == 0;
    return is_integral(Rational(value / unit));
}

bool is_integral(const Rational& value) { return denominator(value) == 1; }

ExtendedRational ExtendedRational::infinity() {
    ExtendedRational p;
    p.infinite_ = true;
    return p;
}

const Rational& ExtendedRational::value() const {
    if (infinite_) throw std::domain_error("point at infinity has no rational value");
    return value_;
}

std::string to_string(const ExtendedRational& value) {
    return value.is_infinite() ? "inf" : to_string(value.value());
}

ExtendedRational parse_extended_rational(std::string_view text) {
    if (text == "inf") return ExtendedRational::infinity();
    return ExtendedRational(parse_rational(text));
}

}  // namespace kummer
