#include "qmetric/rational.hpp"

#include <algorithm>
#include <cctype>

namespace qmetric {

namespace {

std::optional<BigInt> parse_digits(std::string_view digits) {
    if (digits.empty())
        return std::nullopt;
    BigInt out = 0;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return std::nullopt;
        out = out * 10 + (c - '0');
    }
    return out;
}

BigInt pow10(int n) {
    BigInt out = 1;
    for (int i = 0; i < n; ++i)
        out *= 10;
    return out;
}

// floor for rationals; cpp_rational has no floor of its own.
BigInt floor_of(const Rational& v) {
    BigInt num = boost::multiprecision::numerator(v);
    BigInt den = boost::multiprecision::denominator(v);
    BigInt q = num / den;
    if (num % den != 0 && num < 0)
        q -= 1;
    return q;
}

}  // namespace

std::optional<Rational> parse_decimal(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty())
        return std::nullopt;

    Rational value;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = parse_digits(text.substr(0, slash));
        auto den = parse_digits(text.substr(slash + 1));
        if (!num || !den || *den == 0)
            return std::nullopt;
        value = Rational(*num, *den);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (whole.empty() && frac.empty())
            return std::nullopt;
        auto w = whole.empty() ? std::optional<BigInt>(0) : parse_digits(whole);
        auto f = frac.empty() ? std::optional<BigInt>(0) : parse_digits(frac);
        if (!w || !f)
            return std::nullopt;
        value = Rational(*w) + Rational(*f, pow10(static_cast<int>(frac.size())));
    } else {
        auto w = parse_digits(text);
        if (!w)
            return std::nullopt;
        value = Rational(*w);
    }
    return negative ? Rational(-value) : value;
}

Rational round_half_up(const Rational& value, int places) {
    BigInt scale = pow10(places);
    BigInt scaled = floor_of(value * scale + Rational(1, 2));
    return Rational(scaled, scale);
}

std::string to_fixed(const Rational& value, int places) {
    BigInt scale = pow10(places);
    BigInt scaled = floor_of(value * scale + Rational(1, 2));
    bool negative = scaled < 0;
    if (negative)
        scaled = -scaled;
    std::string digits = scaled.str();
    if (places > 0) {
        if (digits.size() <= static_cast<std::size_t>(places))
            digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
        digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
    }
    return negative ? "-" + digits : digits;
}

double to_double(const Rational& value) {
    return value.convert_to<double>();
}

}  // namespace qmetric

namespace qmetric {

std::string to_exact_string(const Rational& value) {
    BigInt den = boost::multiprecision::denominator(value);
    int twos = 0, fives = 0;
    while (den % 2 == 0) {
        den /= 2;
        ++twos;
    }
    while (den % 5 == 0) {
        den /= 5;
        ++fives;
    }
    if (den != 1)
        return value.str();
    int places = std::max(twos, fives);
    return to_fixed(value, places);
}

}  // namespace qmetric
