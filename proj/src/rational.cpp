#include "semisched/rational.hpp"

#include <cctype>
#include <charconv>

namespace semisched {

namespace {

long long parse_int(std::string_view text, std::string_view whole) {
    long long value = 0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc::result_out_of_range)
        throw RationalOverflow("integer literal out of 64-bit range in '" +
                               std::string(whole) + "'");
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw ParseError("not a rational literal: '" + std::string(whole) + "'");
    return value;
}

Rational pow10(int exponent) {
    Rational r(1);
    const Rational ten(10);
    for (int i = 0; i < exponent; ++i) r *= ten;
    return r;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    // Trim surrounding whitespace.
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty rational literal");

    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto num = text.substr(0, slash);
        const auto den = text.substr(slash + 1);
        if (num.empty() || den.empty())
            throw ParseError("malformed fraction: '" + std::string(text) + "'");
        return Rational(parse_int(num, text), parse_int(den, text));
    }

    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const auto whole = text.substr(0, dot);
        const auto frac = text.substr(dot + 1);
        if (frac.empty())
            throw ParseError("malformed decimal: '" + std::string(text) + "'");
        for (const char c : frac)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("malformed decimal: '" + std::string(text) + "'");
        const bool negative = !whole.empty() && whole.front() == '-';
        const auto digits = negative ? whole.substr(1) : whole;
        const Rational integral(digits.empty() ? 0 : parse_int(digits, text));
        const Rational fractional =
            Rational(parse_int(frac, text)) / pow10(static_cast<int>(frac.size()));
        const Rational magnitude = integral + fractional;
        return negative ? -magnitude : magnitude;
    }

    return Rational(parse_int(text, text));
}

} // namespace semisched
