#include "fairline/rational.hpp"

#include <cctype>

#include "fairline/errors.hpp"

namespace fairline {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

[[noreturn]] void bad(std::string_view text) {
    throw ParseError("not an integer, finite decimal, or fraction: '" + std::string(text) + "'");
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }

    Rational value;
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
        std::string_view num = rest.substr(0, slash);
        std::string_view den = rest.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad(text);
        BigInt d(std::string(den));
        if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        value = Rational(BigInt(std::string(num)), d);
    } else if (auto dot = rest.find('.'); dot != std::string_view::npos) {
        std::string_view whole = rest.substr(0, dot);
        std::string_view frac = rest.substr(dot + 1);
        if (!all_digits(whole) || !all_digits(frac)) bad(text);
        BigInt scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        BigInt numerator = BigInt(std::string(whole)) * scale + BigInt(std::string(frac));
        value = Rational(numerator, scale);
    } else {
        if (!all_digits(rest)) bad(text);
        value = Rational(BigInt(std::string(rest)));
    }
    return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& q) {
    BigInt num = rational_num(q);
    BigInt den = rational_den(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

BigInt floor_rational(const Rational& q) {
    BigInt num = rational_num(q);
    BigInt den = rational_den(q);
    BigInt quot = num / den; // truncates toward zero
    if (num < 0 && quot * den != num) --quot;
    return quot;
}

} // namespace fairline
