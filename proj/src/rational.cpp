#include "homcode/rational.hpp"

#include "homcode/error.hpp"

#include <cctype>
#include <cstdlib>

namespace homcode {

std::string to_decimal(const Rational& x, int digits) {
    std::int64_t scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    const bool negative = x < 0;
    const Rational a = negative ? -x : x;
    // round half away from zero
    const __int128 num = static_cast<__int128>(a.numerator()) * scale * 2 + a.denominator();
    const __int128 scaled = num / (static_cast<__int128>(a.denominator()) * 2);
    const auto whole = static_cast<std::int64_t>(scaled / scale);
    auto frac = static_cast<std::int64_t>(scaled % scale);
    std::string out = (negative && scaled != 0 ? "-" : "") + std::to_string(whole);
    if (digits > 0) {
        std::string f = std::to_string(frac);
        out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
    }
    return out;
}

Rational parse_rational(const std::string& text) {
    auto fail = [&] { return Error(ErrorKind::Parse, "not a rational number: '" + text + "'"); };
    auto parse_int = [&](const std::string& s) {
        if (s.empty()) throw fail();
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw fail();
        for (std::size_t j = i; j < s.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw fail();
        if (s.size() > 18) throw fail();
        return std::strtoll(s.c_str(), nullptr, 10);
    };
    if (auto slash = text.find('/'); slash != std::string::npos) {
        const std::int64_t den = parse_int(text.substr(slash + 1));
        if (den == 0) throw fail();
        return Rational(parse_int(text.substr(0, slash)), den);
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
        const std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 12 || frac[0] == '-' || frac[0] == '+') throw fail();
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        const bool negative = !whole.empty() && whole[0] == '-';
        const std::int64_t w = (whole.empty() || whole == "-" || whole == "+") ? 0 : parse_int(whole);
        const std::int64_t f = parse_int(frac);
        const std::int64_t mag = (w < 0 ? -w : w) * den + f;
        return Rational(negative ? -mag : mag, den);
    }
    return Rational(parse_int(text));
}

}  // namespace homcode
