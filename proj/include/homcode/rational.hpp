#ifndef HOMCODE_RATIONAL_HPP
#define HOMCODE_RATIONAL_HPP

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

// Boost 1.74 rational == integer recurses forever under C++20 rewritten comparisons.
// Exact non-template overloads take precedence over the self-reversing friend.
namespace boost {
#define HOMCODE_RATIONAL_EQ(T)                                                             \
    inline bool operator==(const rational<std::int64_t>& a, T b) {                         \
        return a.denominator() == 1 && a.numerator() == static_cast<std::int64_t>(b);      \
    }
HOMCODE_RATIONAL_EQ(int)
HOMCODE_RATIONAL_EQ(long)
HOMCODE_RATIONAL_EQ(long long)
HOMCODE_RATIONAL_EQ(unsigned)
HOMCODE_RATIONAL_EQ(unsigned long)
HOMCODE_RATIONAL_EQ(unsigned long long)
#undef HOMCODE_RATIONAL_EQ
}  // namespace boost

namespace homcode {

using Rational = boost::rational<std::int64_t>;

inline bool is_integer(const Rational& x) { return x.denominator() == 1; }

/// Mathematical floor (rounds toward negative infinity).
inline std::int64_t floor(const Rational& x) {
    std::int64_t q = x.numerator() / x.denominator();
    if (x.numerator() % x.denominator() != 0 && x.numerator() < 0) --q;
    return q;
}

/// "a" or "a/b".
inline std::string to_string(const Rational& x) {
    if (is_integer(x)) return std::to_string(x.numerator());
    return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

/// Fixed six-digit decimal rendering, rounded half away from zero.
std::string to_decimal(const Rational& x, int digits = 6);

/// Accepts "a", "a/b", or a finite decimal such as "1.5"; the result is exact.
Rational parse_rational(const std::string& text);

}  // namespace homcode

#endif
