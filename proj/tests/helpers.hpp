#ifndef HOMCODE_TESTS_HELPERS_HPP
#define HOMCODE_TESTS_HELPERS_HPP

#include "homcode/code.hpp"
#include "oracle.hpp"

#include <random>
#include <set>
#include <string>
#include <vector>

namespace testing {

using namespace homcode;

inline oracle::W to_w(const Word& w) {
    oracle::W out;
    for (auto e : w) out.push_back(e.value);
    return out;
}

inline std::vector<oracle::W> to_ws(const std::vector<Word>& rows) {
    std::vector<oracle::W> out;
    for (const auto& r : rows) out.push_back(to_w(r));
    return out;
}

inline Word from_w(const oracle::W& w) {
    Word out;
    for (auto v : w) out.push_back(RingElement{v});
    return out;
}

inline std::vector<Word> rows_of(std::initializer_list<std::initializer_list<std::uint32_t>> rows) {
    std::vector<Word> out;
    for (const auto& r : rows) {
        Word w;
        for (auto v : r) w.push_back(RingElement{v});
        out.push_back(std::move(w));
    }
    return out;
}

/// The rings named by the property suites, plus a few extra shapes.
inline std::vector<RingPtr> property_rings() {
    return {ChainRing::integer_modular(2, 2), ChainRing::integer_modular(2, 3), ChainRing::integer_modular(3, 2),
            ChainRing::integer_modular(3, 3), ChainRing::integer_modular(5, 2), ChainRing::eisenstein(2, 2, 2)};
}

inline std::vector<RingPtr> extra_rings() {
    return {ChainRing::integer_modular(2, 1), ChainRing::integer_modular(7, 1), ChainRing::eisenstein(2, 1, 3),
            ChainRing::eisenstein(3, 2, 2), ChainRing::eisenstein(2, 2, 1), ChainRing::eisenstein(2, 3, 2)};
}

/// Random generator rows: mixes unit rows, gamma-scaled rows and zeroed columns.
inline std::vector<Word> random_rows(const ChainRing& R, std::size_t n, std::size_t m, std::mt19937_64& rng) {
    auto pick = [&](std::uint64_t bound) { return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng); };
    std::vector<Word> rows(m, Word(n));
    std::vector<bool> dead(n, false);
    const bool sparse = pick(3) == 0;
    if (sparse)
        for (std::size_t j = 0; j < n; ++j) dead[j] = pick(4) == 0;
    for (auto& row : rows) {
        const int h = pick(2) ? 0 : static_cast<int>(pick(static_cast<std::uint64_t>(R.s())));
        for (std::size_t j = 0; j < n; ++j) {
            if (dead[j] || (sparse && pick(3) == 0)) continue;
            row[j] = R.mul(R.gamma_pow(h), RingElement{static_cast<std::uint32_t>(pick(R.size()))});
        }
    }
    return rows;
}

inline std::set<oracle::W> codeword_set(const LinearCode& c) {
    std::set<oracle::W> out;
    for (const auto& w : enumerate_codewords(c)) out.insert(to_w(w));
    return out;
}

/// Largest rows-count so that the oracle span stays cheap: |R|^m <= 2^15.
inline std::size_t oracle_rows(const ChainRing& R, std::size_t want) {
    std::size_t m = 0;
    std::uint64_t t = 1;
    while (m < want && t * R.size() <= (1u << 15)) {
        t *= R.size();
        ++m;
    }
    return std::max<std::size_t>(m, 1);
}

}  // namespace testing

#endif
