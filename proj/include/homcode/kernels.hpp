#ifndef HOMCODE_KERNELS_HPP
#define HOMCODE_KERNELS_HPP

#include "homcode/chain_ring.hpp"
#include "homcode/code.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace homcode {

namespace kernels {

/// Summary of the weights of every codeword in an index range.
struct WeightProfile {
    static constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

    std::uint64_t count = 0;  // codewords visited, zero included
    std::uint64_t sum_hom_scaled = 0;
    std::uint64_t min_hom_scaled = kNone;  // over nonzero codewords
    std::uint64_t max_hom_scaled = 0;
    std::uint64_t argmin_hom = kNone;  // smallest index attaining the minimum
    std::uint64_t min_hamming = kNone;
    std::uint64_t argmin_hamming = kNone;

    bool has_nonzero() const { return min_hom_scaled != kNone; }
    bool operator==(const WeightProfile&) const = default;
};

/// Codeword with the given mixed-radix index, computed from scratch.
Word codeword_at(const ChainRing& ring, const AdditiveBasis& basis, std::size_t n, std::uint64_t index);

/// Calls fn(index, word_ptr) for index in [begin, end), stepping an odometer:
/// each changed digit k adds g_k (a wrap from order-1 to 0 is also +g_k).
template <class Fn>
void for_each_codeword(const ChainRing& ring, const AdditiveBasis& basis, std::size_t n, std::uint64_t begin,
                       std::uint64_t end, Fn&& fn);

/// Reference: decodes every index independently.
WeightProfile weight_profile_serial(const ChainRing& ring, const AdditiveBasis& basis, std::size_t n,
                                    std::uint64_t total);

/// OpenMP over fixed-size index chunks; the reduction is ordered, so the result is
/// identical to the serial reference for any thread count. threads <= 0 uses the runtime default.
WeightProfile weight_profile_parallel(const ChainRing& ring, const AdditiveBasis& basis, std::size_t n,
                                      std::uint64_t total, int threads = 0);

void merge(WeightProfile& into, const WeightProfile& part);


template <class Fn>
void for_each_codeword(const ChainRing& ring, const AdditiveBasis& basis, std::size_t n, std::uint64_t begin,
                       std::uint64_t end, Fn&& fn) {
    if (begin >= end) return;
    const std::size_t m = basis.generators.size();
    std::vector<std::uint32_t> digits(m);
    std::uint64_t t = begin;
    for (std::size_t k = 0; k < m; ++k) {
        digits[k] = static_cast<std::uint32_t>(t % basis.orders[k]);
        t /= basis.orders[k];
    }
    Word word = codeword_at(ring, basis, n, begin);
    for (std::uint64_t idx = begin;;) {
        fn(idx, word.data());
        if (++idx == end) break;
        for (std::size_t k = 0; k < m; ++k) {
            const Word& g = basis.generators[k];
            for (std::size_t j = 0; j < n; ++j) word[j] = ring.add(word[j], g[j]);
            if (++digits[k] < basis.orders[k]) break;
            digits[k] = 0;
        }
    }
}

}  // namespace kernels
}  // namespace homcode

#endif
