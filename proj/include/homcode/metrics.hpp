#ifndef HOMCODE_METRICS_HPP
#define HOMCODE_METRICS_HPP

#include "homcode/code.hpp"
#include "homcode/kernels.hpp"
#include "homcode/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace homcode {

/// Exact homogeneous weight: value = scaled / denom with denom = q - 1.
/// Each coordinate contributes 0, q-1 or q to `scaled`.
struct WeightValue {
    std::uint64_t scaled = 0;
    std::uint32_t denom = 1;

    Rational value() const {
        return Rational(static_cast<std::int64_t>(scaled), static_cast<std::int64_t>(denom));
    }
    std::string to_string() const { return homcode::to_string(value()); }

    bool operator==(const WeightValue& o) const { return value() == o.value(); }
    std::strong_ordering operator<=>(const WeightValue& o) const {
        // Cross-multiplied so values with different denominators still compare exactly.
        const unsigned __int128 a = static_cast<unsigned __int128>(scaled) * o.denom;
        const unsigned __int128 b = static_cast<unsigned __int128>(o.scaled) * denom;
        return a < b ? std::strong_ordering::less : (a > b ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
};

std::size_t wt_hamming(const Word& w);
WeightValue wt_hom(const ChainRing& ring, const Word& w);

struct DistanceReport {
    /// n + 1 for the zero code.
    std::size_t d_hamming = 0;
    /// M (n + 1) for the zero code.
    WeightValue d_hom;
    std::optional<Word> hamming_witness;
    std::optional<Word> hom_witness;
    std::optional<WeightValue> constant_weight;
    /// Average homogeneous weight over all codewords.
    Rational average_hom;
    std::uint64_t cardinality = 1;
    bool zero_code = false;
};

/// Exhaustive weight profile of a code; uses the parallel kernel.
kernels::WeightProfile weight_profile(const LinearCode& code, const Limits& limits = {});

DistanceReport distance_report(const LinearCode& code, const Limits& limits = {});
WeightValue d_hom(const LinearCode& code, const Limits& limits = {});
std::size_t d_hamming_code(const LinearCode& code, const Limits& limits = {});

/// (1/|C|) sum_c wt_Hom(c). Equals the number of non-degenerate coordinates.
Rational avg_hom(const LinearCode& code, const Limits& limits = {});

/// sum over x in <gamma^i> of wt_Hom(x), for 0 <= i <= s-1. Throws IndexOutOfRange.
Rational ideal_weight_sum(const ChainRing& ring, int i);

/// The common weight of all nonzero codewords, if there is one.
std::optional<WeightValue> is_constant_weight(const LinearCode& code, const Limits& limits = {});

/// Minimum Hamming distance of an F_q code by enumeration; n + 1 for dimension 0.
std::size_t fq_min_distance(const FqCode& code, const Limits& limits = {});

}  // namespace homcode

#endif
