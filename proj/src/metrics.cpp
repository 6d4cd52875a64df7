#include "homcode/metrics.hpp"

#include "homcode/error.hpp"

#include <algorithm>

namespace homcode {

std::size_t wt_hamming(const Word& w) {
    return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](RingElement e) { return e.value != 0; }));
}

WeightValue wt_hom(const ChainRing& R, const Word& w) {
    WeightValue v{0, R.q() - 1};
    for (RingElement e : w) v.scaled += R.weight_scaled(e);
    return v;
}

kernels::WeightProfile weight_profile(const LinearCode& code, const Limits& limits) {
    code.require_enumerable(limits);
    return kernels::weight_profile_parallel(code.ring(), additive_basis(code), code.length(), code.cardinality());
}

DistanceReport distance_report(const LinearCode& code, const Limits& limits) {
    const ChainRing& R = code.ring();
    const std::uint32_t q = R.q();
    const std::size_t n = code.length();
    const auto prof = weight_profile(code, limits);

    DistanceReport rep;
    rep.cardinality = prof.count;
    rep.average_hom = Rational(static_cast<std::int64_t>(prof.sum_hom_scaled),
                               static_cast<std::int64_t>(prof.count) * (q - 1));
    if (!prof.has_nonzero()) {
        rep.zero_code = true;
        rep.d_hamming = n + 1;
        rep.d_hom = WeightValue{static_cast<std::uint64_t>(q) * (n + 1), q - 1};
        return rep;
    }
    const AdditiveBasis basis = additive_basis(code);
    rep.d_hamming = static_cast<std::size_t>(prof.min_hamming);
    rep.d_hom = WeightValue{prof.min_hom_scaled, q - 1};
    rep.hamming_witness = kernels::codeword_at(R, basis, n, prof.argmin_hamming);
    rep.hom_witness = kernels::codeword_at(R, basis, n, prof.argmin_hom);
    if (prof.min_hom_scaled == prof.max_hom_scaled) rep.constant_weight = rep.d_hom;
    return rep;
}

WeightValue d_hom(const LinearCode& code, const Limits& limits) { return distance_report(code, limits).d_hom; }

std::size_t d_hamming_code(const LinearCode& code, const Limits& limits) {
    return distance_report(code, limits).d_hamming;
}

Rational avg_hom(const LinearCode& code, const Limits& limits) { return distance_report(code, limits).average_hom; }

Rational ideal_weight_sum(const ChainRing& R, int i) {
    if (i < 0 || i >= R.s())
        throw Error(ErrorKind::IndexOutOfRange, "ideal index " + std::to_string(i) + " outside [0,s-1]");
    std::int64_t scaled = 0;
    for (RingElement x : R.enumerate_ideal(i)) scaled += R.weight_scaled(x);
    return Rational(scaled, static_cast<std::int64_t>(R.q()) - 1);
}

std::optional<WeightValue> is_constant_weight(const LinearCode& code, const Limits& limits) {
    return distance_report(code, limits).constant_weight;
}

std::size_t fq_min_distance(const FqCode& code, const Limits& limits) {
    const Field& F = code.field();
    const RrefResult rr = fq_rref(code.generators);
    const std::size_t n = code.length(), k = rr.rank;
    if (k == 0) return n + 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total *= F.q();
        if (total > limits.max_cardinality)
            throw Error(ErrorKind::TooLarge, "F_q code with q^k > " + std::to_string(limits.max_cardinality));
    }
    std::size_t best = n;
    std::vector<FieldElement> w(n);
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::fill(w.begin(), w.end(), F.zero());
        std::uint64_t t = idx;
        for (std::size_t i = 0; i < k; ++i) {
            FieldElement c{static_cast<std::uint32_t>(t % F.q())};
            t /= F.q();
            if (c.value == 0) continue;
            for (std::size_t j = 0; j < n; ++j) w[j] = F.add(w[j], F.mul(c, rr.rref.at(i, j)));
        }
        auto wt = static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](FieldElement e) { return e.value != 0; }));
        best = std::min(best, wt);
    }
    return best;
}

}  // namespace homcode
