#include "homcode/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace homcode::kernels {

namespace {

constexpr std::uint64_t kChunk = 4096;

void visit(WeightProfile& p, const ChainRing& R, std::uint64_t index, const RingElement* w, std::size_t n) {
    std::uint64_t hom = 0, ham = 0;
    for (std::size_t j = 0; j < n; ++j) {
        hom += R.weight_scaled(w[j]);
        ham += w[j].value != 0;
    }
    ++p.count;
    p.sum_hom_scaled += hom;
    if (ham == 0) return;
    p.max_hom_scaled = std::max(p.max_hom_scaled, hom);
    if (hom < p.min_hom_scaled || (hom == p.min_hom_scaled && index < p.argmin_hom)) {
        p.min_hom_scaled = hom;
        p.argmin_hom = index;
    }
    if (ham < p.min_hamming || (ham == p.min_hamming && index < p.argmin_hamming)) {
        p.min_hamming = ham;
        p.argmin_hamming = index;
    }
}

}  // namespace

Word codeword_at(const ChainRing& R, const AdditiveBasis& basis, std::size_t n, std::uint64_t index) {
    Word w(n, R.zero());
    for (std::size_t k = 0; k < basis.generators.size(); ++k) {
        const std::uint64_t d = index % basis.orders[k];
        index /= basis.orders[k];
        if (d == 0) continue;
        const RingElement scalar = R.from_int(static_cast<std::int64_t>(d));
        for (std::size_t j = 0; j < n; ++j) w[j] = R.add(w[j], R.mul(scalar, basis.generators[k][j]));
    }
    return w;
}

void merge(WeightProfile& into, const WeightProfile& part) {
    into.count += part.count;
    into.sum_hom_scaled += part.sum_hom_scaled;
    if (!part.has_nonzero()) return;
    into.max_hom_scaled = std::max(into.max_hom_scaled, part.max_hom_scaled);
    if (part.min_hom_scaled < into.min_hom_scaled ||
        (part.min_hom_scaled == into.min_hom_scaled && part.argmin_hom < into.argmin_hom)) {
        into.min_hom_scaled = part.min_hom_scaled;
        into.argmin_hom = part.argmin_hom;
    }
    if (part.min_hamming < into.min_hamming ||
        (part.min_hamming == into.min_hamming && part.argmin_hamming < into.argmin_hamming)) {
        into.min_hamming = part.min_hamming;
        into.argmin_hamming = part.argmin_hamming;
    }
}

WeightProfile weight_profile_serial(const ChainRing& R, const AdditiveBasis& basis, std::size_t n,
                                    std::uint64_t total) {
    WeightProfile p;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Word w = codeword_at(R, basis, n, idx);
        visit(p, R, idx, w.data(), n);
    }
    return p;
}

WeightProfile weight_profile_parallel(const ChainRing& R, const AdditiveBasis& basis, std::size_t n,
                                      std::uint64_t total, int threads) {
    const auto chunks = static_cast<std::int64_t>((total + kChunk - 1) / kChunk);
    std::vector<WeightProfile> parts(static_cast<std::size_t>(chunks));
#ifdef _OPENMP
    const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt)
#endif
    for (std::int64_t c = 0; c < chunks; ++c) {
        const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
        const std::uint64_t end = std::min(total, begin + kChunk);
        WeightProfile& p = parts[static_cast<std::size_t>(c)];
        for_each_codeword(R, basis, n, begin, end,
                          [&](std::uint64_t idx, const RingElement* w) { visit(p, R, idx, w, n); });
    }
    (void)threads;
    WeightProfile out;
    for (const auto& p : parts) merge(out, p);
    return out;
}

}  // namespace homcode::kernels
