#include "helpers.hpp"
#include "homcode/fixtures.hpp"
#include "homcode/kernels.hpp"

#include <doctest.h>

#include <random>

using namespace homcode;
using namespace testing;

TEST_SUITE("kernels") {

TEST_CASE("additive basis generates the code exactly once") {
    std::mt19937_64 rng(31);
    for (const auto& R : property_rings()) {
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t n = 1 + rng() % 4;
            const auto C = LinearCode::make(R, n, random_rows(*R, n, 1 + rng() % 3, rng));
            const auto B = additive_basis(C);
            std::uint64_t total = 1;
            for (auto o : B.orders) total *= o;
            CHECK(total == C.cardinality());
            std::set<Word> seen;
            for (std::uint64_t i = 0; i < total; ++i) seen.insert(kernels::codeword_at(*R, B, n, i));
            CHECK(seen.size() == total);
            for (const auto& w : seen) CHECK(membership(C, w));
        }
    }
}

TEST_CASE("odometer walk matches direct decoding from any start") {
    const auto C = paper_fixtures().code("mhd_Z25");
    const auto B = additive_basis(C);
    const ChainRing& R = C.ring();
    for (std::uint64_t begin : {0u, 1u, 24u, 125u, 300u}) {
        std::uint64_t expect = begin;
        kernels::for_each_codeword(R, B, C.length(), begin, 625, [&](std::uint64_t idx, const RingElement* w) {
            CHECK(idx == expect++);
            CHECK(Word(w, w + C.length()) == kernels::codeword_at(R, B, C.length(), idx));
        });
        CHECK(expect == 625);
    }
}

TEST_CASE("parallel profile equals the serial reference at every thread count") {
    std::vector<LinearCode> codes;
    const auto fx = paper_fixtures();
    for (const char* name : {"mhd_Z25", "C1_F4x", "C2_F4x", "constweight_Z4", "G3_Z4"}) codes.push_back(fx.code(name));
    codes.push_back(LinearCode(RingMatrix::identity(ChainRing::integer_modular(3, 2), 6)));  // 9^6 words
    codes.push_back(LinearCode::make(ChainRing::integer_modular(2, 2), 4, {}));
    for (const auto& C : codes) {
        const auto B = additive_basis(C);
        const auto total = C.cardinality();
        const auto ref = kernels::weight_profile_serial(C.ring(), B, C.length(), total);
        CHECK(ref.count == total);
        for (int threads : {1, 2, 3, 4, 8}) CHECK(kernels::weight_profile_parallel(C.ring(), B, C.length(), total, threads) == ref);
        CHECK(kernels::weight_profile_parallel(C.ring(), B, C.length(), total) == ref);
    }
}

TEST_CASE("profile agrees with the oracle") {
    std::mt19937_64 rng(37);
    for (const auto& R : property_rings()) {
        const oracle::Ring O(R->descriptor());
        for (int trial = 0; trial < 15; ++trial) {
            const std::size_t n = 1 + rng() % 5;
            const auto C = LinearCode::make(R, n, random_rows(*R, n, 1 + rng() % 2, rng));
            const auto p = kernels::weight_profile_parallel(*R, additive_basis(C), n, C.cardinality(), 3);
            const auto d = oracle::distances(O, n, codeword_set(C));
            CHECK(p.sum_hom_scaled == d.sum_hom_scaled);
            if (d.cardinality > 1 && p.has_nonzero()) {
                CHECK(p.min_hom_scaled == d.d_hom_scaled);
                CHECK(p.min_hamming == d.d_hamming);
                CHECK(p.max_hom_scaled == d.max_hom_scaled);
            }
        }
    }
}

TEST_CASE("merge is order-respecting on ties") {
    kernels::WeightProfile a, b;
    a.count = 1;
    a.min_hom_scaled = 5;
    a.argmin_hom = 9;
    a.min_hamming = 2;
    a.argmin_hamming = 9;
    b = a;
    b.argmin_hom = 3;
    b.argmin_hamming = 4;
    kernels::merge(a, b);
    CHECK(a.count == 2);
    CHECK(a.argmin_hom == 3);
    CHECK(a.argmin_hamming == 4);
}

}
