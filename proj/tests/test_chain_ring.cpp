#include "helpers.hpp"
#include "homcode/error.hpp"

#include <doctest.h>

#include <set>

using namespace homcode;
using namespace testing;

TEST_SUITE("chain_ring") {

TEST_CASE("arithmetic agrees with the oracle on every pair") {
    auto rings = property_rings();
    for (auto& r : extra_rings()) rings.push_back(r);
    for (const auto& R : rings) {
        CAPTURE(R->name());
        const oracle::Ring O(R->descriptor());
        REQUIRE(O.size == R->size());
        for (std::uint32_t a = 0; a < R->size(); ++a) {
            CHECK(R->neg(RingElement{a}).value == O.neg(a));
            CHECK(R->weight_scaled(RingElement{a}) == O.weight(a));
            CHECK(R->is_unit(RingElement{a}) == O.is_unit(a));
            for (std::uint32_t b = 0; b < R->size(); ++b) {
                CHECK(R->add({a}, {b}).value == O.add(a, b));
                CHECK(R->mul({a}, {b}).value == O.mul(a, b));
            }
        }
        CHECK(R->gamma().value == O.gamma());
    }
}

TEST_CASE("ideal chain, heights and units") {
    for (const auto& R : property_rings()) {
        CAPTURE(R->name());
        const std::uint32_t q = R->q();
        std::uint32_t expect = R->size();
        for (int i = 0; i <= R->s(); ++i) {
            const auto I = R->enumerate_ideal(i);
            CHECK(I.size() == expect);
            for (auto x : I) CHECK(R->height(x) >= i);
            expect /= q;
        }
        CHECK(R->height(R->zero()) == R->s());
        CHECK(R->gamma_pow(R->s()) == R->zero());
        CHECK(R->enumerate_units().size() == R->size() - R->size() / q);
        for (auto u : R->enumerate_units()) CHECK(R->mul(u, R->unit_inverse(u)) == R->one());
    }
}

TEST_CASE("named ring examples") {
    auto Z4 = ChainRing::integer_modular(2, 2);
    CHECK(Z4->name() == "Z/4Z");
    CHECK(Z4->q() == 2);
    CHECK(Z4->height({2}) == 1);
    CHECK(Z4->weight_scaled({2}) == 2);  // M = 2
    CHECK(Z4->weight_scaled({1}) == 1);
    auto Z9 = ChainRing::integer_modular(3, 2);
    CHECK(Z9->socle_iso({6}).value == 2);
    CHECK(Z9->socle_iso_inv({1}).value == 3);
    auto F4x = ChainRing::eisenstein(2, 2, 2, {1, 1, 1});
    CHECK(F4x->name() == "F_4[x]/(x^2)");
    const RingElement x{4}, ax{8}, a{2};
    CHECK(F4x->mul(a, x) == ax);
    CHECK(F4x->mul(x, x) == F4x->zero());
    CHECK(F4x->weight_scaled(ax) == 4);
    CHECK(F4x->project_residue({9}).value == 1);  // a x + 1 -> 1
}

TEST_CASE("socle isomorphism is a bijection onto F_q") {
    for (const auto& R : property_rings()) {
        const auto soc = R->enumerate_ideal(R->s() - 1);
        std::set<std::uint32_t> images;
        for (auto x : soc) {
            const auto f = R->socle_iso(x);
            images.insert(f.value);
            CHECK(R->socle_iso_inv(f) == x);
        }
        CHECK(images.size() == R->q());
        for (std::uint32_t b = 0; b < R->q(); ++b) CHECK(R->project_residue(R->lift({b})).value == b);
    }
}

TEST_CASE("division by powers of gamma") {
    for (const auto& R : property_rings())
        for (std::uint32_t v = 0; v < R->size(); ++v) {
            const RingElement a{v};
            const int h = R->height(a);
            if (h == R->s()) continue;
            const RingElement c = R->divide_gamma_pow(a, h);
            CHECK(R->mul(c, R->gamma_pow(h)) == a);
            CHECK(R->is_unit(c));
            CHECK(R->reduce_mod_gamma_pow(a, h) == R->zero());
        }
}

TEST_CASE("errors") {
    auto Z4 = ChainRing::integer_modular(2, 2);
    auto Z9 = ChainRing::integer_modular(3, 2);
    auto kind = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Parse;
    };
    CHECK(kind([&] { Z4->gamma_pow(3); }) == ErrorKind::IndexOutOfRange);
    CHECK(kind([&] { Z4->enumerate_ideal(-1); }) == ErrorKind::IndexOutOfRange);
    CHECK(kind([&] { Z4->socle_iso({1}); }) == ErrorKind::NotInSocle);
    CHECK(kind([&] { Z4->unit_inverse({2}); }) == ErrorKind::DivisionByZero);
    CHECK(kind([] { ChainRing::integer_modular(6, 2); }) == ErrorKind::NotPrime);
    CHECK(kind([&] { require_same_ring(*Z4, *Z9); }) == ErrorKind::RingMismatch);
}

TEST_CASE("element examples") {
    auto Z4 = ChainRing::integer_modular(2, 2);
    auto Z8 = ChainRing::integer_modular(2, 3);
    auto Z9 = ChainRing::integer_modular(3, 2);
    auto Z25 = ChainRing::integer_modular(5, 2);
    auto Z27 = ChainRing::integer_modular(3, 3);
    auto F4x = ChainRing::eisenstein(2, 2, 2, {1, 1, 1});
    CHECK(Z4->add({2}, {2}) == Z4->zero());
    CHECK(Z9->mul({8}, {8}) == Z9->one());
    CHECK(Z25->height({5}) == 1);
    CHECK(Z8->height({6}) == 1);
    CHECK(Z27->height({0}) == 3);
    CHECK(Z4->is_unit({3}));
    CHECK_FALSE(Z4->is_unit({2}));
    CHECK(F4x->is_unit({9}));
    CHECK(Z25->gamma_pow(1).value == 5);
    CHECK(Z27->gamma_pow(2).value == 9);
    CHECK(F4x->gamma_pow(2) == F4x->zero());
    CHECK(Z4->enumerate_ideal(1) == std::vector<RingElement>{{0}, {2}});
    CHECK(Z9->enumerate_ideal(0).size() == 9);
    CHECK(Z27->enumerate_ideal(2) == std::vector<RingElement>{{0}, {9}, {18}});
    CHECK(Z4->enumerate_units() == std::vector<RingElement>{{1}, {3}});
    CHECK(Z9->enumerate_units().size() == 6);
    CHECK(F4x->enumerate_units().size() == 12);
    CHECK(Z25->project_residue({7}).value == 2);
    CHECK(Z4->project_residue({2}).value == 0);
    CHECK(Z9->socle_iso({3}).value == 1);
    CHECK(F4x->socle_iso({8}).value == 2);
    CHECK(Z25->lift({3}).value == 3);
    CHECK(F4x->lift({2}).value == 2);
    CHECK(Z27->lift({2}).value == 2);
}

TEST_CASE("height laws and factorization") {
    for (const auto& R : property_rings()) {
        CAPTURE(R->name());
        const auto units = R->enumerate_units();
        for (std::uint32_t a = 0; a < R->size(); ++a) {
            const int ha = R->height({a});
            if (a) {
                bool found = false;
                for (auto u : units) found = found || R->mul(u, R->gamma_pow(ha)) == RingElement{a};
                CHECK(found);
            }
            for (std::uint32_t b = 0; b < R->size(); ++b) {
                const int hb = R->height({b});
                CHECK(R->height(R->mul({a}, {b})) == std::min(ha + hb, R->s()));
                const int hs = R->height(R->add({a}, {b}));
                CHECK(hs >= std::min(ha, hb));
                if (ha != hb) CHECK(hs == std::min(ha, hb));
            }
        }
    }
}

TEST_CASE("residue projection is a surjective homomorphism with kernel <gamma>") {
    for (const auto& R : property_rings()) {
        const Field& F = R->field();
        std::set<std::uint32_t> image;
        for (std::uint32_t a = 0; a < R->size(); ++a) {
            const auto pa = R->project_residue({a});
            image.insert(pa.value);
            CHECK((pa == F.zero()) == (R->height({a}) >= 1));
            for (std::uint32_t b = 0; b < R->size(); ++b) {
                CHECK(R->project_residue(R->add({a}, {b})) == F.add(pa, R->project_residue({b})));
                CHECK(R->project_residue(R->mul({a}, {b})) == F.mul(pa, R->project_residue({b})));
            }
        }
        CHECK(image.size() == R->q());
    }
}

}
