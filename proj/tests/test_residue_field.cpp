#include "homcode/error.hpp"
#include "homcode/residue_field.hpp"

#include <doctest.h>

#include <set>

using namespace homcode;

TEST_SUITE("residue_field") {

TEST_CASE("primality") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(31));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(9));
    CHECK_FALSE(is_prime(-7));
}

TEST_CASE("irreducibility by trial division") {
    CHECK(is_irreducible(2, {1, 1, 1}));      // x^2 + x + 1
    CHECK_FALSE(is_irreducible(2, {1, 0, 1}));  // (x+1)^2
    CHECK(is_irreducible(2, {1, 1, 0, 1}));   // x^3 + x + 1
    CHECK_FALSE(is_irreducible(2, {0, 1, 1, 1}));
    CHECK(is_irreducible(3, {1, 0, 1}));      // x^2 + 1 over F_3
    CHECK_FALSE(is_irreducible(5, {1, 0, 1}));  // x^2 + 1 = (x-2)(x+2) over F_5
    CHECK(is_irreducible(5, {2, 0, 1}));
}

TEST_CASE("default moduli are irreducible") {
    for (auto [p, r] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}})
        CHECK(is_irreducible(p, default_modulus(p, r)));
    CHECK_THROWS_AS(default_modulus(11, 3), Error);
    CHECK_THROWS_AS(default_modulus(5, 3), Error);
}

TEST_CASE("F_4 with a^2 = a + 1") {
    auto F = Field::make(2, 2, {1, 1, 1});
    const FieldElement a{2}, a1{3};
    CHECK(F->q() == 4);
    CHECK(F->mul(a, a) == a1);
    CHECK(F->mul(a, a1) == F->one());
    CHECK(F->add(a, F->one()) == a1);
    CHECK(F->inv(a) == a1);
    CHECK(F->coeffs(a1) == std::vector<int>{1, 1});
    CHECK(F->from_coeffs({0, 1}) == a);
}

TEST_CASE("field axioms hold exhaustively") {
    for (auto [p, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {5, 1}, {2, 2}, {2, 3}, {3, 2}, {5, 2}}) {
        auto F = Field::make(p, r, default_modulus(p, r));
        const auto E = F->elements();
        REQUIRE(E.size() == F->q());
        CHECK(E.front() == F->zero());
        for (auto x : E) {
            CHECK(F->add(x, F->neg(x)) == F->zero());
            CHECK(F->mul(x, F->one()) == x);
            if (x != F->zero()) CHECK(F->mul(x, F->inv(x)) == F->one());
            for (auto y : E) {
                CHECK(F->add(x, y) == F->add(y, x));
                CHECK(F->mul(x, y) == F->mul(y, x));
                for (auto z : {E[1], E.back()})
                    CHECK(F->mul(x, F->add(y, z)) == F->add(F->mul(x, y), F->mul(x, z)));
            }
        }
    }
}

TEST_CASE("construction errors") {
    auto kind = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Parse;
    };
    CHECK(kind([] { Field::make(4, 1, {0, 1}); }) == ErrorKind::NotPrime);
    CHECK(kind([] { Field::make(2, 2, {1, 0, 1}); }) == ErrorKind::Reducible);
    CHECK(kind([] { Field::make(2, 2, {1, 1}); }) == ErrorKind::DegreeMismatch);
    CHECK(kind([] { Field::make(2, 2, {1, 1, 0}); }) == ErrorKind::DegreeMismatch);
    auto F = Field::make(3, 1, {0, 1});
    CHECK(kind([&] { F->inv(F->zero()); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("small field examples") {
    auto F2 = Field::make(2, 1, {0, 1});
    CHECK(F2->elements() == std::vector<FieldElement>{{0}, {1}});
    auto F5 = Field::make(5, 1, {0, 1});
    CHECK(F5->inv({2}) == FieldElement{3});
    CHECK(F5->elements().size() == 5);
    CHECK(F5->elements()[4] == FieldElement{4});
    for (auto a : F5->elements()) CHECK(F5->add(a, F5->zero()) == a);
}

TEST_CASE("Frobenius is additive") {
    for (auto [p, r] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {5, 2}}) {
        auto F = Field::make(p, r, default_modulus(p, r));
        auto frob = [&](FieldElement a) {
            FieldElement out = F->one();
            for (int i = 0; i < p; ++i) out = F->mul(out, a);
            return out;
        };
        std::set<std::uint32_t> distinct;
        for (auto a : F->elements()) {
            distinct.insert(a.value);
            for (auto b : F->elements()) CHECK(frob(F->add(a, b)) == F->add(frob(a), frob(b)));
        }
        CHECK(distinct.size() == F->q());
    }
}

}
