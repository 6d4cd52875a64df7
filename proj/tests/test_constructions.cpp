#include "helpers.hpp"
#include "homcode/bounds.hpp"
#include "homcode/constructions.hpp"
#include "homcode/error.hpp"
#include "homcode/fixtures.hpp"

#include <doctest.h>

#include <functional>
#include <numeric>

using namespace homcode;
using namespace testing;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::Parse;
}

/// Every subtype of R with |V| <= limit.
std::vector<std::vector<int>> subtypes(const ChainRing& R, std::uint64_t limit) {
    std::vector<std::vector<int>> out;
    std::vector<int> k(R.s(), 0);
    auto card = [&](const std::vector<int>& st) {
        std::uint64_t c = 1;
        for (int i = 0; i < R.s(); ++i)
            for (int j = 0; j < st[i] * (R.s() - i); ++j) c *= R.q();
        return c;
    };
    std::function<void(int)> rec = [&](int i) {
        if (i == R.s()) {
            if (std::accumulate(k.begin(), k.end(), 0) > 0) out.push_back(k);
            return;
        }
        for (k[i] = 0; card(k) <= limit; ++k[i]) rec(i + 1);
        k[i] = 0;
    };
    rec(0);
    return out;
}

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("module space examples") {
    CHECK(module_space(ChainRing::integer_modular(2, 2), {1, 1}).cardinality == 8);
    CHECK(module_space(ChainRing::integer_modular(3, 2), {1, 0}).cardinality == 9);
    CHECK(module_space(ChainRing::eisenstein(2, 2, 2, {1, 1, 1}), {0, 2}).cardinality == 16);
    CHECK(kind_of([] { module_space(ChainRing::integer_modular(2, 2), {1, 1, 1}); }) == ErrorKind::SubtypeLengthMismatch);
    const auto V = module_space(ChainRing::integer_modular(2, 2), {1, 1});
    const auto all = enumerate_space(V);
    CHECK(all.size() == 8);
    CHECK(all[1] == rows_of({{0, 2}})[0]);
    CHECK(all[2] == rows_of({{1, 0}})[0]);
    for (std::uint64_t i = 0; i < all.size(); ++i) CHECK(V.index_of(all[i]) == i);
    CHECK(std::set<Word>(all.begin(), all.end()).size() == 8);
    CHECK(kind_of([&] { enumerate_space(V, Limits{4}); }) == ErrorKind::TooLarge);
}

TEST_CASE("orbit examples") {
    const auto V = module_space(ChainRing::integer_modular(2, 2), {1, 1});
    const auto dec = orbit_decompose(V);
    auto orbit_of = [&](const Word& v) {
        const auto idx = V.index_of(v);
        for (const auto& o : dec.orbits)
            if (std::find(o.members.begin(), o.members.end(), idx) != o.members.end()) return o;
        FAIL("vector not in any orbit");
        return dec.orbits.front();
    };
    CHECK(orbit_of(rows_of({{1, 2}})[0]).size == 2);
    CHECK(orbit_of(rows_of({{2, 2}})[0]).size == 1);
    CHECK(dec.gcd_of_sizes == 1);
    CHECK(dec.orbits.size() == 5);
}

TEST_CASE("orbit sizes and gcd over every subtype with |V| <= 2^14") {
    auto rings = property_rings();
    rings.push_back(ChainRing::eisenstein(3, 2, 2));
    rings.push_back(ChainRing::integer_modular(7, 1));
    for (const auto& R : rings) {
        const auto units = R->enumerate_units();
        for (const auto& st : subtypes(*R, 1u << 14)) {
            CAPTURE(R->name());
            const auto V = module_space(R, st);
            const auto dec = orbit_decompose(V);
            CHECK(dec.total_size() == V.cardinality - 1);
            CHECK(dec.sizes_match_formula());
            CHECK(dec.gcd_of_sizes == R->q() - 1);
            for (const auto& o : dec.orbits) {
                CHECK(o.size % (R->q() - 1) == 0);
                CHECK(V.vector_at(o.members.front()) == o.representative);
                // brute-force orbit size from the unit group
                std::set<Word> orb;
                for (auto u : units) {
                    Word w = o.representative;
                    for (auto& e : w) e = R->mul(u, e);
                    orb.insert(w);
                }
                CHECK(orb.size() == o.size);
                int t = R->s();
                for (auto e : o.representative) t = std::min(t, R->height(e));
                std::uint64_t f = R->q() - 1;
                for (int i = 0; i < R->s() - t - 1; ++i) f *= R->q();
                CHECK(o.size == f);
            }
        }
    }
}

TEST_CASE("long code examples") {
    const auto L = long_code(ChainRing::integer_modular(2, 2), {1, 1});
    CHECK(L.length() == 7);
    CHECK(is_constant_weight(L)->value() == Rational(8));
    const auto L9 = long_code(ChainRing::integer_modular(3, 2), {0, 1});
    CHECK(L9.length() == 2);
    CHECK(is_constant_weight(L9)->value() == Rational(3));
    const auto simplex = long_code(ChainRing::integer_modular(2, 1), {3});
    CHECK(simplex.length() == 7);
    CHECK(is_constant_weight(simplex)->value() == Rational(8));
    CHECK(kind_of([] { long_code(ChainRing::integer_modular(2, 2), {0, 0}); }) == ErrorKind::ParameterViolation);
    CHECK(kind_of([] { long_code(ChainRing::integer_modular(5, 2), {3, 0}, Limits{1000}); }) == ErrorKind::TooLarge);
}

TEST_CASE("minimal constant-weight examples") {
    const auto fx = paper_fixtures();
    const auto M = min_constant_weight_code(ChainRing::integer_modular(2, 2), {1, 1});
    CHECK(M.length() == 7);
    CHECK(is_constant_weight(M)->value() == Rational(8));
    CHECK(column_orbit_fingerprint(M) == column_orbit_fingerprint(fx.code("constweight_Z4")));

    const auto M9 = min_constant_weight_code(ChainRing::integer_modular(3, 2), {0, 1});
    CHECK(M9.length() == 1);
    CHECK(M9.generators() == RingMatrix(M9.ring_ptr(), rows_of({{3}}), 1));
    CHECK(is_constant_weight(M9)->value() == Rational(3, 2));

    const auto F4 = min_constant_weight_code(ChainRing::eisenstein(2, 2, 1), {1});
    CHECK(F4.length() == 1);
    CHECK(is_constant_weight(F4)->value() == Rational(4, 3));
}

TEST_CASE("constant-weight constructions over every small subtype") {
    auto rings = property_rings();
    rings.push_back(ChainRing::eisenstein(3, 2, 1));
    for (const auto& R : rings)
        for (const auto& st : subtypes(*R, 1u << 10)) {
            CAPTURE(R->name());
            const auto V = module_space(R, st);
            const std::uint32_t q = R->q();
            const auto L = long_code(R, st);
            CHECK(L.length() == V.cardinality - 1);
            CHECK(L.subtype() == st);
            const auto lw = is_constant_weight(L);
            REQUIRE(lw);
            CHECK(lw->value() == Rational(static_cast<std::int64_t>(V.cardinality)));

            const auto M = min_constant_weight_code(R, st);
            CHECK(M.length() == (V.cardinality - 1) / (q - 1));
            CHECK(M.subtype() == st);
            const auto mw = is_constant_weight(M);
            REQUIRE(mw);
            CHECK(mw->value() == Rational(static_cast<std::int64_t>(V.cardinality), q - 1));
            CHECK(column_orbit_fingerprint(replicate(M, static_cast<int>(q - 1))) == column_orbit_fingerprint(L));
            CHECK(plotkin_check(M).equality);
        }
}

TEST_CASE("replication") {
    const auto cw = paper_fixtures().code("constweight_Z4");
    CHECK(same_code(replicate(cw, 1), cw));
    const auto r2 = replicate(cw, 2);
    CHECK(r2.length() == 14);
    CHECK(is_constant_weight(r2)->value() == Rational(16));
    CHECK(kind_of([&] { replicate(cw, 0); }) == ErrorKind::BadReplication);
    auto Z9 = ChainRing::integer_modular(3, 2);
    const auto C = LinearCode::make(Z9, 3, rows_of({{1, 1, 2}, {0, 3, 3}}));
    CHECK(d_hom(replicate(C, 3)).value() == d_hom(C).value() * 3);
    CHECK(avg_hom(replicate(C, 3)) == Rational(9));
}

TEST_CASE("lifting field codes") {
    auto Z9 = ChainRing::integer_modular(3, 2);
    auto F3 = Z9->field_ptr();
    const FqCode D(FqMatrix(F3, {{{1}, {0}, {1}}, {{0}, {1}, {1}}}, 3));
    {
        const auto L = lift_code(Z9, D, {0, 1});
        CHECK(L.socle_matches);
        CHECK(L.code.subtype() == std::vector<int>{1, 1});
        const auto r = mhd_report(L.code);
        CHECK(r.socle_is_mds);
        CHECK(r.is_mhd);
    }
    {
        const auto L = lift_code(Z9, D, {1, 1});
        CHECK(L.code.in_socle());
        CHECK(is_mhd(L.code));
    }
    {
        const FqCode I(FqMatrix(F3, {{{1}, {0}}, {{0}, {1}}}, 2));
        const auto L = lift_code(Z9, I, {0, 0});
        CHECK(L.code.cardinality() == 81);
    }
    CHECK(kind_of([&] { lift_code(Z9, D, {0, 2}); }) == ErrorKind::HeightOutOfRange);
    CHECK(kind_of([&] { lift_code(Z9, D, {0}); }) == ErrorKind::LengthMismatch);
    CHECK(kind_of([&] { lift_code(ChainRing::integer_modular(5, 2), D, {0, 0}); }) == ErrorKind::RingMismatch);
}

TEST_CASE("lifted Reed-Solomon codes are MHD and recover their socle") {
    for (const auto& R : {ChainRing::integer_modular(5, 2), ChainRing::integer_modular(3, 2),
                          ChainRing::eisenstein(2, 2, 2, {1, 1, 1})}) {
        const std::size_t q = R->q();
        for (std::size_t n = 2; n <= q + 1; ++n)
            for (std::size_t k = 1; k <= n && k <= 3; ++k) {
                const auto rs = extended_reed_solomon(R->field_ptr(), n, k);
                CHECK(rs.dimension == k);
                CHECK(is_mds(rs));
                std::vector<int> heights(k);
                for (std::size_t i = 0; i < k; ++i) heights[i] = static_cast<int>(i % R->s());
                const auto L = lift_code(R, rs, heights);
                CHECK(L.socle_matches);
                const auto r = mhd_report(L.code);
                CHECK(r.socle_is_mds);
                if (r.mainchar_applicable) CHECK(r.is_mhd);
            }
        CHECK_THROWS_AS(extended_reed_solomon(R->field_ptr(), q + 2, 2), Error);
    }
}

TEST_CASE("tighter-singleton family") {
    for (std::size_t n : {3u, 4u, 5u}) {
        const auto C = example_family_tighter_singleton(5, 2, n);
        CHECK(d_hom(C).value() == Rational(static_cast<std::int64_t>(n) - 1));
        CHECK(is_mhd(C));
        const auto s = singleton_check(C);
        CHECK(s.old_lhs < static_cast<std::int64_t>(n - C.rank()));
    }
    for (int p : {3, 5, 7})
        for (int s : {2, 3})
            for (std::size_t n = 2; n <= static_cast<std::size_t>(p) && n <= 5; ++n) CHECK(is_mhd(example_family_tighter_singleton(p, s, n)));
    const auto one = example_family_tighter_singleton(5, 1, 5);
    CHECK(d_hamming_code(one) == 4);
    CHECK(d_hom(one).value() == Rational(5));
    CHECK(is_mhd(one));
    CHECK(kind_of([] { example_family_tighter_singleton(3, 2, 4); }) == ErrorKind::ParameterViolation);
    CHECK(kind_of([] { example_family_tighter_singleton(4, 2, 3); }) == ErrorKind::ParameterViolation);
    CHECK(kind_of([] { example_family_tighter_singleton(5, 2, 1); }) == ErrorKind::ParameterViolation);
}

TEST_CASE("paper fixtures") {
    const auto fx = paper_fixtures();
    CHECK(fx.load_errors.empty());
    CHECK(d_hom(fx.code("C1_F4x")).value() == Rational(16, 3));
    CHECK(is_mhd(fx.code("C1_F4x")));
    CHECK(is_mds(FqCode(fx.field_matrix("exceptional_mds_F4"))));
    const auto g4 = mhd_report(fx.code("G4_Z4"));
    CHECK_FALSE(g4.is_mhd);
    CHECK(g4.socle_is_mds);
    CHECK(fx.field_matrix("exceptional_mds_F4").rows() == 3);
    CHECK(fx.field_matrix("exceptional_mds_F4").cols() == 6);
    CHECK(fx.code("H1_F4x").generators().rows() == 5);
    for (const char* name : {"exceptional_mds_F4", "mhd_Z25", "C1_F4x", "C2_F4x", "H1_F4x", "G3_Z4", "G4_Z4",
                             "dual_Z27_primal", "dual_Z27_dual", "dual_Z9_primal", "dual_Z9_dual", "mhd_Z9",
                             "constweight_Z4"})
        CHECK(fx.codes.count(name) == 1);
    CHECK(kind_of([&] { fx.code("nope"); }) == ErrorKind::IndexOutOfRange);
}

}
