#include "helpers.hpp"
#include "homcode/code_file.hpp"
#include "homcode/error.hpp"
#include "homcode/fixtures.hpp"
#include "homcode/report.hpp"

#include <doctest.h>

#include <filesystem>
#include <random>

using namespace homcode;
using namespace testing;

namespace {

std::string parse_message(const std::string& text) {
    try {
        parse_code_file(text);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Parse);
        return e.what();
    }
    FAIL("no error for: " << text);
    return {};
}

}  // namespace

TEST_SUITE("code_file") {

TEST_CASE("ring descriptors") {
    const auto z = ring_from_json(Json::parse(R"({"family":"Zps","p":5,"s":2})"));
    CHECK(z == RingDescriptor::zps(5, 2));
    const auto f = ring_from_json(Json::parse(R"({"family":"FqXs","p":2,"r":2,"s":2,"field_modulus":[1,1,1]})"));
    CHECK(f == RingDescriptor::fqxs(2, 2, 2, {1, 1, 1}));
    CHECK(ring_from_json(ring_to_json(f)) == f);
    CHECK(ring_from_json(Json::parse(R"({"family":"FqXs","p":3,"r":2,"s":2})")).field_modulus == default_modulus(3, 2));
    CHECK_THROWS_AS(ring_from_json(Json::parse(R"({"family":"Zpq","p":5,"s":2})")), Error);
}

TEST_CASE("element encodings") {
    auto Z25 = ChainRing::integer_modular(5, 2);
    CHECK(element_to_json(*Z25, {7}) == Json(7));
    auto F4x = ChainRing::eisenstein(2, 2, 2, {1, 1, 1});
    // alpha x + 1: x^0 coefficient 1 = [1,0], x^1 coefficient alpha = [0,1]
    CHECK(element_to_json(*F4x, {9}) == Json::parse("[[1,0],[0,1]]"));
    CHECK(element_from_json(*F4x, Json::parse("[[1,0],[0,1]]"), "x") == RingElement{9});
    for (std::uint32_t v = 0; v < F4x->size(); ++v)
        CHECK(element_from_json(*F4x, element_to_json(*F4x, {v}), "x") == RingElement{v});
    CHECK_THROWS_AS(element_from_json(*Z25, Json(25), "x"), Error);
    CHECK_THROWS_AS(element_from_json(*F4x, Json::parse("[[1,2],[0,1]]"), "x"), Error);
    CHECK_THROWS_AS(element_from_json(*F4x, Json::parse("[[1,0]]"), "x"), Error);
}

TEST_CASE("round trips are exact") {
    std::mt19937_64 rng(61);
    auto rings = property_rings();
    for (auto& r : extra_rings()) rings.push_back(r);
    for (const auto& R : rings)
        for (int t = 0; t < 10; ++t) {
            const std::size_t n = 1 + rng() % 6;
            const auto C = LinearCode::make(R, n, random_rows(*R, n, rng() % 4, rng));
            const auto f = CodeFile::from_code(C, "c" + std::to_string(t), t % 2 ? std::optional<std::string>("note") : std::nullopt);
            const auto text = serialize_code_file(f);
            const auto g = parse_code_file(text);
            CHECK(g == f);
            CHECK(serialize_code_file(g) == text);
            CHECK(g.to_code().generators() == C.generators());
        }
}

TEST_CASE("shipped fixtures match the built-in matrices") {
    const std::filesystem::path dir = HOMCODE_FIXTURES_DIR;
    const auto fx = paper_fixtures();
    std::size_t files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() != ".json") continue;
        ++files;
        const auto stem = entry.path().stem().string();
        CAPTURE(stem);
        const auto f = load_code_file(entry.path());
        REQUIRE(fx.codes.count(stem) == 1);
        CHECK(f.name == stem);
        CHECK(f.to_code().generators() == fx.code(stem).generators());
    }
    CHECK(files == fx.codes.size());
    const auto loaded = load_fixtures(paper_fixtures(), dir);
    CHECK(loaded.load_errors.empty());
}

TEST_CASE("parse errors name the field") {
    CHECK(parse_message("{").find("malformed JSON") != std::string::npos);
    CHECK(parse_message("[]").find("expected an object") != std::string::npos);
    CHECK(parse_message(R"({"n":2,"generators":[]})").find("'ring'") != std::string::npos);
    CHECK(parse_message(R"({"ring":{"family":"Zps","p":2,"s":2},"generators":[]})").find("'n'") != std::string::npos);
    CHECK(parse_message(R"({"ring":{"family":"Zps","p":2,"s":2},"n":3,"generators":[[1,2,3],[0,1,4]]})")
              .find("generators[1][2]") != std::string::npos);
    CHECK(parse_message(R"({"ring":{"family":"Zps","p":2,"s":2},"n":3,"generators":[[1,2]]})")
              .find("generators[0]") != std::string::npos);
    CHECK(parse_message(R"({"ring":{"family":"Zps","p":6,"s":2},"n":1,"generators":[]})").find("ring") !=
          std::string::npos);
    CHECK(parse_message(R"({"ring":{"family":"FqXs","p":2,"r":2,"s":2,"field_modulus":[1,0,1]},"n":1,"generators":[]})")
              .find("Reducible") != std::string::npos);
    CHECK(parse_message(R"({"name":3,"ring":{"family":"Zps","p":2,"s":2},"n":1,"generators":[]})").find("name") !=
          std::string::npos);
    CHECK_THROWS_AS(load_code_file("/nonexistent/x.json"), Error);
}

TEST_CASE("analysis report output") {
    const auto fx = paper_fixtures();
    CHECK(to_text(analyze(fx.code("mhd_Z25"), "mhd_Z25")).find("MHD: yes, socle MDS: yes") != std::string::npos);
    CHECK(to_text(analyze(fx.code("G4_Z4"))).find("MHD: no (d = 2 ≤ M(n−K) = 2)") != std::string::npos);
    CHECK(to_text(analyze(fx.code("constweight_Z4"))).find("constant weight 8, Plotkin equality") != std::string::npos);
    const auto j = to_json(analyze(fx.code("C1_F4x"), "C1_F4x"));
    CHECK(j["d_hom"]["num"] == 16);
    CHECK(j["d_hom"]["den"] == 3);
    CHECK(j["name"] == "C1_F4x");
    CHECK(to_json(analyze(fx.code("C1_F4x"))).dump() == to_json(analyze(fx.code("C1_F4x"))).dump());
    CHECK(weight_to_json(WeightValue{6, 2}) == Json::parse(R"({"num":6,"den":2})"));
}

}
