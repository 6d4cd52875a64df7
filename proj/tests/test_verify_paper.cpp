#include "homcode/code_file.hpp"
#include "homcode/fixtures.hpp"
#include "homcode/verify_paper.hpp"

#include <doctest.h>

#include <set>

using namespace homcode;

TEST_SUITE("verify_paper") {

TEST_CASE("every row passes") {
    const auto rows = verify_paper(paper_fixtures());
    CHECK(rows.size() >= 40);
    for (const auto& r : rows) {
        CAPTURE(r.name);
        CAPTURE(r.expected);
        CAPTURE(r.computed);
        CHECK(r.pass);
    }
    std::set<std::string> groups;
    for (const auto& r : rows) groups.insert(r.group);
    CHECK(groups == std::set<std::string>{"prelim", "mhd", "duality", "constweight", "asymptotic"});
}

TEST_CASE("deterministic") {
    const auto fx = paper_fixtures();
    CHECK(format_rows(verify_paper(fx)) == format_rows(verify_paper(fx)));
}

TEST_CASE("filter keeps one group") {
    const auto rows = verify_paper(paper_fixtures(), "constweight");
    REQUIRE_FALSE(rows.empty());
    for (const auto& r : rows) CHECK(r.group == "constweight");
}

TEST_CASE("a corrupted fixture produces a failing row naming it") {
    auto fx = paper_fixtures();
    const auto& g4 = fx.code("G4_Z4");
    auto rows = g4.generators().row_vectors();
    rows[1] = Word{{0}, {1}, {1}, {1}};
    fx.codes.at("G4_Z4").code = LinearCode::make(g4.ring_ptr(), g4.length(), rows);
    bool named = false;
    for (const auto& r : verify_paper(fx))
        if (!r.pass && r.fixture == "G4_Z4") named = true;
    CHECK(named);
}

TEST_CASE("a fixture that fails to load fails its rows") {
    auto fx = paper_fixtures();
    fx.load_errors["mhd_Z25"] = "Parse: broken";
    bool failed = false;
    for (const auto& r : verify_paper(fx))
        if (r.fixture == "mhd_Z25") failed = failed || !r.pass;
    CHECK(failed);
}

}
