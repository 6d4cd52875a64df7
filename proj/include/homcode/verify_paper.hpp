#ifndef HOMCODE_VERIFY_PAPER_HPP
#define HOMCODE_VERIFY_PAPER_HPP

#include "homcode/fixtures.hpp"

#include <string>
#include <vector>

namespace homcode {

struct VerifyRow {
    std::string group;    // prelim, mhd, duality, constweight, asymptotic
    std::string name;
    std::string fixture;  // empty when the row uses no fixture
    std::string expected;
    std::string computed;
    bool pass = false;
};

/// Every worked example, recomputed. `filter` keeps rows whose group equals it or
/// whose group or name contains it; empty keeps everything.
std::vector<VerifyRow> verify_paper(const PaperFixtures& fixtures, const std::string& filter = "");

std::string format_rows(const std::vector<VerifyRow>& rows);

}  // namespace homcode

#endif
