#ifndef HOMCODE_FIXTURES_HPP
#define HOMCODE_FIXTURES_HPP

#include "homcode/code.hpp"

#include <filesystem>
#include <map>
#include <string>

namespace homcode {

struct FixtureCode {
    LinearCode code;
    std::string notes;
};

/// Generator matrices of the worked examples, keyed by file stem.
struct PaperFixtures {
    std::map<std::string, FixtureCode> codes;
    /// Matrices that live over the residue field only (socles, change of basis).
    std::map<std::string, FqMatrix> field_matrices;
    /// Fixtures that failed to load from disk, with the reason.
    std::map<std::string, std::string> load_errors;

    /// Throws IndexOutOfRange naming the missing fixture.
    const LinearCode& code(const std::string& name) const;
    const FqMatrix& field_matrix(const std::string& name) const;
};

PaperFixtures paper_fixtures();

/// Replaces built-in codes by the *.json files in `dir` (matched by file stem).
/// Unparseable files are recorded in load_errors instead of throwing.
PaperFixtures load_fixtures(PaperFixtures base, const std::filesystem::path& dir);

}  // namespace homcode

#endif
