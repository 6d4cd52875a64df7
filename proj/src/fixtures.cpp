#include "homcode/fixtures.hpp"

#include "homcode/code_file.hpp"
#include "homcode/constructions.hpp"
#include "homcode/error.hpp"

namespace homcode {

namespace {

// F_4 = F_2[a]/(a^2+a+1) packed as c0 + 2 c1: 0, 1, a = 2, a+1 = 3.
// In F_4[x]/(x^2) an element u + v x is packed u + 4 v.
constexpr std::uint32_t A = 2, A1 = 3, X = 4, AX = 8, A1X = 12;

std::vector<Word> words(std::initializer_list<std::initializer_list<std::uint32_t>> rows) {
    std::vector<Word> out;
    for (const auto& r : rows) {
        Word w;
        for (auto v : r) w.push_back(RingElement{v});
        out.push_back(std::move(w));
    }
    return out;
}

FqMatrix fq(const FieldPtr& F, std::initializer_list<std::initializer_list<std::uint32_t>> rows) {
    std::vector<std::vector<FieldElement>> out;
    for (const auto& r : rows) {
        std::vector<FieldElement> w;
        for (auto v : r) w.push_back(FieldElement{v});
        out.push_back(std::move(w));
    }
    return FqMatrix(F, out, out.front().size());
}

}  // namespace

const LinearCode& PaperFixtures::code(const std::string& name) const {
    auto it = codes.find(name);
    if (auto bad = load_errors.find(name); bad != load_errors.end())
        throw Error(ErrorKind::Parse, "fixture " + name + ": " + bad->second);
    if (it == codes.end()) throw Error(ErrorKind::IndexOutOfRange, "no fixture named " + name);
    return it->second.code;
}

const FqMatrix& PaperFixtures::field_matrix(const std::string& name) const {
    auto it = field_matrices.find(name);
    if (it == field_matrices.end()) throw Error(ErrorKind::IndexOutOfRange, "no field matrix named " + name);
    return it->second;
}

PaperFixtures paper_fixtures() {
    PaperFixtures fx;
    auto add = [&](const std::string& name, const RingPtr& R, const std::vector<Word>& rows, std::string notes) {
        fx.codes.emplace(name, FixtureCode{LinearCode::make(R, rows.front().size(), rows), std::move(notes)});
    };

    const auto F4 = ChainRing::eisenstein(2, 2, 1, {1, 1, 1});
    const auto F4x = ChainRing::eisenstein(2, 2, 2, {1, 1, 1});
    const auto Z4 = ChainRing::integer_modular(2, 2);
    const auto Z9 = ChainRing::integer_modular(3, 2);
    const auto Z25 = ChainRing::integer_modular(5, 2);
    const auto Z27 = ChainRing::integer_modular(3, 3);

    add("exceptional_mds_F4", F4,
        words({{1, 1, 1, 1, 0, 0}, {0, 1, A, A1, 1, 0}, {0, 1, A1, A, 0, 1}}),
        "[6,3,4] MDS code over F_4 (a^2 = a + 1); F_4 is F_4[x]/(x^1)");
    add("mhd_Z25", Z25,
        words({{1, 1, 1, 1, 1, 0}, {0, 5, 10, 15, 20, 0}, {0, 5, 20, 20, 5, 5}}),
        "lifted extended Reed-Solomon code, subtype (1,2); MHD");
    add("C1_F4x", F4x,
        words({{1, A, 1, A, A, 1}, {0, X, 0, X, A1X, AX}, {0, 0, X, X, X, X}}),
        "MHD, not contained in the socle; packed u + 4v for u + v x");
    add("C2_F4x", F4x,
        words({{1, 1, 1, 1, 0, 0}, {0, X, AX, A1X, X, 0}, {0, X, A1X, AX, 0, X}}),
        "socle is the exceptional [6,3,4] code; not MHD");
    add("H1_F4x", F4x,
        words({{A1X + 1, AX, 1, 0, 0, 1},
               {X + A1, A1X, 1, 0, 1, 0},
               {AX + A1, X, 1, 1, 0, 0},
               {X, 0, X, 0, 0, 0},
               {X, X, 0, 0, 0, 0}}),
        "printed as a parity-check matrix next to C1; d_hom = 4/3, not MHD");
    add("G3_Z4", Z4, words({{1, 1, 1, 1}, {0, 2, 0, 2}, {0, 0, 2, 2}}), "MHD; socle is the [4,3] parity code");
    add("G4_Z4", Z4, words({{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 2, 2}}),
        "not MHD (row 2 has weight 2); socle is the [4,3] parity code");
    add("dual_Z27_primal", Z27, words({{1, 6}, {0, 9}}), "dual spans <(9,3)>");
    add("dual_Z27_dual", Z27, words({{9, 3}}), "dual of dual_Z27_primal; not MHD");
    add("dual_Z9_primal", Z9, words({{1, 0, 1}, {0, 1, 1}}), "free MHD code; dual spans <(8,8,1)>");
    add("dual_Z9_dual", Z9, words({{8, 8, 1}}), "dual of dual_Z9_primal; not MHD");
    add("mhd_Z9", Z9, words({{1, 1, 2}, {0, 3, 3}}), "d_hom = 3, MHD; socle <(1,0,1),(0,1,1)> over F_3");
    add("constweight_Z4", Z4, words({{0, 1, 1, 2, 2, 3, 3}, {2, 0, 2, 0, 2, 0, 2}}),
        "minimal constant-weight code of subtype (1,1): length 7, weight 8");
    add("rank_vs_dimension_Z4", Z4, words({{2, 0, 0}, {0, 2, 2}}), "rank K = 2, free rank 0, dimension 1");
    for (std::size_t n : {3, 4, 5}) {
        const LinearCode c = example_family_tighter_singleton(5, 2, n);
        fx.codes.emplace("tighter_singleton_p5_s2_n" + std::to_string(n),
                         FixtureCode{c, "d_hom = n - 1; MHD, loose for the older Singleton form"});
    }

    const auto f3 = Z9->field_ptr();
    const auto f4 = F4x->field_ptr();
    const auto f5 = Z25->field_ptr();
    fx.field_matrices.emplace("mhd_Z9_socle_F3", fq(f3, {{1, 0, 1}, {0, 1, 1}}));
    fx.field_matrices.emplace("mhd_Z25_socle_F5",
                              fq(f5, {{1, 1, 1, 1, 1, 0}, {0, 1, 2, 3, 4, 0}, {0, 1, 4, 4, 1, 1}}));
    fx.field_matrices.emplace("C1_socle_F4", fq(f4, {{1, A, 1, A, A, 1}, {0, 1, 0, 1, A1, A}, {0, 0, 1, 1, 1, 1}}));
    fx.field_matrices.emplace("change_of_basis_F4", fq(f4, {{1, A1, 0}, {0, 1, A}, {0, 1, A1}}));
    fx.field_matrices.emplace("exceptional_mds_F4",
                              fq(f4, {{1, 1, 1, 1, 0, 0}, {0, 1, A, A1, 1, 0}, {0, 1, A1, A, 0, 1}}));
    fx.field_matrices.emplace("spc_F2_4", fq(Z4->field_ptr(), {{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}}));
    return fx;
}

PaperFixtures load_fixtures(PaperFixtures base, const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) throw Error(ErrorKind::Parse, "not a directory: " + dir.string());
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() != ".json") continue;
        const std::string name = entry.path().stem().string();
        try {
            const CodeFile f = load_code_file(entry.path());
            base.codes.erase(name);
            base.codes.emplace(name, FixtureCode{f.to_code(), f.notes.value_or("")});
        } catch (const Error& e) {
            base.load_errors[name] = e.what();
        }
    }
    return base;
}

}  // namespace homcode
