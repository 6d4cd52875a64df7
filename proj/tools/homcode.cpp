#include "homcode/bounds.hpp"
#include "homcode/code_file.hpp"
#include "homcode/constructions.hpp"
#include "homcode/error.hpp"
#include "homcode/fixtures.hpp"
#include "homcode/report.hpp"
#include "homcode/verify_paper.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace homcode;

namespace {

enum Exit { kOk = 0, kVerifyFail = 1, kParse = 2, kTooLarge = 3, kParameter = 4 };

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::Parse: return kParse;
        case ErrorKind::TooLarge: return kTooLarge;
        default: return kParameter;
    }
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(ErrorKind::Parse, std::string(what) + ": '" + item + "' is not an integer");
        }
    }
    return out;
}

void write_text(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Parse, "cannot write " + path);
    out << text;
}

struct RingOptions {
    std::string family = "Zps";
    int p = 2;
    int r = 1;
    int s = 1;
    std::string modulus;

    RingPtr make() const {
        if (family == "Zps") return ChainRing::integer_modular(p, s);
        if (family != "FqXs") throw Error(ErrorKind::ParameterViolation, "--family must be Zps or FqXs");
        return ChainRing::eisenstein(p, r, s, modulus.empty() ? std::vector<int>{} : parse_int_list(modulus, "--modulus"));
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linear codes over finite chain rings under the homogeneous metric"};
    app.require_subcommand(1);

    std::uint64_t max_card = Limits{}.max_cardinality;

    auto* analyze_cmd = app.add_subcommand("analyze", "Distances, bounds and the MHD verdict for a code file");
    std::string analyze_path;
    bool as_json = false, as_text = false;
    analyze_cmd->add_option("path", analyze_path, "Code file (JSON)")->required();
    auto* json_flag = analyze_cmd->add_flag("--json", as_json, "JSON report");
    analyze_cmd->add_flag("--text", as_text, "Text report (default)")->excludes(json_flag);
    analyze_cmd->add_option("--max-card", max_card, "Enumeration guard on |C|");

    auto* dual_cmd = app.add_subcommand("dual", "Write the dual code");
    std::string dual_path, dual_out;
    dual_cmd->add_option("path", dual_path, "Code file (JSON)")->required();
    dual_cmd->add_option("--out", dual_out, "Output file (default stdout)");

    auto* construct_cmd = app.add_subcommand("construct", "Build a code");
    std::string kind, construct_out, subtype_text, heights_text, input_path;
    RingOptions ring_opt;
    std::size_t n = 0, k = 0;
    int ell = 1;
    construct_cmd->add_option("kind", kind, "constant-weight | long-code | lifted-rs | tighter-singleton | replicate")
        ->required()
        ->check(CLI::IsMember({"constant-weight", "long-code", "lifted-rs", "tighter-singleton", "replicate"}));
    construct_cmd->add_option("--family", ring_opt.family, "Zps or FqXs");
    construct_cmd->add_option("--p", ring_opt.p, "Characteristic");
    construct_cmd->add_option("--r", ring_opt.r, "Residue field degree (FqXs)");
    construct_cmd->add_option("--s", ring_opt.s, "Nilpotency index");
    construct_cmd->add_option("--modulus", ring_opt.modulus, "Field modulus, low to high, comma separated");
    construct_cmd->add_option("--subtype", subtype_text, "k_0,...,k_{s-1}");
    construct_cmd->add_option("--n", n, "Length");
    construct_cmd->add_option("--k", k, "Reed-Solomon dimension");
    construct_cmd->add_option("--heights", heights_text, "Row heights for lifted-rs");
    construct_cmd->add_option("--ell", ell, "Replication factor");
    construct_cmd->add_option("--input", input_path, "Code file to replicate");
    construct_cmd->add_option("--out", construct_out, "Output file (default stdout)");
    construct_cmd->add_option("--max-card", max_card, "Enumeration guard");

    auto* asym_cmd = app.add_subcommand("asymptotic", "CSV of the asymptotic Singleton and Plotkin curves");
    long q = 2;
    int points = 11;
    std::string delta_max_text = "1", asym_out;
    asym_cmd->add_option("--q", q, "Residue field size")->required();
    asym_cmd->add_option("--points", points, "Grid points (>= 2)");
    asym_cmd->add_option("--delta-max", delta_max_text, "Largest delta (a, a/b or decimal)");
    asym_cmd->add_option("--out", asym_out, "Output CSV (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify-paper", "Recompute every worked example");
    std::string filter, fixtures_dir;
    verify_cmd->add_option("--filter", filter, "Group or name substring");
    verify_cmd->add_option("--fixtures-dir", fixtures_dir, "Load fixtures from this directory");

    auto* export_cmd = app.add_subcommand("export-fixtures", "Write the built-in fixtures as code files");
    std::string export_dir;
    export_cmd->add_option("dir", export_dir, "Target directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kParse;
    }

    try {
        const Limits limits{max_card};
        if (*analyze_cmd) {
            const CodeFile f = load_code_file(analyze_path);
            const AnalysisReport rep = analyze(f.to_code(), f.name, limits);
            std::cout << (as_json ? to_json(rep).dump(2) + "\n" : to_text(rep));
            return kOk;
        }
        if (*dual_cmd) {
            const CodeFile f = load_code_file(dual_path);
            const LinearCode d = dual(f.to_code());
            const LinearCode canonical(d.standard().generator_in_input_order());
            const auto name = f.name ? std::optional<std::string>(*f.name + "_dual") : std::nullopt;
            write_text(serialize_code_file(CodeFile::from_code(canonical, name)), dual_out);
            return kOk;
        }
        if (*construct_cmd) {
            std::optional<LinearCode> code;
            std::string name = kind;
            if (kind == "tighter-singleton") {
                code = example_family_tighter_singleton(ring_opt.p, ring_opt.s, n);
            } else if (kind == "constant-weight" || kind == "long-code") {
                if (subtype_text.empty()) throw Error(ErrorKind::ParameterViolation, "--subtype is required");
                const auto st = parse_int_list(subtype_text, "--subtype");
                code = kind == "long-code" ? long_code(ring_opt.make(), st, limits)
                                           : min_constant_weight_code(ring_opt.make(), st, limits);
            } else if (kind == "lifted-rs") {
                const RingPtr R = ring_opt.make();
                const FqCode rs = extended_reed_solomon(R->field_ptr(), n, k);
                std::vector<int> heights(k, 0);
                if (!heights_text.empty()) heights = parse_int_list(heights_text, "--heights");
                if (heights.size() != k)
                    throw Error(ErrorKind::ParameterViolation, "--heights needs exactly k entries");
                code = lift_code(R, rs, heights).code;
            } else {
                if (input_path.empty()) throw Error(ErrorKind::ParameterViolation, "--input is required");
                const CodeFile f = load_code_file(input_path);
                code = replicate(f.to_code(), ell);
                name = f.name.value_or("code") + "_x" + std::to_string(ell);
            }
            const std::string body = serialize_code_file(CodeFile::from_code(*code, name));
            write_text(body, construct_out);
            std::ostream& summary = (construct_out.empty() || construct_out == "-") ? std::cerr : std::cout;
            summary << to_text(analyze(*code, name, limits));
            return kOk;
        }
        if (*asym_cmd) {
            if (q < 2) throw Error(ErrorKind::ParameterViolation, "q must be at least 2 (got " + std::to_string(q) + ")");
            const auto curve =
                asymptotic_curve(static_cast<std::uint32_t>(q), delta_grid(parse_rational(delta_max_text), points));
            std::ostringstream os;
            os << "delta,beta_singleton,beta_plotkin,beta_singleton_frac,beta_plotkin_frac\n";
            for (const auto& pt : curve)
                os << to_decimal(pt.delta) << "," << to_decimal(pt.beta_singleton) << "," << to_decimal(pt.beta_plotkin)
                   << "," << to_string(pt.beta_singleton) << "," << to_string(pt.beta_plotkin) << "\n";
            write_text(os.str(), asym_out);
            return kOk;
        }
        if (*verify_cmd) {
            PaperFixtures fx = paper_fixtures();
            if (!fixtures_dir.empty()) fx = load_fixtures(std::move(fx), fixtures_dir);
            const auto rows = verify_paper(fx, filter);
            std::cout << format_rows(rows);
            std::size_t failed = 0;
            const VerifyRow* first = nullptr;
            for (const auto& r : rows)
                if (!r.pass) {
                    ++failed;
                    if (!first) first = &r;
                }
            std::cout << rows.size() << " rows, " << failed << " failed\n";
            if (first) {
                std::cout << "first divergence: " << first->name
                          << (first->fixture.empty() ? "" : " (fixture " + first->fixture + ")")
                          << ": expected " << first->expected << ", computed " << first->computed << "\n";
                return kVerifyFail;
            }
            return kOk;
        }
        if (*export_cmd) {
            std::filesystem::create_directories(export_dir);
            for (const auto& [name, fc] : paper_fixtures().codes)
                save_code_file(CodeFile::from_code(fc.code, name, fc.notes),
                               std::filesystem::path(export_dir) / (name + ".json"));
            return kOk;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParameter;
    }
    return kOk;
}
