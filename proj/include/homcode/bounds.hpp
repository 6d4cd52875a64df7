#ifndef HOMCODE_BOUNDS_HPP
#define HOMCODE_BOUNDS_HPP

#include "homcode/code.hpp"
#include "homcode/metrics.hpp"
#include "homcode/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace homcode {

/// x - 1 for integral x, floor(x) otherwise.
std::int64_t floor_h(const Rational& x);

struct SingletonCheck {
    std::int64_t old_lhs = 0;  // floor((d-1)/M)
    bool old_holds = false;    // old_lhs <= n - K
    std::int64_t old_slack = 0;
    std::int64_t new_lhs = 0;  // floor_h(d/M)
    bool new_holds = false;    // d <= M (n - K + 1)
    std::int64_t new_slack = 0;
};

SingletonCheck singleton_check(std::size_t n, std::size_t rank, const WeightValue& d, std::uint32_t q);
SingletonCheck singleton_check(const LinearCode& code, const Limits& limits = {});

/// d > M (n - K), evaluated as scaled(d) > q (n - K).
bool is_mhd(std::size_t n, std::size_t rank, const WeightValue& d, std::uint32_t q);
bool is_mhd(const LinearCode& code, const Limits& limits = {});

/// d_H = n - dim + 1 by exhaustive enumeration (dimension 0 counts as MDS).
bool is_mds(const FqCode& code, const Limits& limits = {});

/// Which clause of the MHD characterization (under the MDS conjecture) the parameters fall in.
enum class FullCharCase {
    Trivial,             // K in {0, n}: always MHD
    SocleOnly,           // MHD iff C lies in the socle and is MDS there
    LiftedMds,           // MHD iff the socle is MDS
    ExceptionalQ2Spc,    // q = 2, n > q + 1, K = n - 1: socle MDS necessary only
    ExceptionalEvenQ,    // q even, n = q + 2, K in {3, n - 3}: socle MDS necessary only
    ConjectureExcluded,  // an MHD code here would contradict the MDS conjecture
};

std::string_view to_string(FullCharCase c);
FullCharCase fullchar_case(std::uint32_t q, std::size_t n, std::size_t rank);

struct PlotkinCheck {
    Rational rhs;  // |C| / (|C| - 1) * n
    bool holds = false;
    bool equality = false;
    /// Equality against the non-degenerate length: the form that is equivalent to constant weight.
    Rational rhs_effective;
    bool equality_effective = false;
};

/// Throws CodeTooSmall for |C| <= 1.
PlotkinCheck plotkin_check(std::uint64_t cardinality, std::size_t n, std::size_t effective_n, const WeightValue& d);
PlotkinCheck plotkin_check(const LinearCode& code, const Limits& limits = {});

struct PlotkinSocleCheck {
    Rational rhs;  // q^K / (q^K - 1) * n
    bool holds = false;
    /// rhs is at least the exact Plotkin right-hand side.
    bool dominates_exact = false;
};

/// Throws CodeTooSmall for K = 0.
PlotkinSocleCheck plotkin_socle_check(std::uint64_t cardinality, std::size_t n, std::size_t rank,
                                      const WeightValue& d, std::uint32_t q);
PlotkinSocleCheck plotkin_socle_check(const LinearCode& code, const Limits& limits = {});

struct BoundReport {
    explicit BoundReport(FqCode socle_code) : socle(std::move(socle_code)) {}

    std::size_t n = 0;
    std::size_t rank = 0;
    std::size_t free_rank = 0;
    std::vector<int> subtype;
    std::uint32_t q = 2;
    DistanceReport distance;
    SingletonCheck singleton;
    bool is_mhd = false;
    FqCode socle;
    std::size_t socle_d_hamming = 0;
    bool socle_is_mds = false;
    bool mainchar_applicable = false;  // q > n - K + 1
    std::optional<PlotkinCheck> plotkin;
    std::optional<PlotkinSocleCheck> plotkin_socle;
    FullCharCase fullchar = FullCharCase::Trivial;
    bool in_socle = false;
    std::vector<std::size_t> zero_coordinates;
    /// Human-readable notes; entries starting with "FALSIFICATION" contradict a theorem or the conjecture.
    std::vector<std::string> findings;

    bool has_falsification() const;
};

BoundReport mhd_report(const LinearCode& code, const Limits& limits = {});

struct AsymptoticPoint {
    Rational delta;
    Rational beta_singleton;  // max(0, 1 - (q-1)/q * delta)
    Rational beta_plotkin;    // max(0, 1 - delta)
};

/// Throws NegativeDelta on any delta < 0, ParameterViolation on q < 2.
std::vector<AsymptoticPoint> asymptotic_curve(std::uint32_t q, const std::vector<Rational>& deltas);
/// points >= 2 evenly spaced values delta_max * i / (points - 1).
std::vector<Rational> delta_grid(const Rational& delta_max, int points);

struct SweepOptions {
    std::size_t max_rows = 3;  // K_max: generator rows per random sample
    std::size_t samples = 500;
    std::uint64_t seed = 1;
    /// Include every rank-1 code <g> when |R|^n is at most this.
    std::uint64_t rank_one_limit = std::uint64_t{1} << 16;
    /// Include every generator matrix with at most this many rows when |R|^{n*rows} <= exhaustive_limit.
    std::size_t exhaustive_rows = 0;
    std::uint64_t exhaustive_limit = std::uint64_t{1} << 16;
    Limits limits{std::uint64_t{1} << 16};
};

struct SweepReport {
    std::string ring;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::size_t codes_checked = 0;
    std::size_t mhd_codes = 0;
    std::size_t mainchar_applicable = 0;
    /// Codes outside mainchar applicability: only the one-sided implication is checked there.
    std::size_t outside_mainchar = 0;
    std::size_t skipped_too_large = 0;
    std::vector<std::string> violations;      // MHD => socle MDS, or the mainchar biconditional, failed
    std::vector<std::string> falsifications;  // fullchar-case prediction failed
    std::vector<std::string> notes;

    bool clean() const { return violations.empty() && falsifications.empty(); }
};

/// Empirical check of: MHD => socle MDS (always), MHD <=> socle MDS when q > n - K + 1,
/// and the case-table predictions. Random samples are drawn with a per-sample
/// deterministic seed so the report does not depend on thread count.
SweepReport verify_equivalence_theorem(RingPtr ring, std::size_t n, const SweepOptions& options,
                                       const std::vector<LinearCode>& extra = {});

/// Every consistency check the sweep applies to one code; appends messages to the report.
void check_code_against_theorems(const LinearCode& code, const BoundReport& report, SweepReport& into);

/// Verbatim rendering of a generator matrix, for violation messages.
std::string describe_code(const LinearCode& code);

}  // namespace homcode

#endif
