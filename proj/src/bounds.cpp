#include "homcode/bounds.hpp"

#include "homcode/constructions.hpp"
#include "homcode/error.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <random>
#include <sstream>

namespace homcode {

std::int64_t floor_h(const Rational& x) { return is_integer(x) ? x.numerator() - 1 : floor(x); }

SingletonCheck singleton_check(std::size_t n, std::size_t rank, const WeightValue& d, std::uint32_t q) {
    // With d = S/(q-1) and M = q/(q-1): (d-1)/M = (S-(q-1))/q and d/M = S/q.
    const auto S = static_cast<std::int64_t>(d.value().numerator() * (static_cast<std::int64_t>(q) - 1) /
                                             d.value().denominator());
    const auto nk = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(rank);
    SingletonCheck c;
    c.old_lhs = floor(Rational(S - (static_cast<std::int64_t>(q) - 1), q));
    c.old_holds = c.old_lhs <= nk;
    c.old_slack = nk - c.old_lhs;
    c.new_lhs = floor_h(Rational(S, q));
    c.new_holds = c.new_lhs <= nk;
    c.new_slack = nk - c.new_lhs;
    return c;
}

SingletonCheck singleton_check(const LinearCode& code, const Limits& limits) {
    return singleton_check(code.length(), code.rank(), d_hom(code, limits), code.ring().q());
}

bool is_mhd(std::size_t n, std::size_t rank, const WeightValue& d, std::uint32_t q) {
    const Rational M(q, static_cast<std::int64_t>(q) - 1);
    return d.value() > M * static_cast<std::int64_t>(n - rank);
}

bool is_mhd(const LinearCode& code, const Limits& limits) {
    return is_mhd(code.length(), code.rank(), d_hom(code, limits), code.ring().q());
}

bool is_mds(const FqCode& code, const Limits& limits) {
    return fq_min_distance(code, limits) == code.length() - code.dimension + 1;
}

std::string_view to_string(FullCharCase c) {
    switch (c) {
        case FullCharCase::Trivial: return "trivial";
        case FullCharCase::SocleOnly: return "socle-only";
        case FullCharCase::LiftedMds: return "lifted-MDS";
        case FullCharCase::ExceptionalQ2Spc: return "exceptional-q2-SPC";
        case FullCharCase::ExceptionalEvenQ: return "exceptional-even-q";
        case FullCharCase::ConjectureExcluded: return "conjecture-excluded";
    }
    return "unknown";
}

FullCharCase fullchar_case(std::uint32_t q, std::size_t n, std::size_t K) {
    if (K == 0 || K == n) return FullCharCase::Trivial;
    if (n > q + 1) {
        if (K == 1) return FullCharCase::SocleOnly;
        if (q == 2 && K == n - 1) return FullCharCase::ExceptionalQ2Spc;
        if (q % 2 == 0 && n == q + 2 && (K == 3 || K == n - 3)) return FullCharCase::ExceptionalEvenQ;
        if (K == n - 1) return FullCharCase::LiftedMds;
        return FullCharCase::ConjectureExcluded;
    }
    if (n == q + 1 && K <= 2) return FullCharCase::SocleOnly;
    if (n == q && K == 1) return FullCharCase::SocleOnly;
    if (static_cast<std::int64_t>(K) > static_cast<std::int64_t>(n) - static_cast<std::int64_t>(q) + 1)
        return FullCharCase::LiftedMds;
    return FullCharCase::ConjectureExcluded;
}

PlotkinCheck plotkin_check(std::uint64_t cardinality, std::size_t n, std::size_t effective_n, const WeightValue& d) {
    if (cardinality <= 1) throw Error(ErrorKind::CodeTooSmall, "Plotkin bound needs |C| >= 2");
    const auto c = static_cast<std::int64_t>(cardinality);
    PlotkinCheck p;
    p.rhs = Rational(c, c - 1) * static_cast<std::int64_t>(n);
    p.holds = d.value() <= p.rhs;
    p.equality = d.value() == p.rhs;
    p.rhs_effective = Rational(c, c - 1) * static_cast<std::int64_t>(effective_n);
    p.equality_effective = d.value() == p.rhs_effective;
    return p;
}

PlotkinCheck plotkin_check(const LinearCode& code, const Limits& limits) {
    const auto rep = distance_report(code, limits);
    return plotkin_check(rep.cardinality, code.length(), code.length() - code.zero_coordinates().size(), rep.d_hom);
}

PlotkinSocleCheck plotkin_socle_check(std::uint64_t cardinality, std::size_t n, std::size_t rank,
                                      const WeightValue& d, std::uint32_t q) {
    if (rank == 0) throw Error(ErrorKind::CodeTooSmall, "socle Plotkin bound needs K >= 1");
    std::int64_t qk = 1;
    for (std::size_t i = 0; i < rank; ++i) {
        if (qk > (std::int64_t{1} << 40)) throw Error(ErrorKind::TooLarge, "q^K does not fit");
        qk *= q;
    }
    PlotkinSocleCheck p;
    p.rhs = Rational(qk, qk - 1) * static_cast<std::int64_t>(n);
    p.holds = d.value() <= p.rhs;
    if (cardinality >= 2) {
        const auto c = static_cast<std::int64_t>(cardinality);
        p.dominates_exact = p.rhs >= Rational(c, c - 1) * static_cast<std::int64_t>(n);
    }
    return p;
}

PlotkinSocleCheck plotkin_socle_check(const LinearCode& code, const Limits& limits) {
    const auto rep = distance_report(code, limits);
    return plotkin_socle_check(rep.cardinality, code.length(), code.rank(), rep.d_hom, code.ring().q());
}

bool BoundReport::has_falsification() const {
    return std::any_of(findings.begin(), findings.end(),
                       [](const std::string& f) { return f.rfind("FALSIFICATION", 0) == 0; });
}

BoundReport mhd_report(const LinearCode& code, const Limits& limits) {
    const ChainRing& R = code.ring();
    BoundReport r(socle_code(code));
    r.n = code.length();
    r.rank = code.rank();
    r.free_rank = code.free_rank();
    r.subtype = code.subtype();
    r.q = R.q();
    r.distance = distance_report(code, limits);
    r.singleton = singleton_check(r.n, r.rank, r.distance.d_hom, r.q);
    r.is_mhd = is_mhd(r.n, r.rank, r.distance.d_hom, r.q);
    r.socle_d_hamming = fq_min_distance(r.socle, limits);
    r.socle_is_mds = r.socle_d_hamming == r.n - r.socle.dimension + 1;
    r.mainchar_applicable = static_cast<std::int64_t>(r.q) > static_cast<std::int64_t>(r.n - r.rank) + 1;
    r.zero_coordinates = code.zero_coordinates();
    if (r.distance.cardinality >= 2)
        r.plotkin = plotkin_check(r.distance.cardinality, r.n, r.n - r.zero_coordinates.size(), r.distance.d_hom);
    if (r.rank >= 1)
        r.plotkin_socle = plotkin_socle_check(r.distance.cardinality, r.n, r.rank, r.distance.d_hom, r.q);
    r.fullchar = fullchar_case(r.q, r.n, r.rank);
    r.in_socle = code.in_socle();

    if (r.socle.dimension != r.rank)
        r.findings.push_back("FALSIFICATION: socle dimension " + std::to_string(r.socle.dimension) +
                             " differs from rank " + std::to_string(r.rank));
    if (!r.singleton.new_holds) r.findings.push_back("FALSIFICATION: homogeneous Singleton bound exceeded");
    if (r.plotkin && !r.plotkin->holds) r.findings.push_back("FALSIFICATION: Plotkin bound exceeded");
    if (r.is_mhd && !r.socle_is_mds) r.findings.push_back("FALSIFICATION: MHD code with non-MDS socle");
    if (r.mainchar_applicable && r.is_mhd != r.socle_is_mds)
        r.findings.push_back("FALSIFICATION: q > n-K+1 but MHD and socle-MDS disagree");
    if (!r.mainchar_applicable)
        r.findings.push_back("outside q > n-K+1: only MHD => socle MDS is guaranteed");

    const std::string label(to_string(r.fullchar));
    bool predicted_ok = true;
    switch (r.fullchar) {
        case FullCharCase::Trivial: predicted_ok = r.is_mhd; break;
        case FullCharCase::SocleOnly: predicted_ok = r.is_mhd == (r.in_socle && r.socle_is_mds); break;
        case FullCharCase::LiftedMds: predicted_ok = r.is_mhd == r.socle_is_mds; break;
        case FullCharCase::ExceptionalQ2Spc:
        case FullCharCase::ExceptionalEvenQ: predicted_ok = !r.is_mhd || r.socle_is_mds; break;
        case FullCharCase::ConjectureExcluded: predicted_ok = !r.is_mhd; break;
    }
    if (!predicted_ok) r.findings.push_back("FALSIFICATION: case " + label + " predicts otherwise");
    return r;
}

std::vector<AsymptoticPoint> asymptotic_curve(std::uint32_t q, const std::vector<Rational>& deltas) {
    if (q < 2) throw Error(ErrorKind::ParameterViolation, "q must be at least 2");
    std::vector<AsymptoticPoint> out;
    out.reserve(deltas.size());
    const Rational slope(static_cast<std::int64_t>(q) - 1, q);
    for (const Rational& d : deltas) {
        if (d < 0) throw Error(ErrorKind::NegativeDelta, "delta = " + to_string(d));
        out.push_back({d, std::max(Rational(0), 1 - slope * d), std::max(Rational(0), 1 - d)});
    }
    return out;
}

std::vector<Rational> delta_grid(const Rational& delta_max, int points) {
    if (points < 2) throw Error(ErrorKind::ParameterViolation, "need at least 2 points");
    if (delta_max < 0) throw Error(ErrorKind::NegativeDelta, "delta_max = " + to_string(delta_max));
    std::vector<Rational> out;
    for (int i = 0; i < points; ++i) out.push_back(delta_max * Rational(i, points - 1));
    return out;
}

std::string describe_code(const LinearCode& code) {
    std::ostringstream os;
    os << code.ring().name() << " n=" << code.length() << " [";
    const auto& G = code.generators();
    for (std::size_t i = 0; i < G.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < G.cols(); ++j) os << (j ? "," : "") << G.at(i, j).value;
        os << "]";
    }
    os << "]";
    return os.str();
}

void check_code_against_theorems(const LinearCode& code, const BoundReport& r, SweepReport& into) {
    ++into.codes_checked;
    if (r.is_mhd) ++into.mhd_codes;
    if (r.mainchar_applicable)
        ++into.mainchar_applicable;
    else
        ++into.outside_mainchar;
    const std::string who = describe_code(code);
    if (r.is_mhd && !r.socle_is_mds) into.violations.push_back("MHD but socle not MDS: " + who);
    if (r.mainchar_applicable && r.is_mhd != r.socle_is_mds)
        into.violations.push_back("q > n-K+1 and MHD != socle MDS: " + who);
    if (r.n == r.q + 1 && r.rank == 2 && r.is_mhd && !r.in_socle)
        into.violations.push_back("n = q+1, K = 2, MHD but not in the socle: " + who);
    if (!r.singleton.new_holds) into.violations.push_back("Singleton bound exceeded: " + who);
    if (r.plotkin && !r.plotkin->holds) into.violations.push_back("Plotkin bound exceeded: " + who);
    if (r.socle.dimension != r.rank) into.violations.push_back("socle dimension != K: " + who);
    for (const auto& f : r.findings)
        if (f.rfind("FALSIFICATION: case", 0) == 0) into.falsifications.push_back(f + ": " + who);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

LinearCode random_code(const RingPtr& ring, std::size_t n, std::size_t max_rows, std::mt19937_64& rng) {
    const ChainRing& R = *ring;
    const int s = R.s();
    auto uniform = [&](std::uint64_t bound) { return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng); };
    const std::size_t m = 1 + uniform(std::max<std::size_t>(max_rows, 1));
    const auto kind = uniform(3);

    if (kind == 1) {
        // lifted: random F_q rows, each placed at a random height
        const Field& F = R.field();
        FqMatrix D(R.field_ptr(), m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) D.at(i, j) = FieldElement{static_cast<std::uint32_t>(uniform(F.q()))};
        std::vector<int> heights(m);
        for (auto& h : heights) h = static_cast<int>(uniform(static_cast<std::uint64_t>(s)));
        return lift_code(ring, FqCode(D), heights).code;
    }
    std::vector<Word> rows(m, Word(n));
    std::vector<bool> dead(n, false);
    if (kind == 2)
        for (std::size_t j = 0; j < n; ++j) dead[j] = uniform(4) == 0;
    for (auto& row : rows) {
        const int h = uniform(2) == 0 ? 0 : static_cast<int>(uniform(static_cast<std::uint64_t>(s)));
        const RingElement g = R.gamma_pow(h);
        for (std::size_t j = 0; j < n; ++j) {
            if (dead[j] || (kind == 2 && uniform(3) == 0)) continue;
            row[j] = R.mul(g, RingElement{static_cast<std::uint32_t>(uniform(R.size()))});
        }
    }
    return LinearCode::make(ring, n, rows);
}

bool power_at_most(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        v *= base;
        if (v > limit) return false;
    }
    return true;
}

// Mixed-radix index -> rows x n matrix, first entry least significant.
std::vector<Word> matrix_at(std::uint64_t idx, std::size_t rows, std::size_t n, std::uint32_t size) {
    std::vector<Word> out(rows, Word(n));
    for (auto& row : out)
        for (auto& e : row) {
            e.value = static_cast<std::uint32_t>(idx % size);
            idx /= size;
        }
    return out;
}

}  // namespace

SweepReport verify_equivalence_theorem(RingPtr ring, std::size_t n, const SweepOptions& opt,
                                       const std::vector<LinearCode>& extra) {
    const ChainRing& R = *ring;
    SweepReport rep;
    rep.ring = R.name();
    rep.n = n;
    rep.seed = opt.seed;

    // Job list: (rows, index) for exhaustive families, then random samples.
    struct Job {
        int kind;  // 0 exhaustive, 1 random
        std::size_t rows;
        std::uint64_t index;
    };
    std::vector<Job> jobs;
    std::size_t exhaustive_from = 1;
    if (power_at_most(R.size(), n, opt.rank_one_limit)) {
        std::uint64_t total = 1;
        for (std::size_t j = 0; j < n; ++j) total *= R.size();
        for (std::uint64_t i = 1; i < total; ++i) jobs.push_back({0, 1, i});
        rep.notes.push_back("all " + std::to_string(total - 1) + " rank-1 generators included");
        exhaustive_from = 2;
    }
    for (std::size_t rows = exhaustive_from; rows <= opt.exhaustive_rows; ++rows) {
        if (!power_at_most(R.size(), n * rows, opt.exhaustive_limit)) break;
        std::uint64_t total = 1;
        for (std::size_t j = 0; j < n * rows; ++j) total *= R.size();
        for (std::uint64_t i = 1; i < total; ++i) jobs.push_back({0, rows, i});
        rep.notes.push_back("all " + std::to_string(total - 1) + " generator matrices with " + std::to_string(rows) +
                            " rows included");
    }
    for (std::uint64_t i = 0; i < opt.samples; ++i) jobs.push_back({1, 0, i});

    const std::size_t J = jobs.size() + extra.size();
    std::vector<SweepReport> parts(J);
    std::vector<char> skipped(J, 0);
    std::vector<std::exception_ptr> errors(J);

#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t jj = 0; jj < static_cast<std::int64_t>(J); ++jj) {
        const auto j = static_cast<std::size_t>(jj);
        try {
            std::optional<LinearCode> code;
            if (j >= jobs.size()) {
                code = extra[j - jobs.size()];
            } else if (jobs[j].kind == 0) {
                code = LinearCode::make(ring, n, matrix_at(jobs[j].index, jobs[j].rows, n, R.size()));
            } else {
                std::mt19937_64 rng(splitmix64(opt.seed * 0x100000001b3ULL + jobs[j].index));
                code = random_code(ring, n, opt.max_rows, rng);
            }
            if (!code->fits(opt.limits)) {
                skipped[j] = 1;
                continue;
            }
            check_code_against_theorems(*code, mhd_report(*code, opt.limits), parts[j]);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::TooLarge)
                skipped[j] = 1;
            else
                errors[j] = std::current_exception();
        } catch (...) {
            errors[j] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    for (std::size_t j = 0; j < J; ++j) {
        if (skipped[j]) {
            ++rep.skipped_too_large;
            continue;
        }
        const SweepReport& p = parts[j];
        rep.codes_checked += p.codes_checked;
        rep.mhd_codes += p.mhd_codes;
        rep.mainchar_applicable += p.mainchar_applicable;
        rep.outside_mainchar += p.outside_mainchar;
        rep.violations.insert(rep.violations.end(), p.violations.begin(), p.violations.end());
        rep.falsifications.insert(rep.falsifications.end(), p.falsifications.begin(), p.falsifications.end());
    }
    return rep;
}

}  // namespace homcode
