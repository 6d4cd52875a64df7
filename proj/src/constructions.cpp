#include "homcode/constructions.hpp"

#include "homcode/error.hpp"

#include <algorithm>
#include <numeric>

namespace homcode {

ModuleSpace module_space(RingPtr ring, std::vector<int> subtype) {
    const ChainRing& R = *ring;
    if (subtype.size() != static_cast<std::size_t>(R.s()))
        throw Error(ErrorKind::SubtypeLengthMismatch, "subtype has " + std::to_string(subtype.size()) +
                                                          " entries, ring has s = " + std::to_string(R.s()));
    ModuleSpace V;
    V.ring = ring;
    for (int i = 0; i < R.s(); ++i) {
        if (subtype[i] < 0) throw Error(ErrorKind::SubtypeLengthMismatch, "negative subtype entry");
        for (int c = 0; c < subtype[i]; ++c) {
            V.component_heights.push_back(i);
            for (int e = i; e < R.s(); ++e) {
                if (V.cardinality > (std::uint64_t{1} << 62) / R.q())
                    throw Error(ErrorKind::TooLarge, "|V| exceeds 2^62");
                V.cardinality *= R.q();
            }
        }
    }
    V.rank = V.component_heights.size();
    V.subtype = std::move(subtype);
    return V;
}

std::uint64_t ModuleSpace::index_of(const Word& v) const {
    if (v.size() != rank) throw Error(ErrorKind::LengthMismatch, "vector length differs from K");
    std::uint64_t idx = 0;
    for (std::size_t j = 0; j < rank; ++j) {
        const int h = component_heights[j];
        if (ring->height(v[j]) < h) throw Error(ErrorKind::IndexOutOfRange, "coordinate outside its ideal");
        idx = idx * ring->transversal_size(ring->s() - h) + ring->divide_gamma_pow(v[j], h).value;
    }
    return idx;
}

Word ModuleSpace::vector_at(std::uint64_t index) const {
    if (index >= cardinality) throw Error(ErrorKind::IndexOutOfRange, "index past |V|");
    Word v(rank);
    for (std::size_t jj = rank; jj-- > 0;) {
        const int h = component_heights[jj];
        const std::uint32_t radix = ring->transversal_size(ring->s() - h);
        v[jj] = RingElement{static_cast<std::uint32_t>(index % radix) * ring->transversal_size(h)};
        index /= radix;
    }
    return v;
}

std::vector<Word> enumerate_space(const ModuleSpace& V, const Limits& limits) {
    if (V.cardinality > limits.max_cardinality)
        throw Error(ErrorKind::TooLarge, "|V| = " + std::to_string(V.cardinality) + " exceeds the enumeration guard");
    std::vector<Word> out;
    out.reserve(V.cardinality);
    for (std::uint64_t i = 0; i < V.cardinality; ++i) out.push_back(V.vector_at(i));
    return out;
}

bool OrbitDecomposition::sizes_match_formula() const {
    return std::all_of(orbits.begin(), orbits.end(), [](const Orbit& o) { return o.size == o.formula_size; });
}

std::uint64_t OrbitDecomposition::total_size() const {
    std::uint64_t t = 0;
    for (const auto& o : orbits) t += o.size;
    return t;
}

OrbitDecomposition orbit_decompose(const ModuleSpace& V, const Limits& limits) {
    if (V.cardinality > limits.max_cardinality)
        throw Error(ErrorKind::TooLarge, "|V| = " + std::to_string(V.cardinality) + " exceeds the enumeration guard");
    const ChainRing& R = *V.ring;
    const auto units = R.enumerate_units();
    std::vector<bool> seen(V.cardinality, false);
    OrbitDecomposition out;
    Word w(V.rank);
    for (std::uint64_t i = 1; i < V.cardinality; ++i) {
        if (seen[i]) continue;
        Orbit o;
        o.representative = V.vector_at(i);
        for (RingElement u : units) {
            for (std::size_t j = 0; j < V.rank; ++j) w[j] = R.mul(u, o.representative[j]);
            o.members.push_back(V.index_of(w));
        }
        std::sort(o.members.begin(), o.members.end());
        o.members.erase(std::unique(o.members.begin(), o.members.end()), o.members.end());
        for (auto m : o.members) seen[m] = true;
        o.size = o.members.size();
        o.min_height = R.s();
        for (RingElement e : o.representative) o.min_height = std::min(o.min_height, R.height(e));
        o.formula_size = static_cast<std::uint64_t>(R.transversal_size(R.s() - o.min_height - 1)) * (R.q() - 1);
        out.gcd_of_sizes = std::gcd(out.gcd_of_sizes, o.size);
        out.orbits.push_back(std::move(o));
    }
    return out;
}

namespace {

LinearCode code_from_columns(const ModuleSpace& V, const std::vector<std::uint64_t>& columns) {
    std::vector<Word> rows(V.rank, Word(columns.size()));
    for (std::size_t c = 0; c < columns.size(); ++c) {
        const Word v = V.vector_at(columns[c]);
        for (std::size_t r = 0; r < V.rank; ++r) rows[r][c] = v[r];
    }
    return LinearCode::make(V.ring, columns.size(), rows);
}

void require_nonzero(const ModuleSpace& V) {
    if (V.rank == 0) throw Error(ErrorKind::ParameterViolation, "subtype must have at least one nonzero entry");
}

}  // namespace

LinearCode long_code(RingPtr ring, std::vector<int> subtype, const Limits& limits) {
    const ModuleSpace V = module_space(std::move(ring), std::move(subtype));
    require_nonzero(V);
    if (V.cardinality > limits.max_cardinality)
        throw Error(ErrorKind::TooLarge, "|V| = " + std::to_string(V.cardinality) + " exceeds the enumeration guard");
    std::vector<std::uint64_t> cols(V.cardinality - 1);
    std::iota(cols.begin(), cols.end(), std::uint64_t{1});
    return code_from_columns(V, cols);
}

LinearCode min_constant_weight_code(RingPtr ring, std::vector<int> subtype, const Limits& limits) {
    const ModuleSpace V = module_space(std::move(ring), std::move(subtype));
    require_nonzero(V);
    const auto dec = orbit_decompose(V, limits);
    const std::uint32_t q = V.ring->q();
    std::vector<std::uint64_t> cols;
    for (const auto& o : dec.orbits)
        cols.insert(cols.end(), o.members.begin(), o.members.begin() + static_cast<std::ptrdiff_t>(o.size / (q - 1)));
    std::sort(cols.begin(), cols.end());
    return code_from_columns(V, cols);
}

LinearCode replicate(const LinearCode& code, int ell) {
    if (ell < 1) throw Error(ErrorKind::BadReplication, "replication factor " + std::to_string(ell) + " < 1");
    const std::size_t n = code.length();
    std::vector<Word> rows;
    for (const Word& g : code.generators().row_vectors()) {
        Word r;
        r.reserve(n * static_cast<std::size_t>(ell));
        for (int i = 0; i < ell; ++i) r.insert(r.end(), g.begin(), g.end());
        rows.push_back(std::move(r));
    }
    return LinearCode::make(code.ring_ptr(), n * static_cast<std::size_t>(ell), rows);
}

LiftResult lift_code(RingPtr ring, const FqCode& code, const std::vector<int>& row_heights) {
    const ChainRing& R = *ring;
    if (!(code.field().descriptor() == R.field().descriptor()))
        throw Error(ErrorKind::RingMismatch, "code field is not the residue field of " + R.name());
    const FqMatrix& D = code.generators;
    if (row_heights.size() != D.rows())
        throw Error(ErrorKind::LengthMismatch, "need one height per row (" + std::to_string(D.rows()) + ")");
    std::vector<Word> rows(D.rows(), Word(D.cols()));
    for (std::size_t i = 0; i < D.rows(); ++i) {
        const int h = row_heights[i];
        if (h < 0 || h >= R.s())
            throw Error(ErrorKind::HeightOutOfRange, "height " + std::to_string(h) + " outside [0, s-1]");
        for (std::size_t j = 0; j < D.cols(); ++j) rows[i][j] = R.mul(R.gamma_pow(h), R.lift(D.at(i, j)));
    }
    LiftResult out{LinearCode::make(ring, D.cols(), rows), false};
    out.socle_matches = same_row_space(socle_code(out.code).generators, D);
    return out;
}

FqCode extended_reed_solomon(FieldPtr field, std::size_t n, std::size_t k) {
    const Field& F = *field;
    if (k < 1 || k > n || n > F.q() + 1)
        throw Error(ErrorKind::ParameterViolation, "need 1 <= k <= n <= q + 1");
    FqMatrix G(field, k, n);
    const auto pts = F.elements();
    for (std::size_t j = 0; j < n && j < F.q(); ++j) {
        FieldElement pw = F.one();
        for (std::size_t i = 0; i < k; ++i) {
            G.at(i, j) = pw;
            pw = F.mul(pw, pts[j]);
        }
    }
    if (n == F.q() + 1) G.at(k - 1, n - 1) = F.one();
    return FqCode(G);
}

LinearCode example_family_tighter_singleton(int p, int s, std::size_t n) {
    if (!is_prime(p)) throw Error(ErrorKind::ParameterViolation, "p = " + std::to_string(p) + " is not prime");
    if (n < 2 || static_cast<std::size_t>(p) < n)
        throw Error(ErrorKind::ParameterViolation, "need 2 <= n <= p");
    if (s < 1) throw Error(ErrorKind::ParameterViolation, "need s >= 1");
    auto R = ChainRing::integer_modular(p, s);
    std::vector<Word> rows(2, Word(n));
    rows[0][0] = R->one();
    for (std::size_t j = 2; j < n; ++j) rows[0][j] = R->one();
    for (std::size_t j = 0; j < n; ++j) rows[1][j] = R->from_int(static_cast<std::int64_t>(j));
    return LinearCode::make(R, n, rows);
}

}  // namespace homcode
