#include "homcode/code.hpp"

#include "homcode/error.hpp"
#include "homcode/kernels.hpp"

#include <algorithm>
#include <string>

namespace homcode {

LinearCode::LinearCode(RingMatrix generators) : generators_(std::move(generators)), sf_(standard_form(generators_)) {}

LinearCode LinearCode::make(RingPtr ring, std::size_t n, const std::vector<Word>& rows) {
    return LinearCode(RingMatrix(std::move(ring), rows, n));
}

Rational LinearCode::dimension() const { return Rational(cardinality_exponent(), ring().s()); }

long LinearCode::cardinality_exponent() const {
    const int s = ring().s();
    long e = 0;
    for (int i = 0; i < s; ++i) e += static_cast<long>(s - i) * sf_.subtype[i];
    return e;
}

std::uint64_t LinearCode::cardinality() const {
    std::uint64_t c = 1;
    const std::uint64_t q = ring().q();
    for (long i = 0; i < cardinality_exponent(); ++i) {
        if (c > (std::uint64_t{1} << 62) / q)
            throw Error(ErrorKind::TooLarge, "|C| = " + std::to_string(q) + "^" +
                                                 std::to_string(cardinality_exponent()) + " overflows");
        c *= q;
    }
    return c;
}

bool LinearCode::fits(const Limits& limits) const {
    // log_q bound first so that cardinality() cannot overflow.
    std::uint64_t c = 1;
    const std::uint64_t q = ring().q();
    for (long i = 0; i < cardinality_exponent(); ++i) {
        c *= q;
        if (c > limits.max_cardinality) return false;
    }
    return true;
}

void LinearCode::require_enumerable(const Limits& limits) const {
    if (!fits(limits))
        throw Error(ErrorKind::TooLarge, "|C| = " + std::to_string(ring().q()) + "^" +
                                             std::to_string(cardinality_exponent()) + " exceeds limit " +
                                             std::to_string(limits.max_cardinality));
}

std::vector<std::size_t> LinearCode::zero_coordinates() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < length(); ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < generators_.rows() && zero; ++i) zero = generators_.at(i, j).value == 0;
        if (zero) out.push_back(j);
    }
    return out;
}

bool LinearCode::in_socle() const {
    const int s = ring().s();
    for (std::size_t i = 0; i < generators_.rows(); ++i)
        for (RingElement e : generators_.row(i))
            if (ring().height(e) < s - 1) return false;
    return true;
}

FqCode::FqCode(FqMatrix gens) : generators(std::move(gens)), dimension(fq_rref(generators).rank) {}

AdditiveBasis additive_basis(const LinearCode& code) {
    const ChainRing& R = code.ring();
    const RingMatrix G = code.standard().generator_in_input_order();
    const int s = R.s();
    AdditiveBasis basis;
    for (std::size_t i = 0; i < G.rows(); ++i) {
        const int h = code.standard().pivot_heights[i];
        Word row = G.row_vector(i);
        if (R.family() == RingFamily::IntegerModular) {
            // Coefficients [0, p^{s-h}) form a cyclic group generated by 1.
            basis.generators.push_back(row);
            basis.orders.push_back(R.transversal_size(s - h));
        } else {
            // Base-p digits of the packed coefficient: elements p^e, each of additive order p.
            std::uint32_t scalar = 1;
            const int digits = R.r() * (s - h);
            for (int e = 0; e < digits; ++e) {
                Word g(row.size());
                for (std::size_t j = 0; j < row.size(); ++j) g[j] = R.mul({scalar}, row[j]);
                basis.generators.push_back(std::move(g));
                basis.orders.push_back(static_cast<std::uint32_t>(R.p()));
                scalar *= static_cast<std::uint32_t>(R.p());
            }
        }
    }
    return basis;
}

std::vector<Word> enumerate_codewords(const LinearCode& code, const Limits& limits) {
    code.require_enumerable(limits);
    const AdditiveBasis basis = additive_basis(code);
    const std::uint64_t total = code.cardinality();
    std::vector<Word> out;
    out.reserve(total);
    kernels::for_each_codeword(code.ring(), basis, code.length(), 0, total,
                               [&](std::uint64_t, const RingElement* w) { out.emplace_back(w, w + code.length()); });
    return out;
}

bool membership(const LinearCode& code, const Word& w) {
    if (w.size() != code.length())
        throw Error(ErrorKind::LengthMismatch, "word of length " + std::to_string(w.size()) + ", code length " +
                                                   std::to_string(code.length()));
    const ChainRing& R = code.ring();
    const StandardFormResult& sf = code.standard();
    Word x(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (!R.contains(w[sf.column_permutation[j]])) return false;
        x[j] = w[sf.column_permutation[j]];
    }
    for (std::size_t i = 0; i < sf.rank(); ++i) {
        const int h = sf.pivot_heights[i];
        if (R.height(x[i]) < h) return false;
        RingElement c = R.divide_gamma_pow(x[i], h);
        for (std::size_t j = 0; j < x.size(); ++j) x[j] = R.sub(x[j], R.mul(c, sf.matrix.at(i, j)));
    }
    return std::all_of(x.begin(), x.end(), [](RingElement e) { return e.value == 0; });
}

bool same_code(const LinearCode& a, const LinearCode& b) {
    if (!a.ring().same_ring(b.ring()) || a.length() != b.length()) return false;
    if (a.subtype() != b.subtype()) return false;
    for (std::size_t i = 0; i < a.generators().rows(); ++i)
        if (!membership(b, a.generators().row_vector(i))) return false;
    return true;
}

FqCode socle_code(const LinearCode& code) {
    const ChainRing& R = code.ring();
    const int s = R.s();
    const RingMatrix G = code.standard().generator_in_input_order();
    FqMatrix m(R.field_ptr(), G.rows(), G.cols());
    for (std::size_t i = 0; i < G.rows(); ++i) {
        RingElement lift = R.gamma_pow(s - 1 - code.standard().pivot_heights[i]);
        for (std::size_t j = 0; j < G.cols(); ++j) m.at(i, j) = R.socle_iso(R.mul(lift, G.at(i, j)));
    }
    return FqCode(std::move(m));
}

LinearCode dual(const LinearCode& code) { return LinearCode(parity_check(code.standard(), code.length())); }

Word orbit_representative(const ChainRing& R, const Word& v) {
    Word best = v;
    Word cand(v.size());
    for (RingElement u : R.enumerate_units()) {
        for (std::size_t j = 0; j < v.size(); ++j) cand[j] = R.mul(u, v[j]);
        if (cand < best) best = cand;
    }
    return best;
}

OrbitFingerprint column_orbit_fingerprint(const LinearCode& code) {
    const RingMatrix& G = code.generators();
    OrbitFingerprint fp;
    for (std::size_t j = 0; j < G.cols(); ++j) {
        Word col(G.rows());
        bool zero = true;
        for (std::size_t i = 0; i < G.rows(); ++i) {
            col[i] = G.at(i, j);
            zero = zero && col[i].value == 0;
        }
        if (zero) {
            ++fp.degenerate_columns;
            continue;
        }
        ++fp.counts[orbit_representative(code.ring(), col)];
    }
    return fp;
}

}  // namespace homcode
