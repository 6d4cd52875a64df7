#include "homcode/ring_linalg.hpp"

#include "homcode/error.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace homcode {

RingMatrix::RingMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, RingElement{0}) {}

RingMatrix::RingMatrix(RingPtr ring, const std::vector<Word>& rows, std::size_t cols)
    : RingMatrix(std::move(ring), rows.size(), cols) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw Error(ErrorKind::LengthMismatch, "row " + std::to_string(i) + " has length " +
                                                       std::to_string(rows[i].size()) + ", expected " +
                                                       std::to_string(cols));
        for (std::size_t j = 0; j < cols; ++j) {
            if (!ring_->contains(rows[i][j]))
                throw Error(ErrorKind::RingMismatch, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                         ") is not an element of " + ring_->name());
            at(i, j) = rows[i][j];
        }
    }
}

RingMatrix RingMatrix::identity(RingPtr ring, std::size_t n) {
    RingMatrix m(std::move(ring), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = m.ring().one();
    return m;
}

std::vector<Word> RingMatrix::row_vectors() const {
    std::vector<Word> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row_vector(i));
    return out;
}

RingMatrix RingMatrix::transpose() const {
    RingMatrix t(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RingMatrix RingMatrix::permute_columns(const std::vector<std::size_t>& perm) const {
    RingMatrix out(ring_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, perm[j]);
    return out;
}

RingMatrix RingMatrix::unpermute_columns(const std::vector<std::size_t>& perm) const {
    RingMatrix out(ring_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, perm[j]) = at(i, j);
    return out;
}

bool RingMatrix::operator==(const RingMatrix& other) const {
    return ring_->same_ring(*other.ring_) && rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

RingMatrix matrix_mul(const RingMatrix& a, const RingMatrix& b) {
    require_same_ring(a.ring(), b.ring());
    if (a.cols() != b.rows())
        throw Error(ErrorKind::DimensionMismatch, std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                                      " times " + std::to_string(b.rows()) + "x" +
                                                      std::to_string(b.cols()));
    const ChainRing& R = a.ring();
    RingMatrix c(a.ring_ptr(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            RingElement aik = a.at(i, k);
            if (aik.value == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) = R.add(c.at(i, j), R.mul(aik, b.at(k, j)));
        }
    return c;
}

namespace {

// Row/column operations applied to G, mirrored on U and U^{-1}.
class Reducer {
public:
    explicit Reducer(const RingMatrix& g)
        : R_(g.ring()),
          g_(g),
          u_(RingMatrix::identity(g.ring_ptr(), g.rows())),
          uinv_(RingMatrix::identity(g.ring_ptr(), g.rows())),
          perm_(g.cols()) {
        std::iota(perm_.begin(), perm_.end(), std::size_t{0});
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < g_.cols(); ++j) std::swap(g_.at(a, j), g_.at(b, j));
        for (std::size_t j = 0; j < u_.cols(); ++j) std::swap(u_.at(a, j), u_.at(b, j));
        for (std::size_t i = 0; i < uinv_.rows(); ++i) std::swap(uinv_.at(i, a), uinv_.at(i, b));
    }

    // Moves column `from` to position `to` (to <= from), shifting the others right.
    void rotate_column(std::size_t to, std::size_t from) {
        if (to == from) return;
        for (std::size_t i = 0; i < g_.rows(); ++i) {
            auto row = g_.row(i);
            std::rotate(row.begin() + static_cast<std::ptrdiff_t>(to), row.begin() + static_cast<std::ptrdiff_t>(from),
                        row.begin() + static_cast<std::ptrdiff_t>(from) + 1);
        }
        std::rotate(perm_.begin() + static_cast<std::ptrdiff_t>(to), perm_.begin() + static_cast<std::ptrdiff_t>(from),
                    perm_.begin() + static_cast<std::ptrdiff_t>(from) + 1);
    }

    void scale_row(std::size_t a, RingElement unit) {
        RingElement inv = R_.unit_inverse(unit);
        for (std::size_t j = 0; j < g_.cols(); ++j) g_.at(a, j) = R_.mul(unit, g_.at(a, j));
        for (std::size_t j = 0; j < u_.cols(); ++j) u_.at(a, j) = R_.mul(unit, u_.at(a, j));
        for (std::size_t i = 0; i < uinv_.rows(); ++i) uinv_.at(i, a) = R_.mul(uinv_.at(i, a), inv);
    }

    // row b -= c * row a
    void subtract_multiple(std::size_t b, std::size_t a, RingElement c) {
        if (c.value == 0) return;
        for (std::size_t j = 0; j < g_.cols(); ++j) g_.at(b, j) = R_.sub(g_.at(b, j), R_.mul(c, g_.at(a, j)));
        for (std::size_t j = 0; j < u_.cols(); ++j) u_.at(b, j) = R_.sub(u_.at(b, j), R_.mul(c, u_.at(a, j)));
        for (std::size_t i = 0; i < uinv_.rows(); ++i)
            uinv_.at(i, a) = R_.add(uinv_.at(i, a), R_.mul(c, uinv_.at(i, b)));
    }

    const ChainRing& R_;
    RingMatrix g_;
    RingMatrix u_;
    RingMatrix uinv_;
    std::vector<std::size_t> perm_;
};

}  // namespace

StandardFormResult standard_form(const RingMatrix& g) {
    const ChainRing& R = g.ring();
    const std::size_t m = g.rows(), n = g.cols();
    const int s = R.s();
    Reducer red(g);
    std::vector<int> heights;
    std::vector<int> subtype(s, 0);
    std::size_t k = 0;

    for (int h = 0; h < s; ++h) {
        while (k < m && k < n) {
            bool found = false;
            std::size_t pr = 0, pc = 0;
            for (std::size_t j = k; j < n && !found; ++j)
                for (std::size_t i = k; i < m; ++i)
                    if (R.height(red.g_.at(i, j)) == h) {
                        pr = i;
                        pc = j;
                        found = true;
                        break;
                    }
            if (!found) break;
            red.swap_rows(k, pr);
            red.rotate_column(k, pc);
            red.scale_row(k, R.unit_inverse(R.divide_gamma_pow(red.g_.at(k, k), h)));
            for (std::size_t i = 0; i < m; ++i) {
                if (i == k) continue;
                RingElement b = red.g_.at(i, k);
                if (b.value == 0) continue;
                if (i > k) {
                    red.subtract_multiple(i, k, R.divide_gamma_pow(b, h));
                } else {
                    RingElement rep = R.reduce_mod_gamma_pow(b, h);
                    red.subtract_multiple(i, k, R.divide_gamma_pow(R.sub(b, rep), h));
                }
            }
            heights.push_back(h);
            ++subtype[h];
            ++k;
        }
    }

    RingMatrix top(g.ring_ptr(), k, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) top.at(i, j) = red.g_.at(i, j);
    return StandardFormResult{std::move(top),      std::move(subtype), std::move(heights),
                              std::move(red.perm_), std::move(red.u_),  std::move(red.uinv_)};
}

RingMatrix parity_check(const StandardFormResult& sf, std::size_t n) {
    const RingMatrix& S = sf.matrix;
    const ChainRing& R = S.ring();
    const int s = R.s();
    const std::size_t K = sf.rank();
    if (S.cols() != n || n < K)
        throw Error(ErrorKind::DimensionMismatch, "standard form has " + std::to_string(S.cols()) +
                                                      " columns, rank " + std::to_string(K) + ", n=" +
                                                      std::to_string(n));

    // Back-substitution: gamma^{h_i} y_i = -sum_{j>i} S_ij y_j for i below `top`.
    auto solve = [&](Word& y, std::size_t top) {
        for (std::size_t ii = top; ii-- > 0;) {
            RingElement t = R.zero();
            for (std::size_t j = ii + 1; j < n; ++j) t = R.add(t, R.mul(S.at(ii, j), y[j]));
            y[ii] = R.divide_gamma_pow(R.neg(t), sf.pivot_heights[ii]);
        }
    };

    std::vector<Word> rows;
    for (std::size_t f = K; f < n; ++f) {
        Word y(n, R.zero());
        y[f] = R.one();
        solve(y, K);
        rows.push_back(std::move(y));
    }
    for (std::size_t i0 = 0; i0 < K; ++i0) {
        const int h = sf.pivot_heights[i0];
        if (h == 0) continue;
        Word y(n, R.zero());
        y[i0] = R.gamma_pow(s - h);
        solve(y, i0);
        rows.push_back(std::move(y));
    }

    RingMatrix h_perm(S.ring_ptr(), rows, n);
    RingMatrix h = h_perm.unpermute_columns(sf.column_permutation);

    // Postconditions.
    RingMatrix prod = matrix_mul(sf.generator_in_input_order(), h.transpose());
    for (std::size_t i = 0; i < prod.rows(); ++i)
        for (std::size_t j = 0; j < prod.cols(); ++j)
            if (prod.at(i, j).value != 0) throw std::logic_error("parity_check: G * H^T != 0");
    auto exponent = [s](const std::vector<int>& subtype) {
        long e = 0;
        for (int i = 0; i < s; ++i) e += static_cast<long>(s - i) * subtype[i];
        return e;
    };
    if (exponent(sf.subtype) + exponent(standard_form(h).subtype) != static_cast<long>(s) * static_cast<long>(n))
        throw std::logic_error("parity_check: |C| * |H| != |R|^n");
    return h;
}

FqMatrix::FqMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, FieldElement{0}) {}

FqMatrix::FqMatrix(FieldPtr field, const std::vector<std::vector<FieldElement>>& rows, std::size_t cols)
    : FqMatrix(std::move(field), rows.size(), cols) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw Error(ErrorKind::LengthMismatch, "row " + std::to_string(i) + " has length " +
                                                       std::to_string(rows[i].size()) + ", expected " +
                                                       std::to_string(cols));
        for (std::size_t j = 0; j < cols; ++j) at(i, j) = rows[i][j];
    }
}

bool FqMatrix::operator==(const FqMatrix& other) const {
    return field_->descriptor() == other.field_->descriptor() && rows_ == other.rows_ && cols_ == other.cols_ &&
           data_ == other.data_;
}

FqMatrix fq_mul(const FqMatrix& a, const FqMatrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "F_q matrix product");
    const Field& F = a.field();
    FqMatrix c(a.field_ptr(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) = F.add(c.at(i, j), F.mul(a.at(i, k), b.at(k, j)));
    return c;
}

RrefResult fq_rref(const FqMatrix& in) {
    const Field& F = in.field();
    FqMatrix m = in;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m.at(p, c).value == 0) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(p, j));
        FieldElement inv = F.inv(m.at(r, c));
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) = F.mul(inv, m.at(r, j));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).value == 0) continue;
            FieldElement f = m.at(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    FqMatrix top(in.field_ptr(), r, in.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < in.cols(); ++j) top.at(i, j) = m.at(i, j);
    return RrefResult{std::move(top), r, std::move(pivots)};
}

bool same_row_space(const FqMatrix& a, const FqMatrix& b) {
    if (a.cols() != b.cols()) return false;
    return fq_rref(a).rref == fq_rref(b).rref;
}

}  // namespace homcode
