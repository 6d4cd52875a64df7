#ifndef HOMCODE_RING_LINALG_HPP
#define HOMCODE_RING_LINALG_HPP

#include "homcode/chain_ring.hpp"
#include "homcode/residue_field.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace homcode {

/// Dense row-major matrix over a chain ring.
class RingMatrix {
public:
    RingMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
    /// Throws LengthMismatch if a row does not have `cols` entries, RingMismatch on foreign values.
    RingMatrix(RingPtr ring, const std::vector<Word>& rows, std::size_t cols);

    static RingMatrix identity(RingPtr ring, std::size_t n);

    const RingPtr& ring_ptr() const { return ring_; }
    const ChainRing& ring() const { return *ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    RingElement& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    RingElement at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::span<RingElement> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const RingElement> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    Word row_vector(std::size_t i) const { return Word(row(i).begin(), row(i).end()); }
    std::vector<Word> row_vectors() const;

    RingMatrix transpose() const;
    /// Columns reordered so that column j of the result is column perm[j] of this matrix.
    RingMatrix permute_columns(const std::vector<std::size_t>& perm) const;
    /// Inverse of permute_columns.
    RingMatrix unpermute_columns(const std::vector<std::size_t>& perm) const;

    bool operator==(const RingMatrix& other) const;

private:
    RingPtr ring_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<RingElement> data_;
};

/// Throws DimensionMismatch unless a.cols() == b.rows(); RingMismatch on different rings.
RingMatrix matrix_mul(const RingMatrix& a, const RingMatrix& b);
inline RingMatrix row_transform_apply(const RingMatrix& u, const RingMatrix& g) { return matrix_mul(u, g); }

struct StandardFormResult {
    /// K x n, columns in permuted order; row i has pivot gamma^{pivot_heights[i]} at column i.
    RingMatrix matrix;
    /// (k_0, ..., k_{s-1}).
    std::vector<int> subtype;
    std::vector<int> pivot_heights;
    /// Column j of `matrix` is column column_permutation[j] of the input.
    std::vector<std::size_t> column_permutation;
    /// Invertible m x m; the first K rows of U * G * P equal `matrix`, the rest are zero.
    RingMatrix row_transform;
    RingMatrix row_transform_inverse;

    std::size_t rank() const { return pivot_heights.size(); }
    /// `matrix` with the columns put back in input order.
    RingMatrix generator_in_input_order() const { return matrix.unpermute_columns(column_permutation); }
};

/// Chain-ring echelon reduction. Pivots are taken level by level (height 0 first),
/// then by smallest input column, then smallest row; entries above a pivot of height h
/// are reduced to canonical representatives modulo gamma^h.
StandardFormResult standard_form(const RingMatrix& g);

/// Generator matrix of the dual code (n - k_0 rows, input column order).
/// Rows come from solving the standard-form system; G * H^T = 0 and
/// |span G| * |span H| = |R|^n are checked before returning.
RingMatrix parity_check(const StandardFormResult& sf, std::size_t n);

/// Dense row-major matrix over F_q.
class FqMatrix {
public:
    FqMatrix(FieldPtr field, std::size_t rows, std::size_t cols);
    FqMatrix(FieldPtr field, const std::vector<std::vector<FieldElement>>& rows, std::size_t cols);

    const FieldPtr& field_ptr() const { return field_; }
    const Field& field() const { return *field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    FieldElement& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    FieldElement at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::span<const FieldElement> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    bool operator==(const FqMatrix& other) const;

private:
    FieldPtr field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<FieldElement> data_;
};

FqMatrix fq_mul(const FqMatrix& a, const FqMatrix& b);

struct RrefResult {
    FqMatrix rref;  // nonzero rows only
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

RrefResult fq_rref(const FqMatrix& m);

/// True iff the two matrices have the same row space.
bool same_row_space(const FqMatrix& a, const FqMatrix& b);

}  // namespace homcode

#endif
