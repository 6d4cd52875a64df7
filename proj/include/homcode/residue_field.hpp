#ifndef HOMCODE_RESIDUE_FIELD_HPP
#define HOMCODE_RESIDUE_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

namespace homcode {

/// Element of F_{p^r} in polynomial basis, packed as sum_j c_j p^j.
///
/// The packed value is a dense index in [0, q); index order equals
/// lexicographic order on (c_{r-1}, ..., c_0).
struct FieldElement {
    std::uint32_t value = 0;
    auto operator<=>(const FieldElement&) const = default;
};

struct FieldDescriptor {
    int p = 2;
    int r = 1;
    /// Monic modulus, low-to-high, length r + 1.
    std::vector<int> modulus{0, 1};

    bool operator==(const FieldDescriptor&) const = default;
};

bool is_prime(std::int64_t n);

/// Exhaustive trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(int p, const std::vector<int>& monic_low_to_high);

/// Shipped moduli for (2,2), (2,3), (2,4), (3,2), (3,3), (5,2), (7,2), plus x for every r = 1.
/// Throws ParameterViolation when no default exists.
std::vector<int> default_modulus(int p, int r);

/// Finite field F_{p^r}. Immutable; arithmetic is table-driven.
class Field {
public:
    /// Validates p, degree, monicity and irreducibility.
    static std::shared_ptr<const Field> make(const FieldDescriptor& desc);
    static std::shared_ptr<const Field> make(int p, int r, std::vector<int> modulus);

    const FieldDescriptor& descriptor() const { return desc_; }
    int p() const { return desc_.p; }
    int r() const { return desc_.r; }
    std::uint32_t q() const { return q_; }

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }

    FieldElement add(FieldElement a, FieldElement b) const { return {add_[a.value * q_ + b.value]}; }
    FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
    FieldElement mul(FieldElement a, FieldElement b) const { return {mul_[a.value * q_ + b.value]}; }
    FieldElement neg(FieldElement a) const { return {neg_[a.value]}; }
    /// Throws DivisionByZero on zero.
    FieldElement inv(FieldElement a) const;

    std::vector<int> coeffs(FieldElement a) const;
    /// Coefficients low-to-high; missing high coefficients are zero, each reduced mod p.
    FieldElement from_coeffs(const std::vector<int>& coeffs) const;
    FieldElement from_int(std::int64_t v) const;  // image of an integer in the prime field

    /// All q elements in index order, zero first.
    std::vector<FieldElement> elements() const;

    bool contains(FieldElement a) const { return a.value < q_; }

private:
    explicit Field(FieldDescriptor desc);

    FieldDescriptor desc_;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> add_;
    std::vector<std::uint32_t> mul_;
    std::vector<std::uint32_t> neg_;
    std::vector<std::uint32_t> inv_;
};

using FieldPtr = std::shared_ptr<const Field>;

}  // namespace homcode

#endif
