#ifndef HOMCODE_CHAIN_RING_HPP
#define HOMCODE_CHAIN_RING_HPP

#include "homcode/residue_field.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace homcode {

enum class RingFamily {
    IntegerModular,        // Z/p^s Z, gamma = p
    EisensteinPolynomial,  // F_q[x]/(x^s), gamma = x
};

struct RingDescriptor {
    RingFamily family = RingFamily::IntegerModular;
    int p = 2;
    int r = 1;
    int s = 1;
    /// Only meaningful for EisensteinPolynomial; normalized to {0,1} otherwise.
    std::vector<int> field_modulus{0, 1};

    bool operator==(const RingDescriptor&) const = default;

    static RingDescriptor zps(int p, int s) { return {RingFamily::IntegerModular, p, 1, s, {0, 1}}; }
    static RingDescriptor fqxs(int p, int r, int s, std::vector<int> modulus) {
        return {RingFamily::EisensteinPolynomial, p, r, s, std::move(modulus)};
    }
};

/// Element of a chain ring, packed base q.
///
/// Z/p^s: the integer representative in [0, p^s).
/// F_q[x]/(x^s): sum_i c_i q^i where c_i is the packed FieldElement of the x^i coefficient.
/// In both families gamma^i * a has packed value (a * q^i) mod q^s, so height is the
/// q-adic valuation and [0, q^h) is a transversal of R / <gamma^h>.
struct RingElement {
    std::uint32_t value = 0;
    auto operator<=>(const RingElement&) const = default;
};

using Word = std::vector<RingElement>;

/// Finite commutative chain ring. Immutable after construction.
class ChainRing {
public:
    static std::shared_ptr<const ChainRing> make(const RingDescriptor& desc);
    static std::shared_ptr<const ChainRing> integer_modular(int p, int s);
    static std::shared_ptr<const ChainRing> eisenstein(int p, int r, int s, std::vector<int> modulus = {});

    const RingDescriptor& descriptor() const { return desc_; }
    RingFamily family() const { return desc_.family; }
    int p() const { return desc_.p; }
    int r() const { return desc_.r; }
    int s() const { return desc_.s; }
    std::uint32_t q() const { return q_; }
    std::uint32_t size() const { return size_; }
    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    std::string name() const;

    bool same_ring(const ChainRing& other) const { return desc_ == other.desc_; }

    RingElement zero() const { return {0}; }
    RingElement one() const { return {1}; }
    RingElement gamma() const { return gamma_pow(1); }

    RingElement add(RingElement a, RingElement b) const {
        if (!add_.empty()) return {add_[a.value * size_ + b.value]};
        return add_slow(a, b);
    }
    RingElement mul(RingElement a, RingElement b) const {
        if (!mul_.empty()) return {mul_[a.value * size_ + b.value]};
        return mul_slow(a, b);
    }
    RingElement neg(RingElement a) const { return {neg_[a.value]}; }
    RingElement sub(RingElement a, RingElement b) const { return add(a, neg(b)); }

    /// Largest h <= s with a in <gamma^h>; height(0) = s.
    int height(RingElement a) const { return height_[a.value]; }
    bool is_unit(RingElement a) const { return height_[a.value] == 0; }
    /// Homogeneous weight times (q-1): 0, q-1 or q.
    std::uint32_t weight_scaled(RingElement a) const { return weight_[a.value]; }

    /// gamma^i for 0 <= i <= s.
    RingElement gamma_pow(int i) const;
    /// Elements of <gamma^i>, ascending.
    std::vector<RingElement> enumerate_ideal(int i) const;
    /// All units, ascending.
    std::vector<RingElement> enumerate_units() const;
    /// Canonical representatives of R / <gamma^h>: packed values [0, q^h).
    std::uint32_t transversal_size(int h) const { return qpow_[h]; }

    FieldElement project_residue(RingElement a) const { return {a.value % q_}; }
    /// <gamma^{s-1}> -> F_q. Throws NotInSocle.
    FieldElement socle_iso(RingElement a) const;
    RingElement socle_iso_inv(FieldElement b) const;
    /// Canonical section of project_residue (integer in [0,p) or constant polynomial).
    RingElement lift(FieldElement b) const { return {b.value}; }

    /// Inverse of a unit. Throws DivisionByZero for non-units.
    RingElement unit_inverse(RingElement u) const;
    /// The canonical c in [0, q^{s-h}) with c * gamma^h = a. Requires height(a) >= h.
    RingElement divide_gamma_pow(RingElement a, int h) const;
    /// Canonical representative of a modulo <gamma^h>.
    RingElement reduce_mod_gamma_pow(RingElement a, int h) const { return {a.value % qpow_[h]}; }

    bool contains(RingElement a) const { return a.value < size_; }

    /// x^i coefficient of an F_q[x]/(x^s) element (for Z/p^s: the base-p digit).
    FieldElement coefficient(RingElement a, int i) const { return {(a.value / qpow_[i]) % q_}; }
    RingElement from_coefficients(const std::vector<FieldElement>& coeffs) const;
    /// Image of an integer (n * 1).
    RingElement from_int(std::int64_t v) const;

private:
    explicit ChainRing(RingDescriptor desc, FieldPtr field);

    RingElement add_slow(RingElement a, RingElement b) const;
    RingElement mul_slow(RingElement a, RingElement b) const;

    RingDescriptor desc_;
    FieldPtr field_;
    std::uint32_t q_ = 0;
    std::uint32_t size_ = 0;
    std::vector<std::uint32_t> qpow_;  // q^0 .. q^s
    std::vector<std::uint32_t> add_;
    std::vector<std::uint32_t> mul_;
    std::vector<std::uint32_t> neg_;
    std::vector<std::uint8_t> height_;
    std::vector<std::uint32_t> weight_;
};

using RingPtr = std::shared_ptr<const ChainRing>;

void require_same_ring(const ChainRing& a, const ChainRing& b);

}  // namespace homcode

#endif
