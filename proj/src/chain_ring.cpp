#include "homcode/chain_ring.hpp"

#include "homcode/error.hpp"

namespace homcode {

namespace {

constexpr std::uint32_t kMaxRingSize = 1u << 16;
constexpr std::uint32_t kMaxTableRing = 1024;

}  // namespace

void require_same_ring(const ChainRing& a, const ChainRing& b) {
    if (!a.same_ring(b)) throw Error(ErrorKind::RingMismatch, a.name() + " vs " + b.name());
}

RingPtr ChainRing::integer_modular(int p, int s) { return make(RingDescriptor::zps(p, s)); }

RingPtr ChainRing::eisenstein(int p, int r, int s, std::vector<int> modulus) {
    if (modulus.empty()) modulus = default_modulus(p, r);
    return make(RingDescriptor::fqxs(p, r, s, std::move(modulus)));
}

RingPtr ChainRing::make(const RingDescriptor& in) {
    RingDescriptor desc = in;
    if (desc.s < 1) throw Error(ErrorKind::ParameterViolation, "s must be >= 1");
    if (desc.family == RingFamily::IntegerModular) {
        desc.r = 1;
        desc.field_modulus = {0, 1};
    }
    auto field = Field::make(desc.p, desc.r, desc.field_modulus);
    std::uint64_t size = 1;
    for (int i = 0; i < desc.s; ++i) {
        size *= field->q();
        if (size > kMaxRingSize)
            throw Error(ErrorKind::ParameterViolation, "ring size exceeds " + std::to_string(kMaxRingSize));
    }
    return RingPtr(new ChainRing(std::move(desc), std::move(field)));
}

ChainRing::ChainRing(RingDescriptor desc, FieldPtr field) : desc_(std::move(desc)), field_(std::move(field)) {
    q_ = field_->q();
    qpow_.resize(desc_.s + 1);
    qpow_[0] = 1;
    for (int i = 1; i <= desc_.s; ++i) qpow_[i] = qpow_[i - 1] * q_;
    size_ = qpow_[desc_.s];

    neg_.resize(size_);
    height_.resize(size_);
    weight_.resize(size_);
    for (std::uint32_t v = 0; v < size_; ++v) {
        int h = 0;
        if (v == 0) {
            h = desc_.s;
        } else {
            while (v % qpow_[h + 1] == 0) ++h;
        }
        height_[v] = static_cast<std::uint8_t>(h);
        weight_[v] = v == 0 ? 0 : (h == desc_.s - 1 ? q_ : q_ - 1);
    }
    for (std::uint32_t v = 0; v < size_; ++v) {
        if (desc_.family == RingFamily::IntegerModular) {
            neg_[v] = (size_ - v) % size_;
        } else {
            std::uint32_t out = 0;
            for (int i = desc_.s - 1; i >= 0; --i)
                out = out * q_ + field_->neg(coefficient({v}, i)).value;
            neg_[v] = out;
        }
    }
    if (size_ <= kMaxTableRing) {
        add_.resize(std::size_t{size_} * size_);
        mul_.resize(std::size_t{size_} * size_);
        for (std::uint32_t a = 0; a < size_; ++a)
            for (std::uint32_t b = 0; b < size_; ++b) {
                add_[a * size_ + b] = add_slow({a}, {b}).value;
                mul_[a * size_ + b] = mul_slow({a}, {b}).value;
            }
    }
}

std::string ChainRing::name() const {
    if (desc_.family == RingFamily::IntegerModular) return "Z/" + std::to_string(size_) + "Z";
    return "F_" + std::to_string(q_) + "[x]/(x^" + std::to_string(desc_.s) + ")";
}

RingElement ChainRing::add_slow(RingElement a, RingElement b) const {
    if (desc_.family == RingFamily::IntegerModular) return {(a.value + b.value) % size_};
    std::uint32_t out = 0;
    for (int i = desc_.s - 1; i >= 0; --i) out = out * q_ + field_->add(coefficient(a, i), coefficient(b, i)).value;
    return {out};
}

RingElement ChainRing::mul_slow(RingElement a, RingElement b) const {
    if (desc_.family == RingFamily::IntegerModular)
        return {static_cast<std::uint32_t>((std::uint64_t{a.value} * b.value) % size_)};
    const int s = desc_.s;
    std::vector<FieldElement> c(s, field_->zero());
    for (int i = 0; i < s; ++i) {
        FieldElement ai = coefficient(a, i);
        if (ai.value == 0) continue;
        for (int j = 0; i + j < s; ++j)
            c[i + j] = field_->add(c[i + j], field_->mul(ai, coefficient(b, j)));
    }
    return from_coefficients(c);
}

RingElement ChainRing::gamma_pow(int i) const {
    if (i < 0 || i > desc_.s)
        throw Error(ErrorKind::IndexOutOfRange, "gamma power " + std::to_string(i) + " outside [0,s]");
    return {qpow_[i] % size_};
}

std::vector<RingElement> ChainRing::enumerate_ideal(int i) const {
    if (i < 0 || i > desc_.s)
        throw Error(ErrorKind::IndexOutOfRange, "ideal index " + std::to_string(i) + " outside [0,s]");
    std::vector<RingElement> out;
    out.reserve(qpow_[desc_.s - i]);
    for (std::uint32_t v = 0; v < size_; v += qpow_[i]) out.push_back({v});
    return out;
}

std::vector<RingElement> ChainRing::enumerate_units() const {
    std::vector<RingElement> out;
    out.reserve(size_ - qpow_[desc_.s - 1]);
    for (std::uint32_t v = 0; v < size_; ++v)
        if (height_[v] == 0) out.push_back({v});
    return out;
}

FieldElement ChainRing::socle_iso(RingElement a) const {
    if (height(a) < desc_.s - 1) throw Error(ErrorKind::NotInSocle, "element of height " + std::to_string(height(a)));
    return {a.value / qpow_[desc_.s - 1]};
}

RingElement ChainRing::socle_iso_inv(FieldElement b) const { return {b.value * qpow_[desc_.s - 1]}; }

RingElement ChainRing::unit_inverse(RingElement u) const {
    if (!is_unit(u)) throw Error(ErrorKind::DivisionByZero, "inverse of non-unit");
    if (desc_.family == RingFamily::IntegerModular) {
        std::int64_t old_r = u.value, r = size_, old_s = 1, s = 0;
        while (r != 0) {
            std::int64_t quot = old_r / r;
            std::int64_t t = old_r - quot * r;
            old_r = r;
            r = t;
            t = old_s - quot * s;
            old_s = s;
            s = t;
        }
        std::int64_t inv = old_s % static_cast<std::int64_t>(size_);
        if (inv < 0) inv += size_;
        return {static_cast<std::uint32_t>(inv)};
    }
    // Power series inverse: b_0 = c_0^{-1}, b_k = -c_0^{-1} sum_{j=1..k} c_j b_{k-j}.
    const int s = desc_.s;
    const Field& f = *field_;
    FieldElement c0inv = f.inv(coefficient(u, 0));
    std::vector<FieldElement> b(s, f.zero());
    b[0] = c0inv;
    for (int k = 1; k < s; ++k) {
        FieldElement acc = f.zero();
        for (int j = 1; j <= k; ++j) acc = f.add(acc, f.mul(coefficient(u, j), b[k - j]));
        b[k] = f.neg(f.mul(c0inv, acc));
    }
    return from_coefficients(b);
}

RingElement ChainRing::divide_gamma_pow(RingElement a, int h) const {
    if (h < 0 || h > desc_.s) throw Error(ErrorKind::IndexOutOfRange, "gamma power outside [0,s]");
    if (height(a) < h) throw Error(ErrorKind::DivisionByZero, "element not divisible by gamma^" + std::to_string(h));
    return {a.value / qpow_[h]};
}

RingElement ChainRing::from_coefficients(const std::vector<FieldElement>& coeffs) const {
    std::uint32_t out = 0;
    for (int i = desc_.s - 1; i >= 0; --i) {
        std::uint32_t c = i < static_cast<int>(coeffs.size()) ? coeffs[i].value : 0;
        out = out * q_ + c;
    }
    return {out};
}

RingElement ChainRing::from_int(std::int64_t v) const {
    if (desc_.family == RingFamily::IntegerModular) {
        std::int64_t m = v % static_cast<std::int64_t>(size_);
        if (m < 0) m += size_;
        return {static_cast<std::uint32_t>(m)};
    }
    return lift(field_->from_int(v));
}

}  // namespace homcode
