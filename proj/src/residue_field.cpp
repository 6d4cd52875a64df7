#include "homcode/residue_field.hpp"

#include "homcode/error.hpp"

#include <string>

namespace homcode {

namespace {

constexpr std::uint32_t kMaxFieldSize = 1024;

int mod(std::int64_t a, int p) {
    auto m = static_cast<int>(a % p);
    return m < 0 ? m + p : m;
}

// Remainder of a by monic b over F_p, both low-to-high.
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b, int p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        int lead = a.back();
        if (lead != 0) {
            std::size_t shift = a.size() - 1 - db;
            for (std::size_t i = 0; i <= db; ++i) a[shift + i] = mod(a[shift + i] - lead * b[i], p);
        }
        a.pop_back();
    }
    return a;
}

}  // namespace

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible(int p, const std::vector<int>& f) {
    const int deg = static_cast<int>(f.size()) - 1;
    if (deg < 1) return false;
    if (deg == 1) return true;
    // Every monic divisor candidate of degree d is x^d + (d low coefficients).
    for (int d = 1; 2 * d <= deg; ++d) {
        std::int64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::int64_t idx = 0; idx < count; ++idx) {
            std::vector<int> g(d + 1, 0);
            std::int64_t t = idx;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<int>(t % p);
                t /= p;
            }
            g[d] = 1;
            auto rem = poly_rem(f, g, p);
            bool zero = true;
            for (int c : rem) zero = zero && c == 0;
            if (zero) return false;
        }
    }
    return true;
}

std::vector<int> default_modulus(int p, int r) {
    if (r == 1) return {0, 1};
    if (p == 2 && r == 2) return {1, 1, 1};
    if (p == 2 && r == 3) return {1, 1, 0, 1};
    if (p == 2 && r == 4) return {1, 1, 0, 0, 1};
    if (p == 3 && r == 2) return {1, 0, 1};
    if (p == 3 && r == 3) return {1, 2, 0, 1};
    if (p == 5 && r == 2) return {2, 0, 1};
    if (p == 7 && r == 2) return {1, 0, 1};
    throw Error(ErrorKind::ParameterViolation,
                "no default modulus for p=" + std::to_string(p) + ", r=" + std::to_string(r) +
                    "; supply field_modulus");
}

std::shared_ptr<const Field> Field::make(int p, int r, std::vector<int> modulus) {
    return make(FieldDescriptor{p, r, std::move(modulus)});
}

std::shared_ptr<const Field> Field::make(const FieldDescriptor& desc) {
    if (!is_prime(desc.p)) throw Error(ErrorKind::NotPrime, "p=" + std::to_string(desc.p) + " is not prime");
    if (desc.r < 1 || static_cast<int>(desc.modulus.size()) != desc.r + 1)
        throw Error(ErrorKind::DegreeMismatch, "modulus has " + std::to_string(desc.modulus.size()) +
                                                   " coefficients, expected r+1=" + std::to_string(desc.r + 1));
    if (desc.modulus.back() != 1)
        throw Error(ErrorKind::DegreeMismatch, "modulus must be monic");
    for (int c : desc.modulus)
        if (c < 0 || c >= desc.p)
            throw Error(ErrorKind::DegreeMismatch, "modulus coefficient " + std::to_string(c) + " not in [0,p)");
    std::uint64_t q = 1;
    for (int i = 0; i < desc.r; ++i) {
        q *= static_cast<std::uint64_t>(desc.p);
        if (q > kMaxFieldSize)
            throw Error(ErrorKind::ParameterViolation, "field size exceeds " + std::to_string(kMaxFieldSize));
    }
    if (!is_irreducible(desc.p, desc.modulus)) throw Error(ErrorKind::Reducible, "modulus is reducible over F_p");
    return std::shared_ptr<const Field>(new Field(desc));
}

Field::Field(FieldDescriptor desc) : desc_(std::move(desc)) {
    const int p = desc_.p, r = desc_.r;
    q_ = 1;
    for (int i = 0; i < r; ++i) q_ *= static_cast<std::uint32_t>(p);

    add_.resize(std::size_t{q_} * q_);
    mul_.resize(std::size_t{q_} * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);

    std::vector<std::vector<int>> cs(q_);
    for (std::uint32_t a = 0; a < q_; ++a) cs[a] = coeffs({a});

    auto pack = [&](const std::vector<int>& c) {
        std::uint32_t v = 0;
        for (int i = r - 1; i >= 0; --i) v = v * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(c[i]);
        return v;
    };

    for (std::uint32_t a = 0; a < q_; ++a) {
        std::vector<int> n(r);
        for (int i = 0; i < r; ++i) n[i] = mod(-cs[a][i], p);
        neg_[a] = pack(n);
        for (std::uint32_t b = 0; b < q_; ++b) {
            std::vector<int> s(r);
            for (int i = 0; i < r; ++i) s[i] = (cs[a][i] + cs[b][i]) % p;
            add_[a * q_ + b] = pack(s);

            std::vector<int> prod(2 * r - 1, 0);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + cs[a][i] * cs[b][j]) % p;
            auto red = poly_rem(prod, desc_.modulus, p);
            red.resize(r, 0);
            mul_[a * q_ + b] = pack(red);
        }
    }
    for (std::uint32_t a = 1; a < q_; ++a)
        for (std::uint32_t b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) {
                inv_[a] = b;
                break;
            }
}

FieldElement Field::inv(FieldElement a) const {
    if (a.value == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero field element");
    return {inv_[a.value]};
}

std::vector<int> Field::coeffs(FieldElement a) const {
    std::vector<int> c(desc_.r);
    std::uint32_t v = a.value;
    for (int i = 0; i < desc_.r; ++i) {
        c[i] = static_cast<int>(v % static_cast<std::uint32_t>(desc_.p));
        v /= static_cast<std::uint32_t>(desc_.p);
    }
    return c;
}

FieldElement Field::from_coeffs(const std::vector<int>& c) const {
    std::uint32_t v = 0;
    for (int i = desc_.r - 1; i >= 0; --i) {
        int ci = i < static_cast<int>(c.size()) ? mod(c[i], desc_.p) : 0;
        v = v * static_cast<std::uint32_t>(desc_.p) + static_cast<std::uint32_t>(ci);
    }
    return {v};
}

FieldElement Field::from_int(std::int64_t v) const { return {static_cast<std::uint32_t>(mod(v, desc_.p))}; }

std::vector<FieldElement> Field::elements() const {
    std::vector<FieldElement> out(q_);
    for (std::uint32_t i = 0; i < q_; ++i) out[i] = {i};
    return out;
}

}  // namespace homcode
