#ifndef HOMCODE_CODE_HPP
#define HOMCODE_CODE_HPP

#include "homcode/chain_ring.hpp"
#include "homcode/rational.hpp"
#include "homcode/ring_linalg.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace homcode {

/// Enumeration guard shared by every exhaustive routine.
struct Limits {
    std::uint64_t max_cardinality = std::uint64_t{1} << 24;
};

/// R-submodule of R^n given by generator rows. Immutable; the standard form is computed once.
class LinearCode {
public:
    explicit LinearCode(RingMatrix generators);
    /// Throws LengthMismatch if any row is not of length n.
    static LinearCode make(RingPtr ring, std::size_t n, const std::vector<Word>& rows);

    const RingPtr& ring_ptr() const { return generators_.ring_ptr(); }
    const ChainRing& ring() const { return generators_.ring(); }
    std::size_t length() const { return generators_.cols(); }
    const RingMatrix& generators() const { return generators_; }
    const StandardFormResult& standard() const { return sf_; }

    const std::vector<int>& subtype() const { return sf_.subtype; }
    std::size_t rank() const { return sf_.rank(); }
    std::size_t free_rank() const { return static_cast<std::size_t>(sf_.subtype[0]); }
    /// R-dimension log_{|R|} |C| = sum_i (s-i) k_i / s.
    Rational dimension() const;
    /// log_q |C| = sum_i (s-i) k_i.
    long cardinality_exponent() const;
    /// Throws TooLarge if |C| does not fit in 63 bits.
    std::uint64_t cardinality() const;
    bool fits(const Limits& limits) const;
    /// Throws TooLarge naming the cardinality if the code exceeds the guard.
    void require_enumerable(const Limits& limits) const;

    /// Coordinates that are zero in every codeword.
    std::vector<std::size_t> zero_coordinates() const;
    bool is_degenerate() const { return !zero_coordinates().empty(); }
    /// True iff C is contained in <gamma^{s-1}>^n.
    bool in_socle() const;

private:
    RingMatrix generators_;
    StandardFormResult sf_;
};

/// Linear code over F_q.
struct FqCode {
    FqMatrix generators;
    std::size_t dimension = 0;

    explicit FqCode(FqMatrix gens);
    const Field& field() const { return generators.field(); }
    std::size_t length() const { return generators.cols(); }
};

/// The code as an abelian group: C is the direct sum of the cyclic groups <g_k>, |g_k| = orders[k].
/// Codeword with mixed-radix index i (digit 0 least significant) is sum_k digit_k(i) * g_k.
struct AdditiveBasis {
    std::vector<Word> generators;
    std::vector<std::uint32_t> orders;
};

AdditiveBasis additive_basis(const LinearCode& code);

/// All |C| codewords in index order; throws TooLarge past the guard.
std::vector<Word> enumerate_codewords(const LinearCode& code, const Limits& limits = {});

/// Reduction of w against the standard form. Throws LengthMismatch.
bool membership(const LinearCode& code, const Word& w);

/// Same set of codewords.
bool same_code(const LinearCode& a, const LinearCode& b);

/// Socle C ∩ <gamma^{s-1}>^n viewed over F_q; rows are the images of gamma^{s-1-h_i} * (row i).
FqCode socle_code(const LinearCode& code);

LinearCode dual(const LinearCode& code);

/// Least element (by packed values, lexicographic) of the unit orbit {u v : u in R^x}.
Word orbit_representative(const ChainRing& ring, const Word& v);

struct OrbitFingerprint {
    /// Orbit representative of each nonzero generator column -> multiplicity.
    std::map<Word, std::size_t> counts;
    std::size_t degenerate_columns = 0;

    bool operator==(const OrbitFingerprint&) const = default;
};

OrbitFingerprint column_orbit_fingerprint(const LinearCode& code);

}  // namespace homcode

#endif
