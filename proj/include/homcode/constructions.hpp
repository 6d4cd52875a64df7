#ifndef HOMCODE_CONSTRUCTIONS_HPP
#define HOMCODE_CONSTRUCTIONS_HPP

#include "homcode/code.hpp"

#include <cstdint>
#include <vector>

namespace homcode {

/// V = R^{k_0} x <gamma>^{k_1} x ... x <gamma^{s-1}>^{k_{s-1}}.
struct ModuleSpace {
    RingPtr ring;
    std::vector<int> subtype;
    std::size_t rank = 0;  // K
    /// Coordinate j ranges over <gamma^{component_heights[j]}>.
    std::vector<int> component_heights;
    /// q^{sum_i (s-i) k_i}
    std::uint64_t cardinality = 1;

    /// Position of v in enumerate_space order.
    std::uint64_t index_of(const Word& v) const;
    Word vector_at(std::uint64_t index) const;
};

/// Throws SubtypeLengthMismatch unless subtype has s entries (all >= 0); TooLarge past 2^62.
ModuleSpace module_space(RingPtr ring, std::vector<int> subtype);

/// All |V| vectors, lexicographic with the first coordinate most significant and
/// each coordinate ascending through its ideal. Throws TooLarge past the guard.
std::vector<Word> enumerate_space(const ModuleSpace& space, const Limits& limits = {});

struct Orbit {
    Word representative;  // enumeration-least member
    std::uint64_t size = 0;
    int min_height = 0;  // t: least coordinate height of the representative
    std::uint64_t formula_size = 0;  // q^{s-t-1} (q-1)
    std::vector<std::uint64_t> members;  // ascending enumeration indices
};

struct OrbitDecomposition {
    std::vector<Orbit> orbits;  // ordered by representative index; zero excluded
    std::uint64_t gcd_of_sizes = 0;

    bool sizes_match_formula() const;
    std::uint64_t total_size() const;
};

/// Unit-scaling orbits of V by brute force. Throws TooLarge past the guard.
OrbitDecomposition orbit_decompose(const ModuleSpace& space, const Limits& limits = {});

/// All nonzero vectors of V as columns: length |V| - 1, constant weight |V|.
LinearCode long_code(RingPtr ring, std::vector<int> subtype, const Limits& limits = {});

/// |O| / (q-1) enumeration-least members of each nonzero orbit as columns, in enumeration order.
/// Length (|V|-1)/(q-1), constant weight |V|/(q-1).
LinearCode min_constant_weight_code(RingPtr ring, std::vector<int> subtype, const Limits& limits = {});

/// Each codeword concatenated with itself ell times. Throws BadReplication for ell < 1.
LinearCode replicate(const LinearCode& code, int ell);

struct LiftResult {
    LinearCode code;
    /// socle_code(code) spans the same F_q row space as the input.
    bool socle_matches = false;
};

/// Row i becomes gamma^{row_heights[i]} * lift(row i). Throws HeightOutOfRange,
/// LengthMismatch when row_heights has the wrong size, RingMismatch when the
/// field is not the residue field of `ring`.
LiftResult lift_code(RingPtr ring, const FqCode& code, const std::vector<int>& row_heights);

/// Generalized Reed-Solomon evaluation code: points are the first min(n, q) field
/// elements, plus the point at infinity when n = q + 1. Throws ParameterViolation.
FqCode extended_reed_solomon(FieldPtr field, std::size_t n, std::size_t k);

/// Generator [[1,0,1,...,1],[0,1,2,...,n-1]] over Z/p^s Z. Throws ParameterViolation
/// unless p is prime, n >= 2 and p >= n.
LinearCode example_family_tighter_singleton(int p, int s, std::size_t n);

}  // namespace homcode

#endif
