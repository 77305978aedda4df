#pragma once

#include <vector>

#include "packetmult/group.hpp"

namespace packetmult {

/// A normalized 2-cocycle on S with values in Z/n, stored row-major:
/// table[a * |S| + b] = c(a, b).
struct Cocycle2 {
    long long n = 1;
    std::vector<long long> table;

    bool is_cocycle(const FiniteGroup& s) const;
    bool is_normalized(const FiniteGroup& s) const;
};

/// 1 -> Z/n -> total -> quotient -> 1 with a distinguished central embedding.
struct CentralExtension {
    FiniteGroup total;
    long long n = 1;
    std::vector<int> central_subgroup;  // ordered as powers of the generator
    int central_generator = 0;
    FiniteGroup quotient;
    std::vector<int> projection;  // total element -> quotient element
};

/// Builds a CentralExtension from a group and a central cyclic subgroup,
/// computing the quotient and projection.  The generator is the minimal-index
/// element of full order.  Throws std::invalid_argument on a non-central or
/// non-cyclic subgroup.
CentralExtension make_central_extension(const FiniteGroup& total,
                                        const std::vector<int>& central_subgroup);

struct CohomologyGroup {
    long long order = 1;
    std::vector<long long> invariant_factors;  // nontrivial cyclic factors
    // One representative cocycle table per invariant factor; all classes are
    // the Z-linear combinations sum t_i * generator_i mod n, 0 <= t_i < f_i.
    std::vector<std::vector<long long>> generator_cocycles;
};

/// H^2(S, Z/n) for the trivial action, by Smith-normal-form linear algebra on
/// the cocycle and coboundary lattices.  Caps: |S| <= 16, n <= 6.
CohomologyGroup second_cohomology(const FiniteGroup& s, long long n);

/// All 2-cocycle classes of H^2(S, Z/n), as normalized representatives in a
/// deterministic order (lexicographic in the class coordinates).
std::vector<Cocycle2> cocycle_class_representatives(const FiniteGroup& s, long long n);

/// The extension defined by a normalized cocycle on Z/n x S, with element
/// index s * n + z.
CentralExtension extension_from_cocycle(const FiniteGroup& s, const Cocycle2& c,
                                        int cap = order_cap());

/// One extension per isomorphism class of (total group, embedded Z/n),
/// deduplicated by brute-force pair isomorphism.  Requires |S| * n <= cap.
std::vector<CentralExtension> enumerate_central_extensions(const FiniteGroup& s, long long n,
                                                           int cap = order_cap());

/// Membership in the classification of finite subgroups of SL(2,C): cyclic
/// groups, generalized quaternion groups of order 4k, and the binary
/// tetrahedral, octahedral and icosahedral groups.
bool sl2_finite_subgroup_check(const FiniteGroup& a, int cap = order_cap());

/// Reference constructions used by the classification test.
FiniteGroup generalized_quaternion(long long order_4k, int cap = order_cap());
FiniteGroup binary_tetrahedral(int cap = order_cap());
FiniteGroup binary_octahedral(int cap = order_cap());
FiniteGroup binary_icosahedral(int cap = order_cap());

}  // namespace packetmult
