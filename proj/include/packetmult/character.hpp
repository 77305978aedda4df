#pragma once

#include <vector>

#include "packetmult/cyclotomic.hpp"
#include "packetmult/group.hpp"

namespace packetmult {

struct ConjClassInfo {
    int rep;                    // minimal element index of the class
    int size;
    std::vector<int> elements;  // sorted
};

struct Character {
    long long degree;
    std::vector<Cyclotomic> values;  // one per conjugacy class, class order below
};

/// Exact character table.  Classes are in canonical order (sorted by minimal
/// element); characters are sorted by ascending degree, ties broken by the
/// lexicographic order of their coefficient vectors.
struct CharacterTable {
    long long group_order;
    long long exponent;
    std::vector<ConjClassInfo> classes;
    std::vector<Character> characters;

    std::vector<long long> degrees() const;

    /// |G| * <chi_i, chi_j> as an exact cyclotomic value (it is in fact a
    /// rational integer; see verify()).
    Cyclotomic inner_product_times_order(size_t i, size_t j) const;

    /// Checks #characters == #classes, sum of squared degrees == |G| and
    /// exact row orthogonality; throws std::logic_error on failure.
    void verify() const;
};

/// Burnside-Dixon class-sum computation over a prime field p = 1 (mod
/// exponent), lifted to exact cyclotomic values.  Deterministic.
CharacterTable character_table(const FiniteGroup& g, int cap = order_cap());

/// A central cyclic subgroup together with one of its characters, given as an
/// exponent on the canonical generator (the minimal-index element of full
/// order in the subgroup): zeta(gen) = zeta_{|Z|}^{zeta_exponent}.
struct CentralCharacterQuery {
    std::vector<int> subgroup;
    long long zeta_exponent = 0;
};

/// Degrees of the irreducible characters whose restriction to the queried
/// central subgroup is zeta-isotypic.  Throws std::domain_error if the
/// subgroup is not central cyclic.
std::vector<long long> irr_with_central_character(const FiniteGroup& g,
                                                  const CharacterTable& table,
                                                  const CentralCharacterQuery& query);

std::vector<long long> irr_with_central_character(const FiniteGroup& g,
                                                  const CentralCharacterQuery& query);

}  // namespace packetmult
