#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "packetmult/cohomology.hpp"
#include "packetmult/padic.hpp"

namespace packetmult {

using Rational = boost::rational<long long>;

/// A valid input that contradicts one of the computed identities, as opposed
/// to std::invalid_argument (a caller-side precondition violation).
class InconsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An inner-form datum (m, d) with n = m*d, a finite central extension
/// 1 -> Z/n -> A -> S -> 1, and a character z -> z^k of the central Z/n.
struct ParameterScenario {
    std::string label;
    long long m = 1;
    long long d = 1;
    CentralExtension extension;
    long long zeta_exponent = 0;
    std::optional<PAdicFieldData> field;

    long long n() const { return m * d; }

    /// Throws std::invalid_argument unless m, d >= 1, the central subgroup
    /// has order exactly m*d, and d = 1 implies zeta_exponent = 0 mod n.
    void validate() const;
};

struct DivisibilityAudit {
    BigInt coset;                        // |F^x/(F^x)^n|
    BigInt bound;                        // square_divisor_bound(coset)
    bool mult_divides_bound = false;
    bool p_coprime_n = false;            // p does not divide n
    bool mult_divides_n = false;         // vacuously true when p | n
    bool card_g_divides_coset = false;
    bool card_star_divides_coset = false;

    bool all_pass() const;
};

struct PacketReport {
    long long card_star = 1;    // |Pi_phi(G*)|
    long long card_g = 1;       // |Pi_phi(G)|
    long long multiplicity = 1;
    long long s_card = 1;       // |S_phi|
    bool common_dim_ok = true;
    int kottwitz_sign = 1;
    long long endoscopic_coefficient = 1;
    Rational degree_ratio = Rational(1);
    std::optional<DivisibilityAudit> divisibility;
    std::optional<bool> depth_zero_flag;
    std::vector<std::string> notes;
};

/// The square root of card_star / card_g.  Throws InconsistencyError when
/// card_g does not divide card_star, when the ratio is not a perfect square,
/// or when card_g exceeds card_star.
long long multiplicity_from_packet_cards(long long card_star, long long card_g);

/// Full report for one scenario: packet cardinalities from the character
/// theory of A, the multiplicity as the common degree over the zeta-isotypic
/// irreducibles, signs, ratios, and (when field data is present) the
/// divisibility audit.
PacketReport analyze_parameter(const ParameterScenario& scenario);

int kottwitz_sign(long long m, long long d);

DivisibilityAudit divisibility_report(const PAdicFieldData& field, long long n,
                                      const PacketReport& report);

/// (multiplicity, degree factor) = (1, n) for the Steinberg representation.
std::pair<long long, long long> steinberg_report(long long n);

/// multiplicity / s_card in lowest terms.
Rational formal_degree_ratio(long long s_card, long long multiplicity);

/// The rank-1 quaternionic case over a field of odd residue characteristic:
/// r = 1 gives the quaternion group with multiplicity 2 (and depth zero);
/// r > 1 gives the Klein four-group branch with the documented discrepancy
/// note.
PacketReport sl2_case(long long r, const PAdicFieldData& field);

/// The prime-degree case: non-abelian A of order l^3 (requires l | q-1)
/// with multiplicity l, or the abelian branch with multiplicity 1.
PacketReport sl_prime_case(long long l, long long q, bool nonabelian);

struct Sl4Row {
    long long card_star;
    long long card_g;
    long long mult;
    bool operator==(const Sl4Row&) const = default;
};

/// All (card_star, card_g, mult) triples compatible with the divisibility
/// constraints for |F^x/(F^x)^4| = coset, coset in {8, 16}.
std::vector<Sl4Row> sl4_enumerate(long long coset);

/// kottwitz_sign(m, d) * multiplicity.
long long endoscopic_coefficient(const ParameterScenario& scenario, const PacketReport& report);

}  // namespace packetmult
