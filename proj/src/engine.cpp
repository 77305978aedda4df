#include "packetmult/engine.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "packetmult/character.hpp"
#include "packetmult/numutil.hpp"

namespace packetmult {

void ParameterScenario::validate() const {
    if (m < 1 || d < 1) throw std::invalid_argument("m and d must be positive");
    long long nn = n();
    if (static_cast<long long>(extension.central_subgroup.size()) != nn)
        throw std::invalid_argument("central subgroup order must equal m*d");
    if (extension.n != nn) throw std::invalid_argument("extension modulus must equal m*d");
    if (d == 1 && zeta_exponent % nn != 0)
        throw std::invalid_argument("the split form (d = 1) requires a trivial zeta");
    if (field) field->validate();
}

bool DivisibilityAudit::all_pass() const {
    return mult_divides_bound && (!p_coprime_n || mult_divides_n) && card_g_divides_coset &&
           card_star_divides_coset;
}

long long multiplicity_from_packet_cards(long long card_star, long long card_g) {
    if (card_star < 1 || card_g < 1) throw std::invalid_argument("packet cardinalities must be positive");
    if (card_g > card_star)
        throw InconsistencyError("packet of inner form exceeds split packet");
    if (card_star % card_g != 0) throw InconsistencyError("inconsistent packet data");
    long long ratio = card_star / card_g;
    long long r = isqrt_floor(ratio);
    if (r * r != ratio) throw InconsistencyError("violates the |X| identity");
    return r;
}

int kottwitz_sign(long long m, long long d) {
    if (m < 1 || d < 1) throw std::invalid_argument("m and d must be positive");
    return (m * (d - 1)) % 2 == 0 ? 1 : -1;
}

std::pair<long long, long long> steinberg_report(long long n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    return {1, n};
}

Rational formal_degree_ratio(long long s_card, long long multiplicity) {
    if (s_card < 1 || multiplicity < 1) throw std::invalid_argument("inputs must be positive");
    return Rational(multiplicity, s_card);
}

DivisibilityAudit divisibility_report(const PAdicFieldData& field, long long n,
                                      const PacketReport& report) {
    field.validate();
    if (n < 1) throw std::invalid_argument("n must be positive");
    DivisibilityAudit audit;
    audit.coset = coset_card(field, n);
    audit.bound = square_divisor_bound(audit.coset);
    audit.mult_divides_bound = audit.bound % report.multiplicity == 0;
    audit.p_coprime_n = n % field.p != 0;
    audit.mult_divides_n = !audit.p_coprime_n || n % report.multiplicity == 0;
    audit.card_g_divides_coset = audit.coset % report.card_g == 0;
    audit.card_star_divides_coset = audit.coset % report.card_star == 0;
    return audit;
}

PacketReport analyze_parameter(const ParameterScenario& scenario) {
    scenario.validate();
    const CentralExtension& ext = scenario.extension;
    if (!ext.quotient.is_abelian())
        throw std::invalid_argument("not a valid SL-type parameter: the quotient must be abelian");

    CharacterTable table = character_table(ext.total);

    CentralCharacterQuery trivial{ext.central_subgroup, 0};
    std::vector<long long> star_degrees = irr_with_central_character(ext.total, table, trivial);
    CentralCharacterQuery zeta{ext.central_subgroup, scenario.zeta_exponent};
    std::vector<long long> g_degrees = irr_with_central_character(ext.total, table, zeta);

    PacketReport report;
    report.card_star = static_cast<long long>(star_degrees.size());
    report.s_card = ext.quotient.order();
    if (report.card_star != report.s_card)
        throw std::logic_error("trivial-character count disagrees with the quotient order");

    report.card_g = static_cast<long long>(g_degrees.size());
    if (g_degrees.empty()) throw std::logic_error("no irreducibles over the central character");
    for (long long deg : g_degrees)
        if (deg != g_degrees.front()) {
            std::ostringstream os;
            os << "no common multiplicity; degrees =";
            for (long long x : g_degrees) os << " " << x;
            report.common_dim_ok = false;
            throw InconsistencyError(os.str());
        }
    report.multiplicity = g_degrees.front();

    if (report.card_star != report.card_g * report.multiplicity * report.multiplicity)
        throw InconsistencyError("violates the |X| identity");
    if (multiplicity_from_packet_cards(report.card_star, report.card_g) != report.multiplicity)
        throw InconsistencyError("square-root cross-check failed");

    long long nn = scenario.n();
    if (scenario.zeta_exponent % nn == 0 &&
        (report.multiplicity != 1 || report.card_g != report.card_star))
        throw std::logic_error("trivial zeta must collapse to multiplicity 1");
    if (ext.total.is_abelian() && report.multiplicity != 1)
        throw std::logic_error("abelian A must have multiplicity 1");

    report.kottwitz_sign = kottwitz_sign(scenario.m, scenario.d);
    report.endoscopic_coefficient = report.kottwitz_sign * report.multiplicity;
    report.degree_ratio = formal_degree_ratio(report.s_card, report.multiplicity);

    if (scenario.field) {
        report.divisibility = divisibility_report(*scenario.field, nn, report);
        if (!report.divisibility->p_coprime_n)
            report.notes.push_back(
                "residue characteristic divides n: the divisibility shortcut mult | n does not "
                "apply; only the square-divisor bound is audited");
    }
    return report;
}

namespace {

ParameterScenario quaternion_scenario(std::optional<PAdicFieldData> field) {
    FiniteGroup q8 = build_group(parse_group_spec("Q8"));
    // center of Q8 is {1, -1} = indices {0, 1}
    CentralExtension ext = make_central_extension(q8, {0, 1});
    ParameterScenario sc;
    sc.label = "sl2(r=1)";
    sc.m = 1;
    sc.d = 2;
    sc.extension = std::move(ext);
    sc.zeta_exponent = 1;  // the sign character
    sc.field = std::move(field);
    return sc;
}

ParameterScenario klein_scenario(std::optional<PAdicFieldData> field) {
    FiniteGroup v4 = build_group(parse_group_spec("C2xC2"));
    // Z = the second factor: elements (0,0) and (0,1) = indices {0, 1}
    CentralExtension ext = make_central_extension(v4, {0, 1});
    ParameterScenario sc;
    sc.label = "sl2(r>1)";
    sc.m = 1;
    sc.d = 2;
    sc.extension = std::move(ext);
    sc.zeta_exponent = 1;
    sc.field = std::move(field);
    return sc;
}

}  // namespace

PacketReport sl2_case(long long r, const PAdicFieldData& field) {
    field.validate();
    if (field.p == 2) throw std::invalid_argument("sl2 case requires odd residue characteristic");
    if (r < 1) throw std::invalid_argument("r must be positive");
    if (r == 1) {
        PacketReport report = analyze_parameter(quaternion_scenario(field));
        report.depth_zero_flag = true;
        return report;
    }
    PacketReport report = analyze_parameter(klein_scenario(field));
    report.notes.push_back(
        "known discrepancy: the classical statement of this case gives a singleton packet for "
        "the non-split form when r > 1, but the square-root identity multiplicity = "
        "sqrt(card_star / card_g) rules that out (sqrt(2) is not an integer); the "
        "formula-consistent value card_g = 2 is reported instead");
    return report;
}

PacketReport sl_prime_case(long long l, long long q, bool nonabelian) {
    if (!is_prime(l)) throw std::invalid_argument("l must be prime");
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    if (q % l == 0) throw std::invalid_argument("the residue characteristic must not divide l");

    ParameterScenario sc;
    sc.m = 1;
    sc.d = l;
    sc.zeta_exponent = 1;
    if (nonabelian) {
        if ((q - 1) % l != 0)
            throw InconsistencyError(
                "scenario violates the numerical divisibility bound: a non-abelian A needs "
                "l | (q - 1)");
        std::ostringstream spec;
        spec << "heisenberg(" << l << ")";
        FiniteGroup a = build_group(parse_group_spec(spec.str()));
        // the center is {(0,0,c)} = indices 0..l-1 (and {1,-1} = {0,1} for Q8)
        std::vector<int> center = a.center();
        sc.label = "sl(l) nonabelian";
        sc.extension = make_central_extension(a, center);
    } else {
        std::ostringstream spec;
        spec << "C" << l << "xC" << l << "xC" << l;
        FiniteGroup a = build_group(parse_group_spec(spec.str()));
        // Z = last factor: indices 0..l-1
        std::vector<int> z;
        for (long long c = 0; c < l; ++c) z.push_back(static_cast<int>(c));
        sc.label = "sl(l) abelian";
        sc.extension = make_central_extension(a, z);
    }
    return analyze_parameter(sc);
}

std::vector<Sl4Row> sl4_enumerate(long long coset) {
    if (coset != 8 && coset != 16) throw std::invalid_argument("coset must be 8 or 16");
    long long bound = square_divisor_bound(BigInt(coset)).convert_to<long long>();
    std::vector<Sl4Row> rows;
    for (long long star = 1; star <= coset; ++star) {
        if (coset % star != 0) continue;
        for (long long g = 1; g <= star; ++g) {
            if (coset % g != 0 || star % g != 0) continue;
            long long ratio = star / g;
            long long mult = isqrt_floor(ratio);
            if (mult * mult != ratio) continue;
            if (bound % mult != 0) continue;
            rows.push_back(Sl4Row{star, g, mult});
        }
    }
    std::sort(rows.begin(), rows.end(), [](const Sl4Row& a, const Sl4Row& b) {
        return std::tie(a.card_star, a.card_g) < std::tie(b.card_star, b.card_g);
    });
    return rows;
}

long long endoscopic_coefficient(const ParameterScenario& scenario, const PacketReport& report) {
    if (report.card_star != report.card_g * report.multiplicity * report.multiplicity)
        throw std::invalid_argument("report is inconsistent with the packet identity");
    return kottwitz_sign(scenario.m, scenario.d) * report.multiplicity;
}

}  // namespace packetmult
