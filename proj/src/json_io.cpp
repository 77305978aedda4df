#include "packetmult/json_io.hpp"

#include <set>
#include <stdexcept>

namespace packetmult {

Json group_to_json(const FiniteGroup& g) {
    Json j;
    j["order"] = g.order();
    j["mul"] = g.table();
    j["identity"] = g.identity();
    j["label"] = g.label();
    return j;
}

FiniteGroup group_from_json(const Json& j, int cap) {
    if (!j.is_object()) throw std::invalid_argument("group record must be an object");
    int order = j.at("order").get<int>();
    std::vector<int> mul = j.at("mul").get<std::vector<int>>();
    int identity = j.at("identity").get<int>();
    std::string label = j.value("label", std::string());
    return FiniteGroup(order, std::move(mul), identity, std::move(label), cap);
}

Json field_to_json(const PAdicFieldData& field) {
    return Json{{"p", field.p}, {"e", field.e}, {"f", field.f}, {"a", field.wild_exponent}};
}

PAdicFieldData field_from_json(const Json& j) {
    PAdicFieldData field;
    field.p = j.at("p").get<long long>();
    field.e = j.value("e", 1LL);
    field.f = j.value("f", 1LL);
    field.wild_exponent = j.value("a", 0LL);
    field.validate();
    return field;
}

Json scenario_to_json(const ParameterScenario& sc) {
    Json j;
    j["schema"] = 1;
    j["label"] = sc.label;
    j["m"] = sc.m;
    j["d"] = sc.d;
    j["group"] = group_to_json(sc.extension.total);
    j["central_subgroup"] = sc.extension.central_subgroup;
    j["zeta_exponent"] = sc.zeta_exponent;
    if (sc.field) j["field"] = field_to_json(*sc.field);
    return j;
}

ParameterScenario scenario_from_json(const Json& j,
                                     const std::optional<PAdicFieldData>& shared_field, int cap) {
    if (!j.is_object()) throw std::invalid_argument("scenario record must be an object");
    if (j.contains("schema") && j.at("schema").get<int>() != 1)
        throw std::invalid_argument("unsupported scenario schema version");
    ParameterScenario sc;
    sc.label = j.value("label", std::string());
    sc.m = j.at("m").get<long long>();
    sc.d = j.at("d").get<long long>();
    const Json& gj = j.at("group");
    FiniteGroup total = gj.is_string() ? build_group(parse_group_spec(gj.get<std::string>()), cap)
                                       : group_from_json(gj, cap);
    std::vector<int> central = j.at("central_subgroup").get<std::vector<int>>();
    sc.extension = make_central_extension(total, central);
    sc.zeta_exponent = j.at("zeta_exponent").get<long long>();
    if (j.contains("field"))
        sc.field = field_from_json(j.at("field"));
    else if (shared_field)
        sc.field = *shared_field;
    sc.validate();
    return sc;
}

std::vector<ParameterScenario> scenario_file_from_json(const Json& j, int cap) {
    if (!j.is_object()) throw std::invalid_argument("scenario file must be an object");
    if (j.contains("schema") && j.at("schema").get<int>() != 1)
        throw std::invalid_argument("unsupported scenario schema version");
    std::optional<PAdicFieldData> shared;
    if (j.contains("field")) shared = field_from_json(j.at("field"));
    std::vector<ParameterScenario> out;
    std::set<std::string> labels;
    for (const Json& rec : j.at("scenarios")) {
        ParameterScenario sc = scenario_from_json(rec, shared, cap);
        if (!labels.insert(sc.label).second)
            throw std::invalid_argument("duplicate scenario label: " + sc.label);
        out.push_back(std::move(sc));
    }
    return out;
}

Json report_to_json(const PacketReport& report) {
    Json j;
    j["card_star"] = report.card_star;
    j["card_g"] = report.card_g;
    j["multiplicity"] = report.multiplicity;
    j["s_card"] = report.s_card;
    j["common_dim_ok"] = report.common_dim_ok;
    j["kottwitz_sign"] = report.kottwitz_sign;
    j["endoscopic_coefficient"] = report.endoscopic_coefficient;
    j["degree_ratio"] = Json{{"num", report.degree_ratio.numerator()},
                             {"den", report.degree_ratio.denominator()}};
    if (report.divisibility) {
        const DivisibilityAudit& a = *report.divisibility;
        j["divisibility"] = Json{{"coset", a.coset.str()},
                                 {"bound", a.bound.str()},
                                 {"mult_divides_bound", a.mult_divides_bound},
                                 {"p_coprime_n", a.p_coprime_n},
                                 {"mult_divides_n", a.mult_divides_n},
                                 {"card_g_divides_coset", a.card_g_divides_coset},
                                 {"card_star_divides_coset", a.card_star_divides_coset},
                                 {"all_pass", a.all_pass()}};
    }
    if (report.depth_zero_flag) j["depth_zero_flag"] = *report.depth_zero_flag;
    j["notes"] = report.notes;
    return j;
}

PacketReport report_from_json(const Json& j) {
    PacketReport report;
    report.card_star = j.at("card_star").get<long long>();
    report.card_g = j.at("card_g").get<long long>();
    report.multiplicity = j.at("multiplicity").get<long long>();
    report.s_card = j.at("s_card").get<long long>();
    report.common_dim_ok = j.at("common_dim_ok").get<bool>();
    report.kottwitz_sign = j.at("kottwitz_sign").get<int>();
    report.endoscopic_coefficient = j.at("endoscopic_coefficient").get<long long>();
    report.degree_ratio = Rational(j.at("degree_ratio").at("num").get<long long>(),
                                   j.at("degree_ratio").at("den").get<long long>());
    if (j.contains("divisibility")) {
        const Json& dj = j.at("divisibility");
        DivisibilityAudit a;
        a.coset = BigInt(dj.at("coset").get<std::string>());
        a.bound = BigInt(dj.at("bound").get<std::string>());
        a.mult_divides_bound = dj.at("mult_divides_bound").get<bool>();
        a.p_coprime_n = dj.at("p_coprime_n").get<bool>();
        a.mult_divides_n = dj.at("mult_divides_n").get<bool>();
        a.card_g_divides_coset = dj.at("card_g_divides_coset").get<bool>();
        a.card_star_divides_coset = dj.at("card_star_divides_coset").get<bool>();
        report.divisibility = a;
    }
    if (j.contains("depth_zero_flag")) report.depth_zero_flag = j.at("depth_zero_flag").get<bool>();
    report.notes = j.value("notes", std::vector<std::string>{});
    return report;
}

}  // namespace packetmult
