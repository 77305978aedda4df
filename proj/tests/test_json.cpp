#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "packetmult/json_io.hpp"

using namespace packetmult;

TEST_CASE("group round-trip") {
    FiniteGroup q8 = build_group(parse_group_spec("Q8"));
    FiniteGroup back = group_from_json(group_to_json(q8));
    CHECK(back.order() == 8);
    CHECK(back.table() == q8.table());
    CHECK(back.identity() == q8.identity());
    CHECK(back.label() == q8.label());
}

TEST_CASE("field round-trip") {
    PAdicFieldData f{3, 2, 2, 1};
    PAdicFieldData back = field_from_json(field_to_json(f));
    CHECK(back.p == 3);
    CHECK(back.e == 2);
    CHECK(back.f == 2);
    CHECK(back.wild_exponent == 1);
    CHECK_THROWS_AS(field_from_json(Json{{"p", 4}}), std::invalid_argument);
}

TEST_CASE("scenario round-trip") {
    FiniteGroup q8 = build_group(parse_group_spec("Q8"));
    ParameterScenario sc;
    sc.label = "quaternion";
    sc.m = 1;
    sc.d = 2;
    sc.extension = make_central_extension(q8, {0, 1});
    sc.zeta_exponent = 1;
    sc.field = PAdicFieldData{3, 1, 1, 0};
    ParameterScenario back = scenario_from_json(scenario_to_json(sc));
    CHECK(back.label == sc.label);
    CHECK(back.m == 1);
    CHECK(back.d == 2);
    CHECK(back.zeta_exponent == 1);
    CHECK(back.extension.total.table() == q8.table());
    CHECK(back.extension.central_subgroup == sc.extension.central_subgroup);
    REQUIRE(back.field.has_value());
    CHECK(back.field->p == 3);
}

TEST_CASE("scenario accepts a spec string for the group") {
    Json j;
    j["schema"] = 1;
    j["label"] = "h3";
    j["m"] = 1;
    j["d"] = 3;
    j["group"] = "heisenberg(3)";
    j["central_subgroup"] = std::vector<int>{0, 1, 2};
    j["zeta_exponent"] = 1;
    ParameterScenario sc = scenario_from_json(j);
    CHECK(sc.extension.total.order() == 27);
    CHECK(sc.extension.quotient.order() == 9);
}

TEST_CASE("scenario file: shared field block and unique labels") {
    Json rec;
    rec["label"] = "a";
    rec["m"] = 1;
    rec["d"] = 2;
    rec["group"] = "Q8";
    rec["central_subgroup"] = std::vector<int>{0, 1};
    rec["zeta_exponent"] = 1;
    Json file;
    file["schema"] = 1;
    file["field"] = Json{{"p", 5}, {"e", 1}, {"f", 1}, {"a", 0}};
    file["scenarios"] = Json::array({rec});
    auto scenarios = scenario_file_from_json(file);
    REQUIRE(scenarios.size() == 1);
    REQUIRE(scenarios[0].field.has_value());
    CHECK(scenarios[0].field->p == 5);  // inherited from the shared block

    file["scenarios"] = Json::array({rec, rec});
    CHECK_THROWS_AS(scenario_file_from_json(file), std::invalid_argument);

    file["scenarios"] = Json::array({rec});
    file["schema"] = 2;
    CHECK_THROWS_AS(scenario_file_from_json(file), std::invalid_argument);
}

TEST_CASE("report round-trip, including audit and notes") {
    PacketReport r;
    r.card_star = 4;
    r.card_g = 1;
    r.multiplicity = 2;
    r.s_card = 4;
    r.kottwitz_sign = -1;
    r.endoscopic_coefficient = -2;
    r.degree_ratio = Rational(1, 2);
    r.depth_zero_flag = true;
    r.notes = {"a note"};
    DivisibilityAudit a;
    a.coset = 8;
    a.bound = 2;
    a.mult_divides_bound = true;
    a.p_coprime_n = true;
    a.mult_divides_n = true;
    a.card_g_divides_coset = true;
    a.card_star_divides_coset = true;
    r.divisibility = a;

    PacketReport back = report_from_json(report_to_json(r));
    CHECK(back.card_star == r.card_star);
    CHECK(back.card_g == r.card_g);
    CHECK(back.multiplicity == r.multiplicity);
    CHECK(back.s_card == r.s_card);
    CHECK(back.common_dim_ok == r.common_dim_ok);
    CHECK(back.kottwitz_sign == r.kottwitz_sign);
    CHECK(back.endoscopic_coefficient == r.endoscopic_coefficient);
    CHECK(back.degree_ratio == r.degree_ratio);
    REQUIRE(back.divisibility.has_value());
    CHECK(back.divisibility->coset == 8);
    CHECK(back.divisibility->bound == 2);
    CHECK(back.divisibility->all_pass() == r.divisibility->all_pass());
    REQUIRE(back.depth_zero_flag.has_value());
    CHECK(*back.depth_zero_flag);
    CHECK(back.notes == r.notes);

    // a report without optional parts round-trips too
    PacketReport plain;
    PacketReport pback = report_from_json(report_to_json(plain));
    CHECK_FALSE(pback.divisibility.has_value());
    CHECK_FALSE(pback.depth_zero_flag.has_value());
    CHECK(pback.degree_ratio == Rational(1));
}

TEST_CASE("emitted report JSON is deterministic") {
    PacketReport r;
    r.card_star = 9;
    r.card_g = 1;
    r.multiplicity = 3;
    CHECK(report_to_json(r).dump() == report_to_json(r).dump());
}
