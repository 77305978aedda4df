#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "packetmult/character.hpp"
#include "packetmult/engine.hpp"
#include "packetmult/json_io.hpp"

namespace pm = packetmult;

namespace {

// Right-aligned cell rendering for the case tables.
void print_aligned(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> width;
    for (const auto& row : rows)
        for (size_t c = 0; c < row.size(); ++c) {
            if (width.size() <= c) width.resize(c + 1, 0);
            width[c] = std::max(width[c], row[c].size());
        }
    for (const auto& row : rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) os << "  ";
            os << std::string(width[c] - row[c].size(), ' ') << row[c];
        }
        os << "\n";
    }
}

std::string ratio_str(const pm::Rational& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << "/" << r.denominator();
    return os.str();
}

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

int run_field(long long p, long long e, long long f, long long a, long long n, bool json) {
    pm::PAdicFieldData field{p, e, f, a};
    field.validate();
    if (n < 1) throw std::invalid_argument("n must be positive");
    pm::BigInt coset = pm::coset_card(field, n);
    pm::BigInt bound = pm::square_divisor_bound(coset);
    if (json) {
        pm::Json j;
        j["q"] = field.residue_card().str();
        j["valuation"] = pm::field_valuation(field, n);
        j["mu"] = pm::mu_card(field, n);
        j["coset"] = coset.str();
        j["bound"] = bound.str();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "q          = " << field.residue_card() << "\n"
                  << "v_F(n)     = " << pm::field_valuation(field, n) << "\n"
                  << "|mu_n(F)|  = " << pm::mu_card(field, n) << "\n"
                  << "coset card = " << coset << "\n"
                  << "sq bound   = " << bound << "\n";
    }
    return 0;
}

int run_group(const std::string& spec, const std::string& central_char,
              const std::string& central_subgroup, long long zeta_exponent, bool json) {
    pm::FiniteGroup g = pm::build_group(pm::parse_group_spec(spec));
    pm::CharacterTable table = pm::character_table(g);

    bool have_query = !central_char.empty() || !central_subgroup.empty();
    if (have_query) {
        pm::CentralCharacterQuery query;
        query.subgroup = central_subgroup.empty() ? g.center() : parse_index_list(central_subgroup);
        if (central_char == "sign")
            query.zeta_exponent = 1;
        else if (central_char == "trivial" || central_char.empty())
            query.zeta_exponent = zeta_exponent;
        else
            throw std::invalid_argument("unknown central character name: " + central_char);
        auto degrees = pm::irr_with_central_character(g, table, query);
        if (json) {
            std::cout << pm::Json(degrees).dump() << "\n";
        } else {
            std::cout << "[";
            for (size_t i = 0; i < degrees.size(); ++i)
                std::cout << (i ? ", " : "") << degrees[i];
            std::cout << "]\n";
        }
        return 0;
    }

    if (json) {
        pm::Json j;
        j["order"] = table.group_order;
        j["exponent"] = table.exponent;
        pm::Json classes = pm::Json::array();
        for (const auto& c : table.classes) classes.push_back({{"rep", c.rep}, {"size", c.size}});
        j["classes"] = classes;
        pm::Json chars = pm::Json::array();
        for (const auto& ch : table.characters) {
            pm::Json row;
            row["degree"] = ch.degree;
            pm::Json vals = pm::Json::array();
            for (const auto& v : ch.values) vals.push_back(v.to_string());
            row["values"] = vals;
            chars.push_back(row);
        }
        j["characters"] = chars;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "group " << spec << ": order " << table.group_order << ", " << table.classes.size()
              << " classes\n";
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head{"deg"};
    for (const auto& c : table.classes) {
        std::ostringstream os;
        os << "g" << c.rep << "(x" << c.size << ")";
        head.push_back(os.str());
    }
    rows.push_back(head);
    for (const auto& ch : table.characters) {
        std::vector<std::string> row{std::to_string(ch.degree)};
        for (const auto& v : ch.values) row.push_back(v.to_string());
        rows.push_back(row);
    }
    print_aligned(std::cout, rows);
    return 0;
}

int run_extensions(const std::string& spec, long long n, bool json) {
    pm::FiniteGroup s = pm::build_group(pm::parse_group_spec(spec));
    pm::CohomologyGroup h2 = pm::second_cohomology(s, n);
    auto exts = pm::enumerate_central_extensions(s, n);
    if (json) {
        pm::Json j;
        j["h2_order"] = h2.order;
        j["h2_invariant_factors"] = h2.invariant_factors;
        pm::Json list = pm::Json::array();
        for (const auto& e : exts) {
            pm::Json rec;
            rec["order"] = e.total.order();
            rec["abelian"] = e.total.is_abelian();
            rec["sl2_subgroup"] = pm::sl2_finite_subgroup_check(e.total);
            rec["group"] = pm::group_to_json(e.total);
            rec["central_subgroup"] = e.central_subgroup;
            list.push_back(rec);
        }
        j["extensions"] = list;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "H^2(" << spec << ", Z/" << n << "): order " << h2.order << ", factors (";
    for (size_t i = 0; i < h2.invariant_factors.size(); ++i)
        std::cout << (i ? "," : "") << h2.invariant_factors[i];
    std::cout << ")\n"
              << exts.size() << " isomorphism classes of (extension, central Z/" << n << "):\n";
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"#", "order", "abelian", "sl2_subgroup"});
    for (size_t i = 0; i < exts.size(); ++i)
        rows.push_back({std::to_string(i), std::to_string(exts[i].total.order()),
                        exts[i].total.is_abelian() ? "yes" : "no",
                        pm::sl2_finite_subgroup_check(exts[i].total) ? "yes" : "no"});
    print_aligned(std::cout, rows);
    return 0;
}

void print_report_rows(std::vector<std::vector<std::string>>& rows, const std::string& label,
                       const pm::PacketReport& r) {
    std::vector<std::string> row{label,
                                 std::to_string(r.card_star),
                                 std::to_string(r.card_g),
                                 std::to_string(r.multiplicity),
                                 std::to_string(r.s_card),
                                 (r.kottwitz_sign > 0 ? "+1" : "-1"),
                                 std::to_string(r.endoscopic_coefficient),
                                 ratio_str(r.degree_ratio),
                                 r.divisibility ? (r.divisibility->all_pass() ? "pass" : "FAIL")
                                                : "-"};
    rows.push_back(std::move(row));
}

int run_analyze(const std::string& path, bool audit_field, bool json, bool keep_going) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open scenario file: " + path);
    pm::Json doc = pm::Json::parse(in);
    if (!doc.is_object() || !doc.contains("scenarios"))
        throw std::invalid_argument("scenario file must be an object with a scenarios array");
    if (doc.contains("schema") && doc.at("schema").get<int>() != 1)
        throw std::invalid_argument("unsupported scenario schema version");
    std::optional<pm::PAdicFieldData> shared;
    if (doc.contains("field")) shared = pm::field_from_json(doc.at("field"));

    int failures = 0;
    pm::Json out = pm::Json::array();
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"label", "card*", "cardG", "mult", "|S|", "sign", "endo", "ratio", "audit"});
    std::vector<std::string> notes;
    std::set<std::string> labels;
    for (const pm::Json& rec : doc.at("scenarios")) {
        std::string label = rec.is_object() ? rec.value("label", std::string("?")) : "?";
        try {
            pm::ParameterScenario sc = pm::scenario_from_json(rec, shared);
            if (!labels.insert(sc.label).second)
                throw std::invalid_argument("duplicate scenario label");
            if (audit_field && !sc.field)
                throw std::invalid_argument("--audit-field requires field data for every record");
            pm::PacketReport rep = pm::analyze_parameter(sc);
            if (json) {
                pm::Json outrec;
                outrec["label"] = sc.label;
                outrec["report"] = pm::report_to_json(rep);
                out.push_back(outrec);
            } else {
                print_report_rows(rows, sc.label, rep);
                for (const auto& note : rep.notes) notes.push_back(sc.label + ": " + note);
            }
        } catch (const std::exception& ex) {
            ++failures;
            if (json) {
                pm::Json outrec;
                outrec["label"] = label;
                outrec["error"] = ex.what();
                out.push_back(outrec);
            } else {
                std::cerr << "error in '" << label << "': " << ex.what() << "\n";
            }
            if (!keep_going) break;
        }
    }
    if (json) {
        std::cout << out.dump(2) << "\n";
    } else {
        print_aligned(std::cout, rows);
        for (const auto& note : notes) std::cout << "note: " << note << "\n";
    }
    return failures == 0 ? 0 : 1;
}

void print_packet_table(const pm::PacketReport& r) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"|Pi(G*)|", std::to_string(r.card_star)});
    rows.push_back({"|Pi(G)|", std::to_string(r.card_g)});
    rows.push_back({"mult", std::to_string(r.multiplicity)});
    rows.push_back({"|S|", std::to_string(r.s_card)});
    rows.push_back({"endo coeff", std::to_string(r.endoscopic_coefficient)});
    rows.push_back({"deg ratio", ratio_str(r.degree_ratio)});
    print_aligned(std::cout, rows);
    if (r.depth_zero_flag) std::cout << "depth zero: " << (*r.depth_zero_flag ? "yes" : "no") << "\n";
    for (const auto& note : r.notes) std::cout << "note: " << note << "\n";
}

int run_cases(const std::string& which, long long r, long long l, long long q, long long coset,
              long long p, long long e, long long f, long long a, bool json) {
    if (which == "sl4") {
        auto rows = pm::sl4_enumerate(coset);
        if (json) {
            pm::Json j = pm::Json::array();
            for (const auto& t : rows)
                j.push_back({{"card_star", t.card_star}, {"card_g", t.card_g}, {"mult", t.mult}});
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        std::cout << "coset card " << coset << ":\n";
        std::vector<std::vector<std::string>> table(3);
        table[0].push_back("|Pi(G*)|");
        table[1].push_back("|Pi(G)|");
        table[2].push_back("mult");
        for (const auto& t : rows) {
            table[0].push_back(std::to_string(t.card_star));
            table[1].push_back(std::to_string(t.card_g));
            table[2].push_back(std::to_string(t.mult));
        }
        print_aligned(std::cout, table);
        return 0;
    }
    if (which == "sl2") {
        pm::PAdicFieldData field{p, e, f, a};
        pm::PacketReport rep = pm::sl2_case(r, field);
        if (json) {
            std::cout << pm::report_to_json(rep).dump(2) << "\n";
        } else {
            std::cout << "sl2 case, r = " << r << ":\n";
            print_packet_table(rep);
        }
        return 0;
    }
    if (which == "slprime") {
        int rc = 0;
        pm::Json j = pm::Json::array();
        for (bool nonabelian : {false, true}) {
            std::string head = nonabelian ? "non-abelian branch" : "abelian branch";
            try {
                pm::PacketReport rep = pm::sl_prime_case(l, q, nonabelian);
                if (json) {
                    j.push_back({{"branch", head}, {"report", pm::report_to_json(rep)}});
                } else {
                    std::cout << "slprime l = " << l << ", q = " << q << ", " << head << ":\n";
                    print_packet_table(rep);
                }
            } catch (const pm::InconsistencyError& ex) {
                if (json)
                    j.push_back({{"branch", head}, {"infeasible", ex.what()}});
                else
                    std::cout << "slprime l = " << l << ", q = " << q << ", " << head
                              << ": infeasible (" << ex.what() << ")\n";
            }
        }
        if (json) std::cout << j.dump(2) << "\n";
        return rc;
    }
    throw std::invalid_argument("unknown case: " + which);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact packet cardinality and multiplicity calculator"};
    app.require_subcommand(1);

    // field
    long long fp = 0, fe = 1, ff = 1, fa = 0, fn = 1;
    bool field_json = false;
    CLI::App* field = app.add_subcommand("field", "unit-group cardinalities of a local field");
    field->add_option("--p", fp, "residue characteristic")->required();
    field->add_option("--e", fe, "ramification index");
    field->add_option("--f", ff, "residue degree");
    field->add_option("--a", fa, "wild root-of-unity exponent");
    field->add_option("--n", fn, "power n")->required();
    field->add_flag("--json", field_json, "machine-readable output");

    // group
    std::string gspec, gchar, gsub;
    long long gzeta = 0;
    bool group_json = false;
    CLI::App* group = app.add_subcommand("group", "character table / central-character filter");
    group->add_option("spec", gspec, "group spec, e.g. Q8, C4xC2, heisenberg(3)")->required();
    group->add_option("--central-char", gchar, "named character of the center: sign or trivial");
    group->add_option("--central-subgroup", gsub, "comma-separated element indices");
    group->add_option("--zeta-exponent", gzeta, "exponent k of the queried character");
    group->add_flag("--json", group_json, "machine-readable output");

    // extensions
    std::string espec;
    long long en = 2;
    bool ext_json = false;
    CLI::App* ext = app.add_subcommand("extensions", "central extensions of S by Z/n");
    ext->add_option("spec", espec, "base group spec")->required();
    ext->add_option("--n", en, "central coefficient modulus")->required();
    ext->add_flag("--json", ext_json, "machine-readable output");

    // analyze
    std::string afile;
    bool audit = false, ajson = false, atable = false, keep_going = false;
    CLI::App* analyze = app.add_subcommand("analyze", "batch packet reports from a scenario file");
    analyze->add_option("file", afile, "scenario JSON file")->required();
    analyze->add_flag("--audit-field", audit, "require and report field divisibility audits");
    analyze->add_flag("--json", ajson, "machine-readable output");
    analyze->add_flag("--table", atable, "aligned table output (default)");
    analyze->add_flag("--keep-going", keep_going, "continue past per-record errors");

    // cases
    std::string which;
    long long cr = 1, cl = 3, cq = 7, ccoset = 16, cp = 3, ce = 1, cf = 1, ca = 0;
    bool cases_json = false;
    CLI::App* cases = app.add_subcommand("cases", "reproduce the worked case studies");
    cases->add_option("which", which, "sl2 | slprime | sl4")->required();
    cases->add_option("--r", cr, "sl2: ramification parameter r");
    cases->add_option("--l", cl, "slprime: the prime l");
    cases->add_option("--q", cq, "slprime: residue cardinality q");
    cases->add_option("--coset", ccoset, "sl4: coset cardinality, 8 or 16");
    cases->add_option("--p", cp, "sl2: residue characteristic");
    cases->add_option("--e", ce, "sl2: ramification index");
    cases->add_option("--f", cf, "sl2: residue degree");
    cases->add_option("--a", ca, "sl2: wild exponent");
    cases->add_flag("--json", cases_json, "machine-readable output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (field->parsed()) return run_field(fp, fe, ff, fa, fn, field_json);
        if (group->parsed()) return run_group(gspec, gchar, gsub, gzeta, group_json);
        if (ext->parsed()) return run_extensions(espec, en, ext_json);
        if (analyze->parsed()) return run_analyze(afile, audit, ajson && !atable, keep_going);
        if (cases->parsed())
            return run_cases(which, cr, cl, cq, ccoset, cp, ce, cf, ca, cases_json);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
