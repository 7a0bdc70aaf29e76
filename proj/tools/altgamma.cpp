// altgamma: exact tables, brute-force distributions, grammar derivatives,
// gamma expansions, and the cross-check suite, from one binary.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage or domain
// error. All output is deterministic.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "altgamma/expr.hpp"
#include "altgamma/families.hpp"
#include "altgamma/grammar.hpp"
#include "altgamma/permstats.hpp"
#include "altgamma/poly_json.hpp"
#include "altgamma/verify.hpp"

namespace {

using namespace altgamma;

// b-file style: "n a(n)" for constant rows, "n c0 c1 ..." otherwise.
std::string bfile_line(const FamilyRow& row, unsigned window) {
    std::string line = std::to_string(row.n);
    for (const Rational& c : coeff_list(row.value, window)) line += " " + c.str();
    return line;
}

int cmd_table(const std::string& family, unsigned from, unsigned to, bool as_json,
              bool as_bfile) {
    FamilyTable t = family_table(family, from, to);
    if (as_json) {
        nlohmann::ordered_json out;
        out["family"] = t.id;
        out["rows"] = nlohmann::ordered_json::array();
        for (const auto& row : t.rows)
            out["rows"].push_back({{"n", row.n},
                                   {"provenance", provenance_name(row.prov)},
                                   {"poly", poly_to_json(row.value)}});
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    bool scalar = family == "springer" || family == "secant";
    for (const auto& row : t.rows) {
        if (as_bfile) {
            unsigned window = scalar ? 0 : row.value.degree_in("x").value_or(0);
            std::cout << bfile_line(row, window) << "\n";
        } else {
            std::cout << row.n << "\t" << to_string(row.value) << "\n";
        }
    }
    return 0;
}

int cmd_verify(const std::string& id, unsigned max_n, unsigned order,
               std::optional<unsigned> enum_cap) {
    if (enum_cap) override_enum_caps(EnumCaps{*enum_cap, *enum_cap});
    SuiteOptions opts{max_n, order};
    std::vector<VerdictReport> reports;
    if (id == "all")
        reports = run_suite(opts);
    else
        reports.push_back(run_identity(id, opts));
    std::cout << format_report(reports);
    for (const auto& r : reports)
        if (!r.pass) return 1;
    return 0;
}

int cmd_enumerate(const std::string& stat, unsigned n, bool as_json) {
    Poly dist = distribution(stat_from_name(stat), n);
    if (as_json)
        std::cout << poly_to_json(dist).dump(2) << "\n";
    else
        std::cout << to_string(dist) << "\n";
    return 0;
}

int cmd_derive(const std::string& grammar, const std::string& seed, unsigned steps) {
    Poly result;
    if (grammar.find("->") != std::string::npos)
        result = derive_iter(parse_grammar(grammar), parse_poly(seed), steps);
    else
        result = derive_iter(builtin_grammar(grammar), parse_poly(seed), steps);
    std::cout << to_string(result) << "\n";
    return 0;
}

int cmd_gamma(const std::string& family, unsigned n, std::optional<long long> scale) {
    Poly row;
    Rational c;
    unsigned window;
    if (family == "altA") {
        if (n == 0) throw std::invalid_argument("gamma: altA starts at n = 1");
        row = alt_a(n);
        c = Rational(scale.value_or(-2));
        window = n - 1;
    } else if (family == "altB") {
        row = alt_b(n);
        c = Rational(scale.value_or(-4));
        window = n;
    } else {
        throw std::invalid_argument("gamma: family must be altA or altB");
    }
    GammaExpansion g = gamma_extract(row, c, window);
    std::string sep;
    for (const Rational& coeff : g.coeffs) {
        std::cout << sep << coeff.str();
        sep = " ";
    }
    std::cout << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Alternating Eulerian polynomials: exact families, grammars, and checks"};
    app.require_subcommand(1);

    std::string family, stat, grammar, seed, identity = "all";
    unsigned from = 0, to = 0, n = 0, steps = 0, max_n = 25, order = 16;
    bool as_json = false, as_bfile = false;
    std::optional<unsigned> enum_cap;
    std::optional<long long> scale;

    auto* table = app.add_subcommand("table", "Print rows of a named family");
    table->add_option("family", family, "One of: altA altB eulerA eulerB P Q S eta xi M springer secant")
        ->required();
    table->add_option("--from", from, "First index")->required();
    table->add_option("--to", to, "Last index")->required();
    auto* tj = table->add_flag("--json", as_json, "JSON rows with provenance");
    table->add_flag("--bfile", as_bfile, "Plain \"n value(s)\" lines")->excludes(tj);

    auto* verify = app.add_subcommand("verify", "Run cross-checks and print a report");
    verify->add_option("identity", identity, "Identity id, or \"all\"");
    verify->add_option("--max-n", max_n, "Largest index attempted (default 25)");
    verify->add_option("--order", order, "Series truncation order (default 16)");
    verify->add_option("--enum-cap", enum_cap, "Cap for both enumeration sizes");

    auto* enumerate = app.add_subcommand("enumerate", "Brute-force distribution of a statistic");
    enumerate->add_option("--stat", stat, "One of: des desB altdes altdesB altascB altdesbRemmel lpk snake alternating")
        ->required();
    enumerate->add_option("--n", n, "Word length")->required();
    enumerate->add_flag("--json", as_json, "Polynomial as JSON");

    auto* derive = app.add_subcommand("derive", "Iterated grammar derivative of a seed");
    derive->add_option("--grammar", grammar,
                       "Builtin name (dumont typeB g1 g2 g3) or literal \"x->x*y; y->x*y\"")
        ->required();
    derive->add_option("--seed", seed, "Seed polynomial expression")->required();
    derive->add_option("--steps", steps, "Number of derivative steps")->required();

    auto* gamma = app.add_subcommand("gamma", "Gamma-basis coefficients of a family row");
    gamma->add_option("--family", family, "altA or altB")->required();
    gamma->add_option("--n", n, "Row index")->required();
    gamma->add_option("--scale", scale, "Basis scale c (default -2 for altA, -4 for altB)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (table->parsed()) return cmd_table(family, from, to, as_json, as_bfile);
        if (verify->parsed()) return cmd_verify(identity, max_n, order, enum_cap);
        if (enumerate->parsed()) return cmd_enumerate(stat, n, as_json);
        if (derive->parsed()) return cmd_derive(grammar, seed, steps);
        if (gamma->parsed()) return cmd_gamma(family, n, scale);
    } catch (const std::exception& e) {
        std::cerr << "altgamma: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
