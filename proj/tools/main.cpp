#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "emcomb/characters.hpp"
#include "emcomb/composition.hpp"
#include "emcomb/distribution.hpp"
#include "emcomb/emc.hpp"
#include "emcomb/error.hpp"
#include "emcomb/qseries.hpp"
#include "emcomb/statistics.hpp"

using namespace emcomb;

namespace {

nlohmann::ordered_json poly_json(const LaurentPoly& p, std::vector<std::string> vars) {
    nlohmann::ordered_json j;
    j["vars"] = std::move(vars);
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::ordered_json term;
        term["exp"] = e;
        term["coef"] = c.str();
        j["terms"].push_back(std::move(term));
    }
    return j;
}

std::vector<std::string> character_vars(int d) {
    std::vector<std::string> vars;
    for (int i = 1; i < d; ++i) vars.push_back("x" + std::to_string(i));
    return vars;
}

int run_emc(const std::string& tuple_text, const std::string& method, bool explain) {
    const std::vector<Composition> tuple = parse_tuple(tuple_text);
    if (tuple.size() < 2) throw std::invalid_argument("a tuple needs at least two histograms");
    long long value = 0;
    if (method == "rsk") {
        if (explain) {
            const RskTrace trace = emc_rsk_trace(tuple);
            for (std::size_t i = 0; i < tuple.size(); ++i) {
                std::string line = "word " + std::to_string(i) + ":";
                const Word w = word_of(tuple[i]);
                for (int sym : w.symbols()) line += ' ' + std::to_string(sym);
                std::cout << line << '\n';
            }
            std::string costs = "column costs:";
            for (long long c : trace.column_costs) costs += ' ' + std::to_string(c);
            std::cout << costs << '\n';
            value = trace.total;
        } else {
            value = emc_rsk(tuple);
        }
    } else if (method == "symdiff") {
        std::vector<YoungDiagram> diagrams;
        for (const Composition& c : tuple) diagrams.push_back(diagram_of(c));
        if (explain) {
            const SymdiffTrace trace = unimodal_symdiff_trace(diagrams);
            std::cout << "cell weights:\n";
            for (const auto& row : trace.cell_weights) {
                std::string line;
                for (std::size_t c = 0; c < row.size(); ++c) {
                    if (c) line += ' ';
                    line += std::to_string(row[c]);
                }
                std::cout << line << '\n';
            }
            value = trace.total;
        } else {
            value = unimodal_symdiff(diagrams);
        }
    } else if (method == "transport") {
        value = emc_transport_oracle(tuple);
    } else { // prefix
        if (tuple.size() != 2)
            throw std::invalid_argument("--method prefix needs exactly two histograms");
        value = emc_prefix_oracle(tuple[0], tuple[1]);
    }
    if (explain)
        std::cout << "emc: " << value << '\n';
    else
        std::cout << value << '\n';
    return 0;
}

int run_selftest(unsigned long long seed, int samples) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_s(0, 8), pick_n(1, 8), pick_d(2, 5);
    auto random_composition = [&rng](int s, int n) {
        std::vector<int> a(static_cast<std::size_t>(n), 0);
        std::uniform_int_distribution<int> bin(0, n - 1);
        for (int i = 0; i < s; ++i) ++a[static_cast<std::size_t>(bin(rng))];
        return Composition(std::move(a));
    };
    int failures = 0;
    for (int t = 0; t < samples; ++t) {
        const int s = pick_s(rng), n = pick_n(rng), d = pick_d(rng);
        std::vector<Composition> tuple;
        std::vector<YoungDiagram> diagrams;
        for (int i = 0; i < d; ++i) {
            tuple.push_back(random_composition(s, n));
            diagrams.push_back(diagram_of(tuple.back()));
        }
        const long long by_rsk = emc_rsk(tuple);
        if (by_rsk != unimodal_symdiff(diagrams)) {
            std::cerr << "selftest: method mismatch on " << to_string(tuple) << '\n';
            ++failures;
        }
        if (d == 2 && by_rsk != emc_prefix_oracle(tuple[0], tuple[1])) {
            std::cerr << "selftest: prefix mismatch on " << to_string(tuple) << '\n';
            ++failures;
        }
        std::vector<int> pos(static_cast<std::size_t>(d));
        std::uniform_int_distribution<int> bin(0, n - 1);
        for (int i = 0; i < d; ++i) pos[static_cast<std::size_t>(i)] = bin(rng);
        if (cost(pos) != cost_median_oracle(pos)) {
            std::cerr << "selftest: cost mismatch\n";
            ++failures;
        }
    }
    if (failures) {
        std::cerr << "selftest: " << failures << " failures in " << samples << " samples\n";
        return 1;
    }
    std::cout << "selftest: " << samples << " samples, all checks passed\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact earth mover's coefficient combinatorics on integer histograms"};
    app.set_version_flag("--version", "emcomb 1.0.0");
    app.require_subcommand(1);

    auto* cmd_emc = app.add_subcommand("emc", "earth mover's coefficient of a histogram tuple");
    std::string tuple_text, method = "symdiff";
    bool explain = false;
    cmd_emc->add_option("--tuple", tuple_text,
                        "histograms as comma separated entries joined by ';'")->required();
    cmd_emc->add_option("--method", method, "algorithm")
        ->check(CLI::IsMember({"rsk", "symdiff", "transport", "prefix"}));
    cmd_emc->add_flag("--explain", explain, "print the per-column costs or cell weight grid");

    auto* cmd_dist = app.add_subcommand("distribution", "tuple counts by weighted difference and emc");
    long long ds = 0;
    int dn = 0, dd = 2;
    std::string dist_format = "csv";
    long long dist_budget = 10'000'000;
    cmd_dist->add_option("--s", ds, "data points per histogram")->required();
    cmd_dist->add_option("--n", dn, "bins per histogram")->required();
    cmd_dist->add_option("--d", dd, "histograms per tuple");
    cmd_dist->add_option("--format", dist_format)->check(CLI::IsMember({"csv", "json"}));
    cmd_dist->add_option("--budget", dist_budget, "maximum tuples to enumerate");

    auto* cmd_gen = app.add_subcommand("genfun", "joint generating function of emc and weighted totals");
    int gn = 0, gm = 0, gtmax = 0, gcoeff = -1;
    std::string gen_format = "text";
    cmd_gen->add_option("--n", gn, "bins of the first histogram")->required();
    cmd_gen->add_option("--m", gm, "bins of the second histogram")->required();
    cmd_gen->add_option("--tmax", gtmax, "truncation order in t")->required();
    cmd_gen->add_option("--coeff-of-t", gcoeff, "print only the coefficient of t^k")
        ->check(CLI::NonNegativeNumber);
    cmd_gen->add_option("--format", gen_format)->check(CLI::IsMember({"text", "json"}));

    auto* cmd_char = app.add_subcommand("character", "weighted-difference counts as a character polynomial");
    long long cs = 0;
    int cn = 0, cd = 3;
    std::string char_format = "csv";
    bool char_cartesian = false;
    cmd_char->add_option("--s", cs, "data points per histogram")->required();
    cmd_char->add_option("--n", cn, "bins per histogram")->required();
    cmd_char->add_option("--d", cd, "histograms per tuple");
    cmd_char->add_option("--format", char_format)->check(CLI::IsMember({"csv", "json"}));
    cmd_char->add_flag("--cartesian", char_cartesian, "add plot coordinates (d=3 only)");

    auto* cmd_dec = app.add_subcommand("decompose", "signed irreducible multiplicities of the d=3 character");
    long long xs = 0;
    int xn = 0;
    bool dec_cartesian = false;
    cmd_dec->add_option("--s", xs, "data points per histogram")->required();
    cmd_dec->add_option("--n", xn, "bins per histogram")->required();
    cmd_dec->add_flag("--cartesian", dec_cartesian, "add plot coordinates");

    auto* cmd_prop = app.add_subcommand("proportion", "exact proportion of pairs with emc = |D|");
    long long ps = 0, pn = 0;
    cmd_prop->add_option("--s", ps, "data points per histogram")->required();
    cmd_prop->add_option("--n", pn, "bins per histogram")->required();

    auto* cmd_enum = app.add_subcommand("enumerate", "list C(s,n) in lexicographic order");
    long long es = 0;
    int en = 0;
    cmd_enum->add_option("--s", es, "data points per histogram")->required();
    cmd_enum->add_option("--n", en, "bins per histogram")->required();

    auto* cmd_self = app.add_subcommand("selftest", "randomized cross-checks of the emc methods");
    unsigned long long seed = 12345;
    int samples = 10000;
    cmd_self->add_option("--seed", seed, "rng seed");
    cmd_self->add_option("--samples", samples, "number of random tuples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(cmd_emc)) return run_emc(tuple_text, method, explain);

        if (app.got_subcommand(cmd_dist)) {
            EnumerationBudget budget;
            budget.max_tuples = dist_budget;
            const DistributionTable table = emc_vs_d_table(ds, dn, dd, budget);
            std::cout << (dist_format == "csv" ? to_csv(table) : to_json(table) + "\n");
            return 0;
        }

        if (app.got_subcommand(cmd_gen)) {
            if (gcoeff > gtmax)
                throw std::invalid_argument("--coeff-of-t must be at most --tmax");
            const TruncatedSeries series = genfun_H(gn, gm, gtmax);
            const std::vector<std::string> vars{"q", "x", "y"};
            if (gen_format == "text") {
                if (cmd_gen->count("--coeff-of-t")) {
                    std::cout << to_canonical_string(series[gcoeff], vars) << '\n';
                } else {
                    for (int k = 0; k <= gtmax; ++k)
                        std::cout << "t^" << k << ": " << to_canonical_string(series[k], vars) << '\n';
                }
            } else {
                if (cmd_gen->count("--coeff-of-t")) {
                    std::cout << poly_json(series[gcoeff], vars).dump() << '\n';
                } else {
                    nlohmann::ordered_json j;
                    j["vars"] = vars;
                    j["tmax"] = gtmax;
                    j["series"] = nlohmann::ordered_json::array();
                    for (int k = 0; k <= gtmax; ++k) {
                        nlohmann::ordered_json entry;
                        entry["t"] = k;
                        entry["terms"] = poly_json(series[k], vars)["terms"];
                        j["series"].push_back(std::move(entry));
                    }
                    std::cout << j.dump() << '\n';
                }
            }
            return 0;
        }

        if (app.got_subcommand(cmd_char)) {
            const LaurentPoly ch = char_V(cs, cn, cd);
            if (char_format == "json") {
                if (char_cartesian)
                    throw std::invalid_argument("--cartesian applies to csv output");
                std::cout << poly_json(ch, character_vars(cd)).dump() << '\n';
                return 0;
            }
            const auto rows = weight_diagram_export(ch, cs, cn, char_cartesian);
            std::string header;
            for (int i = 1; i < cd; ++i) header += 'w' + std::to_string(i) + ',';
            header += "count";
            if (char_cartesian) header += ",px,py";
            std::cout << header << '\n';
            for (const WeightPoint& p : rows) {
                std::string line;
                for (long long w : p.w) line += std::to_string(w) + ',';
                line += p.count.str();
                std::cout << line;
                if (p.has_xy) {
                    char buf[64];
                    std::snprintf(buf, sizeof buf, ",%.6f,%.6f", p.px, p.py);
                    std::cout << buf;
                }
                std::cout << '\n';
            }
            return 0;
        }

        if (app.got_subcommand(cmd_dec)) {
            const VirtualDecomposition dec = decompose_sl3(char_V(xs, xn, 3));
            std::cout << (dec_cartesian ? "w1,w2,mult,px,py" : "w1,w2,mult") << '\n';
            for (const auto& [w, mult] : dec) {
                std::cout << w[0] << ',' << w[1] << ',' << mult.str();
                if (dec_cartesian) {
                    const auto [px, py] = cartesian_sl3(w[0], w[1]);
                    char buf[64];
                    std::snprintf(buf, sizeof buf, ",%.6f,%.6f", px, py);
                    std::cout << buf;
                }
                std::cout << '\n';
            }
            return 0;
        }

        if (app.got_subcommand(cmd_prop)) {
            const BigRat p = proportion_emc_eq_absd(ps, pn);
            std::cout << p.str() << '\n';
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.12g", p.convert_to<double>());
            std::cout << buf << '\n';
            return 0;
        }

        if (app.got_subcommand(cmd_enum)) {
            for (const Composition& c : CompositionRange(es, en)) std::cout << to_string(c) << '\n';
            return 0;
        }

        if (app.got_subcommand(cmd_self)) return run_selftest(seed, samples);
    } catch (const BudgetError& e) {
        nlohmann::ordered_json err;
        err["error"] = "budget";
        err["message"] = e.what();
        std::cerr << err.dump() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
