#include "cli_app.hpp"

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gamma_forms/criterion.hpp"
#include "gamma_forms/identities.hpp"
#include "gamma_forms/numerics.hpp"
#include "gamma_forms/representations.hpp"

namespace gamma_forms::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

enum class Format { text, json, csv };

struct Options {
    unsigned n = 1;
    unsigned n_max = 3;
    long precision_bits = 256;
    std::string method = "all";
    Format format = Format::text;
    double safety_factor = 10.0;
    std::uint64_t seed = 12345;
};

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void print_csv_row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) std::fputc(',', stdout);
        std::fputs(csv_escape(cells[i]).c_str(), stdout);
    }
    std::fputc('\n', stdout);
}

void print_json(const ordered_json& j) {
    std::fputs(j.dump(1).c_str(), stdout);
    std::fputc('\n', stdout);
}

std::string gap_string(const Real& g) { return g.to_string(3); }

ordered_json eval_row_json(const InEvaluation& ev) {
    return ordered_json{{"n", ev.n},
                        {"method", method_name(ev.method)},
                        {"value", ev.value.value_string()},
                        {"error_radius", ev.value.radius_string()},
                        {"rigor", rigor_name(ev.value.rigor())},
                        {"terms", ev.terms_or_panels}};
}

std::vector<std::string> eval_row_cells(const InEvaluation& ev) {
    return {std::to_string(ev.n),        method_name(ev.method),
            ev.value.value_string(),     ev.value.radius_string(),
            rigor_name(ev.value.rigor()), std::to_string(ev.terms_or_panels)};
}

int cmd_eval(const Options& opt) {
    std::vector<InEvaluation> rows;
    if (opt.method == "all") {
        CrossValidation cv = cross_validate(opt.n, opt.precision_bits, opt.safety_factor);
        rows.assign(cv.evaluations.begin(), cv.evaluations.end());
        switch (opt.format) {
            case Format::json: {
                ordered_json j = ordered_json::array();
                for (const auto& ev : rows) j.push_back(eval_row_json(ev));
                print_json(j);
                break;
            }
            case Format::csv:
                print_csv_row({"n", "method", "value", "error_radius", "rigor", "terms"});
                for (const auto& ev : rows) print_csv_row(eval_row_cells(ev));
                break;
            case Format::text:
                for (const auto& ev : rows) {
                    std::printf("I_%u %-16s = %s  (radius %s, %s, terms %ld)\n", ev.n, method_name(ev.method),
                                ev.value.value_string().c_str(), ev.value.radius_string().c_str(),
                                rigor_name(ev.value.rigor()), ev.terms_or_panels);
                }
                std::printf("max pairwise gap %s, all_agree %s (safety factor %g)\n", gap_string(cv.max_gap).c_str(),
                            cv.all_agree ? "true" : "false", cv.safety_factor);
                break;
        }
        return 0;
    }

    const auto m = method_from_name(opt.method);
    InEvaluation ev = evaluate_in(opt.n, opt.precision_bits, *m);
    switch (opt.format) {
        case Format::json: print_json(eval_row_json(ev)); break;
        case Format::csv:
            print_csv_row({"n", "method", "value", "error_radius", "rigor", "terms"});
            print_csv_row(eval_row_cells(ev));
            break;
        case Format::text:
            std::printf("I_%u %-16s = %s  (radius %s, %s, terms %ld)\n", ev.n, method_name(ev.method),
                        ev.value.value_string().c_str(), ev.value.radius_string().c_str(),
                        rigor_name(ev.value.rigor()), ev.terms_or_panels);
            break;
    }
    return 0;
}

int cmd_validate(const Options& opt) {
    CrossValidation cv = cross_validate(opt.n, opt.precision_bits, opt.safety_factor);
    switch (opt.format) {
        case Format::json: {
            ordered_json j{{"n", opt.n},
                           {"precision_bits", opt.precision_bits},
                           {"safety_factor", cv.safety_factor},
                           {"max_gap", gap_string(cv.max_gap)},
                           {"all_agree", cv.all_agree},
                           {"evaluations", ordered_json::array()}};
            for (const auto& ev : cv.evaluations) j["evaluations"].push_back(eval_row_json(ev));
            print_json(j);
            break;
        }
        case Format::csv:
            print_csv_row({"n", "method", "value", "error_radius", "rigor", "terms", "max_gap", "all_agree"});
            for (const auto& ev : cv.evaluations) {
                auto cells = eval_row_cells(ev);
                cells.push_back(gap_string(cv.max_gap));
                cells.push_back(cv.all_agree ? "true" : "false");
                print_csv_row(cells);
            }
            break;
        case Format::text:
            for (const auto& ev : cv.evaluations) {
                std::printf("I_%u %-16s = %s  (radius %s, %s)\n", ev.n, method_name(ev.method),
                            ev.value.value_string().c_str(), ev.value.radius_string().c_str(),
                            rigor_name(ev.value.rigor()));
            }
            std::printf("max pairwise gap %s, all_agree %s (safety factor %g)\n", gap_string(cv.max_gap).c_str(),
                        cv.all_agree ? "true" : "false", cv.safety_factor);
            break;
    }
    return 0;
}

ordered_json criterion_row_json(const CriterionReport& r) {
    return ordered_json{{"n", r.n},
                        {"precision_bits", static_cast<long>(r.precision)},
                        {"method", method_name(r.method)},
                        {"log_Sn", r.log_Sn.value_string()},
                        {"floor_log_Sn", r.floor_log_Sn.str()},
                        {"frac_log_Sn", r.frac_log_Sn.value_string()},
                        {"d2n_In", r.d2n_In.value_string()},
                        {"d2n_In_radius", r.d2n_In.radius_string()},
                        {"delta", r.delta.value_string()},
                        {"delta_radius", r.delta.radius_string()},
                        {"equality_holds", ternary_name(r.equality_holds)},
                        {"implied_gamma", r.implied_gamma.str()},
                        {"implied_gamma_gap", r.implied_gamma_gap.value_string()},
                        {"In_lt_2pow4n", r.inequality_In_lt_2pow},
                        {"inclusion_ok", r.inclusion_ok}};
}

int cmd_criterion(const Options& opt) {
    Method method = Method::series;
    if (opt.method != "all") {
        method = *method_from_name(opt.method);
    }
    std::vector<CriterionReport> reports = criterion_sweep(opt.n_max, opt.precision_bits, method);
    bool any_yes = false;
    for (const auto& r : reports) any_yes = any_yes || r.equality_holds == Ternary::yes;

    switch (opt.format) {
        case Format::json: {
            ordered_json j = ordered_json::array();
            for (const auto& r : reports) j.push_back(criterion_row_json(r));
            print_json(j);
            break;
        }
        case Format::csv:
            print_csv_row({"n", "precision_bits", "method", "log_Sn", "floor_log_Sn", "frac_log_Sn", "d2n_In",
                           "d2n_In_radius", "delta", "delta_radius", "equality_holds", "implied_gamma",
                           "implied_gamma_gap", "In_lt_2pow4n", "inclusion_ok"});
            for (const auto& r : reports) {
                print_csv_row({std::to_string(r.n), std::to_string(static_cast<long>(r.precision)),
                               method_name(r.method), r.log_Sn.value_string(), r.floor_log_Sn.str(),
                               r.frac_log_Sn.value_string(), r.d2n_In.value_string(), r.d2n_In.radius_string(),
                               r.delta.value_string(), r.delta.radius_string(), ternary_name(r.equality_holds),
                               r.implied_gamma.str(), r.implied_gamma_gap.value_string(),
                               r.inequality_In_lt_2pow ? "true" : "false", r.inclusion_ok ? "true" : "false"});
            }
            break;
        case Format::text:
            for (const auto& r : reports) {
                std::printf("n=%u  frac(log S_n)=%.24s...  d2n*I_n=%.24s...  delta=%.24s...\n", r.n,
                            r.frac_log_Sn.value_string().c_str(), r.d2n_In.value_string().c_str(),
                            r.delta.value_string().c_str());
                std::printf("      equality_holds=%s  implied_gamma=%s  gap=%.12s...  I_n<2^-4n=%s  inclusion=%s\n",
                            ternary_name(r.equality_holds), r.implied_gamma.str().c_str(),
                            r.implied_gamma_gap.value_string().c_str(), r.inequality_In_lt_2pow ? "yes" : "NO",
                            r.inclusion_ok ? "ok" : "VIOLATED");
            }
            break;
    }
    return any_yes ? 4 : 0;
}

int cmd_gamma(const Options& opt) {
    const Method method = *method_from_name(opt.method);
    HPValue extracted = extract_gamma(opt.n, opt.precision_bits, method);
    HPValue reference = gamma_reference(std::min<mpfr_prec_t>(opt.precision_bits, gamma_reference_capacity()));
    const long digits = matching_decimal_digits(extracted, reference);

    switch (opt.format) {
        case Format::json:
            print_json(ordered_json{{"n", opt.n},
                                    {"method", method_name(method)},
                                    {"precision_bits", opt.precision_bits},
                                    {"extracted", extracted.value_string()},
                                    {"error_radius", extracted.radius_string()},
                                    {"reference", reference.value_string()},
                                    {"matching_digits", digits}});
            break;
        case Format::csv:
            print_csv_row({"n", "method", "precision_bits", "extracted", "error_radius", "reference",
                           "matching_digits"});
            print_csv_row({std::to_string(opt.n), method_name(method), std::to_string(opt.precision_bits),
                           extracted.value_string(), extracted.radius_string(), reference.value_string(),
                           std::to_string(digits)});
            break;
        case Format::text:
            std::printf("gamma from I_%u (%s): %s  (radius %s)\n", opt.n, method_name(method),
                        extracted.value_string().c_str(), extracted.radius_string().c_str());
            std::printf("reference:            %s\n", reference.value_string().c_str());
            std::printf("matching decimal digits: %ld\n", digits);
            break;
    }
    return 0;
}

int cmd_identities(const Options& opt) {
    std::vector<IdentityCheck> checks = run_identity_checks(opt.n_max, opt.seed, opt.precision_bits);
    bool all_pass = true;
    for (const auto& c : checks) all_pass = all_pass && c.pass;

    switch (opt.format) {
        case Format::json: {
            ordered_json j = ordered_json::array();
            for (const auto& c : checks) {
                char gap[32];
                std::snprintf(gap, sizeof gap, "%.3e", c.gap);
                j.push_back(ordered_json{{"name", c.name}, {"pass", c.pass}, {"gap", gap}});
            }
            print_json(j);
            break;
        }
        case Format::csv:
            print_csv_row({"name", "pass", "gap"});
            for (const auto& c : checks) {
                char gap[32];
                std::snprintf(gap, sizeof gap, "%.3e", c.gap);
                print_csv_row({c.name, c.pass ? "true" : "false", gap});
            }
            break;
        case Format::text:
            for (const auto& c : checks) {
                std::printf("%-34s %s  (gap %.3e)\n", c.name.c_str(), c.pass ? "pass" : "FAIL", c.gap);
            }
            std::printf("%s\n", all_pass ? "all identity checks passed" : "IDENTITY CHECK FAILURES");
            break;
    }
    return all_pass ? 0 : 5;
}

}  // namespace

int run(int argc, const char* const* argv) {
    Options opt;
    std::string format = "text";

    CLI::App app{"High-precision evaluation of the integral family I_n, its linear forms in gamma and "
                 "logarithms, and the fractional-part criterion"};
    app.require_subcommand(1);
    app.fallthrough(false);

    auto add_common = [&](CLI::App* sub, bool with_method) {
        sub->add_option("--precision-bits", opt.precision_bits, "Working precision in bits [64, 4096]")
            ->capture_default_str();
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->capture_default_str();
        sub->add_option("--safety-factor", opt.safety_factor, "Inflation factor for heuristic radii")
            ->capture_default_str();
        sub->add_option("--seed", opt.seed, "Seed for randomized identity checks")->capture_default_str();
        if (with_method) {
            sub->add_option("--method", opt.method, "hypergeometric|series|double_integral|closed_form|all")
                ->capture_default_str();
        }
    };

    CLI::App* eval = app.add_subcommand("eval", "Evaluate I_n by one method or all four");
    eval->add_option("--n", opt.n, "Index n")->required();
    add_common(eval, true);

    CLI::App* validate = app.add_subcommand("validate", "Cross-validate the four I_n representations");
    validate->add_option("--n", opt.n, "Index n")->required();
    add_common(validate, false);

    CLI::App* criterion = app.add_subcommand("criterion", "Fractional-part criterion sweep for n = 1..n-max");
    criterion->add_option("--n-max", opt.n_max, "Largest n")->required();
    criterion->add_option("--method", opt.method, "I_n route (default series)")->capture_default_str();
    add_common(criterion, false);

    CLI::App* gamma = app.add_subcommand("gamma", "Extract gamma from I_n and compare with the reference");
    gamma->add_option("--n", opt.n, "Index n")->required();
    add_common(gamma, true);

    CLI::App* identities = app.add_subcommand("identities", "Run the named identity checks");
    identities->add_option("--n-max", opt.n_max, "Largest n for the identity grids")->capture_default_str();
    add_common(identities, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    // Shared validation (exit 2 on violations).
    if (opt.precision_bits < 64 || opt.precision_bits > 4096) {
        std::fprintf(stderr, "error: --precision-bits must lie in [64, 4096]\n");
        return 2;
    }
    opt.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;

    try {
        if (eval->parsed() || validate->parsed() || gamma->parsed()) {
            if (opt.n < 1 || opt.n > 64) {
                std::fprintf(stderr, "error: --n must lie in [1, 64]\n");
                return 2;
            }
        }
        if (criterion->parsed() || identities->parsed()) {
            if (opt.n_max < 1 || opt.n_max > 64) {
                std::fprintf(stderr, "error: --n-max must lie in [1, 64]\n");
                return 2;
            }
        }
        if (eval->parsed()) {
            if (opt.method != "all" && !method_from_name(opt.method)) {
                std::fprintf(stderr, "error: unknown method '%s'\n", opt.method.c_str());
                return 2;
            }
            return cmd_eval(opt);
        }
        if (validate->parsed()) {
            return cmd_validate(opt);
        }
        if (criterion->parsed()) {
            if (opt.method != "all" && !method_from_name(opt.method)) {
                std::fprintf(stderr, "error: unknown method '%s'\n", opt.method.c_str());
                return 2;
            }
            if (opt.method == "all") opt.method = "series";
            return cmd_criterion(opt);
        }
        if (gamma->parsed()) {
            if (opt.method == "all" || !method_from_name(opt.method)) {
                std::fprintf(stderr, "error: gamma requires --method hypergeometric|series|double_integral\n");
                return 2;
            }
            if (*method_from_name(opt.method) == Method::closed_form) {
                std::fprintf(stderr, "error: the closed-form route already contains gamma (circular)\n");
                return 2;
            }
            return cmd_gamma(opt);
        }
        if (identities->parsed()) {
            return cmd_identities(opt);
        }
    } catch (const NumericFailure& e) {
        std::fprintf(stderr, "numeric failure: %s\n", e.what());
        return 3;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "failure: %s\n", e.what());
        return 3;
    }
    return 2;
}

}  // namespace gamma_forms::cli
