/*
 * scalcurv command-line front end.
 *
 * Verbs:
 *   coeffs <series> <k>              genus polynomial table
 *   genus <series> <manifold>        genus of a manifold
 *   product <a> <b>                  characteristic data of a product
 *   validate <m> [<n>]               admissibility checks
 *   t-term <w.json>                  topological term of a cobordism
 *   s <w.json>                       s-invariant of the boundary metric
 *   tilde-s <w.json> <n>             extended invariant of a product metric
 *   rel-index <w1> <w2> <n>          difference of extended invariants
 *   family --base --block --n --count   invariants of a connected-sum family
 *   bp-order <n>                     order of the boundary sphere group
 *   thm04 --n --j --q --factor       closed-form family values
 *   catalog-list                     built-in (and merged) catalog entries
 *   report paper                     run the reproduction suite
 *
 * Manifold arguments accept a manifest path or "catalog:NAME".  Global
 * flags: --machine (JSON output), --approx (decimal column, display only).
 * Exit codes: 0 success, 1 validation failure, 2 input error.
 */

#include "scalcurv/scalcurv.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace scalcurv;

struct Options {
    bool machine = false;
    bool approx = false;
};

std::string fmt_rational(const Rational& r, const Options& opt) {
    std::string s = r.to_string();
    if (opt.approx) s += " ~ " + r.decimal_string(6);
    return s;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

json tilde_s_to_json(const TildeSResult& r) {
    return json{{"value", r.value.to_string()},
                {"ahat_factor", r.ahat_factor.to_string()},
                {"t_term", r.t_term.to_string()}};
}

json polynomial_to_json(const GenusSeries& series, const PartitionPolynomial& poly) {
    json terms = json::object();
    for (const auto& [p, c] : poly.terms()) terms[p.to_string()] = c.to_string();
    return json{{"series", series.name}, {"weight", poly.weight()}, {"terms", terms}};
}

void print_polynomial(const PartitionPolynomial& poly, const Options& opt) {
    if (poly.is_zero()) {
        std::cout << "0\n";
        return;
    }
    for (const auto& [p, c] : poly.terms())
        std::cout << p.monomial_string() << ": " << fmt_rational(c, opt) << "\n";
}

GenusSeries parse_series(const std::string& name, unsigned k) {
    if (name == "ahat") return GenusSeries::ahat(k);
    if (name == "l") return GenusSeries::l(k);
    throw std::invalid_argument("unknown series '" + name + "' (expected 'ahat' or 'l')");
}

SeriesKind parse_series_kind(const std::string& name) {
    if (name == "ahat") return SeriesKind::ahat;
    if (name == "l") return SeriesKind::l;
    throw std::invalid_argument("unknown series '" + name + "' (expected 'ahat' or 'l')");
}

Theorem04Factor parse_factor(const std::string& name) {
    if (name == "K3") return Theorem04Factor::k3;
    if (name == "Bott") return Theorem04Factor::bott;
    throw std::invalid_argument("unknown factor '" + name + "' (expected 'K3' or 'Bott')");
}

void print_manifold_text(const CharacteristicData& m, const Options& opt) {
    std::cout << "name: " << m.name << "\n";
    std::cout << "dimension: " << m.dimension << "\n";
    std::cout << "signature: " << m.signature.str() << "\n";
    if (m.pontrjagin_numbers.empty()) {
        std::cout << "pontrjagin numbers: (none)\n";
    } else {
        std::cout << "pontrjagin numbers:\n";
        for (const auto& [p, c] : m.pontrjagin_numbers)
            std::cout << "  " << p.to_string() << ": " << fmt_rational(c, opt) << "\n";
    }
    std::cout << "is_spin: " << (m.is_spin ? "true" : "false") << "\n";
    std::cout << "rational_pontrjagin_classes_vanish: "
              << (m.rational_pontrjagin_classes_vanish ? "true" : "false") << "\n";
    std::cout << "admits_psc: " << (m.admits_psc ? "true" : "false") << "\n";
}

int print_validation(const ValidationReport& report, const Options& opt) {
    if (opt.machine) {
        print_json(json{{"passed", report.passed()},
                        {"failures", report.failures},
                        {"warnings", report.warnings}});
    } else {
        std::cout << report.summary() << "\n";
        for (const auto& w : report.warnings) std::cout << "warning: " << w << "\n";
    }
    return report.passed() ? 0 : 1;
}

int run(int argc, char** argv) {
    CLI::App app{"exact invariants of positive-scalar-curvature boundary metrics"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--machine", opt.machine, "emit JSON instead of text");
    app.add_flag("--approx", opt.approx,
                 "append a truncated decimal approximation (display only)");

    std::string series_name, manifold_ref, manifold_ref2, path, path2, factor_name;
    unsigned weight = 0, count = 0, thm_n = 0, thm_j = 0;
    long long thm_q = 0;
    bool override_psc = false;

    CLI::App* coeffs = app.add_subcommand("coeffs", "genus polynomial table");
    coeffs->add_option("series", series_name, "ahat or l")->required();
    coeffs->add_option("k", weight, "weight (>= 1)")->required();

    CLI::App* genus = app.add_subcommand("genus", "genus of a manifold");
    genus->add_option("series", series_name, "ahat or l")->required();
    genus->add_option("manifold", manifold_ref, "manifest path or catalog:NAME")->required();

    CLI::App* prod = app.add_subcommand("product", "characteristic data of a product");
    prod->add_option("a", manifold_ref, "first factor")->required();
    prod->add_option("b", manifold_ref2, "second factor")->required();
    prod->add_flag("--override-psc", override_psc,
                   "assert psc on the product (valid when a factor admits psc: "
                   "shrinking that factor makes the product metric psc)");

    CLI::App* validate = app.add_subcommand("validate", "admissibility checks");
    validate->add_option("m", manifold_ref, "boundary manifold")->required();
    validate->add_option("n", manifold_ref2, "optional second factor");

    CLI::App* tterm = app.add_subcommand("t-term", "topological term of a cobordism");
    tterm->add_option("w", path, "cobordism manifest")->required();

    CLI::App* s_cmd = app.add_subcommand("s", "s-invariant of the boundary metric");
    s_cmd->add_option("w", path, "cobordism manifest")->required();

    CLI::App* tilde = app.add_subcommand("tilde-s", "extended invariant of a product metric");
    tilde->add_option("w", path, "cobordism manifest")->required();
    tilde->add_option("n", manifold_ref, "second factor")->required();

    CLI::App* rel = app.add_subcommand("rel-index", "difference of extended invariants");
    rel->add_option("w1", path, "first cobordism manifest")->required();
    rel->add_option("w2", path2, "second cobordism manifest")->required();
    rel->add_option("n", manifold_ref, "second factor")->required();

    CLI::App* family = app.add_subcommand("family", "invariants of a connected-sum family");
    family->add_option("--base", path, "base cobordism manifest")->required();
    family->add_option("--block", path2, "block cobordism manifest")->required();
    family->add_option("--n", manifold_ref, "second factor")->required();
    family->add_option("--count", count, "number of entries")->required();

    CLI::App* bp = app.add_subcommand("bp-order", "order of the boundary sphere group");
    bp->add_option("n", thm_n, "index n >= 2")->required();

    CLI::App* thm04 = app.add_subcommand("thm04", "closed-form family values");
    thm04->add_option("--n", thm_n, "index n >= 2")->required();
    thm04->add_option("--j", thm_j, "multiple of the sphere group order")->required();
    thm04->add_option("--q", thm_q, "signature correction")->required();
    thm04->add_option("--factor", factor_name, "K3 or Bott")->required();

    app.add_subcommand("catalog-list", "built-in (and merged) catalog entries");

    CLI::App* report = app.add_subcommand("report", "scripted reports");
    std::string report_what;
    report->add_option("what", report_what, "'paper': run the reproduction suite")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (coeffs->parsed()) {
        GenusSeries series = parse_series(series_name, weight);
        PartitionPolynomial poly = genus_polynomial(series, weight);
        if (opt.machine)
            print_json(polynomial_to_json(series, poly));
        else
            print_polynomial(poly, opt);
        return 0;
    }

    if (genus->parsed()) {
        CharacteristicData m = load_manifold(manifold_ref);
        Rational value = genus_of(parse_series_kind(series_name), m);
        if (opt.machine)
            print_json(json{{"series", series_name},
                            {"manifold", m.name},
                            {"value", value.to_string()}});
        else
            std::cout << fmt_rational(value, opt) << "\n";
        return 0;
    }

    if (prod->parsed()) {
        CharacteristicData a = load_manifold(manifold_ref);
        CharacteristicData b = load_manifold(manifold_ref2);
        CharacteristicData ab = product(a, b);
        if (override_psc) {
            if (!a.admits_psc && !b.admits_psc)
                throw validation_error(
                    "--override-psc: neither factor admits psc, so the scaling "
                    "argument does not apply");
            ab.admits_psc = true;
            std::cerr << "note: admits_psc set by override (a psc factor can be "
                         "shrunk until the product metric has psc)\n";
        }
        if (opt.machine)
            print_json(manifold_to_json(ab));
        else
            print_manifold_text(ab, opt);
        return 0;
    }

    if (validate->parsed()) {
        CharacteristicData m = load_manifold(manifold_ref);
        ValidationReport r = manifold_ref2.empty()
                                 ? validate_kreck_stolz_conditions(m)
                                 : validate_ks_product(m, load_manifold(manifold_ref2));
        return print_validation(r, opt);
    }

    if (tterm->parsed()) {
        Rational value = t_term(load_cobordism(path));
        if (opt.machine)
            print_json(json{{"value", value.to_string()}});
        else
            std::cout << fmt_rational(value, opt) << "\n";
        return 0;
    }

    if (s_cmd->parsed()) {
        Rational value = s_invariant(make_metric_representative(load_cobordism(path)));
        if (opt.machine)
            print_json(json{{"value", value.to_string()}});
        else
            std::cout << fmt_rational(value, opt) << "\n";
        return 0;
    }

    if (tilde->parsed()) {
        TildeSResult r = tilde_s(make_metric_representative(load_cobordism(path)),
                                 load_manifold(manifold_ref));
        if (opt.machine)
            print_json(tilde_s_to_json(r));
        else
            std::cout << fmt_rational(r.value, opt) << "\n";
        return 0;
    }

    if (rel->parsed()) {
        RelativeIndexResult r =
            relative_index(make_metric_representative(load_cobordism(path)),
                           make_metric_representative(load_cobordism(path2)),
                           load_manifold(manifold_ref));
        if (!r.is_integer)
            std::cerr << "warning: relative index " << r.value
                      << " is not an integer; a genuine index is, so the input "
                         "data are mutually inconsistent\n";
        if (opt.machine)
            print_json(json{{"value", r.value.to_string()}, {"is_integer", r.is_integer}});
        else
            std::cout << fmt_rational(r.value, opt) << "\n";
        return 0;
    }

    if (family->parsed()) {
        std::vector<TildeSResult> fam =
            component_family(make_metric_representative(load_cobordism(path)),
                             make_metric_representative(load_cobordism(path2)),
                             load_manifold(manifold_ref), count);
        if (opt.machine) {
            json arr = json::array();
            for (const TildeSResult& e : fam) arr.push_back(tilde_s_to_json(e));
            print_json(json{{"values", arr}});
        } else {
            for (std::size_t i = 0; i < fam.size(); ++i) {
                if (i) std::cout << ", ";
                std::cout << fmt_rational(fam[i].value, opt);
            }
            std::cout << "\n";
        }
        return 0;
    }

    if (bp->parsed()) {
        Integer order = bp_order(thm_n);
        if (opt.machine)
            print_json(json{{"n", thm_n}, {"order", order.str()}});
        else
            std::cout << order.str() << "\n";
        return 0;
    }

    if (thm04->parsed()) {
        Rational value = theorem04_value(thm_n, thm_j, thm_q, parse_factor(factor_name));
        if (opt.machine)
            print_json(json{{"n", thm_n},
                            {"j", thm_j},
                            {"q", thm_q},
                            {"factor", factor_name},
                            {"value", value.to_string()}});
        else
            std::cout << fmt_rational(value, opt) << "\n";
        return 0;
    }

    if (app.get_subcommand("catalog-list")->parsed()) {
        std::vector<CharacteristicData> entries = builtin_catalog();
        if (const char* dir = std::getenv("SCALCURV_CATALOG")) {
            std::vector<std::filesystem::path> files;
            std::error_code ec;
            for (const auto& entry : std::filesystem::directory_iterator(dir, ec))
                if (entry.path().extension() == ".json") files.push_back(entry.path());
            std::sort(files.begin(), files.end());
            for (const auto& f : files)
                entries.push_back(parse_manifold_manifest(detail::parse_json_file(f.string())));
        }
        if (opt.machine) {
            json arr = json::array();
            for (const CharacteristicData& m : entries) arr.push_back(manifold_to_json(m));
            print_json(arr);
        } else {
            for (const CharacteristicData& m : entries)
                std::cout << m.name << " (dimension " << m.dimension << ", signature "
                          << m.signature.str() << ")\n";
            std::cout << "S<n> is available for every n >= 1\n";
        }
        return 0;
    }

    if (report->parsed()) {
        if (report_what != "paper")
            throw std::invalid_argument("unknown report '" + report_what +
                                        "' (expected 'paper')");
        std::vector<CheckResult> results = run_report_checks();
        bool all = true;
        if (opt.machine) {
            json arr = json::array();
            for (const CheckResult& c : results) {
                arr.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
                all = all && c.passed;
            }
            print_json(arr);
        } else {
            for (const CheckResult& c : results) {
                std::cout << (c.passed ? "PASS" : "FAIL") << "  " << c.name;
                if (!c.passed && !c.detail.empty()) std::cout << " [" << c.detail << "]";
                std::cout << "\n";
                all = all && c.passed;
            }
            std::cout << (all ? "all checks passed" : "CHECKS FAILED") << "\n";
        }
        return all ? 0 : 1;
    }

    throw std::invalid_argument("no subcommand given");
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const scalcurv::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
