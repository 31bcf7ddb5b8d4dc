#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "floer/betti.hpp"
#include "floer/groebner.hpp"
#include "floer/munoz.hpp"
#include "floer/report.hpp"
#include "floer/verify.hpp"

namespace {

using namespace floer;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kGenusCap = 12;  // exact lex Groebner bases stop being desk-scale beyond this

struct GenusRange {
    int lo = 1, hi = 1;
};

bool parse_genus_range(const std::string& text, GenusRange& range) {
    auto pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            range.lo = range.hi = std::stoi(text);
        } else {
            range.lo = std::stoi(text.substr(0, pos));
            range.hi = std::stoi(text.substr(pos + 2));
        }
    } catch (...) {
        return false;
    }
    return range.lo <= range.hi;
}

long long elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

int emit(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream out(out_file);
    if (!out) {
        std::cerr << "error: cannot open " << out_file << "\n";
        return kExitUsage;
    }
    out << text;
    return kExitOk;
}

int run_nilpotency(Engine& engine, const GenusRange& range, const std::string& format,
                   const std::string& out_file) {
    if (range.lo < 1 || range.hi > kGenusCap) {
        std::cerr << "error: genus range must lie within 1.." << kGenusCap << "\n";
        return kExitUsage;
    }
    const auto start = std::chrono::steady_clock::now();
    Json config;
    config["genus_range"] = {range.lo, range.hi};
    config["format"] = format;
    Json envelope = make_envelope("nilpotency", config);

    std::vector<GenusReport> reports;
    bool all_match = true;
    for (int g = range.lo; g <= range.hi; ++g) {
        ReportOptions options;
        options.with_nilpotency = true;
        reports.push_back(build_genus_report(engine, g, options));
        all_match = all_match && reports.back().nilpotency_match;
        envelope["results"].push_back(genus_report_json(reports.back()));
    }
    envelope["summary"]["all_match"] = all_match;
    envelope["summary"]["elapsed_ms"] = elapsed_ms(start);

    int rc = kExitOk;
    if (format == "json")
        rc = emit(envelope.dump(2) + "\n", out_file);
    else
        rc = emit(render_nilpotency_text(reports), out_file);
    if (rc != kExitOk) return rc;
    return all_match ? kExitOk : kExitCheckFailed;
}

int run_table(Engine& engine, const std::string& which, const GenusRange& range,
              const std::string& format, const std::string& out_file) {
    if (range.lo < 1 || range.hi > kGenusCap) {
        std::cerr << "error: genus range must lie within 1.." << kGenusCap << "\n";
        return kExitUsage;
    }
    const auto start = std::chrono::steady_clock::now();
    Json config;
    config["which"] = which;
    config["genus_range"] = {range.lo, range.hi};
    config["format"] = format;
    Json envelope = make_envelope("table", config);

    std::vector<GenusReport> reports;
    for (int g = range.lo; g <= range.hi; ++g) {
        reports.push_back(build_genus_report(engine, g, ReportOptions{}));
        envelope["results"].push_back(genus_report_json(reports.back()));
    }
    envelope["summary"]["rows"] = static_cast<int>(reports.size());
    envelope["summary"]["elapsed_ms"] = elapsed_ms(start);

    if (format == "json") return emit(envelope.dump(2) + "\n", out_file);
    if (format == "csv") return emit(render_table_csv(which, reports), out_file);
    return emit(render_table_text(which, reports), out_file);
}

int run_groebner(Engine& engine, const std::string& family, int genus, const std::string& format,
                 const std::string& out_file) {
    IdealKind kind;
    if (family == "J")
        kind = IdealKind::J;
    else if (family == "Jplus")
        kind = IdealKind::Jplus;
    else if (family == "Jminus")
        kind = IdealKind::Jminus;
    else if (family == "Jclassical")
        kind = IdealKind::Jclassical;
    else {
        std::cerr << "error: family must be one of J, Jplus, Jminus, Jclassical\n";
        return kExitUsage;
    }
    const int min_genus = kind == IdealKind::Jminus ? 0 : 1;
    if (genus < min_genus || genus > kGenusCap) {
        std::cerr << "error: genus for " << family << " must lie within " << min_genus << ".."
                  << kGenusCap << "\n";
        return kExitUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    const GroebnerBasis& gb = engine.groebner(kind, genus);
    const QuotientBasis qb = quotient_basis(gb);
    const PoincarePoly poincare = graded_poincare(gb);

    Json config;
    config["family"] = family;
    config["genus"] = genus;
    config["format"] = format;
    Json envelope = make_envelope("groebner", config);
    Json result;
    result["family"] = family;
    result["genus"] = genus;
    Json basis = Json::array(), lead = Json::array(), standard = Json::array();
    for (const Polynomial& p : gb.gens) basis.push_back(p.str());
    for (const Monomial& m : initial_ideal(gb)) lead.push_back(m.str());
    for (const Monomial& m : qb.monomials) standard.push_back(m.str());
    result["reduced_basis"] = basis;
    result["initial_ideal"] = lead;
    result["standard_monomials"] = standard;
    result["degree"] = static_cast<int>(qb.dim());
    result["graded_poincare"] = poincare.str();
    envelope["results"].push_back(result);
    envelope["summary"]["elapsed_ms"] = elapsed_ms(start);

    if (format == "json") return emit(envelope.dump(2) + "\n", out_file);

    std::ostringstream out;
    out << "ideal " << family << "_" << genus << " (lex alpha > beta > gamma)\n";
    out << "reduced basis:\n";
    for (const Polynomial& p : gb.gens) out << "  " << p.str() << "\n";
    out << "initial ideal: ";
    for (std::size_t i = 0; i < gb.gens.size(); ++i)
        out << (i ? ", " : "") << gb.gens[i].leading_monomial().str();
    out << "\nstandard monomials (" << qb.dim() << "): ";
    for (std::size_t i = 0; i < qb.monomials.size(); ++i)
        out << (i ? ", " : "") << qb.monomials[i].str();
    out << "\ndegree: " << qb.dim() << "\n";
    out << "graded poincare: " << poincare.str() << "\n";
    return emit(out.str(), out_file);
}

int run_verify(Engine& engine, std::optional<int> max_genus, std::uint64_t seed,
               const std::string& format, const std::string& out_file) {
    VerifyBudgets budgets;
    if (const char* env = std::getenv("FLOER_MAX_GENUS")) {
        try {
            budgets.cap(std::stoi(env));
        } catch (...) {
            std::cerr << "error: FLOER_MAX_GENUS must be an integer\n";
            return kExitUsage;
        }
    }
    if (max_genus) {
        if (*max_genus < 0) {
            std::cerr << "error: --max-genus must be >= 0\n";
            return kExitUsage;
        }
        budgets.cap(*max_genus);
    }

    const auto start = std::chrono::steady_clock::now();
    std::vector<CheckResult> results = run_verification(engine, budgets, seed);
    int failures = 0;
    for (const CheckResult& r : results)
        if (!r.pass) ++failures;

    Json config;
    config["seed"] = seed;
    config["format"] = format;
    config["budgets"] = {{"memberships_r", budgets.memberships_r},
                         {"proportionality_g", budgets.proportionality_g},
                         {"section5_g", budgets.section5_g},
                         {"nilpotency_g", budgets.nilpotency_g},
                         {"coherence_k", budgets.coherence_k},
                         {"nesting_g", budgets.nesting_g},
                         {"invariant_dim_g", budgets.invariant_dim_g},
                         {"paper_basis_minus_g", budgets.paper_basis_minus_g},
                         {"paper_basis_plus_g", budgets.paper_basis_plus_g},
                         {"kernel_crosscheck_g", budgets.kernel_crosscheck_g},
                         {"eigen_confinement_g", budgets.eigen_confinement_g},
                         {"three_path_g", budgets.three_path_g},
                         {"tables_g", budgets.tables_g},
                         {"totaldim_g", budgets.totaldim_g},
                         {"invdim_g", budgets.invdim_g},
                         {"sfunc_g", budgets.sfunc_g},
                         {"newstead_g", budgets.newstead_g},
                         {"parity_g", budgets.parity_g}};
    Json envelope = make_envelope("verify", config);
    envelope["results"] = check_results_json(results);
    envelope["summary"]["checks"] = static_cast<int>(results.size());
    envelope["summary"]["failures"] = failures;
    envelope["summary"]["pass"] = failures == 0;
    envelope["summary"]["elapsed_ms"] = elapsed_ms(start);

    int rc;
    if (format == "json") {
        rc = emit(envelope.dump(2) + "\n", out_file);
    } else {
        std::ostringstream out;
        for (const CheckResult& r : results)
            out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " — " << r.detail << "\n";
        out << results.size() << " checks, " << failures << " failure"
            << (failures == 1 ? "" : "s") << "\n";
        rc = emit(out.str(), out_file);
    }
    if (rc != kExitOk) return rc;
    return failures == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"floer — exact computations in the instanton Floer ring of a surface times a circle"};
    app.require_subcommand(1);

    std::string genus_range_text = "1..6";
    std::string which = "framed";
    std::string family = "J";
    std::string format = "text";
    std::string out_file;
    int genus = 1;
    std::optional<int> max_genus;
    std::uint64_t seed = 42;
    bool corrupt_zeta = false;

    CLI::App* nilpotency = app.add_subcommand("nilpotency", "Nilpotency degree of beta^2 - 64 per genus");
    nilpotency->add_option("--genus-range", genus_range_text, "Genus range A..B");
    nilpotency->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    nilpotency->add_option("--out", out_file, "Write output to a file");

    CLI::App* table = app.add_subcommand("table", "Graded betti tables");
    table->add_option("--which", which)->check(CLI::IsMember({"framed", "critical"}));
    table->add_option("--genus-range", genus_range_text, "Genus range A..B");
    table->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
    table->add_option("--out", out_file, "Write output to a file");

    CLI::App* groebner_cmd = app.add_subcommand("groebner", "Reduced Groebner basis of an ideal family");
    groebner_cmd->add_option("--family", family, "J, Jplus, Jminus or Jclassical");
    groebner_cmd->add_option("--genus", genus, "Genus");
    groebner_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    groebner_cmd->add_option("--out", out_file, "Write output to a file");

    CLI::App* verify = app.add_subcommand("verify", "Run the verification suites");
    verify->add_option("--max-genus", max_genus, "Cap every genus-indexed budget");
    verify->add_option("--seed", seed, "Seed for the sampled checks");
    verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", out_file, "Write output to a file");
    verify->add_flag("--corrupt-zeta", corrupt_zeta)->group("");  // mutation-testing hook

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        Engine engine(corrupt_zeta);
        if (app.got_subcommand(nilpotency)) {
            GenusRange range;
            if (!parse_genus_range(genus_range_text, range)) {
                std::cerr << "error: bad genus range '" << genus_range_text << "'\n";
                return kExitUsage;
            }
            return run_nilpotency(engine, range, format, out_file);
        }
        if (app.got_subcommand(table)) {
            GenusRange range;
            if (!parse_genus_range(genus_range_text, range)) {
                std::cerr << "error: bad genus range '" << genus_range_text << "'\n";
                return kExitUsage;
            }
            return run_table(engine, which, range, format, out_file);
        }
        if (app.got_subcommand(groebner_cmd))
            return run_groebner(engine, family, genus, format, out_file);
        if (app.got_subcommand(verify)) return run_verify(engine, max_genus, seed, format, out_file);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
