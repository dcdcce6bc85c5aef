#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "torsionlab/parallel.hpp"
#include "torsionlab/verify.hpp"

namespace {

using namespace torsionlab;

struct RunConfig {
    std::string format = "text";
    std::string out;
    std::string precision = "auto";
    unsigned seed = 20240815;
    std::string knot = "41";
    std::string surgery;
    std::string p_range, q_range;
    std::string n_list = "-1,1,2,3";
    int trials = 200;
};

Precision parse_precision(const std::string& s) {
    if (s == "dd") return Precision::DoubleDouble;
    if (s == "double") return Precision::Double;
    return Precision::Auto;
}

/// Surgery syntax p/q, restricted to the implemented families (q = 1 or p = 1).
std::pair<Family, long> parse_surgery(const std::string& knot, const std::string& surgery) {
    long p = 0, q = 0;
    char slash = 0;
    std::istringstream is(surgery);
    if (!(is >> p >> slash >> q) || slash != '/' || !is.eof())
        throw CLI::ValidationError("--surgery", "expected the form p/q, e.g. 6/1 or 1/3");
    if (knot == "52") {
        if (p != 1 || q == 0)
            throw CLI::ValidationError("--surgery", "5_2 surgeries are implemented for 1/q only");
        return {Family::FiveTwoOneOverQ, q};
    }
    if (q == 1) return {Family::FigureEightPOverOne, p};
    if (p == 1 && q != 0) return {Family::FigureEightOneOverQ, q};
    throw CLI::ValidationError("--surgery",
                               "4_1 surgeries are implemented for p/1 and 1/q only");
}

std::vector<long> parse_range(const std::string& s, bool skip_zero) {
    long a = 0, b = 0;
    char colon = 0;
    std::istringstream is(s);
    if (!(is >> a >> colon >> b) || colon != ':' || !is.eof() || b < a)
        throw CLI::ValidationError("range", "expected the form a:b with a <= b");
    std::vector<long> out;
    for (long v = a; v <= b; ++v)
        if (!(skip_zero && v == 0)) out.push_back(v);
    return out;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) out.push_back(std::stoi(item));
    if (out.empty()) throw CLI::ValidationError("--n", "expected a comma-separated list");
    return out;
}

void emit(const RunConfig& cfg, const std::string& payload) {
    if (cfg.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + cfg.out);
    f << payload;
}

std::string reports_payload(const RunConfig& cfg, const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    if (cfg.format == "json") {
        for (const auto& r : reports) os << r.to_json() << "\n";
    } else if (cfg.format == "csv") {
        os << "claim,family,parameter,method,pass,computed,expected\n";
        for (const auto& r : reports) {
            os << '"' << r.claim << "\"," << (r.family ? family_name(*r.family) : "") << ","
               << (r.parameter ? std::to_string(*r.parameter) : "") << "," << r.method << ","
               << (r.pass ? "1" : "0") << ",\"" << r.computed << "\",\"" << r.expected << "\"\n";
        }
    } else {
        os << render_report_table(reports);
    }
    return os.str();
}

int finish(const RunConfig& cfg, const std::vector<VerificationReport>& reports) {
    emit(cfg, reports_payload(cfg, reports));
    for (const auto& r : reports)
        if (!r.pass) return 1;
    return 0;
}

/// Runs one report builder per parameter in parallel with ordered aggregation.
template <typename Fn>
std::vector<VerificationReport> sweep(const std::vector<long>& params, Fn fn) {
    std::vector<VerificationReport> out(params.size());
    parallel_for(static_cast<long>(params.size()),
                 [&](long i) { out[static_cast<size_t>(i)] = fn(params[static_cast<size_t>(i)]); });
    return out;
}

int cmd_variety(const RunConfig& cfg) {
    auto [family, parameter] = parse_surgery(cfg.knot, cfg.surgery);
    Precision prec = parse_precision(cfg.precision);
    ExactPolynomial qm = build_qm(family, parameter);
    RootSet roots = find_roots(qm, prec);
    std::vector<Cplx> points = variety_points(family, parameter, prec);

    std::ostringstream os;
    if (cfg.format == "json") {
        nlohmann::json j;
        j["family"] = family_name(family);
        j["parameter"] = parameter;
        j["q_m"] = qm.to_string();
        j["roots"] = nlohmann::json::parse(roots.to_json());
        j["points"] = nlohmann::json::array();
        for (Cplx a : points) {
            Representation rep = reconstruct_representation(a, family, parameter);
            j["points"].push_back(nlohmann::json::parse(rep.to_json()));
        }
        os << j.dump(2) << "\n";
    } else {
        os << "Q_M = " << qm.to_string() << "\n";
        os << roots.roots.size() << " distinct roots, " << points.size()
           << " variety points in D\n";
        for (Cplx a : points) {
            Representation rep = reconstruct_representation(a, family, parameter);
            char buf[160];
            std::snprintf(buf, sizeof buf, "a = %+.15f %+.15f i   residual %.2e\n", a.real(),
                          a.imag(), rep.worst_residual());
            os << buf;
        }
    }
    emit(cfg, os.str());
    return 0;
}

int cmd_torsion(const RunConfig& cfg) {
    auto [family, parameter] = parse_surgery(cfg.knot, cfg.surgery);
    std::vector<TorsionRecord> table;
    try {
        table = torsion_table(family, parameter, true);
    } catch (const std::exception& e) {
        std::cerr << "cross-check failed: " << e.what() << "\n";
        return 1;
    }
    std::ostringstream os;
    if (cfg.format == "json") {
        for (const auto& rec : table) os << rec.to_json() << "\n";
    } else if (cfg.format == "csv") {
        os << TorsionRecord::csv_header() << "\n";
        for (const auto& rec : table) os << rec.to_csv() << "\n";
    } else {
        for (const auto& rec : table) {
            char buf[200];
            std::snprintf(buf, sizeof buf,
                          "a = %+.12f%+.12fi  tau = %+.12f%+.12fi  ratio %+.3f  residual %.1e\n",
                          rec.a.real(), rec.a.imag(), rec.closed_form.real(),
                          rec.closed_form.imag(), rec.ratio, rec.residual);
            os << buf;
        }
    }
    emit(cfg, os.str());
    return 0;
}

std::pair<Family, std::vector<long>> verify_targets(const RunConfig& cfg) {
    if (!cfg.p_range.empty()) {
        if (cfg.knot != "41")
            throw CLI::ValidationError("--p", "integer surgeries are implemented for 4_1 only");
        return {Family::FigureEightPOverOne, parse_range(cfg.p_range, false)};
    }
    if (!cfg.q_range.empty()) {
        Family f = cfg.knot == "52" ? Family::FiveTwoOneOverQ : Family::FigureEightOneOverQ;
        return {f, parse_range(cfg.q_range, true)};
    }
    throw CLI::ValidationError("verify", "one of --p or --q is required");
}

int cmd_verify_vanishing(const RunConfig& cfg) {
    auto [family, params] = verify_targets(cfg);
    return finish(cfg, sweep(params, [family = family](long v) { return check_vanishing(family, v); }));
}

int cmd_verify_lemmas(const RunConfig& cfg) {
    std::vector<VerificationReport> reports;
    if (!cfg.p_range.empty())
        for (long p : parse_range(cfg.p_range, true))
            reports.push_back(check_lemma_kappa(Family::FigureEightPOverOne, p));
    if (!cfg.q_range.empty())
        for (long q : parse_range(cfg.q_range, true)) {
            reports.push_back(check_lemma_kappa(Family::FigureEightOneOverQ, q));
            reports.push_back(check_lemma_kappa(Family::FiveTwoOneOverQ, q));
        }
    if (reports.empty()) throw CLI::ValidationError("verify lemmas", "one of --p or --q is required");
    return finish(cfg, reports);
}

int cmd_verify_sums(const RunConfig& cfg) {
    auto [family, params] = verify_targets(cfg);
    std::vector<int> exponents = parse_int_list(cfg.n_list);
    std::vector<VerificationReport> reports;
    for (long v : params)
        for (int n : exponents) reports.push_back(check_power_sums(family, v, n));
    return finish(cfg, reports);
}

int cmd_verify_residue(const RunConfig& cfg) {
    return finish(cfg, {check_residue_lemma(cfg.trials, cfg.seed)});
}

int cmd_verify_smallp(const RunConfig& cfg) {
    std::vector<VerificationReport> reports;
    for (long p = -4; p <= 4; ++p) reports.push_back(check_small_p_table(p));
    return finish(cfg, reports);
}

int cmd_verify_eq25(const RunConfig& cfg) {
    std::vector<VerificationReport> reports;
    std::string range = cfg.p_range.empty() ? "-10:10" : cfg.p_range;
    for (long p : parse_range(range, true))
        if (p % 2 == 0 && std::labs(p) > 4) reports.push_back(check_partial_fraction_eq25(p / 2));
    if (reports.empty())
        throw CLI::ValidationError("--p", "no even p with |p| > 4 in the range");
    return finish(cfg, reports);
}

int cmd_verify_display(const RunConfig& cfg) {
    std::string range = cfg.q_range.empty() ? "2:3" : cfg.q_range;
    return finish(cfg, sweep(parse_range(range, true),
                             [](long q) { return check_five_two_display(q); }));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"adjoint Reidemeister torsion of Dehn surgeries on the 4_1 and 5_2 knots"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", cfg.out, "write output to a file instead of stdout");
    app.add_option("--seed", cfg.seed, "seed for randomized property checks");
    app.add_option("--precision", cfg.precision, "root-finder precision profile")
        ->check(CLI::IsMember({"auto", "dd", "double"}));

    auto add_knot = [&](CLI::App* c) {
        c->add_option("--knot", cfg.knot, "knot (41 or 52)")->check(CLI::IsMember({"41", "52"}));
    };

    CLI::App* variety = app.add_subcommand("variety", "variety polynomial, roots, representations");
    variety->fallthrough();
    add_knot(variety);
    variety->add_option("--surgery", cfg.surgery, "surgery coefficient p/q")->required();

    CLI::App* torsion = app.add_subcommand("torsion", "per-point torsion table, both methods");
    torsion->fallthrough();
    add_knot(torsion);
    torsion->add_option("--surgery", cfg.surgery, "surgery coefficient p/q")->required();

    CLI::App* verify = app.add_subcommand("verify", "theorem-level verification reports");
    verify->require_subcommand(1);
    verify->fallthrough();
    auto add_ranges = [&](CLI::App* c) {
        add_knot(c);
        c->add_option("--p", cfg.p_range, "integer surgery range a:b");
        c->add_option("--q", cfg.q_range, "1/q surgery range a:b");
    };
    CLI::App* vanishing = verify->add_subcommand("vanishing", "sum 2/tau = 0");
    vanishing->fallthrough();
    add_ranges(vanishing);
    CLI::App* lemmas = verify->add_subcommand("lemmas", "kappa divisibility, square-free quotients");
    lemmas->fallthrough();
    add_ranges(lemmas);
    CLI::App* sums = verify->add_subcommand("sums", "power-sum rationality and integrality");
    sums->fallthrough();
    add_ranges(sums);
    sums->add_option("--n", cfg.n_list, "comma-separated exponent list");
    CLI::App* residue = verify->add_subcommand("residue", "randomized residue-lemma suite");
    residue->fallthrough();
    residue->add_option("--trials", cfg.trials, "number of randomized instances");
    CLI::App* smallp = verify->add_subcommand("smallp", "exceptional small-|p| table");
    smallp->fallthrough();
    (void)smallp;
    CLI::App* eq25 = verify->add_subcommand("eq25", "partial-fraction decomposition of 2 tau");
    eq25->fallthrough();
    eq25->add_option("--p", cfg.p_range, "even surgery range a:b");
    CLI::App* display = verify->add_subcommand("display", "5_2 closed form vs chain complex");
    display->fallthrough();
    display->add_option("--q", cfg.q_range, "surgery range a:b");

    CLI11_PARSE(app, argc, argv);

    try {
        if (variety->parsed()) return cmd_variety(cfg);
        if (torsion->parsed()) return cmd_torsion(cfg);
        if (vanishing->parsed()) return cmd_verify_vanishing(cfg);
        if (lemmas->parsed()) return cmd_verify_lemmas(cfg);
        if (sums->parsed()) return cmd_verify_sums(cfg);
        if (residue->parsed()) return cmd_verify_residue(cfg);
        if (smallp->parsed()) return cmd_verify_smallp(cfg);
        if (eq25->parsed()) return cmd_verify_eq25(cfg);
        if (display->parsed()) return cmd_verify_display(cfg);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
