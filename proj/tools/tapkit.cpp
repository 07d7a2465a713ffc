#include <cstdlib>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tapkit/analysis.hpp"
#include "tapkit/arith.hpp"
#include "tapkit/parabolic.hpp"
#include "tapkit/riley.hpp"
#include "tapkit/twisted.hpp"
#include "tapkit/verify.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSpec = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitAssertion = 4;

struct RunConfig {
    std::string format = "text";
    tapkit::Tolerances tol;
    unsigned threads = 0;
};

unsigned env_threads() {
    if (const char* v = std::getenv("TAPKIT_THREADS")) {
        const long parsed = std::strtol(v, nullptr, 10);
        if (parsed > 0) return static_cast<unsigned>(parsed);
    }
    return 0;
}

json coeff_json(const tapkit::BigInt& c) {
    // Numbers that fit in 64 bits stay numbers; anything larger becomes a
    // decimal string to keep the JSON lossless.
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
        return static_cast<long long>(c);
    return c.str();
}

json intpoly_json(const tapkit::IntPoly& p) {
    json coeffs = json::array();
    for (long i = 0; i <= p.degree(); ++i) coeffs.push_back(coeff_json(p.coeff(i)));
    return json{{"degree", p.degree()}, {"coeffs", coeffs}};
}

tapkit::KnotSpec parse_spec(long k, long n, const std::string& two_bridge) {
    if (!two_bridge.empty()) {
        if (k != 0 || n != 0)
            throw tapkit::SpecError("give either --k/--n or --two-bridge, not both");
        const auto slash = two_bridge.find('/');
        if (slash == std::string::npos)
            throw tapkit::SpecError("--two-bridge expects the form p/q");
        const long p = std::stol(two_bridge.substr(0, slash));
        const long q = std::stol(two_bridge.substr(slash + 1));
        return tapkit::KnotSpec::two_bridge(p, q);
    }
    if (k == 0) throw tapkit::SpecError("missing --k/--n (or --two-bridge p/q)");
    return tapkit::KnotSpec::double_twist(k, n);
}

int cmd_riley(const RunConfig& cfg, long k, long n, const std::string& two_bridge,
              bool symbolic) {
    const tapkit::KnotSpec spec = parse_spec(k, n, two_bridge);
    if (symbolic) {
        if (!spec.is_double_twist())
            throw tapkit::SpecError("--symbolic applies to J(k,2n) only");
        const tapkit::BiPoly phi =
            tapkit::riley_poly(spec.as_double_twist().k, spec.as_double_twist().n);
        if (cfg.format == "json") {
            json terms = json::array();
            for (const auto& [key, c] : phi.terms())
                terms.push_back(json{{"dx", key.first}, {"dy", key.second},
                                     {"c", coeff_json(c)}});
            std::cout << json{{"terms", terms}}.dump() << "\n";
        } else {
            std::cout << "phi(x,y) = " << phi << "\n";
        }
        return kExitOk;
    }
    const tapkit::IntPoly phi = tapkit::riley_parabolic(spec);
    if (cfg.format == "json") {
        std::cout << intpoly_json(phi).dump() << "\n";
    } else {
        std::cout << "phi(2,y) = " << phi << "\n";
    }
    return kExitOk;
}

int cmd_parabolic(const RunConfig& cfg, long k, long n, const std::string& two_bridge) {
    const tapkit::KnotSpec spec = parse_spec(k, n, two_bridge);
    const auto reps = tapkit::solve_parabolic(spec, cfg.tol);
    if (cfg.format == "json") {
        json rows = json::array();
        for (const auto& rep : reps)
            rows.push_back(json{{"y_re", rep.y.real()},
                                {"y_im", rep.y.imag()},
                                {"phi_residual", rep.phi_residual},
                                {"matrix_residual", rep.matrix_residual}});
        std::cout << rows.dump() << "\n";
    } else {
        std::cout << spec.name() << ": " << reps.size() << " parabolic representation(s)\n";
        for (std::size_t i = 0; i < reps.size(); ++i) {
            const auto& rep = reps[i];
            std::cout << "  [" << i << "] y = " << rep.y.real();
            if (rep.y.imag() != 0.0)
                std::cout << (rep.y.imag() < 0 ? " - " : " + ")
                          << std::abs(rep.y.imag()) << "i";
            std::cout << "  |phi| = " << rep.phi_residual
                      << "  |W^nA-BW^n| = " << rep.matrix_residual;
            if (rep.multiplicity > 1) std::cout << "  (multiplicity " << rep.multiplicity << ")";
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int cmd_tap(const RunConfig& cfg, long k, long n, const std::string& two_bridge,
            long root_index) {
    const tapkit::KnotSpec spec = parse_spec(k, n, two_bridge);
    const auto reps = tapkit::solve_parabolic(spec, cfg.tol);
    if (root_index < 0 || static_cast<std::size_t>(root_index) >= reps.size())
        throw tapkit::SpecError("root index out of range (have " +
                                std::to_string(reps.size()) + " roots)");
    const tapkit::TwistedAlex tap =
        tapkit::wada_polynomial(spec, reps[static_cast<std::size_t>(root_index)], cfg.tol);
    const bool monic = tapkit::monicity(tap, cfg.tol.monic_tol);
    const double defect = tapkit::reciprocity_check(tap);
    if (cfg.format == "json") {
        json re = json::array(), im = json::array();
        for (int i = 0; i <= tap.span; ++i) {
            re.push_back(tap.poly.coeff(i).real());
            im.push_back(tap.poly.coeff(i).imag());
        }
        std::cout << json{{"span", tap.span},
                          {"coeffs_re", re},
                          {"coeffs_im", im},
                          {"monic", monic},
                          {"reciprocity_defect", defect}}
                         .dump()
                  << "\n";
    } else {
        std::cout << spec.name() << " root " << root_index << ": Delta = " << tap.poly
                  << "\n  span " << tap.span << ", " << (monic ? "monic" : "non-monic")
                  << ", reciprocity defect " << defect << "\n";
    }
    return kExitOk;
}

int cmd_analyze(const RunConfig& cfg, long k, long n) {
    const tapkit::KnotSpec spec = tapkit::KnotSpec::double_twist(k, n);
    const tapkit::DetectionReport report = tapkit::detect(spec, cfg.tol);
    const bool asserted = report.assertion_class == tapkit::AssertionClass::Asserted;
    if (cfg.format == "json") {
        json out{{"genus", report.detected_genus},
                 {"fibered", report.detected_fibered},
                 {"assertion", asserted ? "asserted" : "report-only"}};
        if (spec.as_double_twist().k % 2 == 0) {
            out["p"] = report.p;
            out["in_p2"] = report.p_in_p2;
        }
        std::cout << out.dump() << "\n";
    } else if (cfg.format == "csv") {
        std::cout << "spec,k,n,root_index,y_re,y_im,span,lead_re,lead_im,monic,"
                     "genus_detected,fibered_detected\n";
        for (std::size_t i = 0; i < report.roots.size(); ++i) {
            const auto& rec = report.roots[i];
            std::cout << spec.name() << "," << k << "," << n << "," << i << ","
                      << rec.y.real() << "," << rec.y.imag() << "," << rec.span << ","
                      << rec.lead.real() << "," << rec.lead.imag() << ","
                      << (rec.monic ? "true" : "false") << "," << report.detected_genus << ","
                      << (report.detected_fibered ? "true" : "false") << "\n";
        }
    } else {
        std::cout << spec.name() << ": genus " << report.detected_genus << ", "
                  << (report.detected_fibered ? "fibered" : "not fibered") << " ("
                  << (asserted ? "asserted" : "report-only");
        if (spec.as_double_twist().k % 2 == 0)
            std::cout << ", p = " << report.p << (report.p_in_p2 ? " in P2" : " not in P2");
        std::cout << ")\n";
        for (const auto& rec : report.roots)
            std::cout << "  y = (" << rec.y.real() << ", " << rec.y.imag() << ")  span "
                      << rec.span << "  lead (" << rec.lead.real() << ", " << rec.lead.imag()
                      << ")  " << (rec.monic ? "monic" : "non-monic") << "\n";
    }
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, long kmax, long nmax, long pmax) {
    tapkit::VerifyOptions opt;
    opt.kmax = kmax;
    opt.nmax = nmax;
    opt.pmax = pmax;
    opt.threads = cfg.threads;
    opt.tol = cfg.tol;
    const tapkit::VerifyReport report = tapkit::run_verification(opt);
    if (cfg.format == "json") {
        json checks = json::array();
        for (const auto& c : report.checks)
            checks.push_back(json{{"name", c.name},
                                  {"passed", c.passed},
                                  {"asserted", c.asserted},
                                  {"detail", c.detail}});
        std::cout << json{{"kmax", kmax},
                          {"nmax", nmax},
                          {"pmax", pmax},
                          {"grid_seconds", report.grid_seconds},
                          {"all_passed", report.all_passed()},
                          {"checks", checks}}
                         .dump()
                  << "\n";
    } else {
        for (const auto& c : report.checks) {
            std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
            if (!c.detail.empty()) std::cout << " - " << c.detail;
            std::cout << "\n";
        }
        std::cout << "grid time " << report.grid_seconds << " s; "
                  << (report.all_passed() ? "all checks passed" : "FAILURES above") << "\n";
    }
    return report.all_passed() ? kExitOk : kExitAssertion;
}

int cmd_p2(const RunConfig& cfg, long max) {
    const std::vector<long> primes = tapkit::p2_primes_up_to(max);
    if (cfg.format == "json") {
        std::cout << json(primes).dump() << "\n";
    } else {
        for (std::size_t i = 0; i < primes.size(); ++i)
            std::cout << primes[i] << (i + 1 < primes.size() ? " " : "");
        std::cout << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Riley polynomials, parabolic representations and twisted Alexander "
                 "polynomials of double-twist and 2-bridge knots"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    cfg.threads = env_threads();
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--phi-tol", cfg.tol.phi_tol, "Relative residual bound for phi(2,y)")
        ->capture_default_str();
    app.add_option("--matrix-tol", cfg.tol.matrix_tol, "Bound on |W^nA - BW^n| entries")
        ->capture_default_str();
    app.add_option("--monic-tol", cfg.tol.monic_tol, "Monicity tolerance on lead/trail")
        ->capture_default_str();
    app.add_option("--threads", cfg.threads, "Worker threads (0 = auto)");

    long k = 0, n = 0, root_index = 0, kmax = 8, nmax = 4, pmax = 200, p2max = 100;
    std::string two_bridge;
    bool symbolic = false;

    auto add_spec_options = [&](CLI::App* sub, bool with_two_bridge) {
        sub->add_option("--k", k, "First twist parameter of J(k,2n)");
        sub->add_option("--n", n, "Second box holds 2n half twists");
        if (with_two_bridge)
            sub->add_option("--two-bridge", two_bridge, "2-bridge knot b(p,q) as p/q");
    };

    CLI::App* riley = app.add_subcommand("riley", "Riley polynomial of a knot");
    add_spec_options(riley, true);
    riley->add_flag("--symbolic", symbolic, "Print phi(x,y) instead of phi(2,y)");

    CLI::App* parabolic = app.add_subcommand("parabolic", "Solve phi(2,y) = 0");
    add_spec_options(parabolic, true);

    CLI::App* tap = app.add_subcommand("tap", "Twisted Alexander polynomial at a root");
    add_spec_options(tap, true);
    tap->add_option("--root-index", root_index, "Index into the sorted root table");

    CLI::App* analyze = app.add_subcommand("analyze", "Genus and fiberedness detection");
    add_spec_options(analyze, false);

    CLI::App* verify = app.add_subcommand("verify", "Run the verification suite");
    verify->add_option("--kmax", kmax, "Largest k in the grid")->capture_default_str();
    verify->add_option("--nmax", nmax, "Largest |n| in the grid")->capture_default_str();
    verify->add_option("--pmax", pmax, "Prime bound for the number-theory checks")
        ->capture_default_str();

    CLI::App* p2 = app.add_subcommand("p2", "Odd primes with 2 as a primitive root");
    p2->add_option("--max", p2max, "Upper bound")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitSpec;
    }

    try {
        if (riley->parsed()) return cmd_riley(cfg, k, n, two_bridge, symbolic);
        if (parabolic->parsed()) return cmd_parabolic(cfg, k, n, two_bridge);
        if (tap->parsed()) return cmd_tap(cfg, k, n, two_bridge, root_index);
        if (analyze->parsed()) return cmd_analyze(cfg, k, n);
        if (verify->parsed()) return cmd_verify(cfg, kmax, nmax, pmax);
        if (p2->parsed()) return cmd_p2(cfg, p2max);
    } catch (const tapkit::SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSpec;
    } catch (const tapkit::TheoremViolation& e) {
        std::cerr << "assertion failure: " << e.what() << "\n";
        return kExitAssertion;
    } catch (const tapkit::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSpec;
    }
    return kExitSpec;
}
