// riccigraph: curvature, comparison bounds, and rigidity diagnostics for
// strongly connected weighted digraphs given as edge lists.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ricci/ricci.hpp"

namespace {

using ricci::Analysis;
using ricci::DiGraph;
using ricci::Rational;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

DiGraph load_graph(const std::string& path) {
    if (path.empty() || path == "-") return ricci::parse_graph(std::cin);
    return ricci::parse_graph_file(path);
}

int vertex_index(const Analysis& a, const std::string& name) {
    if (!a.g.has_vertex(name))
        throw ricci::BadParamsError("unknown vertex '" + name + "'");
    return a.g.index(name);
}

std::string rat(const Rational& r) { return ricci::fraction_str(r); }

void emit(const ricci::Json& j) { std::cout << j.dump(2) << "\n"; }

std::string yesno(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------- ricci ---

ricci::RicciReport report_with_method(const Analysis& a, ricci::PairSet set,
                                      const std::string& method) {
    if (method == "lp") return ricci::curvature_report(a, set);
    ricci::RicciReport r;
    const int n = a.size();
    if (set == ricci::PairSet::kAll) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (x != y) r.pairs.emplace_back(x, y);
    } else {
        r.pairs = a.g.edges();
    }
    std::optional<Rational> K;
    for (const auto& [x, y] : r.pairs) {
        const Rational k = method == "eps"
                               ? ricci::curvature_eps_limit(a, x, y)
                               : ricci::curvature_bruteforce(a, x, y);
        r.kappa.push_back(k);
        if (a.g.has_edge(x, y) && (!K || k < *K)) K = k;
    }
    r.K = *K;
    r.mc = ricci::mean_curvature(a);
    r.Lambda = ricci::lambda_sup(r.mc);
    return r;
}

int cmd_ricci(const std::string& path, const std::string& pairs,
              const std::string& method, bool json) {
    const Analysis a = ricci::analyze(load_graph(path));
    const auto set = pairs == "edges" ? ricci::PairSet::kEdges
                                      : ricci::PairSet::kAll;
    const ricci::RicciReport r = report_with_method(a, set, method);
    if (json) {
        emit(ricci::json_ricci(a, r));
        return kOk;
    }
    for (size_t i = 0; i < r.pairs.size(); ++i) {
        const auto& [x, y] = r.pairs[i];
        std::cout << a.g.name(x) << " -> " << a.g.name(y)
                  << "  kappa = " << rat(r.kappa[i]) << "\n";
    }
    std::cout << "K = " << rat(r.K) << "\n"
              << "Lambda = " << rat(r.Lambda) << "\n";
    return kOk;
}

// ----------------------------------------------------------------- mean ---

int cmd_mean(const std::string& path, bool json) {
    const Analysis a = ricci::analyze(load_graph(path));
    const ricci::MeanCurvatures mc = ricci::mean_curvature(a);
    if (json) {
        emit(ricci::json_mean(a, mc));
        return kOk;
    }
    for (int x = 0; x < a.size(); ++x)
        std::cout << a.g.name(x) << "  H = " << rat(mc.H[x])
                  << "  H_rev = " << rat(mc.H_rev[x]) << "\n";
    std::cout << "Lambda = " << rat(ricci::lambda_sup(mc)) << "\n";
    return kOk;
}

// ----------------------------------------------------------------- info ---

int cmd_info(const std::string& path, bool json) {
    const Analysis a = ricci::analyze(load_graph(path));
    if (json) {
        emit(ricci::json_info(a));
        return kOk;
    }
    std::cout << "vertices: " << a.size() << "\n"
              << "edges: " << a.g.edge_count() << "\n"
              << "eulerian: " << yesno(ricci::is_eulerian(a.g)) << "\n"
              << "diameter: " << ricci::diameter(a.d) << "\n";
    return kOk;
}

// --------------------------------------------------------------- bounds ---

int cmd_bounds(const std::string& path, bool json) {
    const Analysis a = ricci::analyze(load_graph(path));
    const ricci::RicciReport r = ricci::curvature_report(a, ricci::PairSet::kAll);
    const bool pairwise = ricci::pairwise_diameter_check(a, r);
    bool holds = true;  // vacuous when the bound does not apply
    if (json) {
        emit(ricci::json_bounds(a, r));
        if (r.K > 0) {
            const auto bm = ricci::bonnet_myers(r, ricci::diameter(a.d));
            holds = bm.holds;
        }
        return holds && pairwise ? kOk : kCheckFailed;
    }
    std::cout << "K = " << rat(r.K) << "\n"
              << "Lambda = " << rat(r.Lambda) << "\n"
              << "diameter = " << ricci::diameter(a.d) << "\n";
    if (r.K > 0) {
        const auto bm = ricci::bonnet_myers(r, ricci::diameter(a.d));
        holds = bm.holds;
        std::cout << "bound (Lambda/K) = " << rat(bm.bound) << "\n"
                  << "holds: " << yesno(bm.holds) << "\n"
                  << "equality: " << yesno(bm.equality) << "\n";
    } else {
        std::cout << "bound (Lambda/K): not applicable (K <= 0)\n";
    }
    std::cout << "pairwise check: " << (pairwise ? "pass" : "FAIL") << "\n";
    return holds && pairwise ? kOk : kCheckFailed;
}

// -------------------------------------------------------------- maximal ---

int cmd_maximal(const std::string& path, bool json) {
    const Analysis a = ricci::analyze(load_graph(path));
    const ricci::RicciReport r = ricci::curvature_report(a, ricci::PairSet::kAll);
    const ricci::RigidityVerdict v = ricci::cheng_verify(a, r);
    if (json) {
        emit(ricci::json_maximal(a, v));
    } else {
        std::cout << "K = " << rat(v.K) << "\n"
                  << "Lambda = " << rat(v.Lambda) << "\n"
                  << "diameter = " << v.diam << "\n"
                  << "applicable (K > 0): " << yesno(v.applicable) << "\n";
        if (v.applicable)
            std::cout << "bound (Lambda/K) = " << rat(v.bound) << "\n";
        std::cout << "maximal diameter: " << yesno(v.is_maximal) << "\n";
        if (v.is_maximal) {
            for (size_t i = 0; i < v.poles.size(); ++i) {
                const auto& [x, y] = v.poles[i];
                const auto& s = v.suspension[i];
                std::cout << "poles (" << a.g.name(x) << ", " << a.g.name(y)
                          << "): covered=" << yesno(s.covered)
                          << " constant_kappa=" << yesno(s.kappa_const)
                          << " mixed_max=" << yesno(s.mixed_max) << "\n";
            }
            std::cout << "pole identity: " << yesno(v.pole_identity) << "\n"
                      << "rigid comparison equalities: "
                      << yesno(v.laplacian_equality) << "\n"
                      << "rigid eigenfunction: " << yesno(v.eigen_equality)
                      << "\n"
                      << "lambda1 = " << v.lambda1
                      << " (matches K: " << yesno(v.lambda1_matches) << ")\n";
        }
        std::cout << "all checks: " << (v.all_pass() ? "pass" : "FAIL")
                  << "\n";
    }
    return v.all_pass() ? kOk : kCheckFailed;
}

// ----------------------------------------------------------- suspension ---

int cmd_suspension(const std::string& path, const std::string& poles,
                   bool json) {
    const auto comma = poles.find(',');
    if (comma == std::string::npos)
        throw ricci::BadParamsError("--poles wants two names: x,y");
    const Analysis a = ricci::analyze(load_graph(path));
    const int x = vertex_index(a, poles.substr(0, comma));
    const int y = vertex_index(a, poles.substr(comma + 1));
    const ricci::RicciReport r = ricci::curvature_report(a, ricci::PairSet::kAll);
    const ricci::SuspensionCheck s = ricci::is_spherically_suspended(a, r, x, y);
    if (json) {
        emit(ricci::json_suspension(a, s, x, y));
        return kOk;
    }
    std::cout << "poles: (" << a.g.name(x) << ", " << a.g.name(y) << ")\n"
              << "covered_by_minimal_geodesics: " << yesno(s.covered) << "\n"
              << "constant_curvature_on_geodesics: " << yesno(s.kappa_const)
              << "\n"
              << "mixed_curvature_maximal: " << yesno(s.mixed_max) << "\n"
              << "spherically_suspended: " << yesno(s.all()) << "\n";
    return kOk;
}

// ------------------------------------------------------------- spectrum ---

int cmd_spectrum(const std::string& path, bool json) {
    const Analysis a = ricci::analyze(load_graph(path));
    const ricci::RicciReport r =
        ricci::curvature_report(a, ricci::PairSet::kEdges);
    const ricci::Spectrum s = ricci::spectrum(a);
    const double l1 = ricci::lambda1(s);
    const bool lichnerowicz_ok =
        r.K <= 0 || l1 >= ricci::to_double(r.K) - 1e-9;
    if (json) {
        emit(ricci::json_spectrum(s, r.K));
    } else {
        std::cout << "eigenvalues:";
        for (double v : s.values) std::cout << " " << v;
        std::cout << "\nlambda1 = " << l1 << "\n"
                  << "K = " << rat(r.K) << "\n"
                  << "lichnerowicz margin (lambda1 - K) = "
                  << l1 - ricci::to_double(r.K) << "\n";
    }
    return lichnerowicz_ok ? kOk : kCheckFailed;
}

// -------------------------------------------------------------- product ---

int cmd_product(const std::string& left, const std::string& right,
                const std::string& alpha, const std::string& beta,
                const std::string& out_path, bool verify) {
    const ricci::ProductSpec spec{
        load_graph(left), load_graph(right), ricci::parse_rational(alpha),
        ricci::parse_rational(beta)};
    const DiGraph prod = ricci::cartesian_product(spec);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw ricci::BadParamsError("cannot write " + out_path);
        ricci::write_edge_list(out, prod);
    } else {
        ricci::write_edge_list(std::cout, prod);
    }
    if (!verify) return kOk;

    // Closed forms from the factors vs direct computation on the product.
    const Analysis la = ricci::analyze(spec.left);
    const Analysis ra = ricci::analyze(spec.right);
    const auto lr = ricci::curvature_report(la, ricci::PairSet::kAll);
    const auto rr = ricci::curvature_report(ra, ricci::PairSet::kAll);
    const Analysis pa = ricci::analyze(prod);
    const auto pr = ricci::curvature_report(pa, ricci::PairSet::kAll);
    const auto pc = ricci::predicted_constants(
        spec, ricci::diameter(la.d), lr, ricci::diameter(ra.d), rr);
    bool ok = ricci::diameter(pa.d) == pc.diam && pr.Lambda == pc.Lambda &&
              pr.K == pc.K;
    const int nl = la.size(), nr = ra.size();
    int mismatches = 0;
    for (int x = 0; x < nl && mismatches == 0; ++x)
        for (int xp = 0; xp < nr && mismatches == 0; ++xp)
            for (int y = 0; y < nl && mismatches == 0; ++y)
                for (int yp = 0; yp < nr; ++yp) {
                    if (x == y && xp == yp) continue;
                    const Rational pred = ricci::predicted_ricci(
                        spec, la, lr, ra, rr, x, xp, y, yp);
                    if (*pr.kappa_at(x * nr + xp, y * nr + yp) != pred) {
                        ++mismatches;
                        break;
                    }
                }
    ok = ok && mismatches == 0;
    std::cerr << "verify: diameter " << ricci::diameter(pa.d)
              << " (predicted " << pc.diam << "), Lambda " << rat(pr.Lambda)
              << " (predicted " << rat(pc.Lambda) << "), K " << rat(pr.K)
              << " (predicted " << rat(pc.K) << "), per-pair kappa "
              << (mismatches == 0 ? "match" : "MISMATCH") << "\n"
              << "verify: " << (ok ? "pass" : "FAIL") << "\n";
    return ok ? kOk : kCheckFailed;
}

// ------------------------------------------------------------------ gen ---

DiGraph generate(const std::string& name) {
    const auto colon = name.find(':');
    const std::string kind = name.substr(0, colon);
    const std::string args =
        colon == std::string::npos ? "" : name.substr(colon + 1);
    try {
        if (kind == "triforce") {
            if (!args.empty())
                throw ricci::BadParamsError("triforce takes no arguments");
            return ricci::triforce();
        }
        if (kind == "kn") return ricci::directed_complete(std::stoi(args));
        if (kind == "cycle") return ricci::directed_cycle(std::stoi(args));
        if (kind == "random") {
            std::stringstream ss(args);
            std::string n_s, d_s, seed_s;
            if (!std::getline(ss, n_s, ',') || !std::getline(ss, d_s, ',') ||
                !std::getline(ss, seed_s))
                throw ricci::BadParamsError("random wants n,density,seed");
            return ricci::random_strongly_connected(
                std::stoi(n_s), std::stod(d_s),
                static_cast<uint64_t>(std::stoull(seed_s)));
        }
    } catch (const std::invalid_argument&) {
        throw ricci::BadParamsError("bad number in generator spec: " + name);
    } catch (const std::out_of_range&) {
        throw ricci::BadParamsError("number out of range in: " + name);
    }
    throw ricci::BadParamsError(
        "unknown generator '" + kind +
        "' (expected kn:N, cycle:N, triforce, random:n,density,seed)");
}

int cmd_gen(const std::string& name) {
    ricci::write_edge_list(std::cout, generate(name));
    return kOk;
}

// ------------------------------------------------------------ selfcheck ---

int cmd_selfcheck() {
    const std::vector<ricci::CriterionResult> results = ricci::run_selfcheck();
    int passed = 0;
    for (const auto& r : results) {
        std::cout << "[" << r.id << "] " << r.label << ": "
                  << (r.pass ? "PASS" : "FAIL");
        if (!r.pass) std::cout << "  (" << r.detail << ")";
        std::cout << "\n";
        passed += r.pass;
    }
    std::cout << "selfcheck: " << passed << "/" << results.size()
              << " passed\n";
    return passed == static_cast<int>(results.size()) ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Ricci curvature, curvature bounds, and maximal-diameter rigidity "
        "for strongly connected weighted digraphs"};
    app.require_subcommand(1);

    std::string path, pairs = "all", method = "lp", poles;
    std::string left, right, alpha = "1", beta = "1", out_path, gen_name;
    bool json = false, verify = false;

    auto add_input = [&](CLI::App* sub, bool with_json = true) {
        sub->add_option("path", path,
                        "edge-list file (stdin when omitted or '-')");
        if (with_json) sub->add_flag("--json", json, "emit a JSON report");
    };

    add_input(app.add_subcommand("info", "vertex/edge counts, Eulerian flag, "
                                         "diameter"));
    auto* sc_ricci = app.add_subcommand("ricci", "pairwise Ricci curvature");
    add_input(sc_ricci);
    sc_ricci->add_option("--pairs", pairs, "all|edges (default all)")
        ->check(CLI::IsMember({"all", "edges"}));
    sc_ricci->add_option("--method", method,
                         "lp|eps|brute (default lp)")
        ->check(CLI::IsMember({"lp", "eps", "brute"}));
    add_input(app.add_subcommand("mean",
                                 "asymptotic mean curvatures and Lambda"));
    add_input(app.add_subcommand("bounds",
                                 "curvature constants and diameter bounds"));
    add_input(app.add_subcommand("maximal",
                                 "maximal-diameter rigidity verdict"));
    auto* sc_susp = app.add_subcommand(
        "suspension", "spherical-suspension conditions for a pole pair");
    add_input(sc_susp);
    sc_susp->add_option("--poles", poles, "pole vertices, e.g. x1,x4")
        ->required();
    add_input(app.add_subcommand("spectrum",
                                 "Laplacian spectrum and Lichnerowicz margin"));

    auto* sc_prod = app.add_subcommand(
        "product", "weighted Cartesian product of two graphs");
    sc_prod->add_option("--left", left, "left factor edge-list file")
        ->required();
    sc_prod->add_option("--right", right, "right factor edge-list file")
        ->required();
    sc_prod->add_option("--alpha", alpha, "right-step weight (rational)");
    sc_prod->add_option("--beta", beta, "left-step weight (rational)");
    sc_prod->add_option("-o,--output", out_path,
                        "write the product here instead of stdout");
    sc_prod->add_flag("--verify", verify,
                      "check closed-form curvature formulas against direct "
                      "computation (report on stderr)");

    auto* sc_gen = app.add_subcommand("gen", "emit a named example graph");
    sc_gen->add_option("--name", gen_name,
                       "kn:N | cycle:N | triforce | random:n,density,seed")
        ->required();

    app.add_subcommand("selfcheck",
                       "run the embedded fixture-and-property suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kBadInput;
    }

    try {
        if (app.got_subcommand("info")) return cmd_info(path, json);
        if (app.got_subcommand("ricci"))
            return cmd_ricci(path, pairs, method, json);
        if (app.got_subcommand("mean")) return cmd_mean(path, json);
        if (app.got_subcommand("bounds")) return cmd_bounds(path, json);
        if (app.got_subcommand("maximal")) return cmd_maximal(path, json);
        if (app.got_subcommand("suspension"))
            return cmd_suspension(path, poles, json);
        if (app.got_subcommand("spectrum")) return cmd_spectrum(path, json);
        if (app.got_subcommand("product"))
            return cmd_product(left, right, alpha, beta, out_path, verify);
        if (app.got_subcommand("gen")) return cmd_gen(gen_name);
        if (app.got_subcommand("selfcheck")) return cmd_selfcheck();
    } catch (const ricci::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}
