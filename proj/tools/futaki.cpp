// futaki: command-line front end for the exact alpha-Futaki pipeline.
//
// Exit codes: 0 ok, 1 usage or internal error, 2 hypothesis violation,
// 3 verification failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "futaki/verify.hpp"

using namespace futaki;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_internal = 1;
constexpr int exit_hypothesis = 2;
constexpr int exit_verification = 3;

struct Globals
{
    bool json = false;
    std::uint64_t seed = 42;
    bool force = false;
};

RunManifest manifest_for(const CLI::App* sub, const Globals& g, bool stochastic)
{
    RunManifest m;
    m.command = sub->get_name();
    for (const CLI::Option* opt : sub->get_options()) {
        if (opt->count() == 0 || opt->get_name() == "--help")
            continue;
        std::string joined;
        for (const auto& r : opt->results())
            joined += (joined.empty() ? "" : " ") + r;
        m.arguments.emplace_back(opt->get_name(), joined.empty() ? "true" : joined);
    }
    if (g.force)
        m.arguments.emplace_back("--force", "true");
    if (stochastic)
        m.seed = g.seed;
    return m;
}

void print_json(const Json& j)
{
    std::cout << j.dump(2) << '\n';
}

std::string join_point(const VectorQ& v)
{
    std::string s = "(";
    for (Eigen::Index i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + to_string(v[i]);
    return s + ")";
}

Json point_json(const VectorQ& v)
{
    Json arr = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        arr.push_back(to_string(v[i]));
    return arr;
}

DelzantPolytope load_polytope(const std::string& arg)
{
    std::string text = arg;
    const auto first = arg.find_first_not_of(" \t\n");
    if (first == std::string::npos || arg[first] != '{') {
        std::ifstream in(arg);
        if (!in)
            throw std::invalid_argument("cannot open polytope file '" + arg + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    return polytope_from_json(Json::parse(text));
}

// --- character ---------------------------------------------------------------

struct CharacterArgs
{
    int n = 2;
    std::string a, b;
    std::string a_e = "1", b_e = "1";
    std::string alpha0, alpha1;
};

int cmd_character(const CharacterArgs& args, const Globals& g, const CLI::App* sub)
{
    Rational a = parse_rational(args.a);
    Rational b = parse_rational(args.b);
    const Rational a_e = parse_rational(args.a_e);
    const Rational b_e = parse_rational(args.b_e);
    std::optional<Rational> scale;
    if (a_e != 1 || b_e != 1) {
        const ScaledClass bundle = make_scaled_class(a, a_e);
        const ScaledClass kahler = make_scaled_class(b, b_e);
        scale = ratio_scale_factor(bundle, kahler);
        a = bundle.reduced();
        b = kahler.reduced();
    }
    std::optional<Rational> alpha0, alpha1;
    if (!args.alpha0.empty() || !args.alpha1.empty()) {
        if (args.alpha0.empty() || args.alpha1.empty())
            throw std::invalid_argument("--alpha0 and --alpha1 must be given together");
        alpha0 = parse_rational(args.alpha0);
        alpha1 = parse_rational(args.alpha1);
    }

    FamilySpec spec;
    if (g.force) {
        spec = make_spec_forced(args.n, a, b);
        if (!spec.solvable)
            std::cerr << "warning: hypothesis violated (J-equation not solvable); "
                         "values computed under --force\n";
    } else {
        spec = make_spec(args.n, a, b);
    }
    CharacterReport report = character_report(spec, alpha0, alpha1);
    report.ratio_scale = scale;
    Json out = report_to_json(report);
    if (scale && report.required_ratio)
        put_rational(out, "scaled_required_ratio", *report.required_ratio * *scale);
    out["manifest"] = manifest_for(sub, g, false).to_json();
    print_json(out);
    return exit_ok;
}

// --- scan ----------------------------------------------------------------------

struct ScanArgs
{
    int n = 2;
    std::string a_from, a_to, b_from, b_to, step;
};

int cmd_scan(const ScanArgs& args)
{
    const auto rows = scan(args.n, parse_rational(args.a_from), parse_rational(args.a_to),
                           parse_rational(args.b_from), parse_rational(args.b_to),
                           parse_rational(args.step));
    std::cout << scan_to_csv(rows);
    return exit_ok;
}

// --- verify-paper --------------------------------------------------------------

int cmd_verify(const std::string& only, const Globals& g, const CLI::App* sub)
{
    std::optional<std::string> filter;
    if (!only.empty())
        filter = only;
    const auto results = run_checks(filter, g.seed);
    bool all = true;
    for (const auto& r : results)
        all = all && r.passed;
    if (g.json) {
        RunManifest m = manifest_for(sub, g, true);
        for (const auto& r : results)
            m.checks.emplace_back(r.id, r.passed);
        Json out;
        out["results"] = results_to_json(results);
        out["all_passed"] = all;
        out["manifest"] = m.to_json();
        print_json(out);
    } else {
        for (const auto& r : results)
            std::cout << (r.passed ? "PASS" : "FAIL") << "  [" << r.criterion << "] " << r.id
                      << "  " << r.anchor << "\n      " << r.detail << '\n';
        std::cout << (all ? "all checks passed" : "some checks FAILED") << '\n';
    }
    return all ? exit_ok : exit_verification;
}

// --- polytope --------------------------------------------------------------------

struct PolytopeArgs
{
    int n = 2;
    std::string b;
    std::string polytope;
    bool info = false;
};

int cmd_polytope(const PolytopeArgs& args, const Globals& g, const CLI::App* sub)
{
    const DelzantPolytope p = args.polytope.empty()
                                  ? standard_blowup_polytope(args.n, parse_rational(args.b))
                                  : load_polytope(args.polytope);
    if (!args.info) {
        print_json(polytope_to_json(p));
        return exit_ok;
    }
    const int n = p.dimension();
    const MultiPoly one = MultiPoly::constant(n, Rational(1));
    std::vector<Rational> facet_measures;
    for (std::size_t f = 0; f < p.facet_count(); ++f)
        facet_measures.push_back(integrate_poly_facet(p, f, one));
    const Rational vol = volume(p);
    const Rational boundary = integrate_poly_boundary(p, one);

    if (g.json) {
        Json out;
        out["polytope"] = polytope_to_json(p);
        Json vs = Json::array();
        for (const auto& v : p.vertices())
            vs.push_back(point_json(v));
        out["vertices"] = vs;
        put_rational(out, "volume", vol);
        put_rational_list(out, "facet_measures", facet_measures);
        put_rational(out, "boundary_measure", boundary);
        out["delzant"] = is_delzant(p);
        out["manifest"] = manifest_for(sub, g, false).to_json();
        print_json(out);
        return exit_ok;
    }
    std::cout << "dimension: " << n << "\nvertices (" << p.vertices().size() << "):\n";
    for (const auto& v : p.vertices())
        std::cout << "  " << join_point(v) << '\n';
    std::cout << "volume: " << to_string(vol) << "\nfacets (l(x) = <x,v> + lam >= 0):\n";
    for (std::size_t f = 0; f < p.facet_count(); ++f) {
        const auto& h = p.halfspaces()[f];
        std::cout << "  [" << f << "] v = (";
        for (Eigen::Index i = 0; i < h.normal.size(); ++i)
            std::cout << (i ? ", " : "") << h.normal[i];
        std::cout << "), lam = " << to_string(h.offset)
                  << ", dsigma-measure = " << to_string(facet_measures[f]) << '\n';
    }
    std::cout << "boundary dsigma-measure: " << to_string(boundary)
              << "\nDelzant: " << (is_delzant(p) ? "yes" : "no") << '\n';
    return exit_ok;
}

// --- family ----------------------------------------------------------------------

struct FamilyArgs
{
    int n = 2;
    std::string a, b;
    bool info = false;
};

int cmd_family(const FamilyArgs& args, const Globals& g, const CLI::App* sub)
{
    const FamilySpec spec = make_spec_forced(args.n, parse_rational(args.a), parse_rational(args.b));
    const Rational value = solvability_value(spec.n, spec.a, spec.b);
    std::vector<std::pair<VectorQ, VectorQ>> images;
    if (args.info) {
        const DelzantPolytope source = standard_blowup_polytope(spec.n, spec.b);
        for (const auto& v : source.vertices())
            images.emplace_back(v, transition_map(spec, v));
    }

    if (g.json) {
        Json out = spec_to_json(spec);
        put_rational(out, "solvability_value", value);
        out["solvability_threshold"] = spec.n - 1;
        if (args.info) {
            Json list = Json::array();
            for (const auto& [v, u] : images)
                list.push_back(Json{{"vertex", point_json(v)}, {"image", point_json(u)}});
            out["vertex_images"] = list;
        }
        out["manifest"] = manifest_for(sub, g, false).to_json();
        print_json(out);
    } else {
        std::cout << "n = " << spec.n << ", a = " << to_string(spec.a) << ", b = " << to_string(spec.b)
                  << "\nA = " << to_string(spec.A) << "\nB = " << to_string(spec.B)
                  << "\nlambda = " << to_string(spec.lambda) << "\nn(ab^{n-1}-1)/(b^n-1) = "
                  << to_string(value) << (spec.solvable ? " > " : " <= ") << spec.n - 1
                  << "\nsolvable: " << (spec.solvable ? "yes" : "no")
                  << "\nintegral class: " << (spec.integral_class ? "yes" : "no") << '\n';
        if (args.info) {
            std::cout << "vertex images under U:\n";
            for (const auto& [v, u] : images)
                std::cout << "  " << join_point(v) << " -> " << join_point(u) << '\n';
        }
    }
    return exit_ok;
}

// --- integrate ---------------------------------------------------------------------

struct IntegrateArgs
{
    std::string polytope;
    int n = 0;
    std::string b;
    std::string poly;
    int facet = -1;
    bool boundary = false;
    std::uint64_t mc_samples = 0;
};

int cmd_integrate(const IntegrateArgs& args, const Globals& g, const CLI::App* sub)
{
    const bool slab = args.polytope.empty();
    if (slab && (args.n < 1 || args.b.empty()))
        throw std::invalid_argument("give --polytope, or --n and --b for the slab P_n(b)");
    const DelzantPolytope p = slab ? standard_blowup_polytope(args.n, parse_rational(args.b))
                                   : load_polytope(args.polytope);
    const int n = p.dimension();
    const RadialSum integrand = parse_radial(args.poly, n);

    LogLinear value;
    std::string domain;
    if (args.facet >= 0) {
        value.q0 = integrate_poly_facet(p, static_cast<std::size_t>(args.facet), integrand.to_poly());
        domain = "facet " + std::to_string(args.facet);
    } else if (args.boundary) {
        value.q0 = integrate_poly_boundary(p, integrand.to_poly());
        domain = "boundary";
    } else if (slab && integrand.min_power() < 0) {
        value = integrate_radial(n, parse_rational(args.b), integrand);
        domain = "body";
    } else {
        value.q0 = integrate_poly(p, integrand.to_poly());
        domain = "body";
    }

    Json out;
    out["domain"] = domain;
    out["integrand"] = integrand.str();
    out["exact"] = to_string(value.q0);
    out["log_coeff"] = to_string(value.q1);
    out["float"] = slab ? value.approximate(parse_rational(args.b)) : to_double(value.q0);
    if (args.mc_samples > 0) {
        if (domain != "body")
            throw std::invalid_argument("Monte Carlo is only available for body integrals");
        const McEstimate mc = mc_integrate(
            p, [&](const Eigen::VectorXd& x) { return integrand(x); }, args.mc_samples, g.seed);
        out["mc"] = Json{{"estimate", mc.estimate},
                         {"standard_error", mc.standard_error},
                         {"samples", mc.samples},
                         {"accepted", mc.accepted},
                         {"seed", mc.seed},
                         {"agrees", mc_agrees(out["float"].get<double>(), mc)}};
    }
    out["manifest"] = manifest_for(sub, g, args.mc_samples > 0).to_json();
    print_json(out);
    return exit_ok;
}

// --- kf-check ------------------------------------------------------------------------

struct KfArgs
{
    int genus = 0;
    int k = 1;
    int kprime = 1;
    std::string k1, k2;
};

int cmd_kf(const KfArgs& args, const Globals& g, const CLI::App* sub)
{
    Json out;
    bool ok = true;
    if (!args.k1.empty() || !args.k2.empty()) {
        if (args.k1.empty() || args.k2.empty())
            throw std::invalid_argument("--k1 and --k2 must be given together");
        const RuledSurfaceClass c =
            kf_ruled_ratio(args.genus, args.k, args.kprime, parse_rational(args.k1), parse_rational(args.k2));
        out["E0_coef"] = to_string(c.e0_coef);
        out["fiber_coef"] = to_string(c.fiber_coef);
        if (c.h_coef) {
            out["H_coef"] = to_string(*c.h_coef);
            out["E_coef"] = to_string(*c.e_coef);
        }
        put_rational(out, "ratio", c.ratio);
        if (c.h_coef && *c.e_coef == 1 && *c.h_coef > 1 && solvable(2, *c.h_coef, Rational(3))) {
            const auto r = required_ratio(make_spec(2, *c.h_coef, Rational(3)));
            if (r) {
                put_rational(out, "character_ratio_at_b3", *r);
                out["agrees"] = *r == c.ratio;
            }
        }
    } else {
        Json rows = Json::array();
        for (int k = 1; k <= 5; ++k) {
            const RuledSurfaceClass c = kf_ruled_ratio(0, 1, 1, Rational(1 + 3 * k), Rational(-k));
            const auto r = required_ratio(make_spec(2, Rational(8 * k + 3), Rational(3)));
            const bool agree = r && *r == c.ratio && *c.h_coef == 8 * k + 3 && *c.e_coef == 1;
            ok = ok && agree;
            Json row{{"k", k},
                     {"class", to_string(*c.h_coef) + "[H]-" + to_string(*c.e_coef) + "[E]"},
                     {"ruled_ratio", to_string(c.ratio)},
                     {"character_ratio", r ? to_string(*r) : "undefined"},
                     {"agrees", agree}};
            rows.push_back(row);
        }
        out["rows"] = rows;
        out["all_agree"] = ok;
    }
    out["manifest"] = manifest_for(sub, g, false).to_json();
    print_json(out);
    return ok ? exit_ok : exit_verification;
}

// --- ample-check ---------------------------------------------------------------------

struct AmpleArgs
{
    std::string m1, m2;
    int grid = 0;
    std::uint64_t random = 10000;
};

int cmd_ample(const AmpleArgs& args, const Globals& g, const CLI::App* sub)
{
    Json out;
    if (args.grid > 0) {
        out = summary_to_json(infeasibility_scan(args.grid, args.random, g.seed));
        out["manifest"] = manifest_for(sub, g, true).to_json();
    } else {
        if (args.m1.empty() || args.m2.empty())
            throw std::invalid_argument("give --m1 and --m2, or --grid N");
        out = cone_check_to_json(nakai_check_m(parse_rational(args.m1), parse_rational(args.m2)));
        out["manifest"] = manifest_for(sub, g, false).to_json();
    }
    print_json(out);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact alpha-Futaki characters on the blow-up of P^n at a point"};
    app.set_version_flag("--version", tool_version);
    app.require_subcommand(1);

    Globals g;
    app.add_flag("--json", g.json, "Machine-readable output");
    app.add_option("--seed", g.seed, "Seed for stochastic checks")->capture_default_str();
    app.add_flag("--force", g.force, "Evaluate even when the J-equation is not solvable");
    app.fallthrough();

    CharacterArgs ca;
    auto* character = app.add_subcommand("character", "alpha-Futaki character report (JSON)");
    character->add_option("--n", ca.n, "Dimension")->required();
    character->add_option("--a", ca.a, "Bundle class a[H]-[E], rational")->required();
    character->add_option("--b", ca.b, "Kahler class b[H]-[E], rational")->required();
    character->add_option("--alpha0", ca.alpha0, "Coupling alpha_0");
    character->add_option("--alpha1", ca.alpha1, "Coupling alpha_1");
    character->add_option("--a-e", ca.a_e, "Exceptional coefficient of the bundle class (experimental)");
    character->add_option("--b-e", ca.b_e, "Exceptional coefficient of the Kahler class (experimental)");

    ScanArgs sa;
    auto* scan_cmd = app.add_subcommand("scan", "Required-ratio landscape over an (a, b) grid (CSV)");
    scan_cmd->add_option("--n", sa.n, "Dimension")->required();
    scan_cmd->add_option("--a-from", sa.a_from)->required();
    scan_cmd->add_option("--a-to", sa.a_to)->required();
    scan_cmd->add_option("--b-from", sa.b_from)->required();
    scan_cmd->add_option("--b-to", sa.b_to)->required();
    scan_cmd->add_option("--step", sa.step)->required();

    std::string only;
    auto* verify_cmd = app.add_subcommand("verify-paper", "Run the reproduction checks");
    verify_cmd->add_option("--only", only, "Run a single check by id");

    PolytopeArgs pa;
    auto* polytope_cmd = app.add_subcommand("polytope", "Inspect P_n(b) or a JSON polytope");
    polytope_cmd->add_option("--n", pa.n, "Dimension of P_n(b)");
    polytope_cmd->add_option("--b", pa.b, "Slab parameter b");
    polytope_cmd->add_option("--polytope", pa.polytope, "Polytope JSON (inline or file path)");
    polytope_cmd->add_flag("--info", pa.info, "Vertices, volume and facet measures");

    FamilyArgs fa;
    auto* family_cmd = app.add_subcommand("family", "Constants of the blow-up family");
    family_cmd->add_option("--n", fa.n)->required();
    family_cmd->add_option("--a", fa.a)->required();
    family_cmd->add_option("--b", fa.b)->required();
    family_cmd->add_flag("--info", fa.info, "Include vertex images under U");

    IntegrateArgs ia;
    auto* integrate_cmd = app.add_subcommand("integrate", "Exact polytope integral (JSON)");
    integrate_cmd->add_option("--polytope", ia.polytope, "Polytope JSON (inline or file path)");
    integrate_cmd->add_option("--n", ia.n, "Use the slab P_n(b)");
    integrate_cmd->add_option("--b", ia.b, "Slab parameter b");
    integrate_cmd->add_option("--poly", ia.poly, "Integrand in x1..xn and X")->required();
    integrate_cmd->add_option("--facet", ia.facet, "Integrate over facet i (0-based) with dsigma");
    integrate_cmd->add_flag("--boundary", ia.boundary, "Integrate over the whole boundary");
    integrate_cmd->add_option("--mc", ia.mc_samples, "Also run a Monte Carlo estimate");

    KfArgs ka;
    auto* kf_cmd = app.add_subcommand("kf-check", "Ruled-surface ratio and cross-check");
    kf_cmd->add_option("--genus", ka.genus, "Genus of the base curve");
    kf_cmd->add_option("--k", ka.k);
    kf_cmd->add_option("--kprime", ka.kprime);
    kf_cmd->add_option("--k1", ka.k1);
    kf_cmd->add_option("--k2", ka.k2);

    AmpleArgs aa;
    auto* ample_cmd = app.add_subcommand("ample-check", "Nakai-Moishezon inequalities");
    ample_cmd->add_option("--m1", aa.m1);
    ample_cmd->add_option("--m2", aa.m2);
    ample_cmd->add_option("--grid", aa.grid, "Scan [-N, N]^2");
    ample_cmd->add_option("--random", aa.random, "Random rational pairs in the scan");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_internal;
    }

    try {
        if (character->parsed())
            return cmd_character(ca, g, character);
        if (scan_cmd->parsed())
            return cmd_scan(sa);
        if (verify_cmd->parsed())
            return cmd_verify(only, g, verify_cmd);
        if (polytope_cmd->parsed())
            return cmd_polytope(pa, g, polytope_cmd);
        if (family_cmd->parsed())
            return cmd_family(fa, g, family_cmd);
        if (integrate_cmd->parsed())
            return cmd_integrate(ia, g, integrate_cmd);
        if (kf_cmd->parsed())
            return cmd_kf(ka, g, kf_cmd);
        if (ample_cmd->parsed())
            return cmd_ample(aa, g, ample_cmd);
    } catch (const HypothesisViolation& e) {
        std::cerr << "hypothesis violation: " << e.what() << '\n';
        return exit_hypothesis;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_internal;
    }
    return exit_internal;
}
