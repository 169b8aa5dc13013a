#include "futaki/serialize.hpp"

#include <sstream>

namespace futaki {

void put_rational(Json& j, const std::string& key, const Rational& q)
{
    j[key] = to_string(q);
    j[key + "_float"] = to_double(q);
}

void put_rational_list(Json& j, const std::string& key, const std::vector<Rational>& qs)
{
    Json exact = Json::array();
    Json approx = Json::array();
    for (const auto& q : qs) {
        exact.push_back(to_string(q));
        approx.push_back(to_double(q));
    }
    j[key] = exact;
    j[key + "_float"] = approx;
}

Json polytope_to_json(const DelzantPolytope& p)
{
    Json j;
    j["n"] = p.dimension();
    Json hs = Json::array();
    for (const auto& h : p.halfspaces()) {
        Json v = Json::array();
        for (Eigen::Index i = 0; i < h.normal.size(); ++i)
            v.push_back(h.normal[i]);
        hs.push_back(Json{{"v", v}, {"lam", to_string(h.offset)}});
    }
    j["halfspaces"] = hs;
    return j;
}

DelzantPolytope polytope_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("halfspaces"))
        throw std::invalid_argument("polytope JSON needs \"n\" and \"halfspaces\"");
    const int n = j.at("n").get<int>();
    std::vector<HalfSpace> hs;
    for (const auto& h : j.at("halfspaces")) {
        const auto& v = h.at("v");
        if (!v.is_array() || static_cast<int>(v.size()) != n)
            throw std::invalid_argument("half-space \"v\" must be an integer array of length n");
        IntVector normal(n);
        for (int i = 0; i < n; ++i)
            normal[i] = v[i].get<std::int64_t>();
        const auto& lam = h.at("lam");
        Rational offset = lam.is_string() ? parse_rational(lam.get<std::string>())
                                          : Rational(lam.get<std::int64_t>());
        hs.push_back({normal, offset});
    }
    return DelzantPolytope(n, std::move(hs));
}

Json spec_to_json(const FamilySpec& s)
{
    Json j;
    j["n"] = s.n;
    put_rational(j, "a", s.a);
    put_rational(j, "b", s.b);
    put_rational(j, "A", s.A);
    put_rational(j, "B", s.B);
    put_rational(j, "lambda", s.lambda);
    j["solvable"] = s.solvable;
    j["integral_class"] = s.integral_class;
    return j;
}

Json report_to_json(const CharacterReport& r)
{
    Json j;
    j["spec"] = spec_to_json(r.spec);
    j["hypothesis_violated"] = r.hypothesis_violated;
    put_rational_list(j, "c", r.c);
    put_rational_list(j, "F_boundary", r.boundary);
    put_rational_list(j, "F_bulk", r.bulk);
    put_rational_list(j, "F_bulk_log_coeff", r.bulk_log_coeff);
    if (r.alpha0) {
        put_rational(j, "alpha0", *r.alpha0);
        put_rational(j, "alpha1", *r.alpha1);
        put_rational_list(j, "character", r.character);
    }
    if (r.required_ratio)
        put_rational(j, "required_ratio", *r.required_ratio);
    else
        j["required_ratio"] = "undefined";
    if (r.verdict)
        j["verdict"] = to_string(*r.verdict);
    if (r.ratio_scale) {
        put_rational(j, "ratio_scale", *r.ratio_scale);
        j["experimental_class_reduction"] = true;
    }
    if (!r.discrepancies.empty()) {
        Json list = Json::array();
        for (const auto& d : r.discrepancies) {
            Json e;
            e["printed_formula"] = d.formula;
            put_rational(e, "printed_value", d.published);
            put_rational(e, "pipeline_value", d.computed);
            if (d.factor)
                put_rational(e, "factor", *d.factor);
            list.push_back(e);
        }
        j["paper_discrepancy"] = list;
    }
    return j;
}

Json cone_check_to_json(const ConeCheck& c)
{
    Json j;
    j["m1"] = to_string(c.m1);
    j["m2"] = to_string(c.m2);
    j["a"] = c.a;
    j["b"] = c.b;
    Json list = Json::array();
    for (const auto& q : c.inequalities)
        list.push_back(Json{{"inequality", q.expression},
                            {"value", q.value},
                            {"holds", q.holds},
                            {"marginal", q.marginal}});
    j["inequalities"] = list;
    j["feasible"] = c.feasible;
    return j;
}

Json summary_to_json(const InfeasibilitySummary& s)
{
    return Json{{"grid_bound", s.grid_bound},
                {"grid_points", s.grid_points},
                {"random_points", s.random_points},
                {"feasible_found", s.feasible_found},
                {"marginal_found", s.marginal_found},
                {"infeasible", s.infeasible}};
}

std::string scan_to_csv(const std::vector<ScanRow>& rows)
{
    std::ostringstream out;
    out << "n,a,b,solvable,F_boundary,F_bulk,ratio,verdict\n";
    auto cell = [](const std::optional<Rational>& q) { return q ? to_string(*q) : std::string(); };
    for (const auto& r : rows) {
        out << r.n << ',' << to_string(r.a) << ',' << to_string(r.b) << ','
            << (r.solvable ? "true" : "false") << ',' << cell(r.boundary) << ',' << cell(r.bulk)
            << ',';
        if (r.solvable)
            out << (r.ratio ? to_string(*r.ratio) : std::string("undefined"));
        out << ',' << (r.verdict ? to_string(*r.verdict) : std::string()) << '\n';
    }
    return out.str();
}

Json RunManifest::to_json() const
{
    Json j;
    j["command"] = command;
    Json args = Json::object();
    for (const auto& [k, v] : arguments)
        args[k] = v;
    j["arguments"] = args;
    if (seed)
        j["seed"] = *seed;
    j["version"] = version;
    if (!checks.empty()) {
        Json list = Json::array();
        for (const auto& [id, ok] : checks)
            list.push_back(Json{{"id", id}, {"passed", ok}});
        j["checks"] = list;
    }
    return j;
}

} // namespace futaki
