#include "curveb/pipeline.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace curveb {

namespace {

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (size_t k = 0; k < parts.size(); ++k) s += (k ? sep : "") + parts[k];
    return s;
}

std::string points_str(const std::set<LatticePoint>& pts) {
    std::vector<std::string> v;
    for (const auto& p : pts) v.push_back(to_string(p));
    return "{" + join(v, ", ") + "}";
}

LaurentPoly2<Rational> rational_curve(const LaurentPoly2<ParamPoly>& P, const char* command) {
    if (has_parameters(P))
        throw InputError(std::string("symbolic parameters are only supported by 'kernel', not '") + command + "'");
    return to_rational(P);
}

json curve_json(const std::string& text, const std::string& canonical) {
    return {{"input", text}, {"canonical", canonical}};
}

json puncture_json(const Puncture& p) {
    return {{"id", p.id},
            {"segment", {point_json(p.segment.from), point_json(p.segment.to)}},
            {"c", ball_json(p.c)},
            {"x_order", p.x_order},
            {"y_order", p.y_order},
            {"beta", p.beta},
            {"beta_tilde", p.beta_t},
            {"limit", {{"x", p.x_order > 0 ? "0" : p.x_order < 0 ? "inf" : "finite"},
                       {"y", p.y_order > 0 ? "0" : p.y_order < 0 ? "inf" : "finite"}}}};
}

json double_point_json(const DoublePoint& d) {
    json j = {{"b", ball_json(d.b)}, {"y_b", ball_json(d.yb)}, {"gamma", ball_json(d.gamma)}, {"torus", d.torus}};
    if (d.b_exact) j["b_exact"] = d.b_exact->get_str();
    if (d.yb_exact) j["y_b_exact"] = d.yb_exact->get_str();
    if (d.gamma_exact) j["gamma_exact"] = d.gamma_exact->get_str();
    return j;
}

std::string ball_text(const ComplexBall& z, const std::optional<Rational>& exact) {
    return exact ? exact->get_str() : z.str(12);
}

// Everything the numeric commands share.
struct Analysis {
    LaurentPoly2<Rational> P;
    NewtonPolygon poly;
    SingularLocus locus;
    RegularityReport regularity;
};

Analysis analyse(const LaurentPoly2<Rational>& P, const JobConfig& cfg) {
    Analysis a{P, convex_hull(P.support()), {}, {}};
    a.locus = locate_singular(P, cfg.precision);
    a.regularity = check_regularity(P, a.poly, a.locus);
    return a;
}

void require_regular(const Analysis& a) {
    if (!a.regularity.regular) throw IrregularCurve("irregular curve: " + join(a.regularity.failures, "; "));
}

KappaShift<Rational> numeric_kappa(const KappaShift<ParamPoly>& k) {
    KappaShift<Rational> r;
    for (const auto& [key, v] : k) {
        if (!v.is_constant()) throw InputError("kappa values must be numeric for a numeric curve");
        r[key] = v.constant_value();
    }
    return r;
}

// Rational kernel with its correction, optional kappa shift and optional mutation.
struct BuiltKernel {
    KernelExpression<Rational> K;
    QuadPoly<Rational> Q0;  // compute_Q before any shift or mutation
    std::optional<QuadKey> dropped;
};

BuiltKernel build_kernel(const Analysis& a, const JobConfig& cfg) {
    auto Q = compute_Q(a.P, a.poly);
    auto piv = choose_pivot_set(a.poly, a.locus);
    auto Qt = compute_Qtilde(a.P, a.poly, Q, a.locus, piv, cfg.seed);
    BuiltKernel b{assemble_kernel(a.P, Q, Qt), Q, std::nullopt};
    if (cfg.shift_file) b.K = shift_kernel(b.K, numeric_kappa(load_kappa_file(*cfg.shift_file)), a.poly);
    if (cfg.mutate) {
        b.dropped = mutation_target(b.K.Q, a.poly);
        if (!b.dropped) throw InputError("drop-term: Q has no term outside the interior to drop");
        b.K.Q.erase(*b.dropped);
    }
    return b;
}

std::string emit(const CommandResult& r, const JobConfig& cfg, const std::string& plain, const std::string& latex) {
    switch (cfg.format) {
        case OutputFormat::Json: return r.report.dump(2) + "\n";
        case OutputFormat::Latex: return latex;
        default: return plain;
    }
}

std::string quad_key_str(const QuadKey& k) {
    return "[" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2]) + "," +
           std::to_string(k[3]) + "]";
}

}  // namespace

void JobConfig::validate() const {
    if (precision < 64) throw InputError("precision must be at least 64 bits");
    if (series_order < 4) throw InputError("series order must be at least 4");
    if (tol_exp >= 0) throw InputError("tolerance must be below 1");
    if (mutate && *mutate != "drop-term") throw InputError("unknown mutation '" + *mutate + "'");
    if (ns && hyperelliptic) throw InputError("--ns and --hyperelliptic are exclusive");
}

CheckConfig JobConfig::check_config() const {
    CheckConfig c;
    c.precision = precision;
    c.order = series_order;
    c.tol_exp = tol_exp;
    c.seed = seed;
    return c;
}

long parse_tolerance(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.rfind("2^", 0) == 0) {
        std::string e = t.substr(2);
        if (e.size() > 2 && e.front() == '(' && e.back() == ')') e = e.substr(1, e.size() - 2);
        size_t used = 0;
        long v = 0;
        try {
            v = std::stol(e, &used);
        } catch (const std::exception&) {
            throw InputError("bad tolerance '" + text + "'");
        }
        if (used != e.size()) throw InputError("bad tolerance '" + text + "'");
        return v;
    }
    size_t used = 0;
    double d = 0;
    try {
        d = std::stod(t, &used);
    } catch (const std::exception&) {
        throw InputError("bad tolerance '" + text + "'");
    }
    if (used != t.size() || !(d > 0) || !std::isfinite(d)) throw InputError("bad tolerance '" + text + "'");
    return static_cast<long>(std::floor(std::log2(d)));
}

KappaShift<ParamPoly> parse_kappa_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("kappa file is not valid JSON: ") + e.what());
    }
    if (!j.is_array()) throw InputError("kappa file must be a JSON list");
    auto point = [](const json& p) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
            throw InputError("kappa index must be [i,j]");
        return LatticePoint{p[0].get<int>(), p[1].get<int>()};
    };
    KappaShift<ParamPoly> k;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 3) throw InputError("kappa entry must be [[i,j],[i',j'],value]");
        LatticePoint p = point(e[0]), q = point(e[1]);
        std::string vs = e[2].is_string() ? e[2].get<std::string>() : e[2].dump();
        ParamPoly v = parse_coefficient(vs);
        auto key = std::make_pair(p, q);
        if (k.count(key) && k[key] != v) throw InputError("kappa entry " + to_string(p) + "," + to_string(q) + " given twice");
        k[key] = v;
    }
    // Missing mirror entries are filled; present ones must agree (checked when applied).
    KappaShift<ParamPoly> full = k;
    for (const auto& [key, v] : k) full.try_emplace({key.second, key.first}, v);
    return full;
}

KappaShift<ParamPoly> load_kappa_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read kappa file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_kappa_json(ss.str());
}

CommandResult cmd_info(const std::string& poly_text, const JobConfig& cfg) {
    cfg.validate();
    auto P = rational_curve(parse_poly(poly_text), "info");
    CommandResult r;
    NewtonPolygon poly = convex_hull(P.support());
    r.report["curve"] = curve_json(poly_text, to_string(P));
    r.report["polygon"] = polygon_json(poly);
    std::ostringstream pl, lx;
    pl << "curve: " << to_string(P) << "\n";
    pl << "support: " << points_str(poly.support) << "\n";
    std::vector<std::string> hv;
    for (const auto& p : poly.hull) hv.push_back(to_string(p));
    pl << "hull (clockwise): " << join(hv, " -> ") << "\n";
    pl << "interior: " << points_str(poly.interior) << " (" << poly.interior.size() << " points)\n";
    pl << "minimal segments: " << poly.segments.size() << "\n";
    lx << "P(x,y) = " << to_latex(P) << "\n";
    lx << "\\mathring{N}(P) = \\{" << [&] {
        std::vector<std::string> v;
        for (const auto& p : poly.interior) v.push_back(to_string(p));
        return join(v, ", ");
    }() << "\\}\n";

    std::string failure;
    int code = 0;
    try {
        Analysis a = analyse(P, cfg);
        r.report["punctures"] = json::array();
        auto punct = enumerate_punctures(P, poly, cfg.precision);
        for (const auto& p : punct) {
            r.report["punctures"].push_back(puncture_json(p));
            pl << "  puncture " << p.id << ": " << to_string(p.segment.from) << "->" << to_string(p.segment.to)
               << "  c = " << p.c.str(12) << "  (beta, beta~) = (" << p.beta << ", " << p.beta_t << ")"
               << "  x ~ z^" << p.x_order << ", y ~ z^" << p.y_order << "\n";
        }
        json s;
        s["D"] = a.locus.D.str();
        s["Dtilde"] = a.locus.Dtilde.str();
        s["S"] = a.locus.S.str();
        s["A"] = a.locus.A.str();
        s["branchpoints"] = json::array();
        for (const auto& b : a.locus.branchpoints) s["branchpoints"].push_back(ball_json(b));
        s["double_points"] = json::array();
        for (const auto& d : a.locus.double_points) s["double_points"].push_back(double_point_json(d));
        s["boundary_points"] = json::array();
        for (const auto& d : a.locus.boundary_points) s["boundary_points"].push_back(double_point_json(d));
        s["regular"] = a.regularity.regular;
        s["regularity_failures"] = a.regularity.failures;
        pl << "branchpoints: " << a.locus.branchpoints.size() << "\n";
        for (const auto& b : a.locus.branchpoints) pl << "  x = " << b.str(12) << "\n";
        auto print_nodes = [&](const std::vector<DoublePoint>& v, const char* label) {
            for (const auto& d : v)
                pl << "  " << label << " (" << ball_text(d.b, d.b_exact) << ", " << ball_text(d.yb, d.yb_exact)
                   << ")  gamma = " << ball_text(d.gamma, d.gamma_exact) << "\n";
        };
        pl << "double points: " << a.locus.double_points.size() << "\n";
        print_nodes(a.locus.double_points, "node");
        if (!a.locus.boundary_points.empty()) {
            pl << "boundary singular points: " << a.locus.boundary_points.size() << "\n";
            print_nodes(a.locus.boundary_points, "boundary");
        }
        int g = genus(a.poly, a.locus);
        s["genus"] = g;
        r.report["singular"] = s;
        pl << "genus: " << g << "\n";
        lx << "\\mathfrak{g} = " << g << "\n";
        pl << "regular: " << (a.regularity.regular ? "yes" : "no") << "\n";
        for (const auto& f : a.regularity.failures) pl << "  " << f << "\n";
        if (!a.regularity.regular) code = 3;
    } catch (const IrregularCurve& e) {
        failure = e.what();
        code = 3;
    }
    if (!failure.empty()) {
        r.report["error"] = failure;
        pl << "irregular: " << failure << "\n";
    }
    r.exit_code = code;
    r.text = emit(r, cfg, pl.str(), lx.str());
    return r;
}

CommandResult cmd_kernel(const std::string& poly_text, const JobConfig& cfg) {
    cfg.validate();
    auto Pp = parse_poly(poly_text);
    CommandResult r;
    NewtonPolygon poly = convex_hull(Pp.support());
    r.report["curve"] = curve_json(poly_text, to_string(Pp));
    r.report["polygon"] = polygon_json(poly);
    std::ostringstream pl, lx;
    json k;
    k["template"] = "standard";
    std::vector<std::string> notes;

    if (has_parameters(Pp)) {
        if (poly.degenerate()) throw InputError("degenerate Newton polygon");
        auto Q = compute_Q(Pp, poly);
        if (cfg.ns) {
            auto N = ns_curve_Q(Pp, cfg.ns->first, cfg.ns->second);
            bool same = equal_mod_interior(N, Q, poly);
            k["ns"] = {{"n", cfg.ns->first},
                       {"s", cfg.ns->second},
                       {"Q", to_string(N)},
                       {"Q_terms", quad_terms_json(N)},
                       {"equal_mod_interior", same}};
            pl << "(n,s) formula Q = " << to_string(N) << "  (equal to Q mod interior: " << (same ? "yes" : "no")
               << ")\n";
            lx << "Q_{(n,s)} = " << to_latex(N) << "\n";
        }
        if (cfg.hyperelliptic) throw InputError("--hyperelliptic needs numeric coefficients");
        KernelExpression<ParamPoly> K = assemble_kernel(Pp, Q, QuadPoly<ParamPoly>{});
        if (cfg.shift_file) K = shift_kernel(K, load_kappa_file(*cfg.shift_file), poly);
        notes.push_back("symbolic coefficients: the double-point correction Qtilde is not computed (taken as 0)");
        k["Q"] = to_string(K.Q);
        k["Qtilde"] = to_string(K.Qtilde);
        k["Q_terms"] = quad_terms_json(K.Q);
        k["Qtilde_terms"] = quad_terms_json(K.Qtilde);
        pl << kernel_plain(K);
        lx << kernel_latex(K);
    } else {
        Analysis a = analyse(to_rational(Pp), cfg);
        require_regular(a);
        JobConfig c = cfg;
        c.mutate.reset();
        BuiltKernel b = build_kernel(a, c);
        const auto& K = b.K;
        if (cfg.ns) {
            auto N = ns_curve_Q(a.P, cfg.ns->first, cfg.ns->second);
            k["ns"] = {{"n", cfg.ns->first},
                       {"s", cfg.ns->second},
                       {"Q", to_string(N)},
                       {"Q_terms", quad_terms_json(N)},
                       {"equal_mod_interior", equal_mod_interior(N, K.Q, a.poly)}};
            pl << "(n,s) formula Q = " << to_string(N) << "  (equal to Q mod interior: "
               << (equal_mod_interior(N, K.Q, a.poly) ? "yes" : "no") << ")\n";
            lx << "Q_{(n,s)} = " << to_latex(N) << "\n";
        }
        if (cfg.hyperelliptic) {
            auto f = hyperelliptic_rhs(a.P);
            if (!f) throw InputError("not hyperelliptic-normalizable: P is not of the form a*y^2 + g(x)");
            auto H = hyperelliptic_kernel(*f);
            auto HQ = hyperelliptic_Q(*f);
            bool same = equal_mod_interior(HQ, K.Q, a.poly);
            k["hyperelliptic"] = {{"form", H.str()},
                                  {"latex", hyperelliptic_latex(H)},
                                  {"Q_terms", quad_terms_json(HQ)},
                                  {"equal_mod_interior", same}};
            pl << "hyperelliptic closed form: B = " << H.str() << "  (Q equal mod interior: " << (same ? "yes" : "no")
               << ")\n";
            lx << hyperelliptic_latex(H) << "\n";
        }
        k["Q"] = to_string(K.Q);
        k["Qtilde"] = to_string(K.Qtilde);
        k["Q_terms"] = quad_terms_json(K.Q);
        k["Qtilde_terms"] = quad_terms_json(K.Qtilde);
        if (auto S = simplify_hyperelliptic(K)) {
            k["simplified"] = S->str();
            pl << "simplified: B = " << S->str() << "\n";
            lx << "\\text{simplified: }" << hyperelliptic_latex(*S) << "\n";
        }
        pl << kernel_plain(K);
        lx << kernel_latex(K);
    }
    k["notes"] = notes;
    for (const auto& n : notes) pl << "note: " << n << "\n";
    r.report["kernel"] = k;
    r.text = emit(r, cfg, pl.str(), lx.str());
    return r;
}

CommandResult cmd_verify(const std::string& poly_text, const JobConfig& cfg) {
    cfg.validate();
    auto P = rational_curve(parse_poly(poly_text), "verify");
    Analysis a = analyse(P, cfg);
    require_regular(a);
    BuiltKernel b = build_kernel(a, cfg);
    const auto& K = b.K;
    CheckConfig cc = cfg.check_config();

    CommandResult r;
    r.report["curve"] = curve_json(poly_text, to_string(P));
    r.report["polygon"] = polygon_json(a.poly);
    r.report["kernel"] = {{"template", "standard"},
                          {"Q", to_string(K.Q)},
                          {"Qtilde", to_string(K.Qtilde)},
                          {"Q_terms", quad_terms_json(K.Q)},
                          {"Qtilde_terms", quad_terms_json(K.Qtilde)}};
    if (b.dropped) r.report["kernel"]["mutation"] = {{"kind", "drop-term"}, {"dropped", quad_key_str(*b.dropped)}};
    json checks = json::array();
    std::ostringstream pl;
    bool all = true;
    auto record = [&](json c) {
        bool ok = c["pass"].get<bool>();
        all = all && ok;
        pl << (ok ? "PASS " : "FAIL ") << c["name"].get<std::string>();
        if (c.contains("detail")) pl << "  " << c["detail"].get<std::string>();
        pl << "\n";
        checks.push_back(std::move(c));
    };

    record({{"name", "symmetry"}, {"pass", K.Q.is_symmetric() && K.Qtilde.is_symmetric()}, {"exact", true}});
    bool integral_input = true;
    for (const auto& [key, c] : P.terms()) integral_input = integral_input && c.get_den() == 1;
    if (integral_input)
        record({{"name", "ring_closure"}, {"pass", b.Q0.is_integral()}, {"exact", true},
                {"detail", "Q has integer coefficients"}});

    auto punct = enumerate_punctures(P, a.poly, cc.precision);
    r.report["punctures"] = json::array();
    for (const auto& p : punct) r.report["punctures"].push_back(puncture_json(p));
    CurveSampler sampler(P, cc.seed + 1, cc.precision, cc.retries);

    for (int t = 0; t < 3; ++t) {
        auto d = check_diagonal(K, sampler.next(), cc);
        std::ostringstream det;
        det << "x0 = " << d.point.x.get_str() << "  constant term = " << d.constant_term.str(15)
            << "  log2|c-1| <= " << d.deviation_log2;
        record({{"name", "diagonal"},
                {"x0", d.point.x.get_str()},
                {"y0", ball_json(d.point.y)},
                {"constant_term", ball_json(d.constant_term)},
                {"deviation_log2", finite_or_null(d.deviation_log2)},
                {"pass", d.pass},
                {"detail", det.str()}});
    }

    std::vector<CurvePoint> seconds;
    for (int t = 0; t < cc.second_points; ++t)
        seconds.push_back(sampler.next([&](const CurvePoint& q) { return generic_for_punctures(q, punct); }));
    for (const auto& p : punct) {
        bool ok = true;
        int valuation = std::numeric_limits<int>::max(), order_used = 0, pole = 0;
        double residual = -std::numeric_limits<double>::infinity();
        for (const auto& q : seconds) {
            auto v = check_puncture_regular(K, p, q, cc);
            ok = ok && v.pass;
            valuation = std::min(valuation, v.valuation);
            order_used = std::max(order_used, v.order_used);
            pole = std::max(pole, v.pole_order);
            residual = std::max(residual, v.residual_log2);
        }
        std::ostringstream det;
        det << "#" << p.id << " " << to_string(p.segment.from) << "->" << to_string(p.segment.to) << "  valuation >= "
            << valuation;
        if (pole) det << "  pole of order " << pole;
        record({{"name", "puncture"},
                {"puncture", p.id},
                {"valuation", valuation},
                {"pole_order", pole},
                {"residual_log2", finite_or_null(residual)},
                {"order_used", order_used},
                {"second_points", seconds.size()},
                {"pass", ok},
                {"detail", det.str()}});
    }

    auto nodes = check_node_cancellation(K, a.locus, sampler, cc);
    if (nodes.empty()) record({{"name", "node_cancellation"}, {"pass", true}, {"detail", "no torus double points"}});
    for (const auto& n : nodes) {
        std::ostringstream det;
        det << "b = " << n.b.str(12) << "  log2 residual <= " << n.residual_log2;
        if (!n.torus) det << "  (boundary point)";
        if (!n.evaluable) det << "  (template singular on an axis; skipped)";
        record({{"name", "node_cancellation"},
                {"b", ball_json(n.b)},
                {"y_b", ball_json(n.yb)},
                {"torus", n.torus},
                {"evaluable", n.evaluable},
                {"residual_log2", finite_or_null(n.residual_log2)},
                {"pass", n.pass},
                {"detail", det.str()}});
    }

    r.report["verify"] = {{"checks", checks},
                          {"pass", all},
                          {"config", {{"precision", cc.precision}, {"order", cc.order}, {"tol_log2", cc.tol_exp},
                                      {"seed", cc.seed}}}};
    r.exit_code = all ? 0 : 1;
    std::string head = "curve: " + to_string(P) + "\nQ = " + to_string(K.Q) + "\nQtilde = " + to_string(K.Qtilde) + "\n";
    if (b.dropped) head += "mutation: dropped Q term " + quad_key_str(*b.dropped) + "\n";
    std::string tail = std::string("verdict: ") + (all ? "PASS" : "FAIL") + "\n";
    r.text = emit(r, cfg, head + pl.str() + tail, head + pl.str() + tail);
    return r;
}

CommandResult cmd_basis(const std::string& poly_text, const JobConfig& cfg) {
    cfg.validate();
    auto P = rational_curve(parse_poly(poly_text), "basis");
    Analysis a = analyse(P, cfg);
    require_regular(a);
    auto piv = choose_pivot_set(a.poly, a.locus);
    auto forms = holomorphic_basis(a.poly, a.locus, piv);
    auto punct = enumerate_punctures(P, a.poly, cfg.precision);
    CheckConfig cc = cfg.check_config();
    CommandResult r;
    r.report["curve"] = curve_json(poly_text, to_string(P));
    r.report["polygon"] = polygon_json(a.poly);
    auto Py = partial_derivative(P, Var::Y);
    json list = json::array();
    std::ostringstream pl, lx;
    bool all = true;
    for (const auto& f : forms) {
        bool ok = true;
        int worst = 0;
        for (const auto& p : punct) {
            auto v = check_holomorphic(P, f.numerator, p, cc);
            ok = ok && v.pass;
            worst = std::max(worst, v.pole_order);
        }
        all = all && ok;
        list.push_back({{"label", point_json(f.label)},
                        {"numerator", to_string(f.numerator)},
                        {"numerator_terms", poly_terms_json(f.numerator)},
                        {"holomorphic", ok},
                        {"max_pole_order", worst}});
        pl << to_string(f.numerator) << "  [" << (ok ? "holomorphic" : "POLE") << "]\n";
        lx << "\\frac{" << to_latex(f.numerator) << "}{" << to_latex(Py) << "}\\,dx\n";
    }
    int g = genus(a.poly, a.locus);
    r.report["basis"] = {{"P_y", to_string(Py)}, {"forms", list}, {"genus", g}, {"pass", all}};
    std::string head = "curve: " + to_string(P) + "\ngenus: " + std::to_string(g) + "\nforms: numerator dx / (" +
                       to_string(Py) + ")\n";
    if (forms.empty()) head += "(no holomorphic forms)\n";
    r.exit_code = all ? 0 : 1;
    r.text = emit(r, cfg, head + pl.str(), lx.str());
    return r;
}

CommandResult cmd_render(const std::string& poly_text, const JobConfig& cfg) {
    cfg.validate();
    auto Pp = parse_poly(poly_text);
    CommandResult r;
    NewtonPolygon poly = convex_hull(Pp.support());
    r.report["curve"] = curve_json(poly_text, to_string(Pp));
    r.report["polygon"] = polygon_json(poly);
    std::string svg = render_svg(poly);
    r.report["svg"] = svg;
    r.text = cfg.format == OutputFormat::Json ? r.report.dump(2) + "\n" : svg;
    return r;
}

}  // namespace curveb
