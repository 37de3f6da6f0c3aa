#include "curveb/render.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <vector>

namespace curveb {

namespace {

std::string latex_identifier(const std::string& id) {
    size_t k = id.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(id[k - 1]))) --k;
    if (k == 0 || k == id.size()) return id;
    return id.substr(0, k) + "_{" + id.substr(k) + "}";
}

std::string latex_power(const std::string& base, int e) {
    if (e == 0) return "";
    if (e == 1) return base;
    if (base.back() == '\'') return "{" + base + "}^{" + std::to_string(e) + "}";
    return base + "^{" + std::to_string(e) + "}";
}

std::string latex_mono(const std::vector<std::pair<std::string, int>>& factors) {
    std::string s;
    for (const auto& [b, e] : factors) {
        std::string f = latex_power(b, e);
        if (f.empty()) continue;
        if (!s.empty()) s += " ";
        s += f;
    }
    return s;
}

std::string latex_rational(const Rational& a) {
    if (a.get_den() == 1) return a.get_num().get_str();
    return "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
}

void append_latex(std::string& out, const Rational& c, const std::string& params, const std::string& mono) {
    Rational a = abs(c);
    std::string tail = params;
    if (!mono.empty()) tail += (tail.empty() ? "" : " ") + mono;
    std::string body;
    if (tail.empty()) body = latex_rational(a);
    else if (a == 1) body = tail;
    else body = latex_rational(a) + " " + tail;
    if (out.empty()) out = (sgn(c) < 0 ? "-" : "") + body;
    else out += (sgn(c) < 0 ? " - " : " + ") + body;
}

void append_latex_coeff(std::string& out, const Rational& c, const std::string& mono) { append_latex(out, c, "", mono); }
void append_latex_coeff(std::string& out, const ParamPoly& c, const std::string& mono) {
    for (const auto& [m, q] : c.terms()) {
        std::vector<std::pair<std::string, int>> f;
        for (const auto& [name, e] : m) f.emplace_back(latex_identifier(name), e);
        append_latex(out, q, latex_mono(f), mono);
    }
}

std::string coef_string(const Rational& c) { return c.get_str(); }
std::string coef_string(const ParamPoly& c) { return c.str(); }

}  // namespace

template <CoefficientRing R>
std::string to_latex(const LaurentPoly2<R>& p) {
    std::vector<std::array<int, 2>> keys;
    for (const auto& [k, c] : p.terms()) keys.push_back({k.i, k.j});
    std::sort(keys.begin(), keys.end(), canonical_less<std::array<int, 2>>);
    std::string out;
    for (const auto& k : keys) append_latex_coeff(out, p.coeff(k[0], k[1]), latex_mono({{"x", k[0]}, {"y", k[1]}}));
    return out.empty() ? "0" : out;
}

template <CoefficientRing R>
std::string to_latex(const QuadPoly<R>& q) {
    std::vector<QuadKey> keys;
    for (const auto& [k, c] : q.terms()) keys.push_back(k);
    std::sort(keys.begin(), keys.end(), canonical_less<QuadKey>);
    std::string out;
    for (const auto& k : keys)
        append_latex_coeff(out, q.coeff(k), latex_mono({{"x", k[0]}, {"y", k[1]}, {"x'", k[2]}, {"y'", k[3]}}));
    return out.empty() ? "0" : out;
}

template <CoefficientRing R>
std::string kernel_plain(const KernelExpression<R>& K) {
    std::ostringstream s;
    s << "B = -[P(x,y')*P(x',y)/((x - x')^2*(y - y')^2) - Q(x,y;x',y') - Qtilde(x,y;x',y')]"
         " / (P_y(x,y)*P_y(x',y')) dx dx'\n";
    s << "P = " << to_string(K.P) << "\n";
    s << "P_y = " << to_string(partial_derivative(K.P, Var::Y)) << "\n";
    s << "Q = " << to_string(K.Q) << "\n";
    s << "Qtilde = " << to_string(K.Qtilde) << "\n";
    return s.str();
}

template <CoefficientRing R>
std::string kernel_latex(const KernelExpression<R>& K) {
    std::ostringstream s;
    s << "B(x,y;x',y') = -\\frac{\\frac{P(x,y')P(x',y)}{(x-x')^2(y-y')^2} - Q(x,y;x',y') - \\tilde Q(x,y;x',y')}"
         "{P_y(x,y)\\,P_y(x',y')}\\,dx\\,dx'\n";
    s << "P(x,y) = " << to_latex(K.P) << "\n";
    s << "P_y(x,y) = " << to_latex(partial_derivative(K.P, Var::Y)) << "\n";
    s << "Q(x,y;x',y') = " << to_latex(K.Q) << "\n";
    s << "\\tilde Q(x,y;x',y') = " << to_latex(K.Qtilde) << "\n";
    return s.str();
}

std::string hyperelliptic_latex(const HyperellipticForm& h) {
    std::string r = to_latex(h.R);
    std::string num = "y y'";
    if (r != "0") num += (r[0] == '-' ? " - " + r.substr(1) : " + " + r);
    return "B = \\frac{" + num + "}{2 y y' (x - x')^2}\\,dx\\,dx'";
}

template <CoefficientRing R>
json quad_terms_json(const QuadPoly<R>& q) {
    std::vector<QuadKey> keys;
    for (const auto& [k, c] : q.terms()) keys.push_back(k);
    std::sort(keys.begin(), keys.end(), canonical_less<QuadKey>);
    json a = json::array();
    for (const auto& k : keys) a.push_back({k[0], k[1], k[2], k[3], coef_string(q.coeff(k))});
    return a;
}

template <CoefficientRing R>
json poly_terms_json(const LaurentPoly2<R>& p) {
    std::vector<std::array<int, 2>> keys;
    for (const auto& [k, c] : p.terms()) keys.push_back({k.i, k.j});
    std::sort(keys.begin(), keys.end(), canonical_less<std::array<int, 2>>);
    json a = json::array();
    for (const auto& k : keys) a.push_back({k[0], k[1], coef_string(p.coeff(k[0], k[1]))});
    return a;
}

json point_json(const LatticePoint& p) { return json::array({p.i, p.j}); }

json ball_json(const ComplexBall& z, int digits) {
    char buf[512];
    json j;
    mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, z.re().get());
    j["re"] = buf;
    mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, z.im().get());
    j["im"] = buf;
    mpfr_snprintf(buf, sizeof buf, "%.3Re", z.rad().get());
    j["rad"] = buf;
    return j;
}

json polygon_json(const NewtonPolygon& poly) {
    json j;
    j["shape"] = poly.shape == HullShape::Polygon ? "polygon" : poly.shape == HullShape::Segment ? "segment" : "point";
    for (const char* k : {"support", "hull", "interior", "segments"}) j[k] = json::array();
    for (const auto& p : poly.support) j["support"].push_back(point_json(p));
    for (const auto& p : poly.hull) j["hull"].push_back(point_json(p));
    for (const auto& p : poly.interior) j["interior"].push_back(point_json(p));
    for (const auto& s : poly.segments)
        j["segments"].push_back({{"from", point_json(s.from)},
                                 {"to", point_json(s.to)},
                                 {"beta", s.beta},
                                 {"beta_tilde", s.beta_t},
                                 {"edge", s.edge},
                                 {"position", s.position}});
    j["twice_area"] = twice_area(poly);
    j["boundary_points"] = boundary_lattice_count(poly);
    return j;
}

std::string render_svg(const NewtonPolygon& poly) {
    int i0 = 0, i1 = 0, j0 = 0, j1 = 0;
    bool first = true;
    for (const auto& p : poly.support) {
        if (first) {
            i0 = i1 = p.i;
            j0 = j1 = p.j;
            first = false;
        }
        i0 = std::min(i0, p.i);
        i1 = std::max(i1, p.i);
        j0 = std::min(j0, p.j);
        j1 = std::max(j1, p.j);
    }
    --i0; --j0; ++i1; ++j1;
    const int cell = 48, margin = 24;
    const int w = (i1 - i0) * cell + 2 * margin, h = (j1 - j0) * cell + 2 * margin;
    auto X = [&](double i) { return margin + (i - i0) * cell; };
    auto Y = [&](double j) { return h - margin - (j - j0) * cell; };
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
      << " " << h << "\">\n";
    s << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" "
         "orient=\"auto-start-reverse\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#c0392b\"/></marker></defs>\n";
    s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int i = i0; i <= i1; ++i)
        for (int j = j0; j <= j1; ++j)
            s << "<circle cx=\"" << X(i) << "\" cy=\"" << Y(j) << "\" r=\"1.5\" fill=\"#bbb\"/>\n";
    if (i0 <= 0 && 0 <= i1)
        s << "<line x1=\"" << X(0) << "\" y1=\"" << Y(j0) << "\" x2=\"" << X(0) << "\" y2=\"" << Y(j1)
          << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    if (j0 <= 0 && 0 <= j1)
        s << "<line x1=\"" << X(i0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(i1) << "\" y2=\"" << Y(0)
          << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    if (poly.hull.size() >= 3) {
        s << "<polygon points=\"";
        for (const auto& p : poly.hull) s << X(p.i) << "," << Y(p.j) << " ";
        s << "\" fill=\"#eaf2fb\" stroke=\"#2c3e50\" stroke-width=\"1\"/>\n";
    }
    for (const auto& seg : poly.segments) {
        // Shorten slightly so arrowheads stay visible; offset the two sides of a flat hull.
        double ax = X(seg.from.i), ay = Y(seg.from.j), bx = X(seg.to.i), by = Y(seg.to.j);
        double dx = bx - ax, dy = by - ay, len = std::hypot(dx, dy);
        double ux = dx / len, uy = dy / len;
        double off = poly.shape == HullShape::Segment ? 4.0 : 0.0;
        ax += ux * 6 - uy * off; ay += uy * 6 + ux * off;
        bx -= ux * 6 + uy * off; by -= uy * 6 - ux * off;
        s << "<line x1=\"" << ax << "\" y1=\"" << ay << "\" x2=\"" << bx << "\" y2=\"" << by
          << "\" stroke=\"#c0392b\" stroke-width=\"2\" marker-end=\"url(#arrow)\"/>\n";
    }
    for (const auto& p : poly.interior)
        s << "<circle cx=\"" << X(p.i) << "\" cy=\"" << Y(p.j) << "\" r=\"6\" fill=\"#27ae60\"/>\n";
    for (const auto& p : poly.support)
        s << "<circle cx=\"" << X(p.i) << "\" cy=\"" << Y(p.j) << "\" r=\"5\" fill=\"#2c3e50\"/>\n";
    s << "</svg>\n";
    return s.str();
}

#define CURVEB_INSTANTIATE(R)                                          \
    template std::string to_latex(const LaurentPoly2<R>&);             \
    template std::string to_latex(const QuadPoly<R>&);                 \
    template std::string kernel_plain(const KernelExpression<R>&);     \
    template std::string kernel_latex(const KernelExpression<R>&);     \
    template json quad_terms_json(const QuadPoly<R>&);                 \
    template json poly_terms_json(const LaurentPoly2<R>&);

CURVEB_INSTANTIATE(Rational)
CURVEB_INSTANTIATE(ParamPoly)

}  // namespace curveb
