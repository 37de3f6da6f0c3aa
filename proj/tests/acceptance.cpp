// Acceptance runner: one PASS/FAIL line per criterion, tolerances and time limits pinned below.
// Usage: curveb_acceptance [N ...]   (no argument runs every criterion)
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "curveb/kernel.hpp"
#include "curveb/singular.hpp"
#include "curveb/verify.hpp"
#include "oracles.hpp"

using namespace curveb;

namespace {

constexpr mpfr_prec_t kPrecision = 256;
constexpr int kOrder = 24;
constexpr long kTolExp = -80;
constexpr long kDiagTolExp = -60;
constexpr int kCorpusSize = 100;
constexpr int kSecondPoints = 3;

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> info;
};

struct Criterion {
    int id;
    const char* title;
    double limit_s;
    std::function<Outcome()> run;
};

LaurentPoly2<Rational> P2(const std::string& s) { return to_rational(parse_poly(s)); }

CheckConfig check_config() {
    CheckConfig c;
    c.precision = kPrecision;
    c.order = kOrder;
    c.tol_exp = kTolExp;
    c.diag_tol_exp = kDiagTolExp;
    return c;
}

std::string fmt(double v) {
    if (!(v > -1e6)) return "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", std::min(v, 1e6));
    return buf;
}

// Full kernel: Q plus the double-point correction.
struct Built {
    NewtonPolygon poly;
    SingularLocus locus;
    RegularityReport regularity;
    KernelExpression<Rational> K;
};

Built build(const LaurentPoly2<Rational>& P) {
    Built b;
    b.poly = convex_hull(P.support());
    b.locus = locate_singular(P, kPrecision);
    b.regularity = check_regularity(P, b.poly, b.locus);
    auto Q = compute_Q(P, b.poly);
    QuadPoly<Rational> Qt;
    if (b.regularity.regular) Qt = compute_Qtilde(P, b.poly, Q, b.locus, choose_pivot_set(b.poly, b.locus), 1);
    b.K = assemble_kernel(P, Q, Qt);
    return b;
}

// Number of failing punctures over kSecondPoints generic second points.
int failing_punctures(const LaurentPoly2<Rational>& P, const KernelExpression<Rational>& K,
                      const std::vector<Puncture>& punct, const CheckConfig& cfg, unsigned long long seed) {
    CurveSampler s(P, seed, cfg.precision, cfg.retries);
    std::vector<CurvePoint> seconds;
    for (int t = 0; t < kSecondPoints; ++t)
        seconds.push_back(s.next([&](const CurvePoint& q) { return generic_for_punctures(q, punct); }));
    int fails = 0;
    for (const auto& p : punct) {
        bool ok = true;
        for (const auto& q : seconds) ok = ok && check_puncture_regular(K, p, q, cfg).pass;
        fails += !ok;
    }
    return fails;
}

Outcome c1_circle() {
    Outcome o;
    auto P = P2("y^2 - x^2 + 1");
    auto poly = convex_hull(P.support());
    auto Q = compute_Q(P, poly);
    auto K = assemble_kernel(P, Q, QuadPoly<Rational>{});
    auto simp = simplify_hyperelliptic(K);
    const std::string want = "(y*y' + x*x' - 1)/(2*y*y'*(x - x')^2) dx dx'";
    bool q_ok = Q == to_rational(parse_quad("-1"));
    bool s_ok = simp && simp->str() == want;
    o.pass = q_ok && s_ok;
    o.detail = "Q = " + to_string(Q) + "; simplified = " + (simp ? simp->str() : std::string("<none>"));
    return o;
}

Outcome c2_hyperelliptic() {
    Outcome o;
    std::vector<std::string> parts;
    for (const char* s : {"y^2 - x^2 + 1", "y^2 - x^6 + 1"}) {
        auto P = P2(s);
        auto poly = convex_hull(P.support());
        auto f = hyperelliptic_rhs(P);
        bool ok = f && equal_mod_interior(compute_Q(P, poly), hyperelliptic_Q(*f), poly);
        o.pass = o.pass && ok;
        parts.push_back(std::string(s) + (ok ? ": equal" : ": differ"));
    }
    o.detail = parts[0] + "; " + parts[1];
    return o;
}

Outcome c3_ns43() {
    Outcome o;
    auto P = parse_poly("y^4 - x^3 - P03*y^3 - P12*x*y^2 - P21*x^2*y - P02*y^2 - P11*x*y - P20*x^2"
                        " - P01*y - P10*x - P00");
    auto poly = convex_hull(P.support());
    auto Q = compute_Q(P, poly);
    auto ref = parse_quad(
        "-(x*y^2 + x'*y'^2) - 2*(x*y*y' + y*x'*y') - 2*(y^2*x' + x*y'^2) + P03*P20*(y + y') - 2*P20*y*y'"
        " + 2*P03*(x*x' + y*y') + P12*x*x' + P03*P21*y*y' + P02*P20");
    o.pass = equal_mod_interior(Q, ref, poly);
    auto diff = non_interior_part(Q - ref, poly);
    o.detail = o.pass ? "equal modulo interior monomials" : "non-interior residual compute_Q - reference = " +
                                                                 to_string(diff);
    auto ns = ns_curve_Q(P, 4, 3);
    o.info.push_back(std::string("corrected (n,s) formula vs compute_Q modulo interior: ") +
                     (equal_mod_interior(Q, ns, poly) ? "equal" : "differ"));
    o.info.push_back("compute_Q non-interior part = " + to_string(non_interior_part(Q, poly)));
    return o;
}

Outcome c4_symmetry() {
    Outcome o;
    int asym = 0, nonint = 0;
    for (const auto& P : testing::corpus(kCorpusSize)) {
        auto Q = compute_Q(P, convex_hull(P.support()));
        asym += !Q.is_symmetric();
        nonint += !Q.is_integral();
    }
    o.pass = asym == 0 && nonint == 0;
    o.detail = std::to_string(kCorpusSize) + " curves; asymmetric " + std::to_string(asym) + ", non-integral " +
               std::to_string(nonint);
    return o;
}

Outcome c5_punctures() {
    Outcome o;
    auto cfg = check_config();
    int regular = 0, excluded = 0, bad = 0, no_target = 0, mutation_missed = 0, exhausted = 0;
    long checks = 0;
    int idx = 0;
    for (const auto& P : testing::corpus(kCorpusSize)) {
        ++idx;
        try {
            Built b = build(P);
            if (!b.regularity.regular) {
                ++excluded;
                continue;
            }
            ++regular;
            auto punct = enumerate_punctures(P, b.poly, kPrecision);
            checks += static_cast<long>(punct.size()) * kSecondPoints;
            int f = failing_punctures(P, b.K, punct, cfg, 1000 + idx);
            if (f) {
                ++bad;
                o.info.push_back("curve #" + std::to_string(idx) + " " + to_string(P) + ": " + std::to_string(f) +
                                 " failing punctures");
            }
            auto target = mutation_target(b.K.Q, b.poly);
            if (!target) {
                // Every term is interior on both sides; dropping one adds a product of holomorphic forms.
                ++no_target;
                std::string what = "Q = 0, nothing to drop";
                if (!b.K.Q.is_zero()) {
                    auto M = b.K;
                    M.Q.erase(M.Q.terms().begin()->first);
                    what = "all " + std::to_string(b.K.Q.size()) +
                           " terms interior x interior; dropping the first gives " +
                           std::to_string(failing_punctures(P, M, punct, cfg, 1000 + idx)) + " failing punctures";
                }
                o.info.push_back("curve #" + std::to_string(idx) + ": " + what);
                continue;
            }
            auto M = b.K;
            M.Q.erase(*target);
            if (failing_punctures(P, M, punct, cfg, 1000 + idx) == 0) {
                ++mutation_missed;
                o.info.push_back("curve #" + std::to_string(idx) + ": mutation not detected");
            }
        } catch (const IrregularCurve&) {
            ++excluded;
        } catch (const PrecisionExhausted& e) {
            ++exhausted;
            o.info.push_back("curve #" + std::to_string(idx) + ": precision exhausted (" + e.what() + ")");
        }
    }
    o.pass = regular > 0 && bad == 0 && mutation_missed == 0 && no_target == 0 && exhausted == 0;
    o.detail = std::to_string(regular) + " regular curves (" + std::to_string(excluded) + " excluded), " +
               std::to_string(checks) + " puncture checks, failing curves " + std::to_string(bad) +
               ", undetected mutations " + std::to_string(mutation_missed) + ", curves without an exterior term " +
               std::to_string(no_target) + ", precision exhausted " +
               std::to_string(exhausted);
    return o;
}

Outcome c6_diagonal() {
    Outcome o;
    auto cfg = check_config();
    int points = 0, fails = 0, idx = 0;
    double worst = -1e300;
    for (const auto& P : testing::corpus(kCorpusSize)) {
        ++idx;
        auto poly = convex_hull(P.support());
        auto K = assemble_kernel(P, compute_Q(P, poly), QuadPoly<Rational>{});
        try {
            CurveSampler s(P, 500 + idx, kPrecision, cfg.retries);
            for (int t = 0; t < 3; ++t) {
                auto d = check_diagonal(K, s.next(), cfg);
                ++points;
                fails += !d.pass;
                worst = std::max(worst, d.deviation_log2);
            }
        } catch (const PrecisionExhausted& e) {
            ++fails;
            o.info.push_back("curve #" + std::to_string(idx) + ": " + e.what());
        }
    }
    o.pass = fails == 0 && points == 3 * kCorpusSize;
    o.detail = std::to_string(points) + " points, failures " + std::to_string(fails) + ", worst log2|c-1| <= " +
               fmt(worst) + " (tol 2^" + std::to_string(kDiagTolExp) + ")";
    return o;
}

std::string node_summary(const std::vector<NodeReport>& r) {
    bool ok = !r.empty();
    double worst = -1e300;
    for (const auto& n : r) {
        ok = ok && n.pass;
        worst = std::max(worst, n.residual_log2);
    }
    return std::string(ok ? "pass" : "fail") + " (log2 residual <= " + fmt(worst) + ")";
}

bool all_pass(const std::vector<NodeReport>& r) {
    for (const auto& n : r)
        if (!n.pass) return false;
    return !r.empty();
}

Outcome c7_node() {
    Outcome o;
    auto cfg = check_config();
    auto P = P2("y^2 - x^3 - x^2");
    Built b = build(P);
    std::vector<DoublePoint> all = b.locus.double_points;
    all.insert(all.end(), b.locus.boundary_points.begin(), b.locus.boundary_points.end());
    bool gamma_ok = all.size() == 1 && all[0].gamma_exact && *all[0].gamma_exact == 4;
    CurveSampler s1(P, 7, kPrecision), s2(P, 7, kPrecision);
    auto with = check_node_cancellation(b.K, b.locus, s1, cfg);
    auto without = check_node_cancellation(assemble_kernel(P, b.K.Q, QuadPoly<Rational>{}), b.locus, s2, cfg);
    o.pass = gamma_ok && all_pass(with) && !all_pass(without);
    o.detail = "gamma = " + (gamma_ok ? std::string("4") : std::string("?")) + ", |interior| = " +
               std::to_string(b.poly.interior.size()) + ", Q~ = " + to_string(b.K.Qtilde) + ", with Q~ " +
               node_summary(with) + ", without Q~ " + node_summary(without);
    if (!all.empty() && !all[0].torus)
        o.info.push_back("the node (0,0) is a vertex of the Newton polygon: it is resolved by two punctures and "
                         "needs no correction, so both kernels coincide");
    {
        auto Q5 = to_rational(parse_quad("5"));
        auto K5 = assemble_kernel(P, b.K.Q, Q5);
        auto punct = enumerate_punctures(P, b.poly, kPrecision);
        int f = failing_punctures(P, K5, punct, cfg, 11);
        o.info.push_back("constant correction 5 = -(Q(0,0;0,0) - gamma): " + std::to_string(f) +
                         " failing punctures; uncorrected kernel: " +
                         std::to_string(failing_punctures(P, b.K, punct, cfg, 11)));
    }
    for (const char* s : {"(y-3)^2 - (x-2)^3 - (x-2)^2", "(y-1)^2 - (x-2)^2*(x^3+x+3)"}) {
        auto Pn = P2(s);
        Built bn = build(Pn);
        CurveSampler a(Pn, 7, kPrecision), c(Pn, 7, kPrecision);
        auto w = check_node_cancellation(bn.K, bn.locus, a, cfg);
        auto wo = check_node_cancellation(assemble_kernel(Pn, bn.K.Q, QuadPoly<Rational>{}), bn.locus, c, cfg);
        std::string g = bn.locus.double_points.empty() || !bn.locus.double_points[0].gamma_exact
                            ? "?"
                            : bn.locus.double_points[0].gamma_exact->get_str();
        o.info.push_back(std::string(s) + ": torus nodes " + std::to_string(bn.locus.double_points.size()) +
                         ", gamma = " + g + ", Q~ = " + to_string(bn.K.Qtilde) + ", with Q~ " + node_summary(w) +
                         ", without Q~ " + node_summary(wo));
    }
    return o;
}

Outcome c8_genus() {
    Outcome o;
    std::vector<std::pair<const char*, int>> table = {
        {"y^2 - x^2 + 1", 0}, {"y - x", 0}, {"y^2 - x^5 + 1", 2}, {"y^4 - x^3 - 1", 3}, {"y^2 - x^3 - x^2", 0}};
    std::string d;
    for (const auto& [s, want] : table) {
        auto P = P2(s);
        auto poly = convex_hull(P.support());
        auto locus = locate_singular(P, kPrecision);
        int g = genus(poly, locus);
        o.pass = o.pass && g == want;
        d += std::string(d.empty() ? "" : ", ") + s + " -> " + std::to_string(g);
        auto reg = check_regularity(P, poly, locus);
        if (!reg.regular)
            o.info.push_back(std::string(s) + " is flagged irregular: " + reg.failures.front());
    }
    o.detail = d;
    return o;
}

Outcome c9_basis() {
    Outcome o;
    auto cfg = check_config();
    auto P = P2("y^2 - x^5 + 1");
    Built b = build(P);
    auto basis = holomorphic_basis(b.poly, b.locus, choose_pivot_set(b.poly, b.locus));
    auto punct = enumerate_punctures(P, b.poly, kPrecision);
    std::string names;
    for (const auto& f : basis) {
        names += (names.empty() ? "" : ", ") + to_string(f.numerator);
        for (const auto& p : punct) o.pass = o.pass && check_holomorphic(P, f.numerator, p, cfg).pass;
    }
    o.pass = o.pass && basis.size() == 2;
    int controls = 0, detected = 0;
    for (int u = -1; u <= 6; ++u)
        for (int v = 0; v <= 3; ++v) {
            if (b.poly.is_interior({u, v})) continue;
            ++controls;
            auto m = LaurentPoly2<Rational>::monomial(u - 1, v - 1, Rational(1));
            int poles = 0;
            for (const auto& p : punct) poles += check_holomorphic(P, m, p, cfg).pole_order > 0;
            detected += poles > 0;
        }
    o.pass = o.pass && detected == controls;
    o.detail = "basis {" + names + "} dx/P_y holomorphic at " + std::to_string(punct.size()) +
               " punctures; exterior controls with poles " + std::to_string(detected) + "/" +
               std::to_string(controls);
    return o;
}

Outcome c10_properties() {
    Outcome o;
    int pick_fail = 0, tri_fail = 0, syl_fail = 0;
    std::mt19937_64 rng(101);
    for (int t = 0; t < 100; ++t) {
        auto pts = testing::random_points(rng, 3 + t % 8, -6, 6);
        auto poly = convex_hull(pts);
        std::set<LatticePoint> interior;
        long boundary = 0;
        bool ok = true;
        for (int i = -7; i <= 7; ++i)
            for (int j = -7; j <= 7; ++j) {
                PointClass want = testing::brute_class(pts, {i, j});
                ok = ok && point_class(poly, i, j) == want;
                if (want == PointClass::Interior) interior.insert({i, j});
                if (want == PointClass::Boundary) ++boundary;
            }
        ok = ok && poly.interior == interior;
        if (poly.shape == HullShape::Polygon)
            ok = ok && boundary_lattice_count(poly) == boundary &&
                 twice_area(poly) == 2 * static_cast<long>(interior.size()) + boundary - 2 &&
                 static_cast<long>(poly.segments.size()) == boundary;
        pick_fail += !ok;
    }
    std::uniform_int_distribution<int> d(-10, 10);
    for (int t = 0; t < 100; ++t) {
        LatticePoint a{d(rng), d(rng)}, b{d(rng), d(rng)}, c{d(rng), d(rng)};
        tri_fail += triangle_lattice_points(a, b, c) != testing::brute_triangle(a, b, c);
    }
    std::uniform_int_distribution<int> co(-6, 6), deg(1, 5);
    auto rand_uni = [&](int n) {
        std::vector<Rational> c;
        for (int k = 0; k < n; ++k) c.emplace_back(co(rng));
        c.emplace_back(co(rng) | 1);
        return UniPoly(c);
    };
    for (int t = 0; t < 100; ++t) {
        auto f = rand_uni(deg(rng)), g = rand_uni(deg(rng)), h = rand_uni(1);
        bool ok = resultant(f, g) == testing::sylvester(f, g) && resultant(f * h, g * h) == 0 &&
                  resultant(f * h, g) == resultant(f, g) * resultant(h, g);
        syl_fail += !ok;
    }
    o.pass = pick_fail == 0 && tri_fail == 0 && syl_fail == 0;
    o.detail = "hull/Pick failures " + std::to_string(pick_fail) + "/100, triangle scan failures " +
               std::to_string(tri_fail) + "/100, Sylvester failures " + std::to_string(syl_fail) + "/100";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<Criterion> all = {
        {1, "circle golden kernel", 1, c1_circle},
        {2, "hyperelliptic consistency", 5, c2_hyperelliptic},
        {3, "(4,3) golden Q modulo interior", 10, c3_ns43},
        {4, "symmetry and ring closure", 60, c4_symmetry},
        {5, "puncture regularity and mutation control", 600, c5_punctures},
        {6, "diagonal normalization", 300, c6_diagonal},
        {7, "node correction on the nodal cubic", 30, c7_node},
        {8, "genus table", 5, c8_genus},
        {9, "holomorphic basis", 60, c9_basis},
        {10, "Pick and Sylvester property suites", 60, c10_properties},
    };
    std::vector<int> wanted;
    for (int k = 1; k < argc; ++k) wanted.push_back(std::stoi(argv[k]));
    int failures = 0;
    for (const auto& c : all) {
        if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = secs <= c.limit_s;
        bool ok = o.pass && in_time;
        failures += !ok;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs/%gs", secs, c.limit_s);
        std::printf("criterion %2d %s: %s [%s]%s: %s\n", c.id, ok ? "PASS" : "FAIL", c.title, timing,
                    in_time ? "" : " time limit exceeded", o.detail.c_str());
        for (const auto& line : o.info) std::printf("    %s\n", line.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
