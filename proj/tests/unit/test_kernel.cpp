#include <random>

#include "corpus.hpp"
#include "curveb/kernel.hpp"
#include "curveb/unipoly.hpp"
#include "doctest.h"

using namespace curveb;

namespace {

LaurentPoly2<Rational> P2(const std::string& s) { return to_rational(parse_poly(s)); }
QuadPoly<Rational> Q4(const std::string& s) { return to_rational(parse_quad(s)); }
QuadPoly<Rational> Qof(const LaurentPoly2<Rational>& P, SegmentMode m = SegmentMode::Half) {
    return compute_Q(P, convex_hull(P.support()), m);
}
UniPoly U(std::vector<long> c) {
    std::vector<Rational> r;
    for (long v : c) r.emplace_back(v);
    return UniPoly(r);
}

// Random (n,s) curve y^n - x^s - sum_{n i + s j < n s} c_ij x^i y^j.
LaurentPoly2<Rational> random_ns(std::mt19937_64& rng, int n, int s) {
    std::uniform_int_distribution<int> c(-9, 9), keep(0, 2);
    auto P = LaurentPoly2<Rational>::monomial(0, n, Rational(1));
    P.add_term(s, 0, Rational(-1));
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < n; ++j)
            if (n * i + s * j < n * s && keep(rng)) P.add_term(i, j, Rational(c(rng)));
    if (P.coeff(0, 0) == 0) P.add_term(0, 0, Rational(1 + keep(rng)));
    return P;
}

}  // namespace

TEST_CASE("Q examples") {
    CHECK(Qof(P2("y^2-x^2+1")) == Q4("-1"));
    CHECK(Qof(P2("y-x")).is_zero());
    CHECK(Qof(P2("y^2-x^3-x^2")) == Q4("-x - x' - 1"));
    auto P = parse_poly("y^4 - x^3 - P03*y^3 - P21*x^2*y - P20*x^2 - P11*x*y - P10*x - P02*y^2 - P01*y - P00");
    auto Q = compute_Q(P, convex_hull(P.support()));
    auto want = parse_quad("-(x*y^2 + x'*y'^2) - 2*(x*y*y' + y*x'*y') - 2*(y^2*x' + x*y'^2)");
    for (const auto& [k, c] : want.terms()) CHECK(Q.coeff(k) == c);
    CHECK(Q.is_symmetric());
}

TEST_CASE("segment modes agree and Q is symmetric and integral on random supports") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 100; ++t) {
        auto P = testing::random_curve(rng);
        auto a = Qof(P, SegmentMode::Half), b = Qof(P, SegmentMode::UnorderedPairs);
        CHECK(a == b);
        CHECK(a.is_symmetric());
        CHECK(a.is_integral());
    }
}

TEST_CASE("invariance under x -> 1/x and y -> 1/y") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 60; ++t) {
        auto P = testing::random_curve(rng, 8);
        auto Q = Qof(P);
        QuadPoly<Rational> wx, wy;
        for (const auto& [k, c] : Q.terms()) {
            wx.add_term({-k[0] - 2, k[1], -k[2] - 2, k[3]}, c);
            wy.add_term({k[0], -k[1] - 2, k[2], -k[3] - 2}, c);
        }
        CHECK(Qof(P.inverted(true, false)) == wx);
        CHECK(Qof(P.inverted(false, true)) == wy);
    }
}

TEST_CASE("assemble and shift") {
    auto P = P2("y^2-x^2+1");
    auto K = assemble_kernel(P, Q4("-1"), QuadPoly<Rational>{});
    CHECK(K.total() == Q4("-1"));
    CHECK_THROWS_WITH_AS(assemble_kernel(P, Q4("x*y'"), QuadPoly<Rational>{}), doctest::Contains("symmetry violated"),
                         InputError);
    auto poly = convex_hull(P.support());
    CHECK(shift_kernel(K, KappaShift<Rational>{}, poly).Q == K.Q);
    KappaShift<Rational> bad{{{{1, 1}, {1, 1}}, Rational(1)}};
    CHECK_THROWS_AS(shift_kernel(K, bad, poly), InputError);

    auto G = P2("y^2-x^5-1");
    auto gpoly = convex_hull(G.support());
    auto KG = assemble_kernel(G, compute_Q(G, gpoly), QuadPoly<Rational>{});
    auto S = shift_kernel(KG, bad, gpoly);
    CHECK(S.Q - KG.Q == Q4("-1"));
    KappaShift<Rational> asym{{{{1, 1}, {2, 1}}, Rational(1)}};
    CHECK_THROWS_AS(shift_kernel(KG, asym, gpoly), InputError);
    KappaShift<Rational> sym{{{{1, 1}, {2, 1}}, Rational(2)}, {{{2, 1}, {1, 1}}, Rational(2)}};
    CHECK(shift_kernel(KG, sym, gpoly).Q - KG.Q == Q4("-2*x - 2*x'"));
}

TEST_CASE("equal_mod_interior examples") {
    auto g0 = convex_hull(P2("y^2-x^2+1").support());
    CHECK(equal_mod_interior(Q4("x+x'"), Q4("x+x'"), g0));
    CHECK(!equal_mod_interior(Q4("1"), Q4("0"), g0));
    auto g2 = convex_hull(P2("y^2-x^5-1").support());
    CHECK(equal_mod_interior(Q4("1"), Q4("0"), g2));
    CHECK(equal_mod_interior(Q4("x*x'"), Q4("0"), g2));
    CHECK(!equal_mod_interior(Q4("x^2"), Q4("0"), g2));
}

TEST_CASE("hyperelliptic closed form") {
    auto sp = poly_sqrt_part(U({-1, 0, 1}));
    CHECK(sp.U == U({0, 1}));
    CHECK(sp.V == U({-1}));
    auto sp2 = poly_sqrt_part(U({0, 0, 2, 0, 1}));
    CHECK(sp2.U == U({1, 0, 1}));
    CHECK(sp2.V == U({-1}));
    CHECK_THROWS_WITH_AS(poly_sqrt_part(U({0, 0, 0, 1})), doctest::Contains("not hyperelliptic-normalizable"), InputError);
    CHECK_THROWS_AS(poly_sqrt_part(U({0, 0, 2})), InputError);

    CHECK(hyperelliptic_kernel(U({-1, 0, 1})).str() == "(y*y' + x*x' - 1)/(2*y*y'*(x - x')^2) dx dx'");
    CHECK(hyperelliptic_kernel(U({-1, 0, 0, 0, 0, 0, 1})).str() == "(y*y' + x^3*x'^3 - 1)/(2*y*y'*(x - x')^2) dx dx'");
    CHECK(hyperelliptic_kernel(U({0, 0, 2, 0, 1})).R == Q4("x^2*x'^2 + x^2 + x'^2"));

    auto P = P2("y^2-x^2+1");
    auto S = simplify_hyperelliptic(assemble_kernel(P, Qof(P), QuadPoly<Rational>{}));
    REQUIRE(S);
    CHECK(*S == hyperelliptic_kernel(U({-1, 0, 1})));
    CHECK(hyperelliptic_rhs(P2("3*y^2 - 6*x^4 + 3")) == U({-1, 0, 0, 0, 2}));
    CHECK(!hyperelliptic_rhs(P2("y^2 - x*y - 1")));
}

TEST_CASE("hyperelliptic consistency on random squarefree f") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> c(-9, 9), deg(1, 4);
    int tested = 0;
    while (tested < 40) {
        int d = 2 * deg(rng);
        std::vector<long> co;
        for (int k = 0; k < d; ++k) co.push_back(c(rng));
        int r = 1 + std::abs(c(rng)) % 3;
        co.push_back(r * r);
        UniPoly f = U(co);
        if (f.coeff(0) == 0 || univariate_gcd(f, f.derivative()).degree() > 0) continue;
        LaurentPoly2<Rational> P = LaurentPoly2<Rational>::monomial(0, 2, Rational(1));
        for (int k = 0; k <= f.degree(); ++k) P.add_term(k, 0, -f.coeff(k));
        CHECK(equal_mod_interior(Qof(P), hyperelliptic_Q(f), convex_hull(P.support())));
        ++tested;
    }
}

TEST_CASE("(n,s) formula agrees with Q modulo interior") {
    std::mt19937_64 rng(31);
    for (auto [n, s] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}, {4, 3}, {2, 5}}) {
        for (int t = 0; t < 25; ++t) {
            auto P = random_ns(rng, n, s);
            auto poly = convex_hull(P.support());
            CHECK(equal_mod_interior(ns_curve_Q(P, n, s), compute_Q(P, poly), poly));
        }
    }
    CHECK(ns_curve_Q(P2("y^2-x^3"), 2, 3) == Q4("-x - x'"));
    CHECK(ns_curve_Q(P2("y^2-x^3-1"), 2, 3) == Q4("-x - x'"));
    CHECK_THROWS_AS(ns_curve_Q(P2("y^2-x^4"), 2, 4), InputError);
    CHECK_THROWS_AS(ns_curve_Q(P2("y^2-x^3+x^5"), 2, 3), InputError);
    auto Pp = parse_poly("y^4 - x^3 - P03*y^3 - P21*x^2*y - P20*x^2 - P11*x*y - P10*x - P02*y^2 - P01*y - P00");
    auto pp = convex_hull(Pp.support());
    CHECK(equal_mod_interior(ns_curve_Q(Pp, 4, 3), compute_Q(Pp, pp), pp));
}

TEST_CASE("mutation target is exterior on the x side") {
    auto P = P2("y^2-x^5+1");
    auto poly = convex_hull(P.support());
    auto Q = Qof(P);
    auto k = mutation_target(Q, poly);
    REQUIRE(k);
    CHECK(!poly.is_interior({(*k)[0] + 1, (*k)[1] + 1}));
    CHECK(!mutation_target(Qof(P2("y-x")), convex_hull(P2("y-x").support())));
}
