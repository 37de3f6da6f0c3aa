#include "curveb/kernel.hpp"
#include "curveb/roots.hpp"
#include "curveb/series.hpp"
#include "curveb/singular.hpp"
#include "doctest.h"

using namespace curveb;

namespace {

LaurentPoly2<Rational> P2(const std::string& s) { return to_rational(parse_poly(s)); }
UniPoly U(std::vector<long> c) {
    std::vector<Rational> r;
    for (long v : c) r.emplace_back(v);
    return UniPoly(r);
}
constexpr mpfr_prec_t kPrec = 256;

struct Run {
    LaurentPoly2<Rational> P;
    NewtonPolygon poly;
    SingularLocus L;
};
Run run(const std::string& s) {
    auto P = P2(s);
    auto poly = convex_hull(P.support());
    return {P, poly, locate_singular(P, kPrec)};
}

}  // namespace

TEST_CASE("locus of the circle") {
    auto r = run("y^2-x^2+1");
    CHECK(r.L.double_points.empty());
    REQUIRE(r.L.branchpoints.size() == 2);
    CHECK(r.L.D.monic() == U({-1, 0, 1}));
    CHECK(check_regularity(r.P, r.poly, r.L).regular);
    CHECK(genus(r.poly, r.L) == 0);
}

TEST_CASE("monomial factors do not change the locus") {
    auto base = run("y^2-x^2+1");
    for (const char* s : {"y^3-x^2*y+y", "x^2*y^2-x^4+x^2", "x^-1*y^-2*(y^2-x^2+1)"}) {
        auto r = run(s);
        CHECK(r.L.D.monic() == base.L.D.monic());
        CHECK(r.L.branchpoints.size() == 2);
        CHECK(r.L.double_points.empty());
        CHECK(check_regularity(r.P, r.poly, r.L).regular);
        CHECK(genus(r.poly, r.L) == 0);
        CurveSampler sampler(r.P, 3, kPrec);
        auto q = sampler.next();
        CHECK(evaluate(r.P, q.xb, q.y).contains_zero());
    }
}

TEST_CASE("locus of the line") {
    auto r = run("y-x");
    CHECK(r.L.branchpoints.empty());
    CHECK(r.L.double_points.empty());
    CHECK(genus(r.poly, r.L) == 0);
}

TEST_CASE("nodal cubic") {
    auto r = run("y^2-x^3-x^2");
    REQUIRE(r.L.boundary_points.size() == 1);
    const auto& b = r.L.boundary_points[0];
    REQUIRE(b.gamma_exact);
    CHECK(*b.gamma_exact == 4);
    REQUIRE(b.b_exact);
    CHECK(*b.b_exact == 0);
    CHECK(check_regularity(r.P, r.poly, r.L).regular);
    CHECK(genus(r.poly, r.L) == 0);
    auto piv = choose_pivot_set(r.poly, r.L);
    CHECK(piv.I.empty());
}

TEST_CASE("cusp is irregular") {
    auto P = P2("y^2-x^3");
    auto poly = convex_hull(P.support());
    bool irregular = false;
    try {
        auto L = locate_singular(P, kPrec);
        irregular = !check_regularity(P, poly, L).regular;
    } catch (const IrregularCurve&) {
        irregular = true;
    }
    CHECK(irregular);
}

TEST_CASE("genus-1 curve with a torus node") {
    auto r = run("(y-1)^2-(x-2)^2*(x^3+x+3)");
    REQUIRE(r.L.double_points.size() == 1);
    const auto& d = r.L.double_points[0];
    CHECK(*d.b_exact == 2);
    CHECK(*d.yb_exact == 1);
    CHECK(*d.gamma_exact == 52);
    CHECK(check_regularity(r.P, r.poly, r.L).regular);
    CHECK(genus(r.poly, r.L) == 1);
    // S has rational coefficients and its roots are common roots of D and D~.
    for (const auto& z : complex_roots(r.L.S, kPrec)) {
        CHECK(evaluate(r.L.D, z).contains_zero());
        CHECK(evaluate(r.L.Dtilde, z).contains_zero());
    }
    auto piv = choose_pivot_set(r.poly, r.L);
    REQUIRE(piv.I.size() == 1);
    CHECK(determinant(piv.B_I).certified_nonzero());
    auto Q = compute_Q(r.P, r.poly);
    auto Qt = compute_Qtilde(r.P, r.poly, Q, r.L, piv, 3);
    CHECK(Qt.is_symmetric());
    CHECK(Qt == to_rational(parse_quad("6 - 9*x - 9*x'")));
    // Independent of the sampling seed.
    CHECK(compute_Qtilde(r.P, r.poly, Q, r.L, piv, 99) == Qt);
    auto basis = holomorphic_basis(r.poly, r.L, piv);
    CHECK(static_cast<int>(basis.size()) == genus(r.poly, r.L));
    for (const auto& f : basis)
        for (const auto& n : r.L.double_points) CHECK(evaluate(f.numerator, n.b, n.yb).contains_zero());
}

TEST_CASE("hyperelliptic genus 2 basis") {
    auto r = run("y^2-x^5+1");
    CHECK(genus(r.poly, r.L) == 2);
    auto piv = choose_pivot_set(r.poly, r.L);
    auto basis = holomorphic_basis(r.poly, r.L, piv);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0].numerator == P2("1"));
    CHECK(basis[1].numerator == P2("x"));
}

TEST_CASE("no nodes gives zero correction") {
    auto r = run("y^3 - x^4 - 2*x*y - 5*y^2*x + 7");
    auto piv = choose_pivot_set(r.poly, r.L);
    CHECK(compute_Qtilde(r.P, r.poly, compute_Q(r.P, r.poly), r.L, piv, 1).is_zero());
}

TEST_CASE("regularity failures") {
    auto P = P2("y^4-x^3-1");
    auto L = locate_singular(P, kPrec);
    auto rep = check_regularity(P, convex_hull(P.support()), L);
    CHECK(!rep.regular);
    CHECK(genus(convex_hull(P.support()), L) == 3);
    // Repeated root on a boundary edge.
    auto E = P2("y^2 - 2*x*y + x^2 + 1");
    auto LE = locate_singular(E, kPrec);
    CHECK(!check_regularity(E, convex_hull(E.support()), LE).regular);
    CHECK_THROWS_AS(locate_singular(P2("x^2+1"), kPrec), InputError);
}

TEST_CASE("edge polynomial") {
    auto P = P2("y^2-x^2+1");
    auto poly = convex_hull(P.support());
    CHECK(edge_polynomial(P, poly, 0) == U({1, 0, 1}));
}

TEST_CASE("sampler produces certified curve points") {
    auto P = P2("y^3 - x^4 - 2*x*y - 5*y^2*x + 7");
    CurveSampler s(P, 5, kPrec);
    for (int k = 0; k < 5; ++k) {
        auto p = s.next();
        CHECK(evaluate(P, p.xb, p.y).contains_zero());
        CHECK(p.x != 0);
    }
}
