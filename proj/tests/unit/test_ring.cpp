#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "curveb/roots.hpp"
#include "curveb/series.hpp"
#include "curveb/unipoly.hpp"
#include "doctest.h"

using namespace curveb;
using testing::sylvester;

namespace {

LaurentPoly2<Rational> P2(const std::string& s) { return to_rational(parse_poly(s)); }
UniPoly U(std::vector<long> c) {
    std::vector<Rational> r;
    for (long v : c) r.emplace_back(v);
    return UniPoly(r);
}

LaurentPoly2<Rational> small_random(std::mt19937_64& rng, int lo = -2, int hi = 3) {
    std::uniform_int_distribution<int> n(1, 5), e(lo, hi), c(-5, 5);
    LaurentPoly2<Rational> p;
    for (int k = n(rng); k > 0; --k) p.add_term(e(rng), e(rng), Rational(c(rng)));
    return p;
}

QuadPoly<Rational> small_quad(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> n(1, 5), e(-2, 2), c(-5, 5);
    QuadPoly<Rational> q;
    for (int k = n(rng); k > 0; --k) q.add_term({e(rng), e(rng), e(rng), e(rng)}, Rational(c(rng)));
    return q;
}

UniPoly specialize_x(const LaurentPoly2<Rational>& f, const Rational& x0) {
    auto n = to_polynomial(f).p;
    std::vector<Rational> c(n.max_j() + 1);
    for (const auto& [k, v] : n.terms()) {
        Rational t = v;
        for (int e = 0; e < k.i; ++e) t *= x0;
        c[k.j] += t;
    }
    return UniPoly(c);
}

}  // namespace

TEST_CASE("parser examples") {
    auto a = P2("y^2 - x^2 + 1");
    CHECK(a.size() == 3);
    CHECK(a.coeff(0, 2) == 1);
    CHECK(a.coeff(2, 0) == -1);
    CHECK(a.coeff(0, 0) == 1);
    auto b = P2("x^-1*y + 2");
    CHECK(b.coeff(-1, 1) == 1);
    CHECK(b.coeff(0, 0) == 2);
    CHECK(P2("x^(-2) y 3/4") == LaurentPoly2<Rational>::monomial(-2, 1, Rational(3, 4)));
    CHECK(P2("(y-1)^2") == P2("y^2 - 2*y + 1"));
    auto p = parse_poly("y^4 - x^3 - P03*y^3");
    CHECK(has_parameters(p));
    CHECK(p.coeff(0, 3) == -ParamPoly::parameter("P03"));
    CHECK_THROWS_AS(parse_poly("y^2 -"), InputError);
    CHECK_THROWS_AS(parse_poly("y^99999999999"), InputError);
    CHECK_THROWS_AS(parse_poly("(y+1"), InputError);
    CHECK_THROWS_AS(parse_poly("y+1)"), InputError);
    CHECK_THROWS_AS(parse_poly("(x+1)^-1"), InputError);
    CHECK_THROWS_AS(parse_poly("x - x"), InputError);
    CHECK_THROWS_AS(parse_poly("x^2^"), InputError);
    try {
        parse_poly("y ^ x");
        FAIL("expected an error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("printer round trip") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        auto p = small_random(rng);
        if (p.is_zero()) continue;
        CHECK(to_rational(parse_poly(to_string(p))) == p);
        auto q = small_quad(rng);
        CHECK(to_rational(parse_quad(to_string(q))) == q);
    }
    auto pp = parse_poly("y^4 - x^3 - P03*y^3 - 2/3*P21^2*x^2*y + P00");
    CHECK(parse_poly(to_string(pp)) == pp);
}

TEST_CASE("derivative examples") {
    CHECK(partial_derivative(P2("y^2-x^2+1"), Var::Y) == P2("2*y"));
    CHECK(partial_derivative(partial_derivative(P2("x^2*y^3"), Var::X), Var::Y) == P2("6*x*y^2"));
    CHECK(partial_derivative(P2("x^-1*y"), Var::X) == P2("-x^-2*y"));
    CHECK(partial_derivative(P2("x^3*y"), Var::X, 2) == P2("6*x*y"));
}

TEST_CASE("ring axioms on random Laurent and quad polynomials") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        auto a = small_random(rng), b = small_random(rng), c = small_random(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
        auto qa = small_quad(rng), qb = small_quad(rng), qc = small_quad(rng);
        CHECK((qa * qb) * qc == qa * (qb * qc));
        CHECK(qa * (qb + qc) == qa * qb + qa * qc);
        CHECK(qa * qb == qb * qa);
        CHECK((qa * qb).swapped() == qa.swapped() * qb.swapped());
    }
}

TEST_CASE("parameter ring axioms") {
    auto A = ParamPoly::parameter("a"), B = ParamPoly::parameter("b", 2) + ParamPoly(3);
    auto C = ParamPoly(Rational(1, 2)) * A - B;
    CHECK((A * B) * C == A * (B * C));
    CHECK(A * (B + C) == A * B + A * C);
    CHECK(A * B == B * A);
    CHECK((A - A).is_zero());
    CHECK(!A.is_constant());
    CHECK_THROWS_AS(A.constant_value(), InputError);
}

TEST_CASE("product rule on random inputs") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 100; ++t) {
        auto f = small_random(rng), g = small_random(rng);
        for (Var v : {Var::X, Var::Y})
            CHECK(partial_derivative(f * g, v) == partial_derivative(f, v) * g + f * partial_derivative(g, v));
    }
}

TEST_CASE("resultant examples") {
    CHECK(resultant_y(P2("y^2-x^2+1"), P2("2*y")) == U({4, 0, -4}));
    CHECK(resultant_y(P2("y^2-x^3-x^2"), P2("2*y")) == U({0, 0, -4, -4}));
    CHECK(resultant_y(P2("y-x"), P2("1")) == U({1}));
    auto ch = discriminant_chain(P2("y^2-x^2+1"));
    CHECK(ch.D == U({4, 0, -4}));
    CHECK(ch.Dtilde == U({0, 0, 4}));
    CHECK(ch.Delta != 0);
    auto nod = discriminant_chain(P2("y^2-x^3-x^2"));
    CHECK(univariate_gcd(nod.D, nod.Dtilde).coeff(0) == 0);
    CHECK(discriminant_chain(P2("y-x")).D.degree() == 0);
    CHECK_THROWS_AS(discriminant_chain(P2("x^2+1")), InputError);
}

TEST_CASE("gcd and squarefree examples") {
    CHECK(univariate_gcd(U({4, 0, -4}), U({0, 0, 4})) == U({1}));
    auto f = U({0, 0, 1}) * U({1, 1}), g = U({0, 0, 1}) * U({2, 3}) * U({2, 3});
    CHECK(univariate_gcd(f, g) == U({0, 0, 1}));
    CHECK(squarefree_part(univariate_gcd(f, g)) == U({0, 1}));
    CHECK(squarefree_part(U({-1, 1}) * U({-1, 1}) * U({-1, 1})) == U({-1, 1}));
    auto dec = squarefree_decomposition(U({-1, 1}) * U({2, 1}) * U({2, 1}));
    REQUIRE(dec.size() >= 2);
    CHECK(dec[0] == U({-1, 1}));
    CHECK(dec[1] == U({2, 1}));
}

TEST_CASE("Sylvester oracle and vanishing property") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> d(-6, 6), deg(1, 4);
    auto rand_uni = [&](int n) {
        std::vector<Rational> c;
        for (int k = 0; k < n; ++k) c.emplace_back(d(rng));
        c.emplace_back(d(rng) == 0 ? 1 : d(rng) | 1);
        return UniPoly(c);
    };
    for (int t = 0; t < 100; ++t) {
        auto f = rand_uni(deg(rng)), g = rand_uni(deg(rng));
        CHECK(resultant(f, g) == sylvester(f, g));
        auto h = rand_uni(1);
        CHECK(resultant(f * h, g * h) == 0);
        CHECK(resultant(f * h, g) == resultant(f, g) * resultant(h, g));
    }
    // Res_y vanishes exactly where the specializations share a root.
    for (int t = 0; t < 100; ++t) {
        auto a = small_random(rng, 0, 2), b = small_random(rng, 0, 2);
        auto shared = P2("y") - LaurentPoly2<Rational>::monomial(1, 0, Rational(d(rng)));
        auto f = a * shared + LaurentPoly2<Rational>::monomial(0, 1 + t % 2, Rational(1));
        auto g = (t % 3 == 0) ? b * shared + P2("y^2") : b + P2("y^3") + P2("x*y");
        if (f.is_zero() || g.is_zero()) continue;
        UniPoly R;
        try {
            R = resultant_y(f, g);
        } catch (const InputError&) {
            continue;
        }
        Rational x0(d(rng), 7);
        auto fs = specialize_x(f, x0), gs = specialize_x(g, x0);
        auto nf = to_polynomial(f).p, ng = to_polynomial(g).p;
        // Only meaningful when the leading y-coefficients do not vanish at x0.
        if (fs.degree() != nf.max_j() || gs.degree() != ng.max_j()) continue;
        if (fs.degree() < 1 || gs.degree() < 1) continue;
        bool common = univariate_gcd(fs, gs).degree() > 0;
        CHECK((R(x0) == 0) == common);
    }
}

TEST_CASE("root examples and re-expansion") {
    auto r = complex_roots(U({1, 0, 1}), 128);
    REQUIRE(r.size() == 2);
    CHECK(r[0].overlaps(ComplexBall::from_rationals(0, -1, 128)));
    CHECK(r[1].overlaps(ComplexBall::from_rationals(0, 1, 128)));
    auto s = complex_roots(U({4, 0, -4}), 128);
    CHECK(s[0].overlaps(ComplexBall::from_int(1, 128)));
    CHECK(s[1].overlaps(ComplexBall::from_int(-1, 128)));
    auto z = complex_root_clusters(U({0, 0, 1}), 128);
    REQUIRE(z.size() == 1);
    CHECK(z[0].multiplicity == 2);
    CHECK(z[0].z.contains_zero());
    CHECK(complex_roots(U({0, 0, 1}), 128).size() == 2);
    CHECK_THROWS_AS(complex_roots(UniPoly(), 128), InputError);

    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> d(-9, 9), deg(1, 8);
    for (int t = 0; t < 100; ++t) {
        std::vector<Rational> c;
        int n = deg(rng);
        for (int k = 0; k < n; ++k) c.emplace_back(d(rng));
        c.emplace_back(d(rng) | 1);
        UniPoly f(c);
        auto roots = complex_roots(f, 192);
        REQUIRE(static_cast<int>(roots.size()) == f.degree());
        // lead * prod (x - r) re-expands to f within the ball radii.
        std::vector<ComplexBall> e{ComplexBall::from_rational(f.lead(), 192)};
        for (const auto& rt : roots) {
            std::vector<ComplexBall> next(e.size() + 1, ComplexBall(192));
            for (size_t k = 0; k < e.size(); ++k) {
                next[k + 1] += e[k];
                next[k] -= e[k] * rt;
            }
            e = next;
        }
        for (int k = 0; k <= f.degree(); ++k) CHECK(e[k].overlaps(ComplexBall::from_rational(f.coeff(k), 192)));
        for (size_t k = 1; k < roots.size(); ++k) CHECK(roots[k - 1].mid_abs() >= roots[k].mid_abs() - 1e-30);
    }
}

TEST_CASE("ball evaluation") {
    auto P = P2("y^2-x^2+1");
    const mpfr_prec_t pr = 128;
    CHECK(evaluate(P, ComplexBall::from_int(0, pr), ComplexBall::from_rationals(0, 1, pr)).contains_zero());
    CHECK(evaluate(P, ComplexBall::from_int(1, pr), ComplexBall::from_int(1, pr)).overlaps(ComplexBall::from_int(1, pr)));
    CHECK_THROWS_AS(evaluate(P2("x^-1"), ComplexBall::from_int(0, pr), ComplexBall::from_int(1, pr)), PrecisionExhausted);
}
