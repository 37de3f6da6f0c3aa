#include "curveb/singular.hpp"

#include <algorithm>

#include "curveb/errors.hpp"
#include "curveb/roots.hpp"
#include "curveb/series.hpp"

namespace curveb {

namespace {

Rational rational_determinant(std::vector<std::vector<Rational>> a) {
    const size_t n = a.size();
    Rational det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && sgn(a[p][c]) == 0) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            if (sgn(a[r][c]) == 0) continue;
            Rational f = a[r][c] / a[c][c];
            for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

// First subresultant s11 y + s10 of f and g = f' (coefficient vectors, ascending).
template <class T, class Det>
std::pair<T, T> first_subresultant(const std::vector<T>& f, const std::vector<T>& g, T zero, Det det) {
    const int m = static_cast<int>(f.size()) - 1;
    const int n = m - 1;
    const int size = m + n - 2;
    const int cols = m + n - 1;
    auto base = std::vector<std::vector<T>>(size, std::vector<T>(cols, zero));
    for (int r = 0; r < n - 1; ++r)
        for (int l = 0; l <= m; ++l) base[r][m - l + r] = f[l];
    for (int r = 0; r < m - 1; ++r)
        for (int l = 0; l <= n; ++l) base[n - 1 + r][n - l + r] = g[l];
    auto pick = [&](int last) {
        std::vector<std::vector<T>> sq(size, std::vector<T>(size, zero));
        for (int r = 0; r < size; ++r) {
            for (int c = 0; c < size - 1; ++c) sq[r][c] = base[r][c];
            sq[r][size - 1] = base[r][last];
        }
        return det(sq);
    };
    return {pick(cols - 2), pick(cols - 1)};
}

ComplexBall ball_of(const Rational& q, mpfr_prec_t prec) { return ComplexBall::from_rational(q, prec); }

UniPoly strip_factor(UniPoly s, const UniPoly& other) {
    if (other.is_zero()) return s;
    UniPoly g = univariate_gcd(s, other);
    if (g.degree() > 0) s = exact_div(s, g).monic();
    return s;
}

UniPoly strip_zero_root(UniPoly s) {
    while (s.degree() > 0 && sgn(s.coeff(0)) == 0) s = exact_div(s, UniPoly::x_power(1));
    return s;
}

}  // namespace

SingularLocus locate_singular(const LaurentPoly2<Rational>& P, mpfr_prec_t prec) {
    NormalizedPoly np = to_polynomial(P, true);
    const LaurentPoly2<Rational>& Pn = np.p;
    if (Pn.max_j() == 0 || Pn.max_i() == Pn.min_i())
        throw InputError("P must depend on both x and y");
    SingularLocus L;
    L.prec = prec;
    DiscriminantChain chain = discriminant_chain(Pn, false);
    L.D = chain.D;
    L.Dtilde = chain.Dtilde;
    if (L.D.is_zero()) throw IrregularCurve("discriminant vanishes identically: P is not squarefree in y");
    if (L.Dtilde.is_zero()) throw IrregularCurve("Res(P, P_x) vanishes identically: P is reducible");
    const std::vector<UniPoly> ycoef = y_coefficients(Pn);
    const UniPoly& lead = ycoef.back();

    UniPoly G = univariate_gcd(L.D, L.Dtilde);
    UniPoly Gs = G.degree() > 0 ? squarefree_part(G) : UniPoly::constant(1);
    UniPoly Ds = squarefree_part(L.D);
    UniPoly A = Gs.degree() > 0 ? exact_div(Ds, Gs).monic() : Ds;
    // Roots where y escapes to infinity are punctures, not affine points.
    UniPoly S = strip_factor(Gs, lead);
    A = strip_factor(A, lead);
    if (np.shift_i > 0) {
        S = strip_zero_root(S);
        A = strip_zero_root(A);
    }
    L.S = S;
    L.A = A;
    if (A.degree() > 0) L.branchpoints = complex_roots(A, prec);
    if (S.degree() <= 0) return L;

    const auto Px = partial_derivative(P, Var::X), Py = partial_derivative(P, Var::Y);
    const auto Pxx = partial_derivative(Px, Var::X), Pxy = partial_derivative(Px, Var::Y),
               Pyy = partial_derivative(Py, Var::Y);
    for (const ComplexBall& b : complex_roots(S, prec)) {
        DoublePoint d;
        d.b = b;
        std::vector<ComplexBall> fb;
        for (const auto& c : ycoef) fb.push_back(evaluate(c, b));
        if (fb.size() < 3) throw IrregularCurve("irregular double point: P has degree < 2 in y");
        std::vector<ComplexBall> gb;
        for (size_t l = 1; l < fb.size(); ++l) gb.push_back(fb[l].mul_si(static_cast<long>(l)));
        auto [s11, s10] = first_subresultant<ComplexBall>(fb, gb, ComplexBall(prec), determinant);
        if (s11.contains_zero()) throw IrregularCurve("irregular double point: y_b is not unique at x = " + b.str(12));
        d.yb = -(s10 / s11);
        // Exact data when b is rational.
        try {
            Rational r = rationalize(b, prec / 2);
            if (sgn(S(r)) == 0) {
                std::vector<Rational> fr;
                for (const auto& c : ycoef) fr.push_back(c(r));
                std::vector<Rational> gr;
                for (size_t l = 1; l < fr.size(); ++l) gr.push_back(fr[l] * static_cast<long>(l));
                auto [e11, e10] = first_subresultant<Rational>(fr, gr, Rational(0), rational_determinant);
                if (sgn(e11) != 0) {
                    d.b_exact = r;
                    d.yb_exact = -e10 / e11;
                    d.b = ball_of(r, prec);
                    d.yb = ball_of(*d.yb_exact, prec);
                }
            }
        } catch (const PrecisionExhausted&) {
        }
        const bool b_zero = d.b_exact ? sgn(*d.b_exact) == 0 : (sgn(S.coeff(0)) == 0 && d.b.contains_zero());
        const bool y_zero = d.yb_exact ? sgn(*d.yb_exact) == 0 : d.yb.contains_zero();
        if (y_zero && np.shift_j > 0) continue;  // not an affine point of the original curve
        d.torus = !b_zero && !y_zero;
        if (d.b_exact) {
            auto ev = [&](const LaurentPoly2<Rational>& f) {
                Rational s(0);
                for (const auto& [k, c] : f.terms()) {
                    Rational t = c;
                    for (int e = 0; e < std::abs(k.i); ++e) t = k.i > 0 ? Rational(t * *d.b_exact) : Rational(t / *d.b_exact);
                    for (int e = 0; e < std::abs(k.j); ++e) t = k.j > 0 ? Rational(t * *d.yb_exact) : Rational(t / *d.yb_exact);
                    s += t;
                }
                return s;
            };
            Rational fxy = ev(Pxy);
            d.gamma_exact = fxy * fxy - ev(Pxx) * ev(Pyy);
            d.gamma = ball_of(*d.gamma_exact, prec);
        } else {
            ComplexBall fxy = evaluate(Pxy, d.b, d.yb);
            d.gamma = fxy * fxy - evaluate(Pxx, d.b, d.yb) * evaluate(Pyy, d.b, d.yb);
        }
        (d.torus ? L.double_points : L.boundary_points).push_back(std::move(d));
    }
    return L;
}

UniPoly edge_polynomial(const LaurentPoly2<Rational>& P, const NewtonPolygon& poly, int edge) {
    const OrientedSegment* first = nullptr;
    int L = 0;
    for (const auto& s : poly.segments)
        if (s.edge == edge) {
            if (!first || s.position < first->position) first = &s;
            ++L;
        }
    if (!first) throw InputError("no such hull edge");
    std::vector<Rational> c(L + 1, Rational(0));
    for (int t = 0; t <= L; ++t)
        c[L - t] = P.coeff(first->from.i + t * first->di(), first->from.j + t * first->dj());
    return UniPoly(c);
}

RegularityReport check_regularity(const LaurentPoly2<Rational>& P, const NewtonPolygon& poly,
                                  const SingularLocus& locus) {
    RegularityReport rep;
    auto fail = [&rep](std::string s) {
        rep.regular = false;
        rep.failures.push_back(std::move(s));
    };
    if (poly.shape == HullShape::Point) fail("Newton polygon is a single point");
    if (poly.shape == HullShape::Segment && poly.edge_length(0) > 1)
        fail("collinear support of lattice length > 1: P is reducible");
    const UniPoly Dp = locus.D.derivative();
    for (const auto& a : locus.branchpoints)
        if (!evaluate(Dp, a).certified_nonzero()) fail("branchpoint " + a.str(12) + " is not simple (D'(a) = 0)");
    const auto Px = partial_derivative(P, Var::X);
    auto check_node = [&](const DoublePoint& d) {
        if (d.gamma.contains_zero()) fail("degenerate double point at x = " + d.b.str(12) + " (Hessian singular)");
        bool evaluable = true;
        for (const auto& [k, c] : Px.terms())
            if ((k.i < 0 && d.b.contains_zero()) || (k.j < 0 && d.yb.contains_zero())) evaluable = false;
        if (evaluable && evaluate(Px, d.b, d.yb).certified_nonzero())
            fail("common root of D and D~ at x = " + d.b.str(12) + " is not a double point");
    };
    for (const auto& d : locus.double_points) check_node(d);
    for (const auto& d : locus.boundary_points) check_node(d);
    if (poly.shape != HullShape::Point) {
        for (int e = 0; e < poly.edge_count(); ++e) {
            UniPoly E = edge_polynomial(P, poly, e);
            if (E.degree() > 0 && univariate_gcd(E, E.derivative()).degree() > 0)
                fail("edge polynomial of hull edge " + std::to_string(e) + " has a repeated root");
        }
    }
    return rep;
}

int genus(const NewtonPolygon& poly, const SingularLocus& locus) {
    long g = static_cast<long>(poly.interior.size()) - static_cast<long>(locus.double_points.size());
    if (g < 0) throw IrregularCurve("inconsistent locus (P likely irregular or reducible)");
    return static_cast<int>(g);
}

ComplexBall interior_monomial(const LatticePoint& beta, const ComplexBall& x, const ComplexBall& y) {
    return x.pow(beta.i - 1) * y.pow(beta.j - 1);
}

PivotSet choose_pivot_set(const NewtonPolygon& poly, const SingularLocus& locus) {
    const auto& nodes = locus.double_points;
    if (nodes.size() > poly.interior.size()) throw IrregularCurve("locus exceeds interior (irregular input)");
    PivotSet ps;
    const mpfr_prec_t prec = locus.prec;
    const size_t nb = nodes.size();
    // Greedy column selection with an incrementally eliminated copy of the chosen columns.
    BallMatrix reduced;                     // chosen columns after elimination, each of length nb
    std::vector<size_t> pivot_rows;
    for (const auto& beta : poly.interior) {
        std::vector<ComplexBall> col;
        for (const auto& d : nodes) col.push_back(interior_monomial(beta, d.b, d.yb));
        if (ps.I.size() < nb) {
            std::vector<ComplexBall> v = col;
            for (size_t t = 0; t < reduced.size(); ++t) {
                const auto& r = reduced[t];
                ComplexBall f = v[pivot_rows[t]] / r[pivot_rows[t]];
                for (size_t k = 0; k < nb; ++k) v[k] -= f * r[k];
            }
            size_t best = nb;
            double best_abs = 0;
            for (size_t k = 0; k < nb; ++k) {
                if (std::find(pivot_rows.begin(), pivot_rows.end(), k) != pivot_rows.end()) continue;
                if (v[k].certified_nonzero() && v[k].mid_abs() > best_abs) {
                    best_abs = v[k].mid_abs();
                    best = k;
                }
            }
            if (best < nb) {
                reduced.push_back(v);
                pivot_rows.push_back(best);
                ps.I.push_back(beta);
                continue;
            }
        }
        ps.Ibar.push_back(beta);
    }
    if (ps.I.size() < nb) throw PrecisionExhausted("could not certify an invertible pivot block B_I");
    ps.B_I = zeros(nb, ps.I.size(), prec);
    ps.B_Ibar = zeros(nb, ps.Ibar.size(), prec);
    for (size_t r = 0; r < nb; ++r) {
        for (size_t c = 0; c < ps.I.size(); ++c) ps.B_I[r][c] = interior_monomial(ps.I[c], nodes[r].b, nodes[r].yb);
        for (size_t c = 0; c < ps.Ibar.size(); ++c)
            ps.B_Ibar[r][c] = interior_monomial(ps.Ibar[c], nodes[r].b, nodes[r].yb);
    }
    if (nb && determinant(ps.B_I).contains_zero()) throw PrecisionExhausted("pivot block B_I is not certified invertible");
    return ps;
}

CurveSampler::CurveSampler(const LaurentPoly2<Rational>& P, unsigned long long seed, mpfr_prec_t prec, int retries)
    : P_(P), Px_(partial_derivative(P, Var::X)), Py_(partial_derivative(P, Var::Y)), rng_(seed), prec_(prec),
      retries_(retries) {
    NormalizedPoly np = to_polynomial(P, true);
    ycoef_ = y_coefficients(np.p);
    shift_j_ = np.shift_j;
    if (ycoef_.size() < 2) throw InputError("P does not depend on y");
}

std::optional<CurvePoint> CurveSampler::candidate() {
    std::uniform_int_distribution<int> num(-20, 20), den(3, 11);
    int n = num(rng_);
    if (n == 0) return std::nullopt;
    Rational x(n, den(rng_));
    x.canonicalize();
    std::vector<Rational> c;
    for (const auto& a : ycoef_) c.push_back(a(x));
    UniPoly fy(c);
    if (fy.degree() < 1 || sgn(fy.coeff(0)) == 0) return std::nullopt;
    auto clusters = complex_root_clusters(fy, prec_);
    std::uniform_int_distribution<size_t> pick(0, clusters.size() - 1);
    const auto& cl = clusters[pick(rng_)];
    if (cl.multiplicity != 1 || !cl.z.certified_nonzero()) return std::nullopt;
    CurvePoint p{x, ball_of(x, prec_), cl.z};
    if (!evaluate(Py_, p.xb, p.y).certified_nonzero() || !evaluate(Px_, p.xb, p.y).certified_nonzero())
        return std::nullopt;
    return p;
}

QuadPoly<Rational> compute_Qtilde(const LaurentPoly2<Rational>& P, const NewtonPolygon& poly,
                                  const QuadPoly<Rational>& Q, const SingularLocus& locus, const PivotSet& pivots,
                                  unsigned long long seed) {
    const auto& nodes = locus.double_points;
    QuadPoly<Rational> out;
    if (nodes.empty()) return out;
    const mpfr_prec_t prec = locus.prec;
    const long bits = prec / 2;
    const std::vector<LatticePoint> interior(poly.interior.begin(), poly.interior.end());
    const size_t ni = interior.size(), nb = nodes.size();
    CurveSampler sampler(P, seed, prec);
    auto accept = [&](const CurvePoint& p) {
        for (const auto& d : nodes)
            if (p.xb.overlaps(d.b) || p.y.overlaps(d.yb)) return false;
        return true;
    };
    auto N0 = [&](const DoublePoint& d, const CurvePoint& p) {
        ComplexBall dx = d.b - p.xb, dy = d.yb - p.y;
        ComplexBall num = evaluate(P, d.b, p.y) * evaluate(P, p.xb, d.yb);
        return num / (dx * dx * dy * dy) - evaluate(Q, d.b, d.yb, p.xb, p.y);
    };
    // Expand N0(b; .) on the interior monomials from ni sample points, then verify on two more.
    BallMatrix C;  // nodes x interior
    for (int attempt = 0;; ++attempt) {
        std::vector<CurvePoint> pts;
        for (size_t k = 0; k < ni + 2; ++k) pts.push_back(sampler.next(accept));
        BallMatrix M = zeros(ni, ni, prec), R = zeros(ni, nb, prec);
        for (size_t k = 0; k < ni; ++k) {
            for (size_t c = 0; c < ni; ++c) M[k][c] = interior_monomial(interior[c], pts[k].xb, pts[k].y);
            for (size_t r = 0; r < nb; ++r) R[k][r] = N0(nodes[r], pts[k]);
        }
        BallMatrix X;
        try {
            X = solve(M, R);
        } catch (const PrecisionExhausted&) {
            if (attempt >= 5) throw;
            continue;
        }
        C = transpose(X);
        for (size_t k = ni; k < ni + 2; ++k)
            for (size_t r = 0; r < nb; ++r) {
                ComplexBall s = -N0(nodes[r], pts[k]);
                for (size_t c = 0; c < ni; ++c) s += C[r][c] * interior_monomial(interior[c], pts[k].xb, pts[k].y);
                if (!abs_less_2exp(s, -bits))
                    throw PrecisionExhausted("double-point numerator is not reproduced by interior monomials");
            }
        break;
    }
    auto index_of = [&](const LatticePoint& p) {
        return static_cast<size_t>(std::find(interior.begin(), interior.end(), p) - interior.begin());
    };
    BallMatrix C_I = zeros(nb, pivots.I.size(), prec), C_Ibar = zeros(nb, pivots.Ibar.size(), prec);
    for (size_t r = 0; r < nb; ++r) {
        for (size_t c = 0; c < pivots.I.size(); ++c) C_I[r][c] = C[r][index_of(pivots.I[c])];
        for (size_t c = 0; c < pivots.Ibar.size(); ++c) C_Ibar[r][c] = C[r][index_of(pivots.Ibar[c])];
    }
    BallMatrix S_IIbar = solve(pivots.B_I, C_Ibar);
    BallMatrix rhs = C_I;
    // rhs -= B_Ibar S_IIbar^T
    for (size_t r = 0; r < nb; ++r)
        for (size_t c = 0; c < pivots.I.size(); ++c)
            for (size_t k = 0; k < pivots.Ibar.size(); ++k) rhs[r][c] -= pivots.B_Ibar[r][k] * S_IIbar[c][k];
    BallMatrix S_II = pivots.I.empty() ? BallMatrix{} : solve(pivots.B_I, rhs);
    auto key = [](const LatticePoint& a, const LatticePoint& b) -> QuadKey {
        return {a.i - 1, a.j - 1, b.i - 1, b.j - 1};
    };
    for (size_t a = 0; a < pivots.I.size(); ++a) {
        for (size_t b = 0; b < pivots.I.size(); ++b) {
            Rational v = rationalize(S_II[a][b], bits);
            out.add_term(key(pivots.I[a], pivots.I[b]), v);
        }
        for (size_t b = 0; b < pivots.Ibar.size(); ++b) {
            Rational v = rationalize(S_IIbar[a][b], bits);
            out.add_term(key(pivots.I[a], pivots.Ibar[b]), v);
            out.add_term(key(pivots.Ibar[b], pivots.I[a]), v);
        }
    }
    if (!out.is_symmetric()) throw PrecisionExhausted("double-point correction is not symmetric after reconstruction");
    // Diagonal identity: Qtilde(b;b) = P_xx P_yy / 4 - Q(b;b).
    const auto Pxx = partial_derivative(P, Var::X, 2), Pyy = partial_derivative(P, Var::Y, 2);
    for (const auto& d : nodes) {
        ComplexBall lhs = evaluate(out, d.b, d.yb, d.b, d.yb);
        ComplexBall rhs_d = (evaluate(Pxx, d.b, d.yb) * evaluate(Pyy, d.b, d.yb)).mul_2si(-2) -
                            evaluate(Q, d.b, d.yb, d.b, d.yb);
        if (!abs_less_2exp(lhs - rhs_d, -bits / 2))
            throw PrecisionExhausted("double-point correction fails the diagonal identity");
    }
    return out;
}

std::vector<HolomorphicForm> holomorphic_basis(const NewtonPolygon& poly, const SingularLocus& locus,
                                               const PivotSet& pivots) {
    const auto& nodes = locus.double_points;
    const long bits = locus.prec / 2;
    std::vector<HolomorphicForm> out;
    BallMatrix coef;  // I x Ibar
    if (!pivots.I.empty()) {
        coef = solve(pivots.B_I, pivots.B_Ibar);
        // Cramer cross-check: q_beta = -det(B_I with column beta replaced) / det(B_I).
        ComplexBall det = determinant(pivots.B_I);
        for (size_t c = 0; c < pivots.Ibar.size(); ++c)
            for (size_t r = 0; r < pivots.I.size(); ++r) {
                BallMatrix m = pivots.B_I;
                for (size_t k = 0; k < nodes.size(); ++k) m[k][r] = pivots.B_Ibar[k][c];
                ComplexBall cramer = -(determinant(m) / det);
                if (!cramer.overlaps(-coef[r][c])) throw PrecisionExhausted("holomorphic basis cross-check failed");
            }
    }
    for (size_t c = 0; c < pivots.Ibar.size(); ++c) {
        HolomorphicForm f;
        f.label = pivots.Ibar[c];
        f.numerator.add_term(f.label.i - 1, f.label.j - 1, Rational(1));
        for (size_t r = 0; r < pivots.I.size(); ++r) {
            Rational q = -rationalize(coef[r][c], bits);
            f.numerator.add_term(pivots.I[r].i - 1, pivots.I[r].j - 1, q);
        }
        for (const auto& d : nodes)
            if (!abs_less_2exp(evaluate(f.numerator, d.b, d.yb), -bits))
                throw PrecisionExhausted("holomorphic form does not vanish at a double point");
        out.push_back(std::move(f));
    }
    (void)poly;
    return out;
}

}  // namespace curveb
