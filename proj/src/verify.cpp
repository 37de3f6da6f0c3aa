#include "curveb/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "curveb/errors.hpp"
#include "curveb/roots.hpp"

namespace curveb {

namespace {

constexpr int kMaxOrder = 2048;

ComplexBall ball(const Rational& q, mpfr_prec_t prec) { return ComplexBall::from_rational(q, prec); }

double neg_inf() { return -std::numeric_limits<double>::infinity(); }

// Scan the negative orders of f against the tolerance.
ValuationReport scan_negative(const Series& f, long tol_exp) {
    ValuationReport r;
    r.residual_log2 = neg_inf();
    r.valuation = f.end();
    for (int k = f.val(); k < f.end(); ++k) {
        ComplexBall c = f.coeff(k);
        bool small = k < 0 ? certified_small(c, tol_exp, "series coefficient of order " + std::to_string(k))
                           : abs_less_2exp(c, tol_exp);
        if (k < 0) r.residual_log2 = std::max(r.residual_log2, c.log2_upper());
        if (!small) {
            r.valuation = k;
            break;
        }
    }
    if (r.valuation < 0) {
        r.pass = false;
        r.pole_order = -r.valuation;
    }
    return r;
}

}  // namespace

bool certified_small(const ComplexBall& z, long tol_exp, const std::string& what) {
    if (abs_less_2exp(z, tol_exp)) return true;
    if (abs_at_least_2exp(z, tol_exp)) return false;
    throw PrecisionExhausted(what + " straddles the tolerance 2^" + std::to_string(tol_exp));
}

std::vector<Puncture> enumerate_punctures(const LaurentPoly2<Rational>& P, const NewtonPolygon& poly,
                                          mpfr_prec_t prec) {
    if (poly.shape == HullShape::Point) throw InputError("no boundary: the Newton polygon is a single point");
    std::map<int, std::vector<RootCluster>> roots;
    std::vector<Puncture> out;
    for (const auto& s : poly.segments) {
        auto it = roots.find(s.edge);
        if (it == roots.end()) {
            UniPoly E = edge_polynomial(P, poly, s.edge);
            auto r = complex_root_clusters(E, prec);
            int count = 0;
            for (const auto& c : r) {
                if (c.multiplicity != 1) throw IrregularCurve("degenerate puncture (P irregular at boundary)");
                ++count;
            }
            if (count != poly.edge_length(s.edge)) throw IrregularCurve("puncture/root mismatch (irregular boundary)");
            it = roots.emplace(s.edge, std::move(r)).first;
        }
        Puncture p;
        p.id = static_cast<int>(out.size());
        p.segment = s;
        p.c = it->second.at(s.position).z;
        p.x_order = s.dj();
        p.y_order = -s.di();
        p.beta = s.beta;
        p.beta_t = s.beta_t;
        p.lift_y = s.dj() != 0;
        p.x_lead = p.c.pow(s.beta_t);
        p.y_lead = p.c.pow(-s.beta);
        out.push_back(std::move(p));
    }
    return out;
}

PuiseuxPair puiseux_expand(const LaurentPoly2<Rational>& P, const Puncture& p, int order, mpfr_prec_t prec) {
    if (order < 1) throw InputError("series order must be positive");
    const int di = p.segment.di(), dj = p.segment.dj();
    struct Term {
        ComplexBall a;
        int shift;  // weight above the minimum
        int m;      // exponent of the lifted variable
    };
    std::vector<Term> terms;
    int emin = std::numeric_limits<int>::max();
    for (const auto& [k, c] : P.terms()) emin = std::min(emin, dj * k.i - di * k.j);
    for (const auto& [k, c] : P.terms())
        terms.push_back({ball(c, prec) * p.x_lead.pow(k.i) * p.y_lead.pow(k.j), dj * k.i - di * k.j - emin,
                         p.lift_y ? k.j : k.i});
    ComplexBall Gw(prec);
    for (const auto& t : terms)
        if (t.shift == 0) Gw += t.a.mul_si(t.m);
    if (!Gw.certified_nonzero()) throw IrregularCurve("degenerate puncture (P irregular at boundary)");
    const ComplexBall Gw_inv = Gw.inverse();
    std::map<int, std::vector<ComplexBall>> pw;  // coefficients of w^m
    for (const auto& t : terms) pw.emplace(t.m, std::vector<ComplexBall>{ComplexBall::from_int(1, prec)});
    std::vector<ComplexBall> w{ComplexBall::from_int(1, prec)};
    for (int n = 1; n < order; ++n) {
        // Power coefficients without the w_n contribution.
        std::map<int, ComplexBall> partial;
        for (auto& [m, c] : pw) {
            ComplexBall acc(prec);
            for (int k = 1; k < n; ++k) acc += (w[k] * c[n - k]).mul_si(static_cast<long>(m) * k - n + k);
            Integer one(1);
            partial.emplace(m, acc * ComplexBall::from_rational(Rational(one, Integer(n)), prec));
        }
        ComplexBall rest(prec);
        for (const auto& t : terms) {
            if (t.shift > n) continue;
            rest += t.a * (t.shift == 0 ? partial.at(t.m) : pw.at(t.m)[n - t.shift]);
        }
        ComplexBall wn = -(rest * Gw_inv);
        w.push_back(wn);
        for (auto& [m, c] : pw) c.push_back(partial.at(m) + wn.mul_si(m));
    }
    PuiseuxPair r;
    r.order = order;
    Series lifted(0, w, prec);
    if (p.lift_y) {
        r.x = Series::monomial(p.x_lead, p.x_order, order);
        r.y = (p.y_lead * lifted).shifted(p.y_order);
    } else {
        r.x = (p.x_lead * lifted).shifted(p.x_order);
        r.y = Series::monomial(p.y_lead, p.y_order, order);
    }
    Series res = evaluate(P, r.x, r.y);
    for (int k = res.val(); k < std::min(res.end(), emin + order); ++k)
        if (res.coeff(k).certified_nonzero())
            throw PrecisionExhausted("local expansion residual is not zero at order " + std::to_string(k));
    return r;
}

namespace {

// The kernel's dz-coefficient at a puncture with the second point fixed.
Series kernel_coefficient(const KernelExpression<Rational>& K, const PuiseuxPair& s, const Puncture& p,
                          const CurvePoint& q) {
    const int n = s.x.length();
    const Series xp = Series::constant(q.xb, n), yp = Series::constant(q.y, n);
    Series t1 = evaluate(K.P, s.x, yp);
    Series t2 = evaluate(K.P, xp, s.y);
    Series d1 = s.x - xp, d2 = s.y - yp;
    Series num = t1 * t2 / (d1 * d1 * d2 * d2) - evaluate(K.total(), s.x, s.y, q.xb, q.y);
    ComplexBall py2 = evaluate(partial_derivative(K.P, Var::Y), q.xb, q.y);
    if (p.lift_y) {
        Series py = evaluate(partial_derivative(K.P, Var::Y), s.x, s.y);
        return (-py2.inverse()) * (num * s.x.derivative() / py);
    }
    Series px = evaluate(partial_derivative(K.P, Var::X), s.x, s.y);
    return py2.inverse() * (num * s.y.derivative() / px);
}

template <class Build>
ValuationReport with_auto_order(const LaurentPoly2<Rational>& P, const Puncture& p, const CheckConfig& cfg,
                                Build build) {
    int order = cfg.order;
    while (true) {
        PuiseuxPair s = puiseux_expand(P, p, order, cfg.precision);
        Series f = build(s);
        if (f.end() > 0) {
            ValuationReport r = scan_negative(f, cfg.tol_exp);
            r.puncture = p.id;
            r.order_used = order;
            return r;
        }
        order += 1 - f.end() + 2;
        if (order > kMaxOrder) throw PrecisionExhausted("series order limit reached");
    }
}

}  // namespace

ValuationReport check_puncture_regular(const KernelExpression<Rational>& K, const Puncture& p,
                                       const CurvePoint& second, const CheckConfig& cfg) {
    return with_auto_order(K.P, p, cfg, [&](const PuiseuxPair& s) { return kernel_coefficient(K, s, p, second); });
}

ValuationReport check_holomorphic(const LaurentPoly2<Rational>& P, const LaurentPoly2<Rational>& numerator,
                                  const Puncture& p, const CheckConfig& cfg) {
    return with_auto_order(P, p, cfg, [&](const PuiseuxPair& s) {
        Series num = evaluate(numerator, s.x, s.y);
        if (p.lift_y) return num * s.x.derivative() / evaluate(partial_derivative(P, Var::Y), s.x, s.y);
        return -(num * s.y.derivative() / evaluate(partial_derivative(P, Var::X), s.x, s.y));
    });
}

DiagonalReport check_diagonal(const KernelExpression<Rational>& K, const CurvePoint& p0, const CheckConfig& cfg) {
    const mpfr_prec_t prec = cfg.precision;
    const int n = std::max(cfg.order, 4);
    const auto& P = K.P;
    const auto Py = partial_derivative(P, Var::Y);
    std::vector<ComplexBall> xc(n, ComplexBall(prec));
    xc[0] = p0.xb;
    if (n > 1) xc[1] = ComplexBall::from_int(1, prec);
    const Series xh(0, xc, prec);
    const ComplexBall py0 = evaluate(Py, p0.xb, p0.y);
    if (!py0.certified_nonzero()) throw PrecisionExhausted("diagonal sample point too close to a branchpoint");
    const ComplexBall py0_inv = py0.inverse();
    // y(h) coefficient by coefficient: [h^k] P(x0+h, y) is linear in y_k with slope P_y(x0,y0).
    std::vector<ComplexBall> yc(n, ComplexBall(prec));
    yc[0] = p0.y;
    for (int k = 1; k < n; ++k) {
        Series F = evaluate(P, xh, Series(0, yc, prec));
        yc[k] = -(F.coeff(k) * py0_inv);
    }
    const Series yh(0, yc, prec);
    const Series x0 = Series::constant(p0.xb, n), y0 = Series::constant(p0.y, n);
    auto drop_zero = [](const Series& s, const char* what) {
        if (!s.coeffs().empty() && !s.coeffs()[0].contains_zero())
            throw PrecisionExhausted(std::string(what) + " does not vanish at the sample point");
        return s.drop_leading(1);
    };
    Series a = drop_zero(evaluate(P, x0, yh), "P(x0, y(h))");
    Series b = drop_zero(evaluate(P, xh, y0), "P(x0 + h, y0)");
    Series dy = drop_zero(yh - y0, "y(h) - y0");
    Series t = evaluate(K.total(), x0, y0, xh, yh).shifted(2);
    Series f = (-py0_inv) * ((a * b / (dy * dy) - t) / evaluate(Py, xh, yh));
    DiagonalReport r;
    r.point = p0;
    r.constant_term = f.coeff(0);
    ComplexBall dev = r.constant_term - ComplexBall::from_int(1, prec);
    r.deviation_log2 = dev.log2_upper();
    bool ok = certified_small(dev, cfg.diag_tol_exp, "diagonal constant term");
    for (int k = f.val(); k < 0; ++k)
        if (!certified_small(f.coeff(k), cfg.tol_exp, "diagonal negative-order coefficient")) ok = false;
    r.pass = ok;
    return r;
}

std::vector<NodeReport> check_node_cancellation(const KernelExpression<Rational>& K, const SingularLocus& locus,
                                                CurveSampler& sampler, const CheckConfig& cfg) {
    std::vector<NodeReport> out;
    std::vector<const DoublePoint*> all;
    for (const auto& d : locus.double_points) all.push_back(&d);
    for (const auto& d : locus.boundary_points) all.push_back(&d);
    const QuadPoly<Rational> T = K.total();
    for (const DoublePoint* d : all) {
        NodeReport r;
        r.b = d->b;
        r.yb = d->yb;
        r.torus = d->torus;
        r.residual_log2 = neg_inf();
        bool x_zero = d->b.contains_zero(), y_zero = d->yb.contains_zero();
        auto negative = [&](const QuadKey& k) { return (x_zero && k[0] < 0) || (y_zero && k[1] < 0); };
        for (const auto& [k, c] : K.P.terms())
            if (negative({k.i, k.j, 0, 0})) r.evaluable = false;
        for (const auto& [k, c] : T.terms())
            if (negative(k)) r.evaluable = false;
        if (!r.evaluable) {
            out.push_back(std::move(r));
            continue;
        }
        for (int k = 0; k < cfg.second_points; ++k) {
            CurvePoint q = sampler.next([&](const CurvePoint& c) { return !c.xb.overlaps(d->b) && !c.y.overlaps(d->yb); });
            ComplexBall dx = d->b - q.xb, dy = d->yb - q.y;
            ComplexBall v = evaluate(K.P, d->b, q.y) * evaluate(K.P, q.xb, d->yb) / (dx * dx * dy * dy) -
                            evaluate(T, d->b, d->yb, q.xb, q.y);
            r.residual_log2 = std::max(r.residual_log2, v.log2_upper());
            if (!certified_small(v, cfg.tol_exp, "double-point numerator")) r.pass = false;
        }
        out.push_back(std::move(r));
    }
    return out;
}

bool generic_for_punctures(const CurvePoint& q, const std::vector<Puncture>& punctures) {
    for (const auto& p : punctures) {
        if (p.x_order == 0 && q.xb.overlaps(p.x_lead)) return false;
        if (p.y_order == 0 && q.y.overlaps(p.y_lead)) return false;
    }
    return true;
}

}  // namespace curveb
