#include "curveb/kernel.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace curveb {

template <CoefficientRing R>
QuadPoly<R> compute_Q(const LaurentPoly2<R>& P, const NewtonPolygon& poly, SegmentMode mode) {
    QuadPoly<R> Q;
    const Rational half(1, 2);
    for (const auto& [a, ca] : P.terms()) {
        for (const auto& [b, cb] : P.terms()) {
            // Zero weight on the whole triangle.
            if (a.i == b.i || a.j == b.j) continue;
            const R c = ca * cb;
            for (const auto& p : triangle_lattice_points(a, b, {a.i, b.j})) {
                const long w = static_cast<long>(std::abs(p.i - a.i)) * std::abs(p.j - b.j);
                if (w == 0) continue;
                const LatticePoint mirror{a.i + b.i - p.i, a.j + b.j - p.j};
                const bool seg = on_segment(a, b, p);
                const bool inside = poly.is_interior(p);
                const QuadKey key{p.i - 1, p.j - 1, mirror.i - 1, mirror.j - 1};
                const R cw = ring_traits<R>::scale(c, Rational(w));
                if (!inside && !seg) Q.add_term(key, cw);
                if (!inside && poly.is_interior(mirror)) Q.add_term(QuadPoly<R>::swap_key(key), cw);
                if (seg) {
                    if (mode == SegmentMode::Half) Q.add_term(key, ring_traits<R>::scale(cw, half));
                    else if (a < b) Q.add_term(key, cw);
                }
            }
        }
    }
    return Q;
}

template <CoefficientRing R>
KernelExpression<R> assemble_kernel(const LaurentPoly2<R>& P, const QuadPoly<R>& Q, const QuadPoly<R>& Qtilde) {
    if (!Q.is_symmetric()) throw InputError("symmetry violated: Q is not swap-symmetric");
    if (!Qtilde.is_symmetric()) throw InputError("symmetry violated: Qtilde is not swap-symmetric");
    return KernelExpression<R>{P, Q, Qtilde};
}

template <CoefficientRing R>
KernelExpression<R> shift_kernel(const KernelExpression<R>& K, const KappaShift<R>& kappa, const NewtonPolygon& poly) {
    KernelExpression<R> out = K;
    for (const auto& [idx, v] : kappa) {
        const auto& [p, q] = idx;
        if (!poly.is_interior(p) || !poly.is_interior(q))
            throw InputError("kappa index " + to_string(p) + "," + to_string(q) + " is outside the interior");
        auto it = kappa.find({q, p});
        if (it == kappa.end() || !(it->second == v)) throw InputError("kappa is not symmetric");
        out.Q.add_term({p.i - 1, p.j - 1, q.i - 1, q.j - 1}, R(-v));
    }
    return out;
}

bool is_interior_term(const QuadKey& k, const NewtonPolygon& poly) {
    return poly.is_interior({k[0] + 1, k[1] + 1}) && poly.is_interior({k[2] + 1, k[3] + 1});
}

template <CoefficientRing R>
QuadPoly<R> non_interior_part(const QuadPoly<R>& Q, const NewtonPolygon& poly) {
    QuadPoly<R> out;
    for (const auto& [k, c] : Q.terms())
        if (!is_interior_term(k, poly)) out.add_term(k, c);
    return out;
}

template <CoefficientRing R>
bool equal_mod_interior(const QuadPoly<R>& Qa, const QuadPoly<R>& Qb, const NewtonPolygon& poly) {
    return non_interior_part(Qa - Qb, poly).is_zero();
}

SqrtPart poly_sqrt_part(const UniPoly& Peven) {
    const int d = Peven.degree();
    if (d <= 0 || d % 2) throw InputError("not hyperelliptic-normalizable: degree must be even and positive");
    const Rational& lead = Peven.lead();
    if (sgn(lead) < 0 || !mpz_perfect_square_p(lead.get_num_mpz_t()) ||
        !mpz_perfect_square_p(lead.get_den_mpz_t()))
        throw InputError("not hyperelliptic-normalizable: leading coefficient is not a square");
    const int g = d / 2;
    std::vector<Rational> u(g + 1, Rational(0));
    Integer num, den;
    mpz_sqrt(num.get_mpz_t(), lead.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), lead.get_den_mpz_t());
    u[g] = Rational(num, den);
    for (int k = g - 1; k >= 0; --k) {
        Rational acc = Peven.coeff(g + k);
        for (int i = k + 1; i < g; ++i) {
            int j = g + k - i;
            if (j > k && j < g + 1 && j != g) acc -= u[i] * u[j];
        }
        u[k] = acc / (2 * u[g]);
    }
    SqrtPart r;
    r.U = UniPoly(u);
    r.V = Peven - r.U * r.U;
    return r;
}

HyperellipticForm hyperelliptic_kernel(const UniPoly& Peven) {
    auto [U, V] = poly_sqrt_part(Peven);
    HyperellipticForm h;
    const Rational half(1, 2);
    for (int a = 0; a <= U.degree(); ++a)
        for (int b = 0; b <= U.degree(); ++b) h.R.add_term({a, 0, b, 0}, U.coeff(a) * U.coeff(b));
    for (int a = 0; a <= V.degree(); ++a) {
        h.R.add_term({a, 0, 0, 0}, half * V.coeff(a));
        h.R.add_term({0, 0, a, 0}, half * V.coeff(a));
    }
    return h;
}

QuadPoly<Rational> hyperelliptic_Q(const UniPoly& Peven) {
    auto U = poly_sqrt_part(Peven).U;
    QuadPoly<Rational> dq;  // (U(x) - U(x'))/(x - x')
    for (int k = 1; k <= U.degree(); ++k)
        for (int a = 0; a < k; ++a) dq.add_term({a, 0, k - 1 - a, 0}, U.coeff(k));
    QuadPoly<Rational> sq = dq * dq;
    return Rational(-1) * sq;
}

std::optional<UniPoly> hyperelliptic_rhs(const LaurentPoly2<Rational>& P) {
    Rational a = P.coeff(0, 2);
    if (sgn(a) == 0) return std::nullopt;
    std::vector<Rational> g;
    for (const auto& [k, c] : P.terms()) {
        if (k.i == 0 && k.j == 2) continue;
        if (k.j != 0 || k.i < 0) return std::nullopt;
        if (static_cast<int>(g.size()) <= k.i) g.resize(k.i + 1, Rational(0));
        g[k.i] = -c / a;
    }
    return UniPoly(g);
}

std::optional<HyperellipticForm> simplify_hyperelliptic(const KernelExpression<Rational>& K) {
    auto f = hyperelliptic_rhs(K.P);
    if (!f) return std::nullopt;
    const Rational a = K.P.coeff(0, 2);
    QuadPoly<Rational> T = K.total();
    for (const auto& [k, c] : T.terms())
        if (k[1] != 0 || k[3] != 0) return std::nullopt;
    HyperellipticForm h;
    const Rational half(1, 2);
    for (int e = 0; e <= f->degree(); ++e) {
        h.R.add_term({e, 0, 0, 0}, half * f->coeff(e));
        h.R.add_term({0, 0, e, 0}, half * f->coeff(e));
    }
    QuadPoly<Rational> d2;  // (x - x')^2
    d2.add_term({2, 0, 0, 0}, 1);
    d2.add_term({1, 0, 1, 0}, -2);
    d2.add_term({0, 0, 2, 0}, 1);
    Rational scale = 1 / (2 * a * a);
    h.R += scale * (T * d2);
    return h;
}

std::string HyperellipticForm::str() const {
    std::string r = to_string(R);
    std::string num = "y*y'";
    if (r != "0") num += (r[0] == '-' ? " - " + r.substr(1) : " + " + r);
    return "(" + num + ")/(2*y*y'*(x - x')^2) dx dx'";
}

template <CoefficientRing R>
QuadPoly<R> ns_curve_Q(const LaurentPoly2<R>& P, int n, int s) {
    if (n < 1 || s < 1 || std::gcd(n, s) != 1) throw InputError("(n,s) must be positive and coprime");
    if (!(P.coeff(0, n) == R(ring_traits<R>::one())) || !(P.coeff(s, 0) == R(-ring_traits<R>::one())))
        throw InputError("support does not have the (n,s) shape: need y^n - x^s leading terms");
    for (const auto& [k, c] : P.terms()) {
        if ((k.i == 0 && k.j == n) || (k.i == s && k.j == 0)) continue;
        if (k.i < 0 || k.j < 0 || static_cast<long>(n) * k.i + static_cast<long>(s) * k.j >= static_cast<long>(n) * s)
            throw InputError("support does not have the (n,s) shape at " + to_string(k));
    }
    QuadPoly<R> Q;
    auto add_sym = [&Q](const QuadKey& k, const R& c) {
        Q.add_term(k, c);
        Q.add_term(QuadPoly<R>::swap_key(k), c);
    };
    const R one = ring_traits<R>::one();
    for (int k = 1; k < s; ++k)
        for (int l = 1; l < n; ++l)
            if (k * n + l * s < n * s)
                add_sym({s - k - 1, n - l - 1, k - 1, l - 1}, ring_traits<R>::scale(one, Rational(-k * l)));
    for (int u = 1; u < s; ++u)
        for (int v = 1; v < n; ++v) {
            if (u * n + v * s <= n * s) continue;
            for (int up = 1; up < s; ++up)
                for (int vp = 1; vp < n; ++vp) {
                    if (up * n + vp * s >= n * s) continue;
                    for (int k = 1; k <= std::min(up, s - u); ++k)
                        for (int l = 1; l <= std::min(vp, n - v); ++l) {
                            LatticePoint A{u + k, vp - l}, B{up - k, v + l};
                            bool leading = (A == LatticePoint{s, 0} && B == LatticePoint{0, n}) ||
                                           (B == LatticePoint{s, 0} && A == LatticePoint{0, n});
                            if (leading) continue;
                            R c = P.coeff(A.i, A.j) * P.coeff(B.i, B.j);
                            if (ring_traits<R>::is_zero(c)) continue;
                            add_sym({u - 1, v - 1, up - 1, vp - 1}, ring_traits<R>::scale(c, Rational(k * l)));
                        }
                }
        }
    return Q;
}

template <CoefficientRing R>
std::optional<QuadKey> mutation_target(const QuadPoly<R>& Q, const NewtonPolygon& poly) {
    std::vector<QuadKey> keys;
    for (const auto& [k, c] : Q.terms()) keys.push_back(k);
    std::sort(keys.begin(), keys.end(), canonical_less<QuadKey>);
    for (const auto& k : keys)
        if (!poly.is_interior({k[0] + 1, k[1] + 1})) return k;
    return std::nullopt;
}

#define CURVEB_INSTANTIATE(R)                                                                          \
    template QuadPoly<R> compute_Q(const LaurentPoly2<R>&, const NewtonPolygon&, SegmentMode);        \
    template KernelExpression<R> assemble_kernel(const LaurentPoly2<R>&, const QuadPoly<R>&,          \
                                                 const QuadPoly<R>&);                                 \
    template KernelExpression<R> shift_kernel(const KernelExpression<R>&, const KappaShift<R>&,       \
                                              const NewtonPolygon&);                                  \
    template bool equal_mod_interior(const QuadPoly<R>&, const QuadPoly<R>&, const NewtonPolygon&);   \
    template QuadPoly<R> non_interior_part(const QuadPoly<R>&, const NewtonPolygon&);                 \
    template QuadPoly<R> ns_curve_Q(const LaurentPoly2<R>&, int, int);                                \
    template std::optional<QuadKey> mutation_target(const QuadPoly<R>&, const NewtonPolygon&);

CURVEB_INSTANTIATE(Rational)
CURVEB_INSTANTIATE(ParamPoly)

}  // namespace curveb
