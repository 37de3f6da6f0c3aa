#include "curveb/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "curveb/errors.hpp"

namespace curveb {

ComplexBall evaluate(const UniPoly& f, const ComplexBall& x) {
    ComplexBall r(x.prec());
    const auto& c = f.coeffs();
    for (size_t k = c.size(); k-- > 0;) {
        r = r * x;
        r += ComplexBall::from_rational(c[k], x.prec());
    }
    return r;
}

namespace {

using cld = std::complex<long double>;

// Minimal MPFR complex used by the high-precision iteration (no error tracking).
struct Cx {
    Real re, im;
    explicit Cx(mpfr_prec_t p) : re(p), im(p) {}
};

void cx_mul(Cx& r, const Cx& a, const Cx& b) {
    Real t(r.re.prec());
    mpfr_fmms(t.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_fmma(r.im.get(), a.re.get(), b.im.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_swap(r.re.get(), t.get());
}

void cx_div(Cx& r, const Cx& a, const Cx& b) {
    mpfr_prec_t p = r.re.prec();
    Real d(p), t(p), u(p);
    mpfr_fmma(d.get(), b.re.get(), b.re.get(), b.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_fmma(t.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_fmms(u.get(), a.im.get(), b.re.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_div(r.re.get(), t.get(), d.get(), MPFR_RNDN);
    mpfr_div(r.im.get(), u.get(), d.get(), MPFR_RNDN);
}

void cx_add(Cx& r, const Cx& a, const Cx& b) {
    mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
}

void cx_sub(Cx& r, const Cx& a, const Cx& b) {
    mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
}

// Initial points on circles read off the upper hull of (k, log|a_k|).
std::vector<cld> initial_points(const std::vector<long double>& logabs, int n) {
    std::vector<int> idx;
    for (int k = 0; k <= n; ++k) {
        if (!std::isfinite(logabs[k])) continue;
        while (idx.size() >= 2) {
            int a = idx[idx.size() - 2], b = idx.back();
            long double cr = (b - a) * (logabs[k] - logabs[a]) - (k - a) * (logabs[b] - logabs[a]);
            if (cr >= 0) idx.pop_back();
            else break;
        }
        idx.push_back(k);
    }
    std::vector<cld> z;
    const long double tau = 2 * 3.14159265358979323846L;
    for (size_t e = 0; e + 1 < idx.size(); ++e) {
        int a = idx[e], b = idx[e + 1];
        int cnt = b - a;
        long double u = std::exp((logabs[a] - logabs[b]) / cnt);
        for (int j = 0; j < cnt; ++j) {
            long double ang = tau * j / cnt + tau * e / n + 0.7L;
            z.push_back(std::polar(u, ang));
        }
    }
    return z;
}

bool aberth_long_double(const std::vector<long double>& c, std::vector<cld>& z) {
    const int n = static_cast<int>(c.size()) - 1;
    std::vector<bool> done(n, false);
    for (int it = 0; it < 3000; ++it) {
        bool all = true;
        for (int i = 0; i < n; ++i) {
            if (done[i]) continue;
            cld p = c[n], dp = 0;
            for (int k = n - 1; k >= 0; --k) {
                dp = dp * z[i] + p;
                p = p * z[i] + c[k];
            }
            if (p == cld(0)) { done[i] = true; continue; }
            cld ratio = p / dp;
            cld s = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) s += cld(1) / (z[i] - z[j]);
            cld delta = ratio / (cld(1) - ratio * s);
            if (!std::isfinite(delta.real()) || !std::isfinite(delta.imag())) return false;
            z[i] -= delta;
            if (std::abs(delta) <= 1e-18L * std::abs(z[i])) done[i] = true;
            else all = false;
        }
        if (all) return true;
    }
    return true;  // not converged; high-precision stage continues
}

// Aberth iterations at precision wp from the given starting points.
void aberth_mpfr(const std::vector<Rational>& coeffs, std::vector<Cx>& z, mpfr_prec_t wp, int max_iter) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    std::vector<Cx> c;
    for (const auto& q : coeffs) {
        Cx v(wp);
        mpfr_set_q(v.re.get(), q.get_mpq_t(), MPFR_RNDN);
        c.push_back(std::move(v));
    }
    std::vector<bool> done(n, false);
    Cx p(wp), dp(wp), t(wp), s(wp), one(wp), ratio(wp), delta(wp), diff(wp), q(wp);
    mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
    Real a(64), b(64);
    for (int it = 0; it < max_iter; ++it) {
        bool all = true;
        for (int i = 0; i < n; ++i) {
            if (done[i]) continue;
            mpfr_set(p.re.get(), c[n].re.get(), MPFR_RNDN);
            mpfr_set_zero(p.im.get(), 1);
            mpfr_set_zero(dp.re.get(), 1);
            mpfr_set_zero(dp.im.get(), 1);
            for (int k = n - 1; k >= 0; --k) {
                cx_mul(t, dp, z[i]);
                cx_add(dp, t, p);
                cx_mul(t, p, z[i]);
                cx_add(p, t, c[k]);
            }
            if (mpfr_zero_p(p.re.get()) && mpfr_zero_p(p.im.get())) { done[i] = true; continue; }
            cx_div(ratio, p, dp);
            mpfr_set_zero(s.re.get(), 1);
            mpfr_set_zero(s.im.get(), 1);
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                cx_sub(diff, z[i], z[j]);
                cx_div(q, one, diff);
                cx_add(s, s, q);
            }
            cx_mul(t, ratio, s);
            cx_sub(t, one, t);
            cx_div(delta, ratio, t);
            cx_sub(z[i], z[i], delta);
            mpfr_hypot(a.get(), delta.re.get(), delta.im.get(), MPFR_RNDN);
            mpfr_hypot(b.get(), z[i].re.get(), z[i].im.get(), MPFR_RNDN);
            mpfr_mul_2si(b.get(), b.get(), -static_cast<long>(wp) + 6, MPFR_RNDN);
            if (mpfr_cmp(a.get(), b.get()) <= 0) done[i] = true;
            else all = false;
        }
        if (all) return;
    }
}

// Gershgorin disks of the Weierstrass matrix; empty result when disks overlap.
std::vector<ComplexBall> certify(const UniPoly& g, const std::vector<Cx>& z, mpfr_prec_t wp) {
    const int n = g.degree();
    std::vector<ComplexBall> zb;
    for (const auto& v : z) zb.push_back(ComplexBall::from_mid(v.re, v.im, wp));
    ComplexBall lc = ComplexBall::from_rational(g.lead(), wp);
    std::vector<ComplexBall> centers;
    std::vector<Real> radii;
    for (int i = 0; i < n; ++i) {
        ComplexBall den = lc;
        for (int j = 0; j < n; ++j)
            if (j != i) den = den * (zb[i] - zb[j]);
        if (den.contains_zero()) return {};
        ComplexBall w = evaluate(g, zb[i]) / den;
        ComplexBall c = zb[i] - w;
        Real r = w.abs_upper();
        mpfr_mul_ui(r.get(), r.get(), static_cast<unsigned long>(n - 1), MPFR_RNDU);
        mpfr_add(r.get(), r.get(), c.rad().get(), MPFR_RNDU);
        ComplexBall disk = ComplexBall::from_mid(c.re(), c.im(), wp);
        disk.add_error(r);
        centers.push_back(disk);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (centers[i].overlaps(centers[j])) return {};
    return centers;
}

std::vector<ComplexBall> isolate_squarefree(const UniPoly& g, mpfr_prec_t prec) {
    const int n = g.degree();
    if (n == 1) {
        Rational r = -g.coeff(0) / g.coeff(1);
        return {ComplexBall::from_rational(r, prec)};
    }
    std::vector<long double> cl(n + 1), logabs(n + 1);
    bool ld_ok = true;
    for (int k = 0; k <= n; ++k) {
        Real t(64);
        mpfr_set_q(t.get(), g.coeff(k).get_mpq_t(), MPFR_RNDN);
        cl[k] = mpfr_get_ld(t.get(), MPFR_RNDN);
        if (mpfr_zero_p(t.get())) {
            logabs[k] = -INFINITY;
        } else {
            long e;
            double m = mpfr_get_d_2exp(&e, t.get(), MPFR_RNDN);
            logabs[k] = std::log(std::fabs(m)) + e * std::log(2.0L);
        }
        if (!std::isfinite(cl[k]) || (cl[k] == 0 && !mpfr_zero_p(t.get()))) ld_ok = false;
    }
    std::vector<cld> z0 = initial_points(logabs, n);
    if (ld_ok) {
        std::vector<cld> z = z0;
        if (aberth_long_double(cl, z)) z0 = z;
    }
    for (mpfr_prec_t wp = prec + 32; wp <= 4 * prec + 64; wp *= 2) {
        std::vector<Cx> z;
        for (const auto& v : z0) {
            Cx c(wp);
            mpfr_set_ld(c.re.get(), v.real(), MPFR_RNDN);
            mpfr_set_ld(c.im.get(), v.imag(), MPFR_RNDN);
            z.push_back(std::move(c));
        }
        aberth_mpfr(g.coeffs(), z, wp, 400);
        auto cert = certify(g, z, wp);
        if (!cert.empty()) return cert;
        for (int i = 0; i < n; ++i)
            z0[i] = cld(mpfr_get_ld(z[i].re.get(), MPFR_RNDN), mpfr_get_ld(z[i].im.get(), MPFR_RNDN));
    }
    throw PrecisionExhausted("could not certify isolated roots of a degree-" + std::to_string(n) + " polynomial");
}

}  // namespace

void sort_by_modulus_then_arg(std::vector<RootCluster>& r) {
    std::sort(r.begin(), r.end(), [](const RootCluster& a, const RootCluster& b) {
        return mpfr_cmp(a.z.abs_upper().get(), b.z.abs_upper().get()) > 0;
    });
    // Groups of overlapping moduli are tie-broken by argument.
    size_t start = 0;
    while (start < r.size()) {
        size_t end = start + 1;
        Real lo = r[start].z.abs_lower();
        while (end < r.size()) {
            Real hi = r[end].z.abs_upper();
            if (mpfr_cmp(hi.get(), lo.get()) < 0) break;
            Real l2 = r[end].z.abs_lower();
            if (mpfr_cmp(l2.get(), lo.get()) < 0) lo = l2;
            ++end;
        }
        std::stable_sort(r.begin() + start, r.begin() + end,
                         [](const RootCluster& a, const RootCluster& b) { return a.z.arg() < b.z.arg(); });
        start = end;
    }
}

std::vector<RootCluster> complex_root_clusters(const UniPoly& f0, mpfr_prec_t prec) {
    if (f0.is_zero()) throw InputError("roots of the zero polynomial");
    if (prec < 64) throw InputError("precision must be at least 64 bits");
    std::vector<RootCluster> out;
    int k = f0.low_order();
    if (k > 0) out.push_back({ComplexBall(prec), k});
    std::vector<Rational> c(f0.coeffs().begin() + k, f0.coeffs().end());
    UniPoly f(std::move(c));
    if (f.degree() > 0) {
        auto parts = squarefree_decomposition(f);
        for (size_t m = 0; m < parts.size(); ++m) {
            if (parts[m].degree() <= 0) continue;
            for (auto& z : isolate_squarefree(parts[m], prec)) out.push_back({z, static_cast<int>(m + 1)});
        }
    }
    sort_by_modulus_then_arg(out);
    return out;
}

std::vector<ComplexBall> complex_roots(const UniPoly& f, mpfr_prec_t prec) {
    std::vector<ComplexBall> out;
    for (auto& r : complex_root_clusters(f, prec))
        for (int m = 0; m < r.multiplicity; ++m) out.push_back(r.z);
    return out;
}

}  // namespace curveb
