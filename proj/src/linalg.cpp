#include "curveb/linalg.hpp"

#include "curveb/errors.hpp"

namespace curveb {

namespace {

size_t pivot_row(const BallMatrix& a, size_t col, size_t from) {
    size_t best = from;
    double best_abs = -1;
    for (size_t r = from; r < a.size(); ++r) {
        double m = a[r][col].mid_abs();
        if (m > best_abs) {
            best_abs = m;
            best = r;
        }
    }
    return best;
}

}  // namespace

BallMatrix zeros(size_t rows, size_t cols, mpfr_prec_t prec) {
    return BallMatrix(rows, std::vector<ComplexBall>(cols, ComplexBall(prec)));
}

ComplexBall determinant(BallMatrix a) {
    const size_t n = a.size();
    mpfr_prec_t prec = n ? a[0][0].prec() : 64;
    ComplexBall det = ComplexBall::from_int(1, prec);
    for (size_t c = 0; c < n; ++c) {
        size_t p = pivot_row(a, c, c);
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        if (a[c][c].contains_zero()) {
            // Enclose det(trailing block) by the Hadamard bound.
            Real bound(kRadiusPrec);
            mpfr_set_ui(bound.get(), 1, MPFR_RNDU);
            for (size_t r = c; r < n; ++r) {
                Real row(kRadiusPrec);
                for (size_t k = c; k < n; ++k) {
                    Real u = a[r][k].abs_upper();
                    mpfr_mul(u.get(), u.get(), u.get(), MPFR_RNDU);
                    mpfr_add(row.get(), row.get(), u.get(), MPFR_RNDU);
                }
                mpfr_sqrt(row.get(), row.get(), MPFR_RNDU);
                mpfr_mul(bound.get(), bound.get(), row.get(), MPFR_RNDU);
            }
            Real d = det.abs_upper();
            mpfr_mul(bound.get(), bound.get(), d.get(), MPFR_RNDU);
            ComplexBall e(prec);
            e.add_error(bound);
            return e;
        }
        ComplexBall inv = a[c][c].inverse();
        det = det * a[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            ComplexBall f = a[r][c] * inv;
            for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

BallMatrix solve(BallMatrix a, BallMatrix b) {
    const size_t n = a.size();
    if (n == 0) return b;
    const size_t m = b.empty() ? 0 : b[0].size();
    for (size_t c = 0; c < n; ++c) {
        size_t p = pivot_row(a, c, c);
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        if (a[c][c].contains_zero()) throw PrecisionExhausted("linear system is not certified nonsingular");
        ComplexBall inv = a[c][c].inverse();
        for (size_t k = c; k < n; ++k) a[c][k] = a[c][k] * inv;
        for (size_t k = 0; k < m; ++k) b[c][k] = b[c][k] * inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == c) continue;
            ComplexBall f = a[r][c];
            for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            for (size_t k = 0; k < m; ++k) b[r][k] -= f * b[c][k];
        }
    }
    return b;
}

BallMatrix multiply(const BallMatrix& a, const BallMatrix& b) {
    if (a.empty() || b.empty()) return zeros(a.size(), b.empty() ? 0 : b[0].size(), 64);
    mpfr_prec_t prec = b[0].empty() ? 64 : b[0][0].prec();
    BallMatrix r = zeros(a.size(), b[0].size(), prec);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k)
            for (size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

BallMatrix transpose(const BallMatrix& a) {
    if (a.empty()) return {};
    BallMatrix r = zeros(a[0].size(), a.size(), a[0].empty() ? 64 : a[0][0].prec());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
    return r;
}

Rational rationalize(const ComplexBall& z, long bits) {
    if (!abs_less_2exp(ComplexBall::from_mid(z.im(), Real(z.prec()), z.prec()), -bits) ||
        mpfr_cmp_ui_2exp(z.rad().get(), 1, -bits) >= 0)
        throw PrecisionExhausted("rational reconstruction failed: value is not certified real to 2^-" +
                                 std::to_string(bits));
    Rational x = z.re_rational();
    Rational tol(1);
    mpz_mul_2exp(tol.get_den_mpz_t(), tol.get_den_mpz_t(), bits);
    Integer den_limit(1);
    mpz_mul_2exp(den_limit.get_mpz_t(), den_limit.get_mpz_t(), bits / 2);
    // Convergents h/k of the continued fraction of x.
    Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    Rational r = x;
    for (int it = 0; it < 4 * bits + 8; ++it) {
        Integer a;
        mpz_fdiv_q(a.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
        Integer h2 = a * h1 + h0, k2 = a * k1 + k0;
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        if (k1 > den_limit) break;
        Rational c(h1, k1);
        c.canonicalize();
        if (abs(c - x) < tol) return c;
        Rational frac = r - Rational(a);
        if (sgn(frac) == 0) break;
        r = 1 / frac;
    }
    throw PrecisionExhausted("rational reconstruction failed within 2^-" + std::to_string(bits));
}

}  // namespace curveb
