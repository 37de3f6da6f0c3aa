#include "curveb/ball.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "curveb/errors.hpp"

namespace curveb {

namespace {

constexpr mpfr_rnd_t N = MPFR_RNDN;
constexpr mpfr_rnd_t U = MPFR_RNDU;
constexpr mpfr_rnd_t D = MPFR_RNDD;

// out += |x| * 2^-p, rounded up.
void add_rounding(Real& out, mpfr_srcptr x, mpfr_prec_t p) {
    Real t(kRadiusPrec);
    mpfr_abs(t.get(), x, U);
    mpfr_mul_2si(t.get(), t.get(), -static_cast<long>(p), U);
    mpfr_add(out.get(), out.get(), t.get(), U);
}

// Upper bound of |re| + |im| at radius precision.
Real l1_upper(const Real& re, const Real& im) {
    Real a(kRadiusPrec), b(kRadiusPrec);
    mpfr_abs(a.get(), re.get(), U);
    mpfr_abs(b.get(), im.get(), U);
    mpfr_add(a.get(), a.get(), b.get(), U);
    return a;
}

// Lower bound of sqrt(re^2 + im^2).
Real modulus_lower(const Real& re, const Real& im) {
    Real a(kRadiusPrec), b(kRadiusPrec);
    mpfr_abs(a.get(), re.get(), D);
    mpfr_abs(b.get(), im.get(), D);
    mpfr_sqr(a.get(), a.get(), D);
    mpfr_sqr(b.get(), b.get(), D);
    mpfr_add(a.get(), a.get(), b.get(), D);
    mpfr_sqrt(a.get(), a.get(), D);
    return a;
}

Real modulus_upper(const Real& re, const Real& im) {
    Real a(kRadiusPrec), b(kRadiusPrec);
    mpfr_abs(a.get(), re.get(), U);
    mpfr_abs(b.get(), im.get(), U);
    mpfr_sqr(a.get(), a.get(), U);
    mpfr_sqr(b.get(), b.get(), U);
    mpfr_add(a.get(), a.get(), b.get(), U);
    mpfr_sqrt(a.get(), a.get(), U);
    return a;
}

}  // namespace

ComplexBall::ComplexBall(mpfr_prec_t prec) : re_(prec), im_(prec), rad_(kRadiusPrec) {}

ComplexBall ComplexBall::from_rational(const Rational& re, mpfr_prec_t prec) {
    ComplexBall z(prec);
    if (mpfr_set_q(z.re_.get(), re.get_mpq_t(), N) != 0) add_rounding(z.rad_, z.re_.get(), prec);
    return z;
}

ComplexBall ComplexBall::from_rationals(const Rational& re, const Rational& im, mpfr_prec_t prec) {
    ComplexBall z = from_rational(re, prec);
    if (mpfr_set_q(z.im_.get(), im.get_mpq_t(), N) != 0) add_rounding(z.rad_, z.im_.get(), prec);
    return z;
}

ComplexBall ComplexBall::from_int(long v, mpfr_prec_t prec) {
    ComplexBall z(prec);
    if (mpfr_set_si(z.re_.get(), v, N) != 0) add_rounding(z.rad_, z.re_.get(), prec);
    return z;
}

ComplexBall ComplexBall::from_mid(const Real& re, const Real& im, mpfr_prec_t prec) {
    ComplexBall z(prec);
    if (mpfr_set(z.re_.get(), re.get(), N) != 0) add_rounding(z.rad_, z.re_.get(), prec);
    if (mpfr_set(z.im_.get(), im.get(), N) != 0) add_rounding(z.rad_, z.im_.get(), prec);
    return z;
}

ComplexBall ComplexBall::from_double(double re, double im, mpfr_prec_t prec) {
    ComplexBall z(std::max<mpfr_prec_t>(prec, 53));
    mpfr_set_d(z.re_.get(), re, N);
    mpfr_set_d(z.im_.get(), im, N);
    return z;
}

ComplexBall& ComplexBall::operator+=(const ComplexBall& o) {
    mpfr_prec_t p = std::max(prec(), o.prec());
    if (p > prec()) {
        mpfr_prec_round(re_.get(), p, N);
        mpfr_prec_round(im_.get(), p, N);
    }
    mpfr_add(rad_.get(), rad_.get(), o.rad_.get(), U);
    if (mpfr_add(re_.get(), re_.get(), o.re_.get(), N) != 0) add_rounding(rad_, re_.get(), p);
    if (mpfr_add(im_.get(), im_.get(), o.im_.get(), N) != 0) add_rounding(rad_, im_.get(), p);
    return *this;
}

ComplexBall& ComplexBall::operator-=(const ComplexBall& o) {
    mpfr_prec_t p = std::max(prec(), o.prec());
    if (p > prec()) {
        mpfr_prec_round(re_.get(), p, N);
        mpfr_prec_round(im_.get(), p, N);
    }
    mpfr_add(rad_.get(), rad_.get(), o.rad_.get(), U);
    if (mpfr_sub(re_.get(), re_.get(), o.re_.get(), N) != 0) add_rounding(rad_, re_.get(), p);
    if (mpfr_sub(im_.get(), im_.get(), o.im_.get(), N) != 0) add_rounding(rad_, im_.get(), p);
    return *this;
}

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    ComplexBall r(p);
    if (mpfr_fmms(r.re_.get(), a.re_.get(), b.re_.get(), a.im_.get(), b.im_.get(), N) != 0)
        add_rounding(r.rad_, r.re_.get(), p);
    if (mpfr_fmma(r.im_.get(), a.re_.get(), b.im_.get(), a.im_.get(), b.re_.get(), N) != 0)
        add_rounding(r.rad_, r.im_.get(), p);
    const bool ea = a.is_exact(), eb = b.is_exact();
    if (!(ea && eb)) {
        Real t(kRadiusPrec);
        if (!eb) {
            Real m = l1_upper(a.re_, a.im_);
            mpfr_mul(t.get(), m.get(), b.rad_.get(), U);
            mpfr_add(r.rad_.get(), r.rad_.get(), t.get(), U);
        }
        if (!ea) {
            Real m = l1_upper(b.re_, b.im_);
            mpfr_mul(t.get(), m.get(), a.rad_.get(), U);
            mpfr_add(r.rad_.get(), r.rad_.get(), t.get(), U);
        }
        if (!ea && !eb) {
            mpfr_mul(t.get(), a.rad_.get(), b.rad_.get(), U);
            mpfr_add(r.rad_.get(), r.rad_.get(), t.get(), U);
        }
    }
    return r;
}

ComplexBall& ComplexBall::operator*=(const ComplexBall& o) { return *this = *this * o; }

ComplexBall ComplexBall::operator-() const {
    ComplexBall r = *this;
    mpfr_neg(r.re_.get(), r.re_.get(), N);
    mpfr_neg(r.im_.get(), r.im_.get(), N);
    return r;
}

ComplexBall ComplexBall::conj() const {
    ComplexBall r = *this;
    mpfr_neg(r.im_.get(), r.im_.get(), N);
    return r;
}

ComplexBall ComplexBall::mul_si(long k) const {
    mpfr_prec_t p = prec();
    ComplexBall r(p);
    if (mpfr_mul_si(r.re_.get(), re_.get(), k, N) != 0) add_rounding(r.rad_, r.re_.get(), p);
    if (mpfr_mul_si(r.im_.get(), im_.get(), k, N) != 0) add_rounding(r.rad_, r.im_.get(), p);
    Real t(kRadiusPrec);
    mpfr_mul_ui(t.get(), rad_.get(), static_cast<unsigned long>(k < 0 ? -k : k), U);
    mpfr_add(r.rad_.get(), r.rad_.get(), t.get(), U);
    return r;
}

ComplexBall ComplexBall::mul_2si(long e) const {
    ComplexBall r = *this;
    mpfr_mul_2si(r.re_.get(), r.re_.get(), e, N);
    mpfr_mul_2si(r.im_.get(), r.im_.get(), e, N);
    mpfr_mul_2si(r.rad_.get(), r.rad_.get(), e, U);
    return r;
}

ComplexBall ComplexBall::inverse() const {
    const mpfr_prec_t p = prec();
    Real lo = modulus_lower(re_, im_);
    mpfr_sub(lo.get(), lo.get(), rad_.get(), D);
    if (mpfr_sgn(lo.get()) <= 0) throw PrecisionExhausted("division by a ball that may contain zero");
    ComplexBall r(p);
    Real d(p + 8);
    mpfr_fmma(d.get(), re_.get(), re_.get(), im_.get(), im_.get(), N);
    mpfr_div(r.re_.get(), re_.get(), d.get(), N);
    mpfr_div(r.im_.get(), im_.get(), d.get(), N);
    mpfr_neg(r.im_.get(), r.im_.get(), N);
    // Rounding: a few relative ulps on each component.
    Real e = l1_upper(r.re_, r.im_);
    mpfr_mul_2si(e.get(), e.get(), 3 - static_cast<long>(p), U);
    mpfr_add(r.rad_.get(), r.rad_.get(), e.get(), U);
    if (!is_exact()) {
        // |1/(m+e) - 1/m| <= r / (|m| (|m| - r))
        Real m = modulus_lower(re_, im_);
        Real den(kRadiusPrec);
        mpfr_mul(den.get(), m.get(), lo.get(), D);
        Real t(kRadiusPrec);
        mpfr_div(t.get(), rad_.get(), den.get(), U);
        mpfr_add(r.rad_.get(), r.rad_.get(), t.get(), U);
    }
    return r;
}

ComplexBall ComplexBall::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    ComplexBall result = from_int(1, prec());
    ComplexBall base = *this;
    bool first = true;
    while (n > 0) {
        if (n & 1) {
            result = first ? base : result * base;
            first = false;
        }
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

void ComplexBall::add_error(const Real& e) { mpfr_add(rad_.get(), rad_.get(), e.get(), U); }

void ComplexBall::add_error_2exp(long e) {
    Real t(kRadiusPrec);
    mpfr_set_ui_2exp(t.get(), 1, e, U);
    add_error(t);
}

bool ComplexBall::contains_zero() const {
    Real lo = modulus_lower(re_, im_);
    return mpfr_cmp(lo.get(), rad_.get()) <= 0;
}

bool ComplexBall::overlaps(const ComplexBall& o) const {
    Real dr(prec()), di(prec());
    mpfr_sub(dr.get(), re_.get(), o.re_.get(), N);
    mpfr_sub(di.get(), im_.get(), o.im_.get(), N);
    Real lo = modulus_lower(dr, di);
    Real r(kRadiusPrec);
    mpfr_add(r.get(), rad_.get(), o.rad_.get(), U);
    // Slack for the midpoint subtraction.
    Real s = l1_upper(dr, di);
    mpfr_mul_2si(s.get(), s.get(), 1 - static_cast<long>(prec()), U);
    mpfr_add(r.get(), r.get(), s.get(), U);
    return mpfr_cmp(lo.get(), r.get()) <= 0;
}

Real ComplexBall::abs_upper() const {
    Real a = modulus_upper(re_, im_);
    mpfr_add(a.get(), a.get(), rad_.get(), U);
    return a;
}

Real ComplexBall::abs_lower() const {
    Real a = modulus_lower(re_, im_);
    mpfr_sub(a.get(), a.get(), rad_.get(), D);
    if (mpfr_sgn(a.get()) < 0) mpfr_set_zero(a.get(), 1);
    return a;
}

double ComplexBall::log2_upper() const {
    Real a = abs_upper();
    if (mpfr_zero_p(a.get())) return -std::numeric_limits<double>::infinity();
    long e;
    double m = mpfr_get_d_2exp(&e, a.get(), U);
    return std::log2(m) + static_cast<double>(e);
}

double ComplexBall::arg() const {
    Real t(64);
    mpfr_atan2(t.get(), im_.get(), re_.get(), N);
    double a = t.to_double();
    // atan2 gives -pi for (-x, -0); fold into (-pi, pi].
    if (a <= -M_PI) a = M_PI;
    return a;
}

double ComplexBall::mid_abs() const {
    Real t(64);
    mpfr_hypot(t.get(), re_.get(), im_.get(), N);
    return t.to_double();
}

Rational ComplexBall::re_rational() const {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), re_.get());
    return q;
}

Rational ComplexBall::im_rational() const {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), im_.get());
    return q;
}

std::string ComplexBall::str(int digits) const {
    auto fmt = [digits](mpfr_srcptr v) {
        char buf[256];
        mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, v);
        return std::string(buf);
    };
    std::string s;
    bool im_zero = mpfr_zero_p(im_.get());
    if (im_zero) {
        s = fmt(re_.get());
    } else if (mpfr_zero_p(re_.get())) {
        s = fmt(im_.get()) + "*I";
    } else {
        std::string im = fmt(im_.get());
        s = fmt(re_.get()) + (im[0] == '-' ? " - " + im.substr(1) : " + " + im) + "*I";
    }
    if (!is_exact()) {
        char buf[64];
        mpfr_snprintf(buf, sizeof buf, "%.3Re", rad_.get());
        s += " +/- " + std::string(buf);
    }
    return s;
}

bool abs_less_2exp(const ComplexBall& z, long e) {
    Real a = z.abs_upper();
    return mpfr_cmp_ui_2exp(a.get(), 1, e) < 0;
}

bool abs_at_least_2exp(const ComplexBall& z, long e) {
    Real a = z.abs_lower();
    return mpfr_cmp_ui_2exp(a.get(), 1, e) >= 0;
}

}  // namespace curveb
