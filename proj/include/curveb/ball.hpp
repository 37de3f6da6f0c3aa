#pragma once
#include <mpfr.h>

#include <string>

#include "curveb/ring.hpp"

namespace curveb {

// RAII wrapper over mpfr_t; the precision travels with the value.
class Real {
public:
    explicit Real(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { v_[0] = o.v_[0]; o.v_->_mpfr_d = nullptr; }
    Real& operator=(const Real& o) {
        if (this != &o) {
            if (!v_->_mpfr_d) mpfr_init2(v_, mpfr_get_prec(o.v_));
            else mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        std::swap(v_[0], o.v_[0]);
        return *this;
    }
    ~Real() { if (v_->_mpfr_d) mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

private:
    mpfr_t v_;
};

constexpr mpfr_prec_t kRadiusPrec = 32;

// Complex midpoint-radius ball: {z : |z - (re + i im)| <= rad}.
class ComplexBall {
public:
    explicit ComplexBall(mpfr_prec_t prec = 64);
    static ComplexBall from_rational(const Rational& re, mpfr_prec_t prec);
    static ComplexBall from_rationals(const Rational& re, const Rational& im, mpfr_prec_t prec);
    static ComplexBall from_int(long v, mpfr_prec_t prec);
    static ComplexBall from_mid(const Real& re, const Real& im, mpfr_prec_t prec);
    static ComplexBall from_double(double re, double im, mpfr_prec_t prec);

    mpfr_prec_t prec() const { return re_.prec(); }
    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    const Real& rad() const { return rad_; }

    ComplexBall& operator+=(const ComplexBall& o);
    ComplexBall& operator-=(const ComplexBall& o);
    ComplexBall& operator*=(const ComplexBall& o);
    ComplexBall& operator/=(const ComplexBall& o) { return *this *= o.inverse(); }
    friend ComplexBall operator+(ComplexBall a, const ComplexBall& b) { return a += b; }
    friend ComplexBall operator-(ComplexBall a, const ComplexBall& b) { return a -= b; }
    friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
    friend ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) { return a * b.inverse(); }
    ComplexBall operator-() const;

    ComplexBall mul_si(long k) const;
    ComplexBall mul_2si(long e) const;  // exact scaling by 2^e
    ComplexBall inverse() const;         // throws PrecisionExhausted if 0 may be inside
    ComplexBall pow(long n) const;
    ComplexBall conj() const;

    // Enlarge the radius by a nonnegative bound.
    void add_error(const Real& e);
    void add_error_2exp(long e);  // by 2^e

    bool contains_zero() const;
    bool certified_nonzero() const { return !contains_zero(); }
    bool is_exact() const { return mpfr_zero_p(rad_.get()); }
    bool overlaps(const ComplexBall& o) const;

    Real abs_upper() const;  // radius precision, rounded up
    Real abs_lower() const;  // radius precision, rounded down, clamped at 0
    // log2 of abs_upper (or -inf when exactly zero); cheap magnitude summary for reports.
    double log2_upper() const;
    double arg() const;       // principal argument of the midpoint in (-pi, pi]
    double mid_abs() const;

    // Midpoint as exact rationals.
    Rational re_rational() const;
    Rational im_rational() const;

    std::string str(int digits = 20) const;

private:
    Real re_, im_, rad_;
};

// |z| < 2^e certified.
bool abs_less_2exp(const ComplexBall& z, long e);
// |z| >= 2^e certified.
bool abs_at_least_2exp(const ComplexBall& z, long e);

}  // namespace curveb
