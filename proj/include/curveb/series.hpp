#pragma once
#include <map>
#include <vector>

#include "curveb/ball.hpp"
#include "curveb/poly.hpp"

namespace curveb {

// Truncated Laurent series sum_{k<N} c[k] z^(val+k) + O(z^(val+N)) with ball coefficients.
class Series {
public:
    Series() = default;
    Series(int val, std::vector<ComplexBall> c, mpfr_prec_t prec) : val_(val), c_(std::move(c)), prec_(prec) {}
    // a z^val known to relative length n (the tail is exactly zero).
    static Series monomial(const ComplexBall& a, int val, int n);
    static Series constant(const ComplexBall& a, int n) { return monomial(a, 0, n); }
    static Series zero(int val, int n, mpfr_prec_t prec);

    int val() const { return val_; }
    int length() const { return static_cast<int>(c_.size()); }
    int end() const { return val_ + length(); }  // absolute truncation order
    mpfr_prec_t prec() const { return prec_; }
    const std::vector<ComplexBall>& coeffs() const { return c_; }
    // Coefficient of z^k; zero below val, throws past the truncation order.
    ComplexBall coeff(int k) const;

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(const ComplexBall& s, const Series& a);
    Series operator-() const;
    Series inverse() const;  // throws PrecisionExhausted unless the leading term is certified nonzero
    friend Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }
    Series pow(long n) const;
    Series derivative() const;
    // Multiply by z^k.
    Series shifted(int k) const;
    // Keep terms below absolute order e.
    Series truncated(int e) const;
    // Drop the first k coefficients (known to vanish).
    Series drop_leading(int k) const;
    // Number of leading coefficients whose balls contain zero.
    int uncertified_leading() const;

private:
    int val_ = 0;
    std::vector<ComplexBall> c_;
    mpfr_prec_t prec_ = 64;
};

// Caches integer powers of a base series.
class PowerCache {
public:
    explicit PowerCache(Series base) : base_(std::move(base)) {}
    const Series& get(long n);

private:
    Series base_;
    std::map<long, Series> cache_;
};

ComplexBall to_ball(const Rational& q, mpfr_prec_t prec);

Series evaluate(const LaurentPoly2<Rational>& P, const Series& x, const Series& y);
ComplexBall evaluate(const LaurentPoly2<Rational>& P, const ComplexBall& x, const ComplexBall& y);
// Evaluate a QuadPoly with the primed variables fixed at a point.
Series evaluate(const QuadPoly<Rational>& Q, const Series& x, const Series& y, const ComplexBall& xp,
                const ComplexBall& yp);
Series evaluate(const QuadPoly<Rational>& Q, const Series& x, const Series& y, const Series& xp, const Series& yp);
ComplexBall evaluate(const QuadPoly<Rational>& Q, const ComplexBall& x, const ComplexBall& y,
                     const ComplexBall& xp, const ComplexBall& yp);

}  // namespace curveb
