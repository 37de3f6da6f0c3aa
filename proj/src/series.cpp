#include "curveb/series.hpp"

#include <algorithm>

#include "curveb/errors.hpp"

namespace curveb {

Series Series::monomial(const ComplexBall& a, int val, int n) {
    std::vector<ComplexBall> c(std::max(n, 0), ComplexBall(a.prec()));
    if (n > 0) c[0] = a;
    return Series(val, std::move(c), a.prec());
}

Series Series::zero(int val, int n, mpfr_prec_t prec) {
    return Series(val, std::vector<ComplexBall>(std::max(n, 0), ComplexBall(prec)), prec);
}

ComplexBall Series::coeff(int k) const {
    if (k >= end()) throw PrecisionExhausted("series coefficient of order " + std::to_string(k) + " is not known");
    if (k < val_) return ComplexBall(prec_);
    return c_[k - val_];
}

Series& Series::operator+=(const Series& o) {
    int v = std::min(val_, o.val_);
    int e = std::min(end(), o.end());
    std::vector<ComplexBall> c(std::max(e - v, 0), ComplexBall(prec_));
    for (int k = v; k < e; ++k) {
        if (k >= val_ && k < end()) c[k - v] += c_[k - val_];
        if (k >= o.val_ && k < o.end()) c[k - v] += o.c_[k - o.val_];
    }
    val_ = v;
    c_ = std::move(c);
    return *this;
}

Series& Series::operator-=(const Series& o) { return *this += -o; }

Series Series::operator-() const {
    Series r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Series operator*(const Series& a, const Series& b) {
    const int n = std::min(a.length(), b.length());
    Series r = Series::zero(a.val_ + b.val_, n, a.prec_);
    for (int i = 0; i < n; ++i) {
        if (a.c_[i].is_exact() && mpfr_zero_p(a.c_[i].re().get()) && mpfr_zero_p(a.c_[i].im().get())) continue;
        for (int j = 0; i + j < n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

Series operator*(const ComplexBall& s, const Series& a) {
    Series r = a;
    for (auto& x : r.c_) x = s * x;
    return r;
}

Series Series::inverse() const {
    if (c_.empty()) throw PrecisionExhausted("cannot invert a series with no known terms");
    if (!c_[0].certified_nonzero()) throw PrecisionExhausted("leading series coefficient is not certified nonzero");
    const int n = length();
    std::vector<ComplexBall> r(n, ComplexBall(prec_));
    ComplexBall inv0 = c_[0].inverse();
    r[0] = inv0;
    for (int k = 1; k < n; ++k) {
        ComplexBall acc(prec_);
        for (int j = 1; j <= k; ++j) acc += c_[j] * r[k - j];
        r[k] = -(acc * inv0);
    }
    return Series(-val_, std::move(r), prec_);
}

Series Series::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    Series result = constant(ComplexBall::from_int(1, prec_), length());
    Series base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

Series Series::derivative() const {
    Series r = zero(val_ - 1, length(), prec_);
    for (int k = 0; k < length(); ++k) r.c_[k] = c_[k].mul_si(val_ + k);
    return r;
}

Series Series::shifted(int k) const {
    Series r = *this;
    r.val_ += k;
    return r;
}

Series Series::truncated(int e) const {
    Series r = *this;
    if (e < end()) r.c_.resize(std::max(e - val_, 0), ComplexBall(prec_));
    return r;
}

Series Series::drop_leading(int k) const {
    k = std::min(k, length());
    return Series(val_ + k, std::vector<ComplexBall>(c_.begin() + k, c_.end()), prec_);
}

int Series::uncertified_leading() const {
    int k = 0;
    while (k < length() && c_[k].contains_zero()) ++k;
    return k;
}

const Series& PowerCache::get(long n) {
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
    if (n == 0) return cache_.emplace(0, Series::constant(ComplexBall::from_int(1, base_.prec()), base_.length())).first->second;
    if (std::labs(n) > 64) return cache_.emplace(n, base_.pow(n)).first->second;
    const long step = n > 0 ? 1 : -1;
    if (!cache_.count(step)) cache_.emplace(step, n > 0 ? base_ : base_.inverse());
    const Series unit = cache_.at(step);
    long k = step;
    while (cache_.count(k + step) && k != n) k += step;
    while (k != n) {
        Series next = cache_.at(k) * unit;
        k += step;
        cache_.emplace(k, std::move(next));
    }
    return cache_.at(n);
}

namespace {

ComplexBall checked_pow(const ComplexBall& z, long n) {
    if (n < 0 && z.contains_zero()) throw PrecisionExhausted("evaluation at possible pole");
    return z.pow(n);
}

}  // namespace

ComplexBall to_ball(const Rational& q, mpfr_prec_t prec) { return ComplexBall::from_rational(q, prec); }

Series evaluate(const LaurentPoly2<Rational>& P, const Series& x, const Series& y) {
    PowerCache px(x), py(y);
    const mpfr_prec_t prec = x.prec();
    std::vector<std::pair<LatticePoint, Rational>> terms(P.terms().begin(), P.terms().end());
    // Ascending exponents let the caches grow incrementally.
    std::sort(terms.begin(), terms.end(), [](auto& a, auto& b) {
        return std::abs(a.first.i) + std::abs(a.first.j) < std::abs(b.first.i) + std::abs(b.first.j);
    });
    bool first = true;
    Series r;
    for (const auto& [k, c] : terms) {
        Series t = to_ball(c, prec) * (px.get(k.i) * py.get(k.j));
        if (first) r = std::move(t);
        else r += t;
        first = false;
    }
    if (first) return Series::zero(0, x.length(), prec);
    return r;
}

ComplexBall evaluate(const LaurentPoly2<Rational>& P, const ComplexBall& x, const ComplexBall& y) {
    const mpfr_prec_t prec = x.prec();
    ComplexBall r(prec);
    for (const auto& [k, c] : P.terms()) r += to_ball(c, prec) * checked_pow(x, k.i) * checked_pow(y, k.j);
    return r;
}

Series evaluate(const QuadPoly<Rational>& Q, const Series& x, const Series& y, const ComplexBall& xp,
                const ComplexBall& yp) {
    PowerCache px(x), py(y);
    const mpfr_prec_t prec = x.prec();
    Series r = Series::zero(0, x.length() + std::max(0, x.val()), prec);
    bool first = true;
    for (const auto& [k, c] : Q.terms()) {
        Series t = (to_ball(c, prec) * checked_pow(xp, k[2]) * checked_pow(yp, k[3])) * (px.get(k[0]) * py.get(k[1]));
        if (first) r = std::move(t);
        else r += t;
        first = false;
    }
    if (first) return Series::zero(0, x.length(), prec);
    return r;
}

Series evaluate(const QuadPoly<Rational>& Q, const Series& x, const Series& y, const Series& xp, const Series& yp) {
    PowerCache px(x), py(y), pxp(xp), pyp(yp);
    const mpfr_prec_t prec = x.prec();
    Series r;
    bool first = true;
    for (const auto& [k, c] : Q.terms()) {
        Series t = to_ball(c, prec) * (px.get(k[0]) * py.get(k[1]) * pxp.get(k[2]) * pyp.get(k[3]));
        if (first) r = std::move(t);
        else r += t;
        first = false;
    }
    if (first) return Series::zero(0, x.length(), prec);
    return r;
}

ComplexBall evaluate(const QuadPoly<Rational>& Q, const ComplexBall& x, const ComplexBall& y,
                     const ComplexBall& xp, const ComplexBall& yp) {
    const mpfr_prec_t prec = x.prec();
    ComplexBall r(prec);
    for (const auto& [k, c] : Q.terms()) r += to_ball(c, prec) * checked_pow(x, k[0]) * checked_pow(y, k[1]) * checked_pow(xp, k[2]) *
             checked_pow(yp, k[3]);
    return r;
}

}  // namespace curveb
