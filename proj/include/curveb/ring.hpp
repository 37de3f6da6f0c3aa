#pragma once
#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace curveb {

using Rational = mpq_class;
using Integer = mpz_class;

// Product of named parameters, sorted by name, positive exponents.
using ParamMonomial = std::vector<std::pair<std::string, int>>;

// Polynomial in named parameters with rational coefficients.
class ParamPoly {
public:
    ParamPoly() = default;
    ParamPoly(long v) { if (v != 0) terms_[{}] = Rational(v); }
    ParamPoly(const Rational& v) { if (v != 0) terms_[{}] = v; }
    static ParamPoly parameter(const std::string& name, int power = 1);

    const std::map<ParamMonomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // throws unless is_constant()
    bool is_integral() const;

    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly& operator*=(const ParamPoly& o);
    ParamPoly& operator*=(const Rational& q);
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(ParamPoly a, const ParamPoly& b) { return a *= b; }
    friend ParamPoly operator-(ParamPoly a) { for (auto& [m, c] : a.terms_) c = -c; return a; }
    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

    int term_count() const { return static_cast<int>(terms_.size()); }
    std::string str() const;

private:
    std::map<ParamMonomial, Rational> terms_;
};

std::string monomial_str(const ParamMonomial& m);

// Uniform access to the two coefficient rings used by the templates.
template <class R>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    static bool is_integral(const Rational& x) { return x.get_den() == 1; }
    static Rational scale(const Rational& x, const Rational& q) { return Rational(x * q); }
    static std::string str(const Rational& x) { return x.get_str(); }
    // Number of printed summands (1 for any rational).
    static int summands(const Rational&) { return 1; }
};

template <>
struct ring_traits<ParamPoly> {
    static ParamPoly zero() { return ParamPoly(); }
    static ParamPoly one() { return ParamPoly(1); }
    static bool is_zero(const ParamPoly& x) { return x.is_zero(); }
    static bool is_integral(const ParamPoly& x) { return x.is_integral(); }
    static ParamPoly scale(ParamPoly x, const Rational& q) { return x *= q; }
    static std::string str(const ParamPoly& x) { return x.str(); }
    static int summands(const ParamPoly& x) { return x.term_count(); }
};

template <class R>
concept CoefficientRing = requires(R a, R b) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { ring_traits<R>::is_zero(a) } -> std::convertible_to<bool>;
};

}  // namespace curveb
