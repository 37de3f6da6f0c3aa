#pragma once
#include <string>
#include <vector>

#include "curveb/poly.hpp"

namespace curveb {

// Dense univariate polynomial over the rationals, ascending degree, no trailing zeros.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
    static UniPoly constant(const Rational& v) { return UniPoly(std::vector<Rational>{v}); }
    static UniPoly x_power(int k, const Rational& v = 1);

    const std::vector<Rational>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const Rational& lead() const { return c_.back(); }
    Rational coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0); }
    // Multiplicity of the root x = 0.
    int low_order() const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& s, const UniPoly& a);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    UniPoly derivative() const;
    UniPoly monic() const;
    Rational operator()(const Rational& x) const;
    std::string str(const std::string& var = "x") const;

private:
    std::vector<Rational> c_;
    void trim();
};

void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
UniPoly exact_div(const UniPoly& a, const UniPoly& b);  // throws if not exact
UniPoly univariate_gcd(const UniPoly& f, const UniPoly& g);  // monic
UniPoly squarefree_part(const UniPoly& f);  // monic
// Yun decomposition: factors[k] is the monic product of roots of multiplicity k+1.
std::vector<UniPoly> squarefree_decomposition(const UniPoly& f);
Rational resultant(const UniPoly& f, const UniPoly& g);

// Bivariate helpers for resultants in y. to_polynomial multiplies by the smallest monomial
// that clears negative exponents (identity on polynomials).
struct NormalizedPoly {
    LaurentPoly2<Rational> p;  // polynomial
    int shift_i = 0;           // p = x^shift_i y^shift_j * original
    int shift_j = 0;
};
// Shifts negative exponents away; with strip_content the lowest exponents become 0
// (monomial factors are units on the torus).
NormalizedPoly to_polynomial(const LaurentPoly2<Rational>& f, bool strip_content = false);
// Coefficients A_l(x) with f = sum_l A_l(x) y^l; f must be a polynomial.
std::vector<UniPoly> y_coefficients(const LaurentPoly2<Rational>& f);

// Sylvester resultant eliminating y; f-rows first. Inputs are normalized first.
UniPoly resultant_y(const LaurentPoly2<Rational>& f, const LaurentPoly2<Rational>& g);

struct DiscriminantChain {
    UniPoly D;
    UniPoly Dtilde;
    Rational Delta;
};
DiscriminantChain discriminant_chain(const LaurentPoly2<Rational>& P, bool with_delta = true);

// Exact determinant of an integer matrix (fraction-free elimination).
Integer bareiss_determinant(std::vector<std::vector<Integer>> m);

}  // namespace curveb
