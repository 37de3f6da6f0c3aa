#pragma once
#include <array>
#include <map>
#include <set>
#include <string>

#include "curveb/errors.hpp"
#include "curveb/lattice.hpp"
#include "curveb/ring.hpp"

namespace curveb {

// Sparse bivariate Laurent polynomial; values in terms() are never zero.
template <CoefficientRing R>
class LaurentPoly2 {
public:
    using Key = LatticePoint;
    LaurentPoly2() = default;

    static LaurentPoly2 monomial(int i, int j, R c) {
        LaurentPoly2 p;
        p.add_term(i, j, std::move(c));
        return p;
    }

    const std::map<Key, R>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add_term(int i, int j, const R& c) {
        if (ring_traits<R>::is_zero(c)) return;
        auto [it, fresh] = terms_.try_emplace(Key{i, j}, c);
        if (!fresh) {
            it->second = it->second + c;
            if (ring_traits<R>::is_zero(it->second)) terms_.erase(it);
        }
    }

    R coeff(int i, int j) const {
        auto it = terms_.find(Key{i, j});
        return it == terms_.end() ? ring_traits<R>::zero() : it->second;
    }

    std::set<LatticePoint> support() const {
        std::set<LatticePoint> s;
        for (const auto& [k, c] : terms_) s.insert(k);
        return s;
    }

    LaurentPoly2& operator+=(const LaurentPoly2& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.i, k.j, c);
        return *this;
    }
    LaurentPoly2& operator-=(const LaurentPoly2& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.i, k.j, R(-c));
        return *this;
    }
    friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
    friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
    friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
        LaurentPoly2 r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) r.add_term(ka.i + kb.i, ka.j + kb.j, R(ca * cb));
        return r;
    }
    friend LaurentPoly2 operator*(const R& s, const LaurentPoly2& a) {
        LaurentPoly2 r;
        for (const auto& [k, c] : a.terms_) r.add_term(k.i, k.j, R(s * c));
        return r;
    }
    friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) { return a.terms_ == b.terms_; }

    // Exponent bounds; meaningless for the zero polynomial.
    int min_i() const { int m = terms_.begin()->first.i; for (auto& [k, c] : terms_) m = std::min(m, k.i); return m; }
    int max_i() const { int m = terms_.begin()->first.i; for (auto& [k, c] : terms_) m = std::max(m, k.i); return m; }
    int min_j() const { int m = terms_.begin()->first.j; for (auto& [k, c] : terms_) m = std::min(m, k.j); return m; }
    int max_j() const { int m = terms_.begin()->first.j; for (auto& [k, c] : terms_) m = std::max(m, k.j); return m; }

    // Multiply by x^di y^dj.
    LaurentPoly2 shifted(int di, int dj) const {
        LaurentPoly2 r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k.i + di, k.j + dj}, c);
        return r;
    }

    // Substitute x -> 1/x and/or y -> 1/y.
    LaurentPoly2 inverted(bool inv_x, bool inv_y) const {
        LaurentPoly2 r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(Key{inv_x ? -k.i : k.i, inv_y ? -k.j : k.j}, c);
        return r;
    }

private:
    std::map<Key, R> terms_;
};

enum class Var { X, Y };

template <CoefficientRing R>
LaurentPoly2<R> partial_derivative(const LaurentPoly2<R>& f, Var var, int order = 1) {
    if (order < 1) throw InputError("derivative order must be positive");
    LaurentPoly2<R> r = f;
    for (int o = 0; o < order; ++o) {
        LaurentPoly2<R> d;
        for (const auto& [k, c] : r.terms()) {
            int e = var == Var::X ? k.i : k.j;
            if (e == 0) continue;
            R t = ring_traits<R>::scale(c, Rational(e));
            if (var == Var::X) d.add_term(k.i - 1, k.j, t);
            else d.add_term(k.i, k.j - 1, t);
        }
        r = std::move(d);
    }
    return r;
}

using QuadKey = std::array<int, 4>;  // exponents of x, y, x', y'

// Sparse polynomial in (x,y,x',y'), possibly Laurent.
template <CoefficientRing R>
class QuadPoly {
public:
    QuadPoly() = default;
    const std::map<QuadKey, R>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add_term(const QuadKey& k, const R& c) {
        if (ring_traits<R>::is_zero(c)) return;
        auto [it, fresh] = terms_.try_emplace(k, c);
        if (!fresh) {
            it->second = it->second + c;
            if (ring_traits<R>::is_zero(it->second)) terms_.erase(it);
        }
    }
    void erase(const QuadKey& k) { terms_.erase(k); }

    R coeff(const QuadKey& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? ring_traits<R>::zero() : it->second;
    }

    static QuadKey swap_key(const QuadKey& k) { return {k[2], k[3], k[0], k[1]}; }

    QuadPoly swapped() const {
        QuadPoly r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(swap_key(k), c);
        return r;
    }
    bool is_symmetric() const {
        for (const auto& [k, c] : terms_) {
            auto it = terms_.find(swap_key(k));
            if (it == terms_.end() || !(it->second == c)) return false;
        }
        return true;
    }
    bool is_integral() const {
        for (const auto& [k, c] : terms_)
            if (!ring_traits<R>::is_integral(c)) return false;
        return true;
    }

    QuadPoly& operator+=(const QuadPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    QuadPoly& operator-=(const QuadPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, R(-c));
        return *this;
    }
    friend QuadPoly operator+(QuadPoly a, const QuadPoly& b) { return a += b; }
    friend QuadPoly operator-(QuadPoly a, const QuadPoly& b) { return a -= b; }
    friend QuadPoly operator*(const QuadPoly& a, const QuadPoly& b) {
        QuadPoly r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term({ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ka[3] + kb[3]}, R(ca * cb));
        return r;
    }
    friend QuadPoly operator*(const R& s, const QuadPoly& a) {
        QuadPoly r;
        for (const auto& [k, c] : a.terms_) r.add_term(k, R(s * c));
        return r;
    }
    friend bool operator==(const QuadPoly& a, const QuadPoly& b) { return a.terms_ == b.terms_; }

private:
    std::map<QuadKey, R> terms_;
};

// Rational-coefficient view of a parameter-ring polynomial; throws when a parameter remains.
LaurentPoly2<Rational> to_rational(const LaurentPoly2<ParamPoly>& p);
QuadPoly<Rational> to_rational(const QuadPoly<ParamPoly>& q);
LaurentPoly2<ParamPoly> to_param(const LaurentPoly2<Rational>& p);
QuadPoly<ParamPoly> to_param(const QuadPoly<Rational>& q);
bool has_parameters(const LaurentPoly2<ParamPoly>& p);

// Parsing. Variables are "x", "y" for curves and also "x'", "y'" for QuadPoly text.
LaurentPoly2<ParamPoly> parse_poly(const std::string& text);
QuadPoly<ParamPoly> parse_quad(const std::string& text);
ParamPoly parse_coefficient(const std::string& text);
Rational parse_rational(const std::string& text);

// Canonical print order: total degree descending, then exponent vector ascending.
template <class K>
bool canonical_less(const K& a, const K& b) {
    long da = 0, db = 0;
    for (auto v : a) da += v;
    for (auto v : b) db += v;
    if (da != db) return da > db;
    return a < b;
}

// Plain-text printers. Parameter coefficients are expanded into separate summands so the
// output stays inside the input grammar.
template <CoefficientRing R>
std::string to_string(const LaurentPoly2<R>& p);
template <CoefficientRing R>
std::string to_string(const QuadPoly<R>& q);

}  // namespace curveb
