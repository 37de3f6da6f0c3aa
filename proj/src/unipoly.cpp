#include "curveb/unipoly.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>

namespace curveb {

UniPoly UniPoly::x_power(int k, const Rational& v) {
    std::vector<Rational> c(k + 1, Rational(0));
    c[k] = v;
    return UniPoly(std::move(c));
}

void UniPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

int UniPoly::low_order() const {
    int k = 0;
    while (k < static_cast<int>(c_.size()) && sgn(c_[k]) == 0) ++k;
    return k;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(c));
}

UniPoly operator*(const Rational& s, const UniPoly& a) {
    std::vector<Rational> c = a.c_;
    for (auto& v : c) v *= s;
    return UniPoly(std::move(c));
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    Rational inv = 1 / lead();
    return inv * *this;
}

Rational UniPoly::operator()(const Rational& x) const {
    Rational r = 0;
    for (size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
    return r;
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t k = c_.size(); k-- > 0;) {
        const Rational& c = c_[k];
        if (sgn(c) == 0) continue;
        Rational a = abs(c);
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        std::string body = mono.empty() ? a.get_str() : (a == 1 ? mono : a.get_str() + "*" + mono);
        if (out.empty()) out = (sgn(c) < 0 ? "-" : "") + body;
        else out += (sgn(c) < 0 ? " - " : " + ") + body;
    }
    return out;
}

void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero()) throw InputError("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    int db = b.degree();
    int dq = a.degree() - db;
    std::vector<Rational> quo(std::max(dq + 1, 0), Rational(0));
    Rational inv = 1 / b.lead();
    for (int k = dq; k >= 0; --k) {
        Rational t = rem[k + db] * inv;
        if (sgn(t) == 0) continue;
        quo[k] = t;
        for (int i = 0; i <= db; ++i) rem[k + i] -= t * b.coeffs()[i];
    }
    rem.resize(std::max(std::min<int>(rem.size(), db), 0));
    q = UniPoly(std::move(quo));
    r = UniPoly(std::move(rem));
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    UniPoly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

// Reduce modulo p; nullopt if a denominator or the leading coefficient vanishes.
std::optional<std::vector<u64>> reduce_mod(const UniPoly& f, u64 p) {
    std::vector<u64> out;
    Integer P(static_cast<unsigned long>(p));
    for (const auto& c : f.coeffs()) {
        Integer d = c.get_den() % P;
        if (d == 0) return std::nullopt;
        Integer n = c.get_num() % P;
        if (n < 0) n += P;
        u64 dn = d.get_ui(), nn = n.get_ui();
        out.push_back(mulmod(nn, powmod(dn, p - 2, p), p));
    }
    if (!out.empty() && out.back() == 0) return std::nullopt;
    return out;
}

int gcd_degree_mod(std::vector<u64> a, std::vector<u64> b, u64 p) {
    auto trim = [](std::vector<u64>& v) { while (!v.empty() && v.back() == 0) v.pop_back(); };
    trim(a), trim(b);
    while (!b.empty()) {
        u64 inv = powmod(b.back(), p - 2, p);
        while (a.size() >= b.size()) {
            u64 t = mulmod(a.back(), inv, p);
            size_t off = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) a[off + i] = (a[off + i] + p - mulmod(t, b[i], p)) % p;
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

// Primitive integer polynomial proportional to f.
std::vector<Integer> primitive_integer(const UniPoly& f) {
    Integer l = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> v;
    Integer g = 0;
    for (const auto& c : f.coeffs()) {
        v.push_back(c.get_num() * (l / c.get_den()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.back().get_mpz_t());
    }
    if (g != 0 && g != 1)
        for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return v;
}

void make_primitive(std::vector<Integer>& v) {
    Integer g = 0;
    for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
        for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Primitive pseudo-remainder sequence over Z.
UniPoly integer_gcd(const UniPoly& f, const UniPoly& g) {
    std::vector<Integer> a = primitive_integer(f), b = primitive_integer(g);
    if (a.size() < b.size()) std::swap(a, b);
    auto trim = [](std::vector<Integer>& v) { while (!v.empty() && v.back() == 0) v.pop_back(); };
    while (!b.empty()) {
        // a <- prem(a, b)
        while (a.size() >= b.size() && !a.empty()) {
            Integer la = a.back(), lb = b.back();
            size_t off = a.size() - b.size();
            for (auto& c : a) c *= lb;
            for (size_t i = 0; i < b.size(); ++i) a[off + i] -= la * b[i];
            trim(a);
        }
        make_primitive(a);
        std::swap(a, b);
    }
    std::vector<Rational> r;
    for (auto& c : a) r.emplace_back(c);
    return UniPoly(std::move(r)).monic();
}

}  // namespace

UniPoly univariate_gcd(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() && g.is_zero()) throw InputError("gcd of two zero polynomials");
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    if (f.degree() == 0 || g.degree() == 0) return UniPoly::constant(1);
    static const u64 primes[] = {2305843009213693951ULL, 4611686018427387847ULL, 1000000007ULL};
    for (u64 p : primes) {
        auto a = reduce_mod(f, p), b = reduce_mod(g, p);
        if (!a || !b) continue;
        if (gcd_degree_mod(*a, *b, p) == 0) return UniPoly::constant(1);
        break;
    }
    return integer_gcd(f, g);
}

UniPoly squarefree_part(const UniPoly& f) {
    if (f.is_zero()) throw InputError("squarefree part of the zero polynomial");
    return exact_div(f, univariate_gcd(f, f.derivative())).monic();
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& f) {
    if (f.is_zero()) throw InputError("squarefree decomposition of the zero polynomial");
    std::vector<UniPoly> out;
    if (f.degree() == 0) return out;
    UniPoly fd = f.derivative();
    UniPoly a0 = univariate_gcd(f, fd);
    UniPoly b = exact_div(f, a0);
    UniPoly c = exact_div(fd, a0);
    UniPoly d = c - b.derivative();
    while (b.degree() > 0) {
        UniPoly a = univariate_gcd(b, d);
        out.push_back(a.monic());
        b = exact_div(b, a);
        c = exact_div(d, a);
        d = c - b.derivative();
    }
    while (!out.empty() && out.back().degree() == 0) out.pop_back();
    return out;
}

Rational resultant(const UniPoly& f0, const UniPoly& g0) {
    if (f0.is_zero() || g0.is_zero()) return 0;
    UniPoly f = f0, g = g0;
    Rational acc = 1;
    while (true) {
        int m = f.degree(), n = g.degree();
        if (n == 0) {
            Rational r;
            mpz_pow_ui(r.get_num_mpz_t(), g.lead().get_num_mpz_t(), m);
            mpz_pow_ui(r.get_den_mpz_t(), g.lead().get_den_mpz_t(), m);
            r.canonicalize();
            return acc * r;
        }
        if (m == 0) {
            Rational r;
            mpz_pow_ui(r.get_num_mpz_t(), f.lead().get_num_mpz_t(), n);
            mpz_pow_ui(r.get_den_mpz_t(), f.lead().get_den_mpz_t(), n);
            r.canonicalize();
            return acc * r;
        }
        UniPoly q, r;
        divmod(f, g, q, r);
        if (r.is_zero()) return 0;
        int k = r.degree();
        if ((m * n) % 2) acc = -acc;
        Rational l = 1;
        for (int t = 0; t < m - k; ++t) l *= g.lead();
        acc *= l;
        f = g;
        g = r;
    }
}

NormalizedPoly to_polynomial(const LaurentPoly2<Rational>& f, bool strip_content) {
    NormalizedPoly n;
    if (f.is_zero()) return n;
    n.shift_i = strip_content ? -f.min_i() : std::max(0, -f.min_i());
    n.shift_j = strip_content ? -f.min_j() : std::max(0, -f.min_j());
    n.p = f.shifted(n.shift_i, n.shift_j);
    return n;
}

std::vector<UniPoly> y_coefficients(const LaurentPoly2<Rational>& f) {
    if (f.is_zero()) return {};
    int mj = f.max_j();
    std::vector<std::vector<Rational>> c(mj + 1);
    for (const auto& [k, v] : f.terms()) {
        if (k.i < 0 || k.j < 0) throw Error("y_coefficients needs a polynomial");
        auto& row = c[k.j];
        if (static_cast<int>(row.size()) <= k.i) row.resize(k.i + 1, Rational(0));
        row[k.i] = v;
    }
    std::vector<UniPoly> out;
    for (auto& row : c) out.emplace_back(std::move(row));
    return out;
}

Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Integer(-m[n - 1][n - 1]);
}

namespace {

// Integer-coefficient y-coefficient lists with a common scale: f = scale^{-1} * sum A_l y^l.
struct IntBivariate {
    std::vector<std::vector<Integer>> a;  // a[l][i]
    Integer scale = 1;
    int deg_x = 0;
};

IntBivariate integerize(const LaurentPoly2<Rational>& f) {
    IntBivariate r;
    Integer l = 1;
    for (const auto& [k, c] : f.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    r.scale = l;
    int mj = f.is_zero() ? 0 : f.max_j();
    r.a.assign(mj + 1, {});
    for (const auto& [k, c] : f.terms()) {
        auto& row = r.a[k.j];
        if (static_cast<int>(row.size()) <= k.i) row.resize(k.i + 1, Integer(0));
        row[k.i] = c.get_num() * (l / c.get_den());
        r.deg_x = std::max(r.deg_x, k.i);
    }
    return r;
}

Integer horner(const std::vector<Integer>& c, long x) {
    Integer r = 0;
    for (size_t k = c.size(); k-- > 0;) r = r * x + c[k];
    return r;
}

// Polynomial of degree <= d through (k, v[k]) for k = 0..d.
UniPoly interpolate_consecutive(std::vector<Integer> v) {
    const int d = static_cast<int>(v.size()) - 1;
    // Forward differences in place: v[k] = Delta^k v(0).
    for (int k = 1; k <= d; ++k)
        for (int i = d; i >= k; --i) v[i] -= v[i - 1];
    // c_k = Delta^k * d!/k!
    std::vector<Integer> c(d + 1);
    Integer f = 1;
    for (int k = d; k >= 0; --k) {
        c[k] = v[k] * f;
        f *= k;
        if (k == 0) f = 0;
    }
    Integer dfact = 1;
    for (int k = 2; k <= d; ++k) dfact *= k;
    // Horner in the falling-factorial basis.
    std::vector<Integer> acc{c[d]};
    for (int k = d - 1; k >= 0; --k) {
        std::vector<Integer> nx(acc.size() + 1, Integer(0));
        for (size_t i = 0; i < acc.size(); ++i) {
            nx[i + 1] += acc[i];
            nx[i] -= acc[i] * k;
        }
        nx[0] += c[k];
        acc = std::move(nx);
    }
    std::vector<Rational> out;
    for (auto& a : acc) {
        Rational q(a, dfact);
        q.canonicalize();
        out.push_back(q);
    }
    return UniPoly(std::move(out));
}

}  // namespace

UniPoly resultant_y(const LaurentPoly2<Rational>& f0, const LaurentPoly2<Rational>& g0) {
    auto fn = to_polynomial(f0), gn = to_polynomial(g0);
    IntBivariate f = integerize(fn.p), g = integerize(gn.p);
    const int m = f0.is_zero() ? -1 : static_cast<int>(f.a.size()) - 1;
    const int n = g0.is_zero() ? -1 : static_cast<int>(g.a.size()) - 1;
    if (m < 0 || n < 0) {
        if (m <= 0 && n <= 0) throw InputError("resultant: both inputs are zero in y");
        return UniPoly();
    }
    if (m == 0 && n == 0) throw InputError("resultant: both inputs are free of y");
    const int size = m + n;
    const int dbound = n * f.deg_x + m * g.deg_x;
    std::vector<Integer> values;
    values.reserve(dbound + 1);
    std::vector<Integer> fa(m + 1), ga(n + 1);
    for (long x = 0; x <= dbound; ++x) {
        for (int l = 0; l <= m; ++l) fa[l] = horner(f.a[l], x);
        for (int l = 0; l <= n; ++l) ga[l] = horner(g.a[l], x);
        std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size, Integer(0)));
        // Columns are y^{size-1} ... y^0.
        for (int r = 0; r < n; ++r)
            for (int l = 0; l <= m; ++l) s[r][r + (m - l)] = fa[l];
        for (int r = 0; r < m; ++r)
            for (int l = 0; l <= n; ++l) s[n + r][r + (n - l)] = ga[l];
        values.push_back(bareiss_determinant(std::move(s)));
    }
    UniPoly res = interpolate_consecutive(std::move(values));
    // Undo the integer scaling: Res(cf f, cg g) = cf^n cg^m Res(f, g).
    Integer sf, sg;
    mpz_pow_ui(sf.get_mpz_t(), f.scale.get_mpz_t(), n);
    mpz_pow_ui(sg.get_mpz_t(), g.scale.get_mpz_t(), m);
    Rational k(1, sf * sg);
    k.canonicalize();
    return k * res;
}

DiscriminantChain discriminant_chain(const LaurentPoly2<Rational>& P, bool with_delta) {
    if (P.is_zero() || P.min_j() == P.max_j()) throw InputError("discriminant: P does not depend on y");
    auto Pn = to_polynomial(P, true).p;
    DiscriminantChain ch;
    ch.D = resultant_y(Pn, partial_derivative(Pn, Var::Y));
    auto Px = partial_derivative(Pn, Var::X);
    ch.Dtilde = Px.is_zero() ? UniPoly() : resultant_y(Pn, Px);
    ch.Delta = with_delta ? resultant(ch.D, ch.D.derivative()) : Rational(0);
    return ch;
}

}  // namespace curveb
