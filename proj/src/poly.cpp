#include "curveb/poly.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <vector>

namespace curveb {

namespace {

constexpr long kMaxExponent = 1000000;

using Exps = std::vector<int>;

using Expr = std::map<Exps, ParamPoly>;

void accumulate(Expr& out, const Exps& e, const ParamPoly& c) {
    if (c.is_zero()) return;
    auto& slot = out[e];
    slot += c;
    if (slot.is_zero()) out.erase(e);
}

// Grammar: expr = [+-] term {(+|-) term}; term = factor {[*] factor};
// factor = atom [^ int]; atom = number[/number] | identifier | ( expr ).
class Parser {
public:
    Parser(const std::string& text, std::vector<std::string> vars) : s_(text), vars_(std::move(vars)) {}

    Expr parse() {
        skip();
        if (pos_ >= s_.size()) fail("empty polynomial");
        Expr r = expr();
        skip();
        if (pos_ < s_.size()) fail(s_[pos_] == ')' ? "unbalanced ')'" : "expected '+' or '-'");
        return r;
    }

private:
    const std::string& s_;
    std::vector<std::string> vars_;
    size_t pos_ = 0;
    int depth_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw InputError("syntax error at position " + std::to_string(pos_) + ": " + msg);
    }
    void skip() { while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_; }
    char peek() { skip(); return pos_ < s_.size() ? s_[pos_] : '\0'; }

    Expr constant(const ParamPoly& c) {
        Expr r;
        accumulate(r, Exps(vars_.size(), 0), c);
        return r;
    }

    static Expr multiply(const Expr& a, const Expr& b) {
        Expr r;
        for (const auto& [ea, ca] : a)
            for (const auto& [eb, cb] : b) {
                Exps e(ea.size());
                for (size_t t = 0; t < e.size(); ++t) {
                    long v = static_cast<long>(ea[t]) + eb[t];
                    if (std::labs(v) > kMaxExponent) throw InputError("syntax error: exponent overflow");
                    e[t] = static_cast<int>(v);
                }
                accumulate(r, e, ca * cb);
            }
        return r;
    }

    Expr expr() {
        Expr out;
        bool first = true;
        while (true) {
            char ch = peek();
            int sign = 1;
            if (ch == '+' || ch == '-') {
                sign = ch == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                break;
            }
            first = false;
            Expr t = term();
            for (auto& [e, c] : t) accumulate(out, e, sign < 0 ? ParamPoly(-c) : c);
        }
        return out;
    }

    bool atom_start() {
        char c = peek();
        return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
    }

    Expr term() {
        if (!atom_start()) fail("expected a term");
        Expr r = factor();
        while (true) {
            if (peek() == '*') {
                ++pos_;
                if (!atom_start()) fail("expected a factor after '*'");
            } else if (!atom_start()) {
                break;
            }
            r = multiply(r, factor());
        }
        return r;
    }

    Integer number() {
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return Integer(s_.substr(start, pos_ - start));
    }

    long exponent() {
        skip();
        bool neg = false;
        bool paren = false;
        if (peek() == '(') {
            paren = true;
            ++pos_;
        }
        if (peek() == '-' || peek() == '+') {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer exponent");
        if (pos_ - start > 7) fail("exponent overflow");
        long v = std::stol(s_.substr(start, pos_ - start));
        if (v > kMaxExponent) fail("exponent overflow");
        if (paren) {
            if (peek() != ')') fail("expected ')'");
            ++pos_;
        }
        return neg ? -v : v;
    }

    Expr factor() {
        Expr base;
        bool is_number = false;
        char ch = peek();
        if (ch == '(') {
            if (++depth_ > 200) fail("nesting too deep");
            ++pos_;
            base = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            --depth_;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            is_number = true;
            Integer num = number();
            Rational q(num);
            if (peek() == '/') {
                ++pos_;
                Integer den = number();
                if (den == 0) fail("zero denominator");
                q = Rational(num, den);
                q.canonicalize();
            }
            base = constant(ParamPoly(q));
        } else {
            size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string id = s_.substr(start, pos_ - start);
            if (pos_ < s_.size() && s_[pos_] == '\'') {
                id += '\'';
                ++pos_;
            }
            long p = 1;
            if (peek() == '^') {
                ++pos_;
                p = exponent();
            }
            auto it = std::find(vars_.begin(), vars_.end(), id);
            if (it != vars_.end()) {
                Exps e(vars_.size(), 0);
                e[it - vars_.begin()] = static_cast<int>(p);
                Expr r;
                accumulate(r, e, ParamPoly(1));
                return r;
            }
            if (id.back() == '\'') fail("unknown variable '" + id + "'");
            if (p < 0) fail("negative power of parameter '" + id + "'");
            return constant(ParamPoly::parameter(id, static_cast<int>(p)));
        }
        if (peek() == '^') {
            ++pos_;
            long p = exponent();
            if (is_number) fail("powers of numbers are not supported");
            if (p < 0) {
                // Only monomials can be inverted.
                if (base.size() != 1 || !base.begin()->second.is_constant() ||
                    base.begin()->second.constant_value() != 1)
                    fail("negative power of a non-monomial");
            }
            if (std::labs(p) > 4096 && base.size() > 1) fail("exponent overflow");
            Expr r = constant(ParamPoly(1));
            if (p < 0) {
                Exps e = base.begin()->first;
                for (auto& v : e) {
                    long w = static_cast<long>(v) * p;
                    if (std::labs(w) > kMaxExponent) fail("exponent overflow");
                    v = static_cast<int>(w);
                }
                Expr inv;
                accumulate(inv, e, ParamPoly(1));
                return inv;
            }
            for (long k = 0; k < p; ++k) r = multiply(r, base);
            return r;
        }
        return base;
    }
};

std::string var_power(const char* name, int e) {
    if (e == 0) return "";
    if (e == 1) return name;
    return std::string(name) + "^" + std::to_string(e);
}

void append_summand(std::string& out, const Rational& c, const std::string& params, const std::string& mono) {
    Rational a = abs(c);
    std::string body;
    std::string tail = params;
    if (!mono.empty()) tail += (tail.empty() ? "" : "*") + mono;
    if (tail.empty()) body = a.get_str();
    else if (a == 1) body = tail;
    else body = a.get_str() + "*" + tail;
    if (out.empty()) out = (sgn(c) < 0 ? "-" : "") + body;
    else out += (sgn(c) < 0 ? " - " : " + ") + body;
}

void append_coeff(std::string& out, const Rational& c, const std::string& mono) { append_summand(out, c, "", mono); }
void append_coeff(std::string& out, const ParamPoly& c, const std::string& mono) {
    for (const auto& [m, q] : c.terms()) append_summand(out, q, monomial_str(m), mono);
}

std::string mono2(const LatticePoint& k) {
    std::string a = var_power("x", k.i), b = var_power("y", k.j);
    if (a.empty()) return b;
    if (b.empty()) return a;
    return a + "*" + b;
}

std::string mono4(const QuadKey& k) {
    static const char* names[4] = {"x", "y", "x'", "y'"};
    std::string s;
    for (int t = 0; t < 4; ++t) {
        std::string f = var_power(names[t], k[t]);
        if (f.empty()) continue;
        if (!s.empty()) s += "*";
        s += f;
    }
    return s;
}

}  // namespace

LaurentPoly2<ParamPoly> parse_poly(const std::string& text) {
    Parser p(text, {"x", "y"});
    LaurentPoly2<ParamPoly> r;
    for (auto& [e, c] : p.parse()) r.add_term(e[0], e[1], c);
    if (r.is_zero()) throw InputError("polynomial is identically zero");
    return r;
}

QuadPoly<ParamPoly> parse_quad(const std::string& text) {
    Parser p(text, {"x", "y", "x'", "y'"});
    QuadPoly<ParamPoly> r;
    for (auto& [e, c] : p.parse()) r.add_term({e[0], e[1], e[2], e[3]}, c);
    return r;
}

ParamPoly parse_coefficient(const std::string& text) {
    Parser p(text, {});
    ParamPoly r;
    for (auto& [e, c] : p.parse()) r += c;
    return r;
}

Rational parse_rational(const std::string& text) { return parse_coefficient(text).constant_value(); }

LaurentPoly2<Rational> to_rational(const LaurentPoly2<ParamPoly>& p) {
    LaurentPoly2<Rational> r;
    for (const auto& [k, c] : p.terms()) r.add_term(k.i, k.j, c.constant_value());
    return r;
}

QuadPoly<Rational> to_rational(const QuadPoly<ParamPoly>& q) {
    QuadPoly<Rational> r;
    for (const auto& [k, c] : q.terms()) r.add_term(k, c.constant_value());
    return r;
}

LaurentPoly2<ParamPoly> to_param(const LaurentPoly2<Rational>& p) {
    LaurentPoly2<ParamPoly> r;
    for (const auto& [k, c] : p.terms()) r.add_term(k.i, k.j, ParamPoly(c));
    return r;
}

QuadPoly<ParamPoly> to_param(const QuadPoly<Rational>& q) {
    QuadPoly<ParamPoly> r;
    for (const auto& [k, c] : q.terms()) r.add_term(k, ParamPoly(c));
    return r;
}

bool has_parameters(const LaurentPoly2<ParamPoly>& p) {
    for (const auto& [k, c] : p.terms())
        if (!c.is_constant()) return true;
    return false;
}

template <CoefficientRing R>
std::string to_string(const LaurentPoly2<R>& p) {
    std::vector<LatticePoint> keys;
    for (const auto& [k, c] : p.terms()) keys.push_back(k);
    std::sort(keys.begin(), keys.end(), [](const LatticePoint& a, const LatticePoint& b) {
        return canonical_less(std::array<int, 2>{a.i, a.j}, std::array<int, 2>{b.i, b.j});
    });
    std::string out;
    for (const auto& k : keys) append_coeff(out, p.terms().at(k), mono2(k));
    return out.empty() ? "0" : out;
}

template <CoefficientRing R>
std::string to_string(const QuadPoly<R>& q) {
    std::vector<QuadKey> keys;
    for (const auto& [k, c] : q.terms()) keys.push_back(k);
    std::sort(keys.begin(), keys.end(), canonical_less<QuadKey>);
    std::string out;
    for (const auto& k : keys) append_coeff(out, q.terms().at(k), mono4(k));
    return out.empty() ? "0" : out;
}

template std::string to_string(const LaurentPoly2<Rational>&);
template std::string to_string(const LaurentPoly2<ParamPoly>&);
template std::string to_string(const QuadPoly<Rational>&);
template std::string to_string(const QuadPoly<ParamPoly>&);

}  // namespace curveb
