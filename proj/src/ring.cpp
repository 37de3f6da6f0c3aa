#include "curveb/ring.hpp"

#include "curveb/errors.hpp"

namespace curveb {

ParamPoly ParamPoly::parameter(const std::string& name, int power) {
    ParamPoly p;
    if (power == 0) {
        p.terms_[{}] = 1;
    } else {
        p.terms_[{{name, power}}] = 1;
    }
    return p;
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational ParamPoly::constant_value() const {
    if (!is_constant()) throw InputError("coefficient '" + str() + "' is not a rational number");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

bool ParamPoly::is_integral() const {
    for (const auto& [m, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) { return *this += -o; }

static ParamMonomial mul_monomials(const ParamMonomial& a, const ParamMonomial& b) {
    ParamMonomial r;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            r.push_back(b[j++]);
        } else {
            r.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i, ++j;
        }
    }
    return r;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) {
    ParamPoly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            ParamPoly t;
            t.terms_[mul_monomials(ma, mb)] = ca * cb;
            r += t;
        }
    return *this = std::move(r);
}

ParamPoly& ParamPoly::operator*=(const Rational& q) {
    if (sgn(q) == 0) {
        terms_.clear();
    } else {
        for (auto& [m, c] : terms_) c *= q;
    }
    return *this;
}

std::string monomial_str(const ParamMonomial& m) {
    std::string s;
    for (const auto& [name, e] : m) {
        if (!s.empty()) s += "*";
        s += name;
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::string ParamPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = abs(c);
        std::string body;
        if (m.empty()) {
            body = a.get_str();
        } else if (a == 1) {
            body = monomial_str(m);
        } else {
            body = a.get_str() + "*" + monomial_str(m);
        }
        if (first) {
            s = (sgn(c) < 0 ? "-" : "") + body;
        } else {
            s += (sgn(c) < 0 ? " - " : " + ") + body;
        }
        first = false;
    }
    return s;
}

}  // namespace curveb
