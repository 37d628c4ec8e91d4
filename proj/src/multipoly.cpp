#include "hyperclass/multipoly.hpp"

#include <vector>

namespace hyperclass {

const char* sym_name(Sym s) {
    switch (s) {
        case Sym::w: return "w";
        case Sym::v: return "v";
        case Sym::alpha: return "α";
        case Sym::beta: return "β";
        case Sym::mu: return "μ";
        case Sym::theta: return "θ";
        case Sym::lambda: return "λ";
    }
    return "?";
}

static int degree(const Exps& e) {
    int d = 0;
    for (auto x : e) d += x;
    return d;
}

bool GrlexLess::operator()(const Exps& a, const Exps& b) const {
    int da = degree(a), db = degree(b);
    if (da != db) return da < db;
    for (int i = 0; i < kNumSyms; ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

MultiPoly::MultiPoly(const GaussRational& c) {
    if (!c.is_zero()) terms_.emplace(Exps{}, c);
}

MultiPoly MultiPoly::var(Sym s) {
    MultiPoly p;
    Exps e{};
    e[static_cast<int>(s)] = 1;
    p.terms_.emplace(e, GaussRational(1));
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && degree(terms_.begin()->first) == 0);
}

GaussRational MultiPoly::constant_term() const {
    auto it = terms_.find(Exps{});
    return it == terms_.end() ? GaussRational(0) : it->second;
}

GaussRational MultiPoly::leading_coeff() const {
    return terms_.empty() ? GaussRational(0) : terms_.rbegin()->second;
}

int MultiPoly::total_degree() const { return terms_.empty() ? -1 : degree(terms_.rbegin()->first); }

int MultiPoly::degree_in(Sym s) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max(d, int(e[static_cast<int>(s)]));
    return d;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

void MultiPoly::add_to_term(const Exps& e, const GaussRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_to_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_to_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const GaussRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_) x *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exps e;
            for (int i = 0; i < kNumSyms; ++i) e[i] = ea[i] + eb[i];
            r.add_to_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::pow(unsigned n) const {
    MultiPoly r(1), base = *this;
    while (n) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return r;
}

MultiPoly MultiPoly::derivative(Sym s) const {
    const int k = static_cast<int>(s);
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
        if (e[k] == 0) continue;
        Exps f = e;
        f[k] -= 1;
        r.add_to_term(f, c * GaussRational(long(e[k])));
    }
    return r;
}

MultiPoly MultiPoly::coeff_of(Sym s, int k) const {
    const int i = static_cast<int>(s);
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
        if (e[i] != k) continue;
        Exps f = e;
        f[i] = 0;
        r.add_to_term(f, c);
    }
    return r;
}

MultiPoly MultiPoly::substitute(Sym s, const MultiPoly& q) const {
    int d = degree_in(s);
    if (d <= 0) return *this;
    std::vector<MultiPoly> powers{MultiPoly(1)};
    for (int k = 1; k <= d; ++k) powers.push_back(powers.back() * q);
    MultiPoly r;
    for (int k = 0; k <= d; ++k) {
        MultiPoly ck = coeff_of(s, k);
        if (!ck.is_zero()) r += ck * powers[k];
    }
    return r;
}

std::complex<double> MultiPoly::evaluate(const SymValues& vals) const {
    std::complex<double> sum = 0;
    for (const auto& [e, c] : terms_) {
        std::complex<double> t = c.to_complex();
        for (int i = 0; i < kNumSyms; ++i)
            for (int j = 0; j < e[i]; ++j) t *= vals[i];
        sum += t;
    }
    return sum;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (int i = 0; i < kNumSyms; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += sym_name(static_cast<Sym>(i));
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        std::string coef = c.str();
        bool negative = c.is_real() && sgn(c.re()) < 0;
        if (negative) coef = (-c).str();
        if (!first) out += negative ? " - " : " + ";
        else if (negative) out += "-";
        if (mono.empty())
            out += coef;
        else if (coef == "1")
            out += mono;
        else
            out += coef + "*" + mono;
        first = false;
    }
    return out;
}

}  // namespace hyperclass
