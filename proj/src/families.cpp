#include "hyperclass/families.hpp"

#include "hyperclass/parse.hpp"

namespace hyperclass {

namespace {

using P = MultiPoly;

P frac(long n, long d) { return P(GaussRational(n, d)); }
cplx frac_c(long n, long d) { return cplx(double(n) / double(d), 0.0); }

template <class T>
struct Consts;
template <>
struct Consts<P> {
    static P k(long n, long d = 1) { return frac(n, d); }
};
template <>
struct Consts<cplx> {
    static cplx k(long n, long d = 1) { return frac_c(n, d); }
};

template <class T>
std::vector<T> to_classical(Family f, const std::vector<T>& p) {
    auto k = [](long n, long d = 1) { return Consts<T>::k(n, d); };
    switch (f) {
        case Family::hyp2f1:
            return {k(1, 2) * (k(1) + p[0] + p[1] + p[2]), k(1, 2) * (k(1) + p[0] + p[1] - p[2]), k(1) + p[0]};
        case Family::gegenbauer:
            return {k(1, 2) + p[0] - p[1], k(1, 2) + p[0] + p[1]};
        case Family::confluent:
            return {k(1, 2) * (k(1) + p[1] + p[0]), k(1) + p[1]};
        case Family::twof0:
            return {k(1, 2) * (k(1) + p[1] + p[0]), k(1, 2) * (k(1) - p[1] + p[0])};
        case Family::hermite:
            return {p[0] + k(1, 2)};
        case Family::zerof1:
            return {p[0] + k(1)};
    }
    return {};
}

template <class T>
std::vector<T> to_lie(Family f, const std::vector<T>& c) {
    auto k = [](long n, long d = 1) { return Consts<T>::k(n, d); };
    switch (f) {
        case Family::hyp2f1:
            return {c[2] - k(1), c[0] + c[1] - c[2], c[0] - c[1]};
        case Family::gegenbauer:
            return {k(1, 2) * (c[0] + c[1] - k(1)), k(1, 2) * (c[1] - c[0])};
        case Family::confluent:
            return {k(2) * c[0] - c[1], c[1] - k(1)};
        case Family::twof0:
            return {c[0] + c[1] - k(1), c[0] - c[1]};
        case Family::hermite:
            return {c[0] - k(1, 2)};
        case Family::zerof1:
            return {c[0] - k(1)};
    }
    return {};
}

void check_arity(Family f, size_t n) {
    if (n != family_symbols(f).size())
        throw PreconditionError(std::string("wrong number of parameters for ") + family_name(f));
}

}  // namespace

const char* norm_name(Norm n) {
    switch (n) {
        case Norm::plain: return "plain";
        case Norm::bold: return "bold";
        case Norm::I: return "I";
        case Norm::II: return "II";
        case Norm::zero: return "0";
        case Norm::tilde: return "tilde";
    }
    return "?";
}

std::optional<Norm> norm_from_name(const std::string& name) {
    for (Norm n : {Norm::plain, Norm::bold, Norm::I, Norm::II, Norm::zero, Norm::tilde})
        if (name == norm_name(n)) return n;
    return std::nullopt;
}

const char* family_name(Family f) {
    switch (f) {
        case Family::hyp2f1: return "2f1";
        case Family::gegenbauer: return "gegenbauer";
        case Family::confluent: return "1f1";
        case Family::twof0: return "2f0";
        case Family::hermite: return "hermite";
        case Family::zerof1: return "0f1";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    for (Family f : kAllFamilies)
        if (name == family_name(f)) return f;
    return std::nullopt;
}

const std::vector<Sym>& family_symbols(Family f) {
    static const std::vector<Sym> h{Sym::alpha, Sym::beta, Sym::mu}, g{Sym::alpha, Sym::lambda},
        c{Sym::theta, Sym::alpha}, l{Sym::lambda}, z{Sym::alpha};
    switch (f) {
        case Family::hyp2f1: return h;
        case Family::gegenbauer: return g;
        case Family::confluent:
        case Family::twof0: return c;
        case Family::hermite: return l;
        case Family::zerof1: return z;
    }
    return z;
}

const std::vector<std::string>& classical_names(Family f) {
    static const std::vector<std::string> abc{"a", "b", "c"}, ab{"a", "b"}, ac{"a", "c"}, a{"a"}, c{"c"};
    switch (f) {
        case Family::hyp2f1: return abc;
        case Family::gegenbauer:
        case Family::twof0: return ab;
        case Family::confluent: return ac;
        case Family::hermite: return a;
        case Family::zerof1: return c;
    }
    return c;
}

FamilyParams FamilyParams::symbolic(Family f) {
    FamilyParams p{f, {}};
    for (Sym s : family_symbols(f)) p.values.push_back(P::var(s));
    return p;
}

FamilyParams FamilyParams::parse(Family f, const std::vector<std::string>& exprs) {
    check_arity(f, exprs.size());
    FamilyParams p{f, {}};
    for (const auto& e : exprs) p.values.push_back(parse_poly(e));
    return p;
}

std::vector<cplx> FamilyParams::evaluate(const SymValues& vals) const {
    std::vector<cplx> out;
    for (const auto& v : values) out.push_back(v.evaluate(vals));
    return out;
}

std::string FamilyParams::str() const {
    std::string s = "(";
    for (size_t i = 0; i < values.size(); ++i) s += (i ? ", " : "") + values[i].str();
    return s + ")";
}

bool operator==(const FamilyParams& a, const FamilyParams& b) {
    return a.family == b.family && a.values == b.values;
}

SymValues NumericParams::sym_values() const {
    SymValues v{};
    const auto& syms = family_symbols(family);
    for (size_t i = 0; i < syms.size() && i < values.size(); ++i) v[size_t(syms[i])] = values[i];
    return v;
}

DiffOperator make_operator(const FamilyParams& p, Sym x) {
    check_arity(p.family, p.values.size());
    const P X = P::var(x);
    const auto& v = p.values;
    P c2, c1, c0;
    switch (p.family) {
        case Family::hyp2f1:
            c2 = X * (P(1) - X);
            c1 = -((P(1) + v[0]) * (X - P(1)) + (P(1) + v[1]) * X);
            c0 = frac(-1, 4) * (v[0] + v[1] + P(1)).pow(2) + frac(1, 4) * v[2].pow(2);
            break;
        case Family::gegenbauer:
            c2 = P(1) - X * X;
            c1 = P(-2) * (P(1) + v[0]) * X;
            c0 = v[1].pow(2) - (v[0] + frac(1, 2)).pow(2);
            break;
        case Family::confluent:
            c2 = X;
            c1 = P(1) + v[1] - X;
            c0 = frac(-1, 2) * (P(1) + v[0] + v[1]);
            break;
        case Family::twof0:
            c2 = X * X;
            c1 = P(-1) + (P(2) + v[0]) * X;
            c0 = frac(1, 4) * (P(1) + v[0]).pow(2) - frac(1, 4) * v[1].pow(2);
            break;
        case Family::hermite:
            c2 = P(1);
            c1 = P(-2) * X;
            c0 = P(-2) * v[0] - P(1);
            break;
        case Family::zerof1:
            c2 = X;
            c1 = P(1) + v[0];
            c0 = P(-1);
            break;
    }
    return DiffOperator(x, {RatFun(c0), RatFun(c1), RatFun(c2)});
}

DiffOperator make_classical_operator(Family f, const std::vector<MultiPoly>& c, Sym x) {
    if (c.size() != classical_names(f).size()) throw PreconditionError("wrong number of classical parameters");
    const P X = P::var(x);
    P c2, c1, c0;
    switch (f) {
        case Family::hyp2f1:
            c2 = X * (P(1) - X);
            c1 = c[2] - (c[0] + c[1] + P(1)) * X;
            c0 = -(c[0] * c[1]);
            break;
        case Family::gegenbauer:
            c2 = P(1) - X * X;
            c1 = -((c[0] + c[1] + P(1)) * X);
            c0 = -(c[0] * c[1]);
            break;
        case Family::confluent:
            c2 = X;
            c1 = c[1] - X;
            c0 = -c[0];
            break;
        case Family::twof0:
            c2 = X * X;
            c1 = P(-1) + (P(1) + c[0] + c[1]) * X;
            c0 = c[0] * c[1];
            break;
        case Family::hermite:
            c2 = P(1);
            c1 = P(-2) * X;
            c0 = P(-2) * c[0];
            break;
        case Family::zerof1:
            c2 = X;
            c1 = c[0];
            c0 = P(-1);
            break;
    }
    return DiffOperator(x, {RatFun(c0), RatFun(c1), RatFun(c2)});
}

std::vector<MultiPoly> lie_to_classical(const FamilyParams& p) {
    check_arity(p.family, p.values.size());
    return to_classical(p.family, p.values);
}

FamilyParams classical_to_lie(Family f, const std::vector<MultiPoly>& classical) {
    if (classical.size() != classical_names(f).size()) throw PreconditionError("wrong number of classical parameters");
    return FamilyParams{f, to_lie(f, classical)};
}

std::vector<cplx> lie_to_classical(Family f, const std::vector<cplx>& lie) {
    check_arity(f, lie.size());
    return to_classical(f, lie);
}

std::vector<cplx> classical_to_lie(Family f, const std::vector<cplx>& classical) {
    if (classical.size() != classical_names(f).size()) throw PreconditionError("wrong number of classical parameters");
    return to_lie(f, classical);
}

}  // namespace hyperclass
