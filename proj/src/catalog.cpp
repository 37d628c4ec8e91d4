#include "hyperclass/catalog.hpp"

#include <utility>

#include "hyperclass/parse.hpp"

namespace hyperclass {

namespace {

using Strs = std::vector<std::string>;
using Factors = std::vector<std::pair<std::string, std::string>>;

std::string locator(Family f, const char* list, size_t k) {
    return std::string(family_name(f)) + "." + list + "[" + std::to_string(k) + "]";
}

// Product of (base)^exponent factors in v, times exp(exp_poly).
Multiplier mult(const Factors& factors, const std::string& exp_poly = "") {
    Multiplier m(Sym::v);
    for (const auto& [base, exponent] : factors) {
        MultiPoly b = parse_poly(base);
        m.factor(b.coeff_of(Sym::v, 1).constant_term(), b.coeff_of(Sym::v, 0).constant_term(), parse_poly(exponent));
    }
    if (!exp_poly.empty()) m.exp_part(parse_poly(exp_poly));
    return m;
}

Substitution moebius(long p, long q, long r, long s) {
    return Substitution::moebius(Sym::w, Sym::v, GaussRational(p), GaussRational(q), GaussRational(r),
                                 GaussRational(s));
}

struct Builder {
    IdentityCatalog c;

    explicit Builder(Family f) { c.family = f; }

    void T(const std::string& A, const std::string& weight, const Strs& tgt, const std::string& note = "") {
        c.transmutations.push_back({locator(c.family, "transmutations", c.transmutations.size()),
                                    parse_operator(A), parse_ratfun(weight), FamilyParams::symbolic(c.family),
                                    FamilyParams::parse(c.family, tgt), note});
    }
    // Verified form first; the printed form is kept alongside.
    void T_fixed(const std::string& A, const std::string& weight, const Strs& tgt, const std::string& printed_A,
                 const Strs& printed_tgt, const std::string& note) {
        T(A, weight, tgt, note);
        TransmutationRow p = c.transmutations.back();
        p.A = parse_operator(printed_A);
        p.tgt = FamilyParams::parse(c.family, printed_tgt);
        p.note = "as printed";
        c.printed_transmutations.push_back(p);
    }
    void Fz(const std::string& weight, const std::string& minus, const std::string& plus, const std::string& k,
            const std::string& note = "") {
        c.factorizations.push_back({locator(c.family, "factorizations", c.factorizations.size()),
                                    parse_ratfun(weight), FamilyParams::symbolic(c.family), parse_operator(minus),
                                    parse_operator(plus), parse_ratfun(k), note});
    }
    void Fz_fixed(const std::string& weight, const std::string& minus, const std::string& plus, const std::string& k,
                  const std::string& printed_weight, const std::string& printed_k, const std::string& note) {
        Fz(weight, minus, plus, k, note);
        FactorizationRow p = c.factorizations.back();
        p.weight = parse_ratfun(printed_weight);
        p.constant = parse_ratfun(printed_k);
        p.note = "as printed";
        c.printed_factorizations.push_back(p);
    }
    void S(const Substitution& s, const Factors& left, const std::string& left_exp, const std::string& prefactor,
           const Strs& tgt, const Factors& right, const std::string& right_exp) {
        ConjugationRow r;
        r.ref = locator(c.family, "symmetries", c.symmetries.size());
        r.src = FamilyParams::symbolic(c.family);
        r.subst = s;
        r.left = mult(left, left_exp);
        r.right = mult(right, right_exp);
        r.prefactor = parse_ratfun(prefactor);
        r.tgt = FamilyParams::parse(c.family, tgt);
        c.symmetries.push_back(r);
    }
    void S_alg(int sign, const Factors& left, const Strs& tgt, const Factors& right) {
        ConjugationRow r;
        r.ref = locator(c.family, "symmetries", c.symmetries.size());
        r.src = FamilyParams::symbolic(c.family);
        r.algebraic_sign = sign;
        r.left = mult(left);
        r.right = mult(right);
        r.prefactor = RatFun(1);
        r.tgt = FamilyParams::parse(c.family, tgt);
        r.mode = CheckMode::numeric;
        c.symmetries.push_back(r);
    }
    void R(const std::string& A, const std::string& coefficient, const Strs& tgt, Norm norm) {
        c.recurrences.push_back({locator(c.family, "recurrences", c.recurrences.size()), parse_operator(A),
                                 parse_ratfun(coefficient), FamilyParams::parse(c.family, tgt), norm});
    }
};

IdentityCatalog build_hyp2f1() {
    Builder b(Family::hyp2f1);
    b.T("D", "1", {"alpha+1", "beta+1", "mu"});
    b.T("w*(1-w)*D + (1-w)*alpha - w*beta", "1", {"alpha-1", "beta-1", "mu"});
    b.T("(1-w)*D - beta", "1", {"alpha+1", "beta-1", "mu"});
    b.T("w*D + alpha", "1", {"alpha-1", "beta+1", "mu"});
    b.T("w*D + 1/2*(alpha+beta+mu+1)", "w", {"alpha", "beta+1", "mu+1"});
    b.T_fixed("w*(w-1)*D + 1/2*(w-1)*(alpha+beta-mu+1) + beta", "w", {"alpha", "beta-1", "mu-1"},
              "w*(w-1)*D + 1/2*(w-1)*(alpha+beta-mu+1) - beta", {"alpha", "beta-1", "mu-1"},
              "printed with -beta; +beta agrees with the recurrence and factorization rows");
    b.T("w*D + 1/2*(alpha+beta-mu+1)", "w", {"alpha", "beta+1", "mu-1"});
    b.T("w*(w-1)*D - 1/2*(1-w)*(alpha+beta+mu+1) + beta", "w", {"alpha", "beta-1", "mu+1"});
    b.T("(w-1)*D + 1/2*(alpha+beta+mu+1)", "1-w", {"alpha+1", "beta", "mu+1"});
    b.T_fixed("w*(w-1)*D + 1/2*w*(alpha+beta-mu+1) - alpha", "1-w", {"alpha-1", "beta", "mu-1"},
              "w*(w-1)*D + 1/2*w*(alpha+beta-mu+1) + alpha", {"alpha-1", "beta", "mu-1"},
              "printed with +alpha; -alpha agrees with the recurrence and factorization rows");
    b.T("(w-1)*D + 1/2*(alpha+beta-mu+1)", "1-w", {"alpha+1", "beta", "mu-1"});
    b.T("w*(w-1)*D + 1/2*w*(alpha+beta+mu+1) - alpha", "1-w", {"alpha-1", "beta", "mu+1"});

    b.Fz("1", "w*(1-w)*D + (1+alpha)*(1-w) - (1+beta)*w", "D", "-1/4*(alpha+beta+mu+1)*(alpha+beta-mu+1)");
    b.Fz("1", "D", "w*(1-w)*D + alpha*(1-w) - beta*w", "-1/4*(alpha+beta+mu-1)*(alpha+beta-mu-1)");
    b.Fz("1", "w*D + alpha + 1", "(1-w)*D - beta", "-1/4*(alpha-beta+mu+1)*(alpha-beta-mu+1)");
    b.Fz("1", "(1-w)*D - beta - 1", "w*D + alpha", "-1/4*(alpha-beta+mu-1)*(alpha-beta-mu-1)");
    b.Fz("w", "w*D + 1/2*(alpha+beta+mu-1)", "w*(1-w)*D + 1/2*(1-w)*(alpha+beta-mu+1) - beta",
         "-1/4*(alpha+beta+mu-1)*(alpha-beta-mu+1)");
    b.Fz("w", "w*(1-w)*D + 1/2*(1-w)*(alpha+beta-mu+1) - beta - 1", "w*D + 1/2*(alpha+beta+mu+1)",
         "-1/4*(alpha+beta+mu+1)*(alpha-beta-mu-1)");
    b.Fz("w", "w*D + 1/2*(alpha+beta-mu-1)", "w*(1-w)*D + 1/2*(1-w)*(alpha+beta+mu+1) - beta",
         "-1/4*(alpha+beta-mu-1)*(alpha-beta+mu+1)");
    b.Fz("w", "w*(1-w)*D + 1/2*(1-w)*(alpha+beta+mu+1) - beta - 1", "w*D + 1/2*(alpha+beta-mu+1)",
         "-1/4*(alpha+beta-mu+1)*(alpha-beta+mu-1)");
    const std::string w1 = "printed as (w-1)F with the opposite constant; the factors give (1-w)F";
    b.Fz_fixed("1-w", "w*(w-1)*D + 1/2*w*(alpha+beta-mu+1) - alpha - 1", "(w-1)*D + 1/2*(alpha+beta+mu+1)",
               "1/4*(alpha+beta+mu+1)*(alpha-beta+mu+1)", "w-1", "-1/4*(alpha+beta+mu+1)*(alpha-beta+mu+1)", w1);
    b.Fz_fixed("1-w", "(w-1)*D + 1/2*(alpha+beta+mu-1)", "w*(w-1)*D + 1/2*w*(alpha+beta-mu+1) - alpha",
               "1/4*(alpha+beta+mu-1)*(alpha-beta+mu-1)", "w-1", "-1/4*(alpha+beta+mu-1)*(alpha-beta+mu-1)", w1);
    b.Fz_fixed("1-w", "w*(w-1)*D + 1/2*w*(alpha+beta+mu+1) - alpha - 1", "(w-1)*D + 1/2*(alpha+beta-mu+1)",
               "1/4*(alpha+beta-mu+1)*(alpha-beta-mu+1)", "w-1", "-1/4*(alpha+beta-mu+1)*(alpha-beta-mu+1)", w1);
    b.Fz_fixed("1-w", "(w-1)*D + 1/2*(alpha+beta-mu-1)", "w*(w-1)*D + 1/2*w*(alpha+beta+mu+1) - alpha",
               "1/4*(alpha+beta-mu-1)*(alpha-beta-mu-1)", "w-1", "-1/4*(alpha+beta-mu-1)*(alpha-beta-mu-1)", w1);

    const std::string up = "(alpha+beta+mu+1)/2", um = "(alpha+beta-mu+1)/2";
    const std::string dn = "(-alpha-beta-mu-1)/2", dm = "(-alpha-beta+mu-1)/2";
    // w = v
    auto id = moebius(1, 0, 0, 1);
    b.S(id, {}, "", "1", {"alpha", "beta", "mu"}, {}, "");
    b.S(id, {{"-v", "-alpha"}, {"v-1", "-beta"}}, "", "1", {"-alpha", "-beta", "mu"},
        {{"-v", "alpha"}, {"v-1", "beta"}}, "");
    b.S(id, {{"v-1", "-beta"}}, "", "1", {"alpha", "-beta", "-mu"}, {{"v-1", "beta"}}, "");
    b.S(id, {{"-v", "-alpha"}}, "", "1", {"-alpha", "beta", "-mu"}, {{"-v", "alpha"}}, "");
    // w = 1 - v
    auto refl = moebius(-1, 1, 0, 1);
    b.S(refl, {}, "", "1", {"beta", "alpha", "mu"}, {}, "");
    b.S(refl, {{"v-1", "-alpha"}, {"-v", "-beta"}}, "", "1", {"-beta", "-alpha", "mu"},
        {{"v-1", "alpha"}, {"-v", "beta"}}, "");
    b.S(refl, {{"v-1", "-alpha"}}, "", "1", {"beta", "-alpha", "-mu"}, {{"v-1", "alpha"}}, "");
    b.S(refl, {{"-v", "-beta"}}, "", "1", {"-beta", "alpha", "-mu"}, {{"-v", "beta"}}, "");
    // w = 1/v
    auto inv = moebius(0, 1, 1, 0);
    b.S(inv, {{"-v", up}}, "", "-v", {"mu", "beta", "alpha"}, {{"-v", dn}}, "");
    b.S(inv, {{"-v", um}, {"v-1", "-beta"}}, "", "-v", {"-mu", "-beta", "alpha"}, {{"-v", dm}, {"v-1", "beta"}}, "");
    b.S(inv, {{"-v", up}, {"v-1", "-beta"}}, "", "-v", {"mu", "-beta", "-alpha"}, {{"-v", dn}, {"v-1", "beta"}}, "");
    b.S(inv, {{"-v", um}}, "", "-v", {"-mu", "beta", "-alpha"}, {{"-v", dm}}, "");
    // w = (v - 1)/v
    auto m5 = moebius(1, -1, 1, 0);
    b.S(m5, {{"-v", up}}, "", "-v", {"mu", "alpha", "beta"}, {{"-v", dn}}, "");
    b.S(m5, {{"-v", um}, {"v-1", "-alpha"}}, "", "-v", {"-mu", "-alpha", "beta"}, {{"-v", dm}, {"v-1", "alpha"}}, "");
    b.S(m5, {{"-v", up}, {"v-1", "-alpha"}}, "", "-v", {"mu", "-alpha", "-beta"}, {{"-v", dn}, {"v-1", "alpha"}}, "");
    b.S(m5, {{"-v", um}}, "", "-v", {"-mu", "alpha", "-beta"}, {{"-v", dm}}, "");
    // w = 1/(1 - v)
    auto m6 = moebius(0, 1, -1, 1);
    b.S(m6, {{"v-1", up}}, "", "v-1", {"beta", "mu", "alpha"}, {{"v-1", dn}}, "");
    b.S(m6, {{"-v", "-beta"}, {"v-1", um}}, "", "v-1", {"-beta", "-mu", "alpha"}, {{"-v", "beta"}, {"v-1", dm}}, "");
    b.S(m6, {{"v-1", um}}, "", "v-1", {"beta", "-mu", "-alpha"}, {{"v-1", dm}}, "");
    b.S(m6, {{"-v", "-beta"}, {"v-1", up}}, "", "v-1", {"-beta", "mu", "-alpha"}, {{"-v", "beta"}, {"v-1", dn}}, "");
    // w = v/(v - 1)
    auto m7 = moebius(1, 0, 1, -1);
    b.S(m7, {{"v-1", up}}, "", "v-1", {"alpha", "mu", "beta"}, {{"v-1", dn}}, "");
    b.S(m7, {{"-v", "-alpha"}, {"v-1", um}}, "", "v-1", {"-alpha", "-mu", "beta"}, {{"-v", "alpha"}, {"v-1", dm}}, "");
    b.S(m7, {{"v-1", um}}, "", "v-1", {"alpha", "-mu", "-beta"}, {{"v-1", dm}}, "");
    b.S(m7, {{"-v", "-alpha"}, {"v-1", up}}, "", "v-1", {"-alpha", "mu", "-beta"}, {{"-v", "alpha"}, {"v-1", dn}}, "");

    const Norm n = Norm::I;
    b.R("D", "(1+alpha+beta+mu)/2", {"alpha+1", "beta+1", "mu"}, n);
    b.R("-(w*(1-w)*D + alpha*(1-w) - beta*w)", "(1-alpha-beta+mu)/2", {"alpha-1", "beta-1", "mu"}, n);
    b.R("(1-w)*D - beta", "(1+alpha-beta-mu)/2", {"alpha+1", "beta-1", "mu"}, n);
    b.R("-(w*D + alpha)", "(1-alpha+beta-mu)/2", {"alpha-1", "beta+1", "mu"}, n);
    b.R("w*D + (1+alpha+beta+mu)/2", "(1+alpha+beta+mu)/2", {"alpha", "beta+1", "mu+1"}, n);
    b.R("-(w*(w-1)*D + beta + (1+alpha+beta-mu)/2*(w-1))", "(1+alpha-beta-mu)/2", {"alpha", "beta-1", "mu-1"}, n);
    b.R("-(w*D + (1+alpha+beta-mu)/2)", "(1-alpha+beta-mu)/2", {"alpha", "beta+1", "mu-1"}, n);
    b.R("w*(w-1)*D + beta + (1+alpha+beta+mu)/2*(w-1)", "(1-alpha-beta+mu)/2", {"alpha", "beta-1", "mu+1"}, n);
    b.R("(w-1)*D + (1+alpha+beta+mu)/2", "(1+alpha+beta+mu)/2", {"alpha+1", "beta", "mu+1"}, n);
    b.R("w*(w-1)*D - alpha + (1+alpha+beta-mu)/2*w", "(1-alpha+beta-mu)/2", {"alpha-1", "beta", "mu-1"}, n);
    b.R("(w-1)*D + (1+alpha+beta-mu)/2", "(1+alpha-beta-mu)/2", {"alpha+1", "beta", "mu-1"}, n);
    b.R("w*(w-1)*D - alpha + (1+alpha+beta+mu)/2*w", "(1-alpha-beta+mu)/2", {"alpha-1", "beta", "mu+1"}, n);
    return b.c;
}

IdentityCatalog build_gegenbauer() {
    Builder b(Family::gegenbauer);
    b.T("D", "1", {"alpha+1", "lambda"});
    b.T("(1-w^2)*D - 2*alpha*w", "1", {"alpha-1", "lambda"});
    b.T("(1-w^2)*D - (alpha+lambda+1/2)*w", "1-w^2", {"alpha", "lambda+1"});
    b.T("(1-w^2)*D - (alpha-lambda+1/2)*w", "1-w^2", {"alpha", "lambda-1"});
    b.T("w*D + alpha - lambda + 1/2", "w^2", {"alpha+1", "lambda-1"});
    b.T_fixed("w*(1-w^2)*D - alpha - lambda + 1/2 - (alpha-lambda+1/2)*w^2", "w^2", {"alpha-1", "lambda-1"},
              "w*(1-w^2)*D - alpha - lambda + 1/2 - (alpha-lambda+1/2)*w^2", {"alpha-1", "lambda+1"},
              "printed target (alpha-1, lambda+1); the operator lowers both parameters");
    b.T_fixed("w*D + alpha + lambda + 1/2", "w^2", {"alpha+1", "lambda+1"}, "w*D + alpha - lambda + 1/2",
              {"alpha+1", "lambda+1"}, "printed operator repeats the row for (alpha+1, lambda-1)");
    b.T_fixed("w*(1-w^2)*D - alpha + lambda + 1/2 - (alpha+lambda+1/2)*w^2", "w^2", {"alpha-1", "lambda+1"},
              "w*(1-w^2)*D - alpha + lambda + 1/2 - (alpha+lambda+1/2)*w^2", {"alpha-1", "lambda-1"},
              "printed target (alpha-1, lambda-1); the operator lowers alpha and raises lambda");

    b.Fz("1", "D", "(1-w^2)*D - 2*alpha*w", "(alpha+lambda-1/2)*(-alpha+lambda+1/2)");
    b.Fz("1", "(1-w^2)*D - 2*(1+alpha)*w", "D", "(alpha+lambda+1/2)*(-alpha+lambda-1/2)");
    b.Fz_fixed("1-w^2", "(1-w^2)*D - (alpha+lambda-1/2)*w", "(1-w^2)*D - (alpha-lambda+1/2)*w",
               "-(alpha+lambda-1/2)*(alpha-lambda+1/2)", "1-w^2", "(alpha+lambda-1/2)*(alpha-lambda+1/2)",
               "printed constant has the opposite sign");
    b.Fz_fixed("1-w^2", "(1-w^2)*D - (alpha-lambda-1/2)*w", "(1-w^2)*D - (alpha+lambda+1/2)*w",
               "-(alpha+lambda+1/2)*(alpha-lambda-1/2)", "1-w^2", "(alpha+lambda+1/2)*(alpha-lambda-1/2)",
               "printed constant has the opposite sign");
    b.Fz("w^2", "w*(1-w^2)*D - alpha - lambda - 3/2 + (-alpha+lambda-1/2)*w^2", "w*D + alpha + lambda + 1/2",
         "(alpha+lambda+1/2)*(alpha+lambda+3/2)");
    b.Fz("w^2", "w*D + alpha + lambda - 3/2", "w*(1-w^2)*D - alpha - lambda + 1/2 + (-alpha+lambda-1/2)*w^2",
         "(alpha+lambda-1/2)*(alpha+lambda-3/2)");
    b.Fz("w^2", "w*(1-w^2)*D - alpha + lambda - 3/2 + (-alpha-lambda-1/2)*w^2", "w*D + alpha - lambda + 1/2",
         "(alpha-lambda+1/2)*(alpha-lambda+3/2)");
    b.Fz("w^2", "w*D + alpha - lambda - 3/2", "w*(1-w^2)*D - alpha + lambda + 1/2 + (-alpha-lambda-1/2)*w^2",
         "(alpha-lambda-1/2)*(alpha-lambda-3/2)");

    auto id = moebius(1, 0, 0, 1), neg = moebius(-1, 0, 0, 1);
    const Factors down{{"v-1", "-alpha"}, {"v+1", "-alpha"}}, up{{"v-1", "alpha"}, {"v+1", "alpha"}};
    b.S(id, {}, "", "1", {"alpha", "lambda"}, {}, "");
    b.S(neg, {}, "", "1", {"alpha", "-lambda"}, {}, "");
    b.S(id, down, "", "1", {"-alpha", "-lambda"}, up, "");
    b.S(neg, down, "", "1", {"-alpha", "lambda"}, up, "");
    const std::string l1 = "(alpha+lambda+5/2)/2", r1 = "(-alpha-lambda-1/2)/2";
    const std::string l2 = "(alpha-lambda+5/2)/2", r2 = "(-alpha+lambda-1/2)/2";
    b.S_alg(1, {{"v-1", l1}, {"v+1", l1}}, {"lambda", "alpha"}, {{"v-1", r1}, {"v+1", r1}});
    b.S_alg(-1, {{"v-1", l1}, {"v+1", l1}}, {"lambda", "-alpha"}, {{"v-1", r1}, {"v+1", r1}});
    b.S_alg(1, {{"v-1", l2}, {"v+1", l2}}, {"-lambda", "-alpha"}, {{"v-1", r2}, {"v+1", r2}});
    b.S_alg(-1, {{"v-1", l2}, {"v+1", l2}}, {"-lambda", "alpha"}, {{"v-1", r2}, {"v+1", r2}});

    const Norm n = Norm::bold;
    b.R("D", "-1/2*(1/2+alpha-lambda)*(1/2+alpha+lambda)", {"alpha+1", "lambda"}, n);
    b.R("(1-w^2)*D - 2*alpha*w", "-2", {"alpha-1", "lambda"}, n);
    b.R("(1-w^2)*D - (1/2+alpha+lambda)*w", "-(1/2+alpha+lambda)", {"alpha", "lambda+1"}, n);
    b.R("(1-w^2)*D - (1/2+alpha-lambda)*w", "-(1/2+alpha-lambda)", {"alpha", "lambda-1"}, n);
    b.R("w*D + 1/2 + alpha - lambda", "1/2*(1/2+alpha-lambda)*(3/2+alpha-lambda)", {"alpha+1", "lambda-1"}, n);
    b.R("w*(1-w^2)*D + (1/2-alpha+lambda)*(1-w^2) - 2*alpha*w^2", "-2", {"alpha-1", "lambda+1"}, n);
    b.R("w*D + 1/2 + alpha + lambda", "1/2*(1/2+alpha+lambda)*(3/2+alpha+lambda)", {"alpha+1", "lambda+1"}, n);
    b.R("w*(1-w^2)*D + (1/2-alpha-lambda)*(1-w^2) - 2*alpha*w^2", "-2", {"alpha-1", "lambda-1"}, n);
    return b.c;
}

IdentityCatalog build_confluent() {
    Builder b(Family::confluent);
    b.T("D", "1", {"theta+1", "alpha+1"});
    b.T("w*D + alpha - w", "1", {"theta-1", "alpha-1"});
    b.T("w*D + alpha", "1", {"theta+1", "alpha-1"});
    b.T("D - 1", "1", {"theta-1", "alpha+1"});
    b.T("w*D + 1/2*(theta+alpha+1)", "w", {"theta+2", "alpha"});
    b.T("w*D + 1/2*(-theta+alpha+1) - w", "w", {"theta-2", "alpha"});

    b.Fz("1", "D - 1", "w*D + alpha", "-1/2*(theta-alpha+1)");
    b.Fz("1", "w*D + 1 + alpha", "D - 1", "-1/2*(theta-alpha-1)");
    b.Fz("1", "D", "w*D + alpha - w", "-1/2*(theta+alpha-1)");
    b.Fz("1", "w*D + 1 + alpha - w", "D", "-1/2*(theta+alpha+1)");
    b.Fz("w", "w*D + 1/2*(-theta+alpha-1) - w", "w*D + 1/2*(theta+alpha+1)", "-1/4*(-theta+alpha-1)*(theta+alpha+1)");
    b.Fz("w", "w*D + 1/2*(theta+alpha-1)", "w*D + 1/2*(-theta+alpha+1) - w", "-1/4*(-theta+alpha+1)*(theta+alpha-1)");

    auto id = moebius(1, 0, 0, 1), neg = moebius(-1, 0, 0, 1);
    b.S(id, {}, "", "1", {"theta", "alpha"}, {}, "");
    b.S(id, {{"v", "-alpha"}}, "", "1", {"theta", "-alpha"}, {{"v", "alpha"}}, "");
    b.S(neg, {}, "-v", "-1", {"-theta", "alpha"}, {}, "v");
    b.S(neg, {{"v", "-alpha"}}, "-v", "-1", {"-theta", "-alpha"}, {{"v", "alpha"}}, "v");

    const Norm n = Norm::bold;
    b.R("D", "(1+theta+alpha)/2", {"theta+1", "alpha+1"}, n);
    b.R("w*D + alpha - w", "1", {"theta-1", "alpha-1"}, n);
    b.R("w*D + alpha", "1", {"theta+1", "alpha-1"}, n);
    b.R("D - 1", "(-1+theta-alpha)/2", {"theta-1", "alpha+1"}, n);
    b.R("w*D + (1+theta+alpha)/2", "(1+theta+alpha)/2", {"theta+2", "alpha"}, n);
    b.R("w*D + (1-theta+alpha)/2 - w", "(1-theta+alpha)/2", {"theta-2", "alpha"}, n);
    return b.c;
}

IdentityCatalog build_hermite() {
    Builder b(Family::hermite);
    b.T("D", "1", {"lambda+1"});
    b.T("D - 2*w", "1", {"lambda-1"});
    b.T("w*D + lambda + 1/2", "w^2", {"lambda+2"});
    b.T("w*D - lambda + 1/2 - 2*w^2", "w^2", {"lambda-2"});

    b.Fz("1", "D - 2*w", "D", "-2*lambda - 1");
    b.Fz("1", "D", "D - 2*w", "-2*lambda + 1");
    b.Fz("w^2", "w*D + lambda - 3/2", "w*D - lambda + 1/2 - 2*w^2", "(lambda-3/2)*(lambda-1/2)");
    b.Fz("w^2", "w*D - lambda - 3/2 - 2*w^2", "w*D + lambda + 1/2", "(lambda+3/2)*(lambda+1/2)");

    b.S(moebius(1, 0, 0, 1), {}, "", "1", {"lambda"}, {}, "");
    b.S(moebius(-1, 0, 0, 1), {}, "", "1", {"lambda"}, {}, "");
    auto rot = [](int sign) {
        return Substitution::moebius(Sym::w, Sym::v, GaussRational::i() * GaussRational(sign), GaussRational(0),
                                     GaussRational(0), GaussRational(1));
    };
    b.S(rot(1), {}, "-v^2", "-1", {"-lambda"}, {}, "v^2");
    b.S(rot(-1), {}, "-v^2", "-1", {"-lambda"}, {}, "v^2");

    b.R("D", "-(1/2+lambda)", {"lambda+1"}, Norm::plain);
    b.R("D - 2*w", "-2", {"lambda-1"}, Norm::plain);
    b.R("w*D + 1/2 + lambda", "1/2*(1/2+lambda)*(3/2+lambda)", {"lambda+2"}, Norm::plain);
    b.R("w*D + 1/2 - lambda - 2*w^2", "-2", {"lambda-2"}, Norm::plain);
    return b.c;
}

IdentityCatalog build_zerof1() {
    Builder b(Family::zerof1);
    b.T("D", "1", {"alpha+1"});
    b.T("w*D + alpha", "1", {"alpha-1"});
    b.Fz("1", "w*D + alpha + 1", "D", "-1");
    b.Fz("1", "D", "w*D + alpha", "-1");
    b.S(moebius(1, 0, 0, 1), {{"v", "-alpha"}}, "", "1", {"-alpha"}, {{"v", "alpha"}}, "");
    b.R("D", "1", {"alpha+1"}, Norm::bold);
    b.R("w*D + alpha", "1", {"alpha-1"}, Norm::bold);
    return b.c;
}

std::vector<ConjugationRow> build_links() {
    std::vector<ConjugationRow> out;
    auto add = [&](Family src, const Strs& sp, const Substitution& s, const Factors& left,
                   const std::string& left_exp, const std::string& prefactor, Family tgt, const Strs& tp,
                   const Factors& right, const std::string& right_exp) {
        ConjugationRow r;
        r.ref = "links[" + std::to_string(out.size()) + "]";
        r.src = FamilyParams::parse(src, sp);
        r.subst = s;
        r.left = mult(left, left_exp);
        r.right = mult(right, right_exp);
        r.prefactor = parse_ratfun(prefactor);
        r.tgt = FamilyParams::parse(tgt, tp);
        out.push_back(r);
    };
    const auto square = Substitution::quadratic(Sym::w, Sym::v, GaussRational(1), GaussRational(0));
    // 𝒮_{α,λ}(v) = 4𝓕_{∓1/2,α,λ}(w) and its odd companion, w = v²
    add(Family::hyp2f1, {"-1/2", "alpha", "lambda"}, square, {}, "", "1/4", Family::gegenbauer, {"alpha", "lambda"},
        {}, "");
    add(Family::hyp2f1, {"1/2", "alpha", "lambda"}, square, {{"v", "-1"}}, "", "1/4", Family::gegenbauer,
        {"alpha", "lambda"}, {{"v", "1"}}, "");
    // Hermite from the confluent operator, w = v²
    add(Family::confluent, {"lambda", "-1/2"}, square, {}, "", "1/4", Family::hermite, {"lambda"}, {}, "");
    add(Family::confluent, {"lambda", "1/2"}, square, {{"v", "-1"}}, "", "1/4", Family::hermite, {"lambda"},
        {{"v", "1"}}, "");
    // 2F0 operator at z = -1/v against the confluent operator in v
    add(Family::twof0, {"theta", "alpha"}, moebius(0, -1, 1, 0), {{"v", "(3+alpha+theta)/2"}}, "", "1",
        Family::confluent, {"theta", "alpha"}, {{"v", "(-1-alpha-theta)/2"}}, "");
    // 0F1 operator at (v/4)² against the confluent operator with θ = 0, 2α
    add(Family::zerof1, {"alpha"}, Substitution::quadratic(Sym::w, Sym::v, GaussRational(1, 16), GaussRational(0)),
        {}, "-v/2", "4/v", Family::confluent, {"0", "2*alpha"}, {}, "v/2");
    return out;
}

}  // namespace

std::string ConjugationRow::str() const {
    std::string lhs = std::string(family_name(src.family)) + src.str() + "(w)";
    std::string map = subst ? subst->str()
                            : std::string("w = ") + (algebraic_sign < 0 ? "-" : "") + "v/sqrt(v^2 - 1)";
    std::string rhs;
    if (!left.is_trivial()) rhs += left.str() + " ";
    if (!equal(prefactor, RatFun(1))) rhs += "(" + prefactor.str() + ") ";
    rhs += std::string(family_name(tgt.family)) + tgt.str() + "(v)";
    if (!right.is_trivial()) rhs += " " + right.str();
    return lhs + " = " + rhs + ", " + map;
}

const IdentityCatalog& catalog(Family f) {
    static const IdentityCatalog h = build_hyp2f1(), g = build_gegenbauer(), c = build_confluent(),
                                 t = Builder(Family::twof0).c, e = build_hermite(), z = build_zerof1();
    switch (f) {
        case Family::hyp2f1: return h;
        case Family::gegenbauer: return g;
        case Family::confluent: return c;
        case Family::twof0: return t;
        case Family::hermite: return e;
        case Family::zerof1: return z;
    }
    return t;
}

const std::vector<ConjugationRow>& quadratic_links() {
    static const std::vector<ConjugationRow> links = build_links();
    return links;
}

}  // namespace hyperclass
