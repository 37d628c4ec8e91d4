#include <random>

#include "doctest.h"
#include "hyperclass/diffop.hpp"
#include "hyperclass/errors.hpp"
#include "hyperclass/jet.hpp"
#include "hyperclass/multiplier.hpp"
#include "hyperclass/substitution.hpp"

using namespace hyperclass;

namespace {

const MultiPoly W = MultiPoly::var(Sym::w);
const MultiPoly V = MultiPoly::var(Sym::v);
const MultiPoly A = MultiPoly::var(Sym::alpha);

MultiPoly random_poly(std::mt19937& rng, Sym x) {
    std::uniform_int_distribution<int> coef(-4, 4), den(1, 3);
    MultiPoly p;
    for (int d = 0; d <= 2; ++d)
        for (int k = 0; k <= 1; ++k) {
            GaussRational c(coef(rng), den(rng));
            if (coef(rng) > 2) c += GaussRational::i() * GaussRational(coef(rng));
            p += MultiPoly(c) * MultiPoly::var(x).pow(d) * A.pow(k);
        }
    return p;
}

DiffOperator random_operator(std::mt19937& rng, Sym x) {
    std::vector<RatFun> c;
    for (int k = 0; k <= 2; ++k) c.push_back(RatFun(random_poly(rng, x)));
    return DiffOperator(x, c);
}

}  // namespace

TEST_CASE("gaussian rationals are canonical") {
    GaussRational a(2, 4), b(1, 2);
    CHECK(a == b);
    CHECK(a.str() == "1/2");
    GaussRational z = GaussRational(3) + GaussRational::i() * GaussRational(-2, 6);
    CHECK(z.str() == "(3-1/3i)");
    CHECK((z / z).is_one());
    CHECK((GaussRational::i() * GaussRational::i()) == GaussRational(-1));
    CHECK(GaussRational(0, 5).is_zero());
    CHECK_THROWS_AS(GaussRational(1) / GaussRational(0), DomainError);
}

TEST_CASE("polynomial products and sums") {
    CHECK(W * W == W.pow(2));
    CHECK((W + A) * MultiPoly(0) == MultiPoly());
    MultiPoly p = W * (MultiPoly(1) - W) * MultiPoly(1) + (MultiPoly(1) - W * GaussRational(2)) * MultiPoly(0);
    CHECK(p == W - W * W);
    CHECK(p.str() == "-w^2 + w");
}

TEST_CASE("polynomial ring axioms on random inputs") {
    std::mt19937 rng(7);
    for (int t = 0; t < 20; ++t) {
        MultiPoly p = random_poly(rng, Sym::w), q = random_poly(rng, Sym::w), r = random_poly(rng, Sym::w);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p - p).is_zero());
    }
}

TEST_CASE("rational function equality by cross-multiplication") {
    CHECK(equal(RatFun(W, W), RatFun(1)));
    CHECK(equal(RatFun(W * W - MultiPoly(1), W - MultiPoly(1)), RatFun(W + MultiPoly(1))));
    CHECK_FALSE(equal(RatFun(MultiPoly(1), W), RatFun(MultiPoly(1), MultiPoly(1) - W)));
    RatFun f(W, W + MultiPoly(1));
    CHECK(equal(f.derivative(Sym::w), RatFun(MultiPoly(1), (W + MultiPoly(1)).pow(2))));
    CHECK(equal(f.substitute(Sym::w, RatFun(MultiPoly(1), V)), RatFun(MultiPoly(1), MultiPoly(1) + V)));
}

TEST_CASE("operator composition") {
    const auto D = DiffOperator::d(Sym::w);
    CHECK(equal(D * D, DiffOperator(Sym::w, {RatFun(), RatFun(), RatFun(1)})));
    CHECK(equal(D * DiffOperator::mult(Sym::w, RatFun(W)), DiffOperator(Sym::w, {RatFun(1), RatFun(W)})));
    DiffOperator F(Sym::w, {RatFun(GaussRational(-1, 4)), RatFun(MultiPoly(1) - W * GaussRational(2)),
                            RatFun(W * (MultiPoly(1) - W))});
    DiffOperator G = D * F;
    CHECK(G.order() == 3);
    CHECK(G.coeff(0).is_zero());
    CHECK(equal(G.coeff(1), RatFun(GaussRational(-9, 4))));
}

TEST_CASE("composition is associative on random operators") {
    std::mt19937 rng(11);
    for (int t = 0; t < 5; ++t) {
        auto a = random_operator(rng, Sym::w), b = random_operator(rng, Sym::w), c = random_operator(rng, Sym::w);
        CHECK(equal((a * b) * c, a * (b * c)));
    }
}

TEST_CASE("conjugation by multipliers") {
    Multiplier m(Sym::w);
    m.factor(GaussRational(1), GaussRational(0), A);
    auto D = DiffOperator::d(Sym::w);
    CHECK(equal(conjugate(D, m), D + RatFun(A, W)));

    Multiplier e(Sym::w);
    e.exp_part(W);
    CHECK(equal(conjugate(D * D, e), D * D + RatFun(W.pow(0) * GaussRational(2)) * D + RatFun(1)));

    std::mt19937 rng(3);
    Multiplier mm(Sym::w);
    mm.factor(GaussRational(-1), GaussRational(0), A).factor(GaussRational(1), GaussRational(-1), A * GaussRational(2) + MultiPoly(GaussRational(1, 2))).exp_part(W * W * GaussRational(3));
    for (int t = 0; t < 3; ++t) {
        auto F = random_operator(rng, Sym::w);
        CHECK(equal(conjugate(conjugate(F, mm), mm.inverse()), F));
    }
    CHECK(!mm.as_rational().has_value());
    Multiplier ratio = m * m.inverse();
    ratio.factor(GaussRational(1), GaussRational(0), MultiPoly(2));
    REQUIRE(ratio.as_rational().has_value());
    CHECK(equal(*ratio.as_rational(), RatFun(W * W)));
}

TEST_CASE("substitutions and the chain rule") {
    auto Dw = DiffOperator::d(Sym::w);
    auto Dv = DiffOperator::d(Sym::v);
    auto s1 = Substitution::moebius(Sym::w, Sym::v, GaussRational(-1), GaussRational(1), GaussRational(0),
                                     GaussRational(1));
    CHECK(equal(s1.apply(Dw), -Dv));
    auto s2 = Substitution::moebius(Sym::w, Sym::v, GaussRational(0), GaussRational(1), GaussRational(1),
                                    GaussRational(0));
    CHECK(equal(s2.apply(DiffOperator::mult(Sym::w, RatFun(W)) * Dw), -(DiffOperator::mult(Sym::v, RatFun(V)) * Dv)));
    CHECK_THROWS_AS(Substitution::moebius(Sym::w, Sym::v, GaussRational(1), GaussRational(2), GaussRational(2),
                                          GaussRational(4)),
                    PreconditionError);

    std::mt19937 rng(5);
    auto s3 = Substitution::moebius(Sym::w, Sym::v, GaussRational(2), GaussRational(-1), GaussRational(1),
                                    GaussRational(3));
    for (int t = 0; t < 3; ++t) {
        auto F = random_operator(rng, Sym::w);
        CHECK(equal(s3.inverse().apply(s3.apply(F)), F));
    }

    auto q = Substitution::quadratic(Sym::w, Sym::v, GaussRational(1), GaussRational(0));
    // d/dw = (1/2v) d/dv
    CHECK(equal(q.apply(Dw), RatFun(MultiPoly(1), V * GaussRational(2)) * Dv));
}

TEST_CASE("jet arithmetic") {
    auto z = Jet::variable(0.0, 6);
    auto e = exp(z);
    for (int k = 0; k < 6; ++k) CHECK(std::abs(e.derivative(k) - 1.0) < 1e-13);

    Jet x = Jet::variable(0.3, 5);
    Jet e2 = exp(x);
    for (int k = 0; k < 5; ++k)
        CHECK(std::abs(e2.derivative(k) - std::exp(0.3)) < 1e-13 * std::exp(0.3));

    const std::complex<double> a(0.3, 0.2);
    Jet p = pow(1.0 - Jet::variable(0.0, 8), -a);
    std::complex<double> poch = 1.0, fact = 1.0;
    for (int n = 0; n <= 8; ++n) {
        if (n > 0) {
            poch *= a + double(n - 1);
            fact *= double(n);
        }
        CHECK(std::abs(p.coeff(n) - poch / fact) < 1e-12);
    }

    Jet y = Jet::variable({0.4, -0.2}, 5);
    Jet r = log(exp(y));
    for (int k = 0; k <= 5; ++k) CHECK(std::abs(r.coeff(k) - y.coeff(k)) < 1e-13);
    Jet s = sqrt(y) * sqrt(y) / y;
    CHECK(std::abs(s.coeff(0) - 1.0) < 1e-14);
    CHECK(std::abs(s.coeff(3)) < 1e-13);

    // exp(y) composed through Taylor coefficients of exp at y0
    std::vector<std::complex<double>> taylor(6);
    double f = 1;
    for (int k = 0; k < 6; ++k) {
        if (k > 0) f *= k;
        taylor[k] = std::exp(y.value()) / f;
    }
    Jet c = compose(taylor, Jet::variable(y.value(), 5) * 1.0);
    for (int k = 0; k <= 5; ++k) CHECK(std::abs(c.coeff(k) - exp(y).coeff(k)) < 1e-13);
}

TEST_CASE("numeric operator application through jets") {
    SymValues vals{};
    CHECK(std::abs(jet_apply(DiffOperator::d(Sym::w) * DiffOperator::d(Sym::w), vals, exp(Jet::variable(0.0))) -
                   1.0) < 1e-14);
    auto Ww = DiffOperator::mult(Sym::w, RatFun(W)) * DiffOperator::d(Sym::w);
    Jet x = Jet::variable(2.0);
    CHECK(std::abs(jet_apply(Ww, vals, x * x * x) - 24.0) < 1e-12);
    auto pole = DiffOperator::mult(Sym::w, RatFun(MultiPoly(1), W));
    CHECK_THROWS_AS(jet_apply(pole, vals, Jet::variable(0.0)), DomainError);
}
