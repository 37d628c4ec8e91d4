#include <random>

#include "doctest.h"
#include "hyperclass/catalog.hpp"
#include "hyperclass/parse.hpp"
#include "hyperclass/substitution.hpp"

using namespace hyperclass;

namespace {

const MultiPoly W = MultiPoly::var(Sym::w);

std::vector<MultiPoly> rationals(std::mt19937& rng, size_t n) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    std::vector<MultiPoly> out;
    for (size_t i = 0; i < n; ++i) out.push_back(MultiPoly(GaussRational(num(rng), den(rng))));
    return out;
}

}  // namespace

TEST_CASE("parser builds operators as compositions") {
    auto A = parse_operator("D*w");
    CHECK(equal(A, DiffOperator(Sym::w, {RatFun(1), RatFun(W)})));
    auto B = parse_operator("w*(1-w)*D + 1/2*(alpha+1)");
    CHECK(equal(B.coeff(1), RatFun(W - W * W)));
    CHECK(equal(B.coeff(0), RatFun(MultiPoly::var(Sym::alpha) * GaussRational(1, 2) + MultiPoly(GaussRational(1, 2)))));
    CHECK(equal(parse_ratfun("(1-w^2)/w^2"), RatFun(MultiPoly(1) - W * W, W * W)));
    CHECK(equal(parse_ratfun("w^-2"), RatFun(MultiPoly(1), W * W)));
    CHECK(parse_poly("i*v").coeff_of(Sym::v, 1).constant_term() == GaussRational::i());
    CHECK_THROWS_AS(parse_operator("w +"), PreconditionError);
    CHECK_THROWS_AS(parse_operator("x"), PreconditionError);
    CHECK_THROWS_AS(parse_ratfun("D"), PreconditionError);
}

TEST_CASE("family operators at sample parameters") {
    auto F = make_operator(FamilyParams::parse(Family::hyp2f1, {"0", "0", "0"}));
    CHECK(equal(F, parse_operator("w*(1-w)*D^2 + (1-2*w)*D - 1/4")));
    CHECK(equal(make_operator(FamilyParams::symbolic(Family::hermite)),
                parse_operator("D^2 - 2*w*D - 2*lambda - 1")));
    CHECK(equal(make_operator(FamilyParams::parse(Family::zerof1, {"0"})), parse_operator("w*D^2 + D - 1")));
    CHECK(equal(make_operator(FamilyParams::symbolic(Family::gegenbauer)),
                parse_operator("(1-w^2)*D^2 - 2*(1+alpha)*w*D + lambda^2 - (alpha+1/2)^2")));
    CHECK(equal(make_operator(FamilyParams::symbolic(Family::confluent)),
                parse_operator("w*D^2 + (1+alpha-w)*D - 1/2*(1+theta+alpha)")));
    CHECK(equal(make_operator(FamilyParams::symbolic(Family::twof0)),
                parse_operator("w^2*D^2 + (-1+(2+theta)*w)*D + 1/4*(1+theta)^2 - 1/4*alpha^2")));
}

TEST_CASE("classical parameter maps") {
    auto h = classical_to_lie(Family::hyp2f1, {MultiPoly(1), MultiPoly(2), MultiPoly(3)});
    CHECK(h.values == std::vector<MultiPoly>{MultiPoly(2), MultiPoly(0), MultiPoly(-1)});
    auto g = classical_to_lie(Family::gegenbauer, {MultiPoly(GaussRational(1, 2)), MultiPoly(GaussRational(3, 2))});
    CHECK(g.values == std::vector<MultiPoly>{MultiPoly(GaussRational(1, 2)), MultiPoly(GaussRational(1, 2))});

    std::mt19937 rng(17);
    for (Family f : kAllFamilies) {
        for (int t = 0; t < 5; ++t) {
            auto c = rationals(rng, classical_names(f).size());
            CHECK(lie_to_classical(classical_to_lie(f, c)) == c);
        }
        // Both parametrizations describe the same operator.
        auto p = FamilyParams::symbolic(f);
        CHECK(equal(make_operator(p), make_classical_operator(f, lie_to_classical(p))));
        std::vector<cplx> z{{0.3, 0.1}, {-0.2, 0.5}, {1.1, 0.0}};
        z.resize(p.values.size());
        auto back = classical_to_lie(f, lie_to_classical(f, z));
        for (size_t i = 0; i < z.size(); ++i) CHECK(std::abs(back[i] - z[i]) < 1e-15);
    }
}

TEST_CASE("operator invariants") {
    auto F = make_operator(FamilyParams::symbolic(Family::hyp2f1));
    CHECK(equal(F, F.substitute_param(Sym::mu, -MultiPoly::var(Sym::mu))));

    // Gegenbauer operator equals F_{α,α,2λ} after v = (1 - w)/2.
    auto S = make_operator(FamilyParams::symbolic(Family::gegenbauer), Sym::w);
    auto H = make_operator(FamilyParams{Family::hyp2f1,
                                        {MultiPoly::var(Sym::alpha), MultiPoly::var(Sym::alpha),
                                         MultiPoly::var(Sym::lambda) * GaussRational(2)}},
                           Sym::v);
    auto sub = Substitution::moebius(Sym::v, Sym::w, GaussRational(-1, 2), GaussRational(1, 2), GaussRational(0),
                                     GaussRational(1));
    CHECK(equal(sub.apply(H), S));
}

TEST_CASE("catalog sizes") {
    struct Count {
        Family f;
        size_t t, fz, s, r;
    };
    for (auto c : {Count{Family::hyp2f1, 12, 12, 24, 12}, Count{Family::gegenbauer, 8, 8, 8, 8},
                   Count{Family::confluent, 6, 6, 4, 6}, Count{Family::hermite, 4, 4, 4, 4},
                   Count{Family::zerof1, 2, 2, 1, 2}}) {
        const auto& k = catalog(c.f);
        CHECK(k.transmutations.size() == c.t);
        CHECK(k.factorizations.size() == c.fz);
        CHECK(k.symmetries.size() == c.s);
        CHECK(k.recurrences.size() == c.r);
    }
    CHECK(quadratic_links().size() == 6);
    const auto& first = catalog(Family::hyp2f1).transmutations[0];
    CHECK(equal(first.A, DiffOperator::d(Sym::w)));
    CHECK(first.tgt == FamilyParams::parse(Family::hyp2f1, {"alpha+1", "beta+1", "mu"}));
    const auto& rec = catalog(Family::hermite).recurrences[0];
    CHECK(equal(rec.coefficient, parse_ratfun("-(1/2+lambda)")));
    int numeric = 0;
    for (const auto& s : catalog(Family::gegenbauer).symmetries) numeric += s.mode == CheckMode::numeric;
    CHECK(numeric == 4);
}
