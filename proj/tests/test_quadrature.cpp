#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hyperclass/integral_reps.hpp"
#include "hyperclass/numerics.hpp"
#include "numerics_oracle.hpp"

using namespace hyperclass;

namespace {

constexpr double kPi = std::numbers::pi;

cplx oracle_value(const char* what) {
    for (const auto& o : oracle::integrals)
        if (std::string(o.what) == what) return o.value;
    FAIL("no oracle entry " << what);
    return 0.0;
}

double rel(cplx got, cplx want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

}  // namespace

TEST_CASE("segments, rays and singular endpoints") {
    Integrand one;
    CHECK(rel(integrate(one, Contour::segment(0.0, 1.0)).value, 1.0) < 1e-14);

    Integrand g;
    g.c2 = -1.0;
    g.c1 = -2.0;
    CHECK(rel(integrate(g, Contour::ray(0.0, 1.0)).value, oracle_value("exp(-t^2-2t) over [0,inf)")) < 1e-12);

    Integrand b;
    b.factors = {Factor(1.0, {0.0}, -0.9), Factor(-1.0, {1.0}, -0.8)};
    CHECK(rel(integrate(b, Contour::segment(0.0, 1.0)).value, oracle_value("t^-0.9 (1-t)^-0.8 over [0,1]")) < 1e-10);

    Integrand h;
    h.c2 = -1.0;
    h.c1 = -2.4;
    h.factors = {Factor(1.0, {0.0}, -0.1)};
    CHECK(rel(integrate(h, Contour::ray(0.0, 1.0)).value, oracle_value("exp(-t^2-2.4t) t^-0.1 over [0,inf)")) < 1e-11);

    // Quadratic factor with complex roots.
    const cplx s = std::sqrt(cplx(0.75));
    Integrand q;
    q.factors = {Factor(1.0, {cplx(-0.5) + cplx(0, 1) * s, cplx(-0.5) - cplx(0, 1) * s}, -1.1), Factor(1.0, {0.0}, 0.2)};
    CHECK(rel(integrate(q, Contour::ray(0.0, 1.0)).value, oracle_value("(t^2+t+1)^-1.1 t^0.2 over [0,inf)")) < 1e-10);
}

TEST_CASE("closed loops and the Hankel contour") {
    Contour circle;
    circle.add(Piece::arc(0.0, 1.0, -kPi, kPi));
    Integrand e;
    e.c1 = 1.0;
    e.constant = 1.0 / (2.0 * kPi * cplx(0, 1));
    CHECK(std::abs(integrate(e, circle).value) < 1e-13);
    Integrand inv;
    inv.factors = {Factor(1.0, {0.0}, -1.0)};
    inv.constant = 1.0 / (2.0 * kPi * cplx(0, 1));
    CHECK(rel(integrate(inv, circle).value, 1.0) < 1e-13);

    Integrand hk;
    hk.c1 = 1.0;
    hk.cm1 = 0.25;
    hk.factors = {Factor(1.0, {0.0}, -1.3, 0, -kPi)};
    hk.constant = 1.0 / (2.0 * kPi * cplx(0, 1));
    CHECK(rel(integrate(hk, Contour::hankel(0.0, 1.0)).value, oracle_value("hankel 0f1 a=0.3 w=0.25")) < 1e-11);
}

TEST_CASE("phase turns at junctions") {
    // ∫ over (−∞,0] of (−t)^a e^t, continued over 0 clockwise onto [0,1]: the
    // power picks up e^{−iπa}.
    Integrand f;
    f.factors = {Factor(-1.0, {0.0}, -0.5)};
    Contour c;
    c.add(Piece::segment(-1.0, 0.0)).turn(0.0, -kPi).add(Piece::segment(0.0, 1.0));
    const auto r = integrate(f, c);
    REQUIRE(r.pieces.size() == 2);
    CHECK(rel(r.pieces[0], 2.0) < 1e-12);
    CHECK(rel(r.pieces[1], 2.0 * std::exp(cplx(0, kPi / 2))) < 1e-12);
    Contour ambiguous;
    ambiguous.add(Piece::segment(-1.0, 0.0)).add(Piece::segment(0.0, 1.0));
    CHECK_THROWS_AS(integrate(f, ambiguous), PreconditionError);
}

TEST_CASE("a root inside a piece is rejected") {
    Integrand f;
    f.factors = {Factor(1.0, {0.5}, -0.5)};
    CHECK_THROWS_AS(integrate(f, Contour::segment(0.0, 1.0)), PreconditionError);
}

TEST_CASE("non-convergence reports the best value") {
    Integrand f;
    f.factors = {Factor(1.0, {0.0}, -0.999)};
    try {
        integrate(f, Contour::segment(0.0, 1.0), QuadOptions{1e-15, 3, 4});
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(std::isfinite(e.estimate));
    }
}

TEST_CASE("every integral representation equals its solution") {
    int rows = 0;
    for (const auto& row : integral_reps()) {
        REQUIRE(row.samples.size() >= 3);
        for (const auto& [p, w] : row.samples) {
            CAPTURE(row.ref);
            CAPTURE(w);
            REQUIRE(row.admissible(p, w));
            CHECK(rel(integral_rep(row, p, w).value, row.expected(p, w)) < 1e-7);
        }
        ++rows;
    }
    CHECK(rows == 10 + 8 + 9 + 4 + 7);
    CHECK(integral_reps(Family::hermite).size() == 4);
}

TEST_CASE("Hermite integral at lambda = 0.4, w = 1.2") {
    const auto row = integral_reps(Family::hermite)[2];
    CHECK(rel(integral_rep(row, {0.4}, 1.2).value, eval_function(Family::hermite, {0.4}, 1.2, Norm::I)) < 1e-7);
    CHECK(rel(integral_rep(row, {0.4}, 1.2).value, oracle_value("exp(-t^2-2.4t) t^-0.1 over [0,inf)")) < 1e-11);
}

TEST_CASE("printed forms that differ are rejected") {
    REQUIRE(printed_integral_reps().size() == 3);
    for (const auto& row : printed_integral_reps()) {
        const auto& [p, w] = row.samples.front();
        CHECK(rel(integral_rep(row, p, w).value, row.expected(p, w)) > 1e-3);
    }
}

TEST_CASE("inadmissible samples are refused") {
    const auto row = integral_reps(Family::confluent)[6];  // keyhole, needs Re w > 0
    CHECK_THROWS_AS(integral_rep(row, {0.12, 0.21}, {-0.5, 0.3}), PreconditionError);
}

TEST_CASE("three-way split along the real axis sums to zero") {
    for (int sign : {1, -1})
        for (cplx w : {cplx(0.3, -0.2), cplx(-1.0, -0.5), cplx(2.0, -1.0)}) {
            const auto q = three_way_split({0.11, 0.07, 0.05}, w, sign);
            double scale = 0;
            for (cplx v : q.pieces) scale += std::abs(v);
            CHECK(std::abs(q.value) < 1e-10 * scale);
        }
    CHECK_THROWS_AS(three_way_split({0.11, 0.07, 0.05}, {0.3, 0.2}, 1), PreconditionError);
}
