#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "hyperclass/catalog.hpp"
#include "hyperclass/integral_reps.hpp"
#include "hyperclass/numerics.hpp"
#include "hyperclass/verify.hpp"

namespace hyperclass {

namespace {

constexpr double kRecurrenceTol = 1e-10;
constexpr double kKummerTol = 1e-10;
constexpr double kConnectionTol = 1e-9;
constexpr double kDetTol = 1e-12;
constexpr double kInverseTol = 1e-10;
constexpr double kIntegralTol = 1e-7;
constexpr double kResidualTol = 1e-9;
constexpr double kKernelTol = 1e-8;

VerificationReport report(const char* suite, Family f, std::uint64_t seed) {
    VerificationReport r;
    r.suite = suite;
    r.family = family_name(f);
    r.seed = seed;
    return r;
}

CheckResult numeric(std::string id, std::string ref, double tol) {
    CheckResult c;
    c.id = std::move(id);
    c.ref = std::move(ref);
    c.kind = CheckMode::numeric;
    c.tolerance = tol * tolerance_scale();
    return c;
}

void settle(CheckResult& c, double worst) {
    c.error = worst;
    c.status = std::isfinite(worst) && worst <= c.tolerance ? Status::pass : Status::fail;
}

std::string fmt(cplx z) {
    std::ostringstream s;
    s.precision(6);
    s << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return s.str();
}

std::string fmt(const std::vector<cplx>& p) {
    std::string out = "(";
    for (size_t i = 0; i < p.size(); ++i) out += (i ? ", " : "") + fmt(p[i]);
    return out + ")";
}

// Upper half-plane box where every solution of the family is on its principal branch.
cplx sample_point(Family f, std::mt19937_64& rng) {
    auto u = [&](double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); };
    switch (f) {
        case Family::hyp2f1: return {u(-1.5, 2.5), u(0.1, 1.5)};
        case Family::gegenbauer: return {u(-2.0, 2.0), u(0.1, 1.5)};
        case Family::confluent: return {u(-3.0, 3.0), u(0.1, 2.0)};
        case Family::twof0: return {u(-3.0, 1.0), u(0.1, 2.0)};
        case Family::hermite: return {u(-1.5, 3.0), u(0.1, 2.0)};
        case Family::zerof1: return {u(-3.0, 3.0), u(0.1, 2.0)};
    }
    return {0.0, 1.0};
}

SymValues with_params(Family f, const std::vector<cplx>& lie) {
    SymValues v{};
    const auto& syms = family_symbols(f);
    for (size_t i = 0; i < syms.size(); ++i) v[size_t(syms[i])] = lie[i];
    return v;
}

// |Σ c_k f^(k)|-type scale of an operator applied to a jet.
double term_scale(const std::vector<cplx>& coeffs, const Jet& f) {
    double s = 0;
    for (size_t k = 0; k < coeffs.size(); ++k) s += std::abs(coeffs[k] * f.derivative(int(k)));
    return s;
}

}  // namespace

VerificationReport verify_recurrences(Family f, std::uint64_t seed) {
    auto rep = report("recurrences", f, seed);
    std::mt19937_64 rng(seed);
    const auto lie = generic_params(f, rng);
    std::vector<cplx> points;
    for (int k = 0; k < 5; ++k) points.push_back(sample_point(f, rng));
    const SymValues vals = with_params(f, lie);
    for (const auto& row : catalog(f).recurrences) {
        auto c = numeric("A F -> " + row.tgt.str(), row.ref, kRecurrenceTol);
        c.detail = "params " + fmt(lie);
        const auto tgt = row.tgt.evaluate(vals);
        double worst = 0;
        try {
            for (cplx w : points) {
                const Jet F = eval_function(f, lie, Jet::variable(w, std::max(1, row.A.order())), row.norm);
                SymValues at = vals;
                at[size_t(Sym::w)] = w;
                const auto coeffs = row.A.coeffs_at(at);
                const cplx lhs = jet_apply(coeffs, F);
                const cplx rhs = row.coefficient.evaluate(at) * eval_function(f, tgt, w, row.norm);
                worst = std::max(worst, std::abs(lhs - rhs) / std::max({term_scale(coeffs, F), std::abs(rhs), 1e-300}));
                ++c.samples;
            }
            settle(c, worst);
        } catch (const DomainError& e) {
            c.status = Status::skipped;
            c.detail = e.what();
        }
        rep.checks.push_back(c);
    }
    return rep;
}

VerificationReport verify_kummer_table(const std::vector<cplx>& lie, cplx w) {
    auto rep = report("kummer", Family::hyp2f1, 0);
    const auto sols = standard_solutions(Family::hyp2f1, lie);
    for (size_t s = 0; s < sols.size(); ++s) {
        const auto& sol = sols[s];
        std::vector<cplx> v;
        std::string err;
        try {
            for (size_t k = 0; k < sol.forms.size(); ++k) v.push_back(eval_solution(sol, w, int(k)));
        } catch (const DomainError& e) {
            err = e.what();
        }
        for (size_t i = 0; i < sol.forms.size(); ++i)
            for (size_t j = i + 1; j < sol.forms.size(); ++j) {
                auto c = numeric("'" + sol.behavior + "' form " + std::to_string(i + 1) + " vs " + std::to_string(j + 1),
                                 "2f1.solutions[" + std::to_string(s) + "]", kKummerTol);
                c.detail = "params " + fmt(lie) + " w " + fmt(w);
                c.samples = 1;
                if (!err.empty()) {
                    c.status = Status::skipped;
                    c.detail = err;
                } else {
                    settle(c, std::abs(v[i] - v[j]) / std::max({std::abs(v[i]), std::abs(v[j]), 1e-300}));
                }
                rep.checks.push_back(c);
            }
    }
    return rep;
}

VerificationReport verify_kummer_table(std::uint64_t seed) {
    auto rep = verify_kummer_table({0.1, 0.2, 0.3}, {0.2, 0.1});
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    for (int k = 0; k < 4; ++k) {
        const auto lie = generic_params(Family::hyp2f1, rng);
        rep.append(verify_kummer_table(lie, sample_point(Family::hyp2f1, rng)));
    }
    return rep;
}

VerificationReport verify_connection(Family f, std::uint64_t seed) {
    auto rep = report("connection", f, seed);
    if (f != Family::hyp2f1 && f != Family::confluent && f != Family::zerof1) return rep;
    std::mt19937_64 rng(seed);
    const auto lie = generic_params(f, rng);
    const auto A = connection_matrix(f, lie);
    const std::string ref = std::string(family_name(f)) + ".connection";

    auto c = numeric("solutions = A * solutions", ref, kConnectionTol);
    c.detail = "params " + fmt(lie);
    double worst = 0;
    for (int k = 0; k < 10; ++k) {
        cplx w = sample_point(f, rng);
        const auto lhs = connection_lhs(f, lie, w), rhs = connection_rhs(f, lie, w);
        for (size_t i = 0; i < A.rows.size(); ++i) {
            const cplx sum = A.rows[i][0] * rhs[0] + A.rows[i][1] * rhs[1];
            const double scale = std::abs(A.rows[i][0] * rhs[0]) + std::abs(A.rows[i][1] * rhs[1]) + std::abs(lhs[i]);
            worst = std::max(worst, std::abs(lhs[i] - sum) / std::max(scale, 1e-300));
        }
        ++c.samples;
    }
    settle(c, worst);
    rep.checks.push_back(c);
    if (f == Family::zerof1) return rep;

    const auto& m = A.rows;
    const cplx det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    const cplx stated = connection_det(f, lie);
    auto d = numeric("det A closed form", ref, kDetTol);
    d.samples = 1;
    settle(d, std::abs(det - stated) / std::abs(stated));
    rep.checks.push_back(d);

    const auto B = connection_inverse(f, lie).rows;
    double off = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const cplx e = m[i][0] * B[0][j] + m[i][1] * B[1][j];
            off = std::max(off, std::abs(e - (i == j ? 1.0 : 0.0)));
        }
    auto inv = numeric(f == Family::hyp2f1 ? "A_{a,b,m} A_{m,b,a} = 1" : "A A^-1 = 1", ref, kInverseTol);
    inv.samples = 1;
    settle(inv, off);
    rep.checks.push_back(inv);
    return rep;
}

VerificationReport verify_integral_reps(Family f) {
    auto rep = report("integrals", f, 0);
    for (const auto& row : integral_reps(f)) {
        auto c = numeric(row.integral + " = " + row.value, row.ref, kIntegralTol);
        double worst = 0;
        for (const auto& [p, w] : row.samples) {
            try {
                const auto q = integral_rep(row, p, w);
                const cplx e = row.expected(p, w);
                worst = std::max(worst, std::abs(q.value - e) / std::max(std::abs(e), 1e-300));
            } catch (const ConvergenceError& e) {
                worst = std::max(worst, std::abs(e.best - row.expected(p, w)) / std::abs(row.expected(p, w)));
                c.detail = e.what();
            } catch (const DomainError& e) {
                worst = INFINITY;
                c.detail = e.what();
            }
            ++c.samples;
        }
        settle(c, worst);
        rep.checks.push_back(c);
    }
    return rep;
}

VerificationReport verify_ode_residuals(Family f, std::uint64_t seed) {
    auto rep = report("residuals", f, seed);
    std::mt19937_64 rng(seed);
    const auto lie = generic_params(f, rng);
    const DiffOperator op = make_operator(FamilyParams::symbolic(f));
    SymValues vals = with_params(f, lie);
    const auto sols = standard_solutions(f, lie);
    for (size_t s = 0; s < sols.size(); ++s) {
        const auto& sol = sols[s];
        auto c = numeric("'" + sol.behavior + "' solves the equation",
                         std::string(family_name(f)) + ".solutions[" + std::to_string(s) + "]", kResidualTol);
        c.detail = "params " + fmt(lie);
        double worst = 0;
        while (c.samples < 20) {
            cplx w = sample_point(f, rng);
            if (!sol.in_domain(w)) continue;
            const Jet F = sol.forms[0].jet(Jet::variable(w, 2));
            SymValues at = vals;
            at[size_t(Sym::w)] = w;
            const auto coeffs = op.coeffs_at(at);
            worst = std::max(worst, std::abs(jet_apply(coeffs, F)) / std::max(term_scale(coeffs, F), 1e-300));
            ++c.samples;
        }
        settle(c, worst);
        rep.checks.push_back(c);
    }
    return rep;
}

VerificationReport verify_kernel_mapping(Family f, std::uint64_t seed) {
    auto rep = report("kernel", f, seed);
    std::mt19937_64 rng(seed);
    std::vector<SymValues> sets;
    for (int k = 0; k < 3; ++k) sets.push_back(generic_values(rng));
    std::vector<cplx> points;
    for (int k = 0; k < 3; ++k) points.push_back(sample_point(f, rng));
    for (const auto& row : catalog(f).transmutations) {
        auto c = numeric("F_tgt annihilates A applied to a solution of F_src", row.ref, kKernelTol);
        const DiffOperator R = make_operator(row.tgt) * row.A;
        double worst = 0;
        try {
            for (const auto& vals : sets) {
                const auto src = row.src.evaluate(vals);
                for (cplx w : points) {
                    const Jet F = eval_function(f, src, Jet::variable(w, R.order()));
                    SymValues at = vals;
                    at[size_t(Sym::w)] = w;
                    const auto coeffs = R.coeffs_at(at);
                    worst = std::max(worst, std::abs(jet_apply(coeffs, F)) / std::max(term_scale(coeffs, F), 1e-300));
                    ++c.samples;
                }
            }
            settle(c, worst);
        } catch (const DomainError& e) {
            c.status = Status::skipped;
            c.detail = e.what();
        }
        rep.checks.push_back(c);
    }
    return rep;
}

VerificationReport verify_printed_forms() {
    VerificationReport rep;
    rep.suite = "printed";
    rep.family = "all";
    auto flip = [](CheckResult c, const std::string& note) {
        c.status = c.status == Status::fail ? Status::pass : Status::fail;
        c.detail = note;
        return c;
    };
    for (Family f : kAllFamilies) {
        for (const auto& row : catalog(f).printed_transmutations)
            rep.checks.push_back(flip(check_transmutation(row), "printed form rejected"));
        for (const auto& row : catalog(f).printed_factorizations)
            rep.checks.push_back(flip(check_factorization(row), "printed form rejected"));
    }
    for (const auto& row : printed_integral_reps()) {
        auto c = numeric(row.integral + " = " + row.value, row.ref, kIntegralTol);
        // Smallest discrepancy over the samples: the printed form must miss at every one.
        double least = INFINITY;
        for (const auto& [p, w] : row.samples) {
            const cplx e = row.expected(p, w);
            least = std::min(least, std::abs(integral_rep(row, p, w).value - e) / std::abs(e));
            ++c.samples;
        }
        c.error = least;
        c.status = least > c.tolerance ? Status::pass : Status::fail;
        c.detail = row.note;
        rep.checks.push_back(c);
    }
    // Confluent inverse and determinant as printed: prefactor i e^{iπθ/2}/2 and
    // −iπ e^{−iπθ/2}/(2 sin πα), half the true values.
    std::mt19937_64 rng(0);
    const auto lie = generic_params(Family::confluent, rng);
    const auto A = connection_matrix(Family::confluent, lie).rows;
    auto B = connection_inverse(Family::confluent, lie).rows;
    for (auto& r : B)
        for (auto& e : r) e /= 2.0;
    const cplx prod00 = A[0][0] * B[0][0] + A[0][1] * B[1][0];
    auto inv = numeric("A A^-1 = 1 with the printed inverse", "1f1.connection", kConnectionTol);
    inv.samples = 1;
    inv.error = std::abs(prod00 - 1.0);
    inv.status = inv.error > inv.tolerance ? Status::pass : Status::fail;
    inv.detail = "A times the printed inverse is " + fmt(prod00) + " times the identity";
    rep.checks.push_back(inv);
    const cplx det = A[0][0] * A[1][1] - A[0][1] * A[1][0];
    const cplx printed_det = connection_det(Family::confluent, lie) / 2.0;
    auto d = numeric("det A with the printed closed form", "1f1.connection", kConnectionTol);
    d.samples = 1;
    d.error = std::abs(det - printed_det) / std::abs(det);
    d.status = d.error > d.tolerance ? Status::pass : Status::fail;
    d.detail = "det A / printed value = " + fmt(det / printed_det);
    rep.checks.push_back(d);
    return rep;
}

}  // namespace hyperclass
