#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyperclass/errors.hpp"
#include "hyperclass/families.hpp"
#include "hyperclass/jet.hpp"

namespace hyperclass {

// Complex gamma function (Lanczos, g = 7, n = 9; reflection for Re z < 1/2).
// Throws PoleError at nonpositive integers.
cplx gamma(cplx z);
// 1/Γ(z), entire; exactly zero at the poles of Γ.
cplx rgamma(cplx z);
cplx pochhammer(cplx a, int j);

// Σ Π(a)_n / Π(b)_n · w^n / n!, summed term by term with compensation.
// Throws ConvergenceError after 10000 terms and PoleError when a lower
// parameter is a nonpositive integer.
cplx pfq_series(const std::vector<cplx>& upper, const std::vector<cplx>& lower, cplx w);
// Taylor coefficients f^(k)(w)/k!, k = 0..order, of the same series.
std::vector<cplx> pfq_taylor(const std::vector<cplx>& upper, const std::vector<cplx>& lower, cplx w, int order);

enum class Method { automatic, series, pfaff, connection, continuation, asymptotic, quadrature };
const char* method_name(Method m);
std::optional<Method> method_from_name(const std::string& name);

struct EvalInfo {
    Method method = Method::automatic;
    double error = 0.0;  // estimated relative error
};

/// σ(z) f'' + τ(z) f' + η f = 0 with σ = s0 + s1 z + s2 z², τ = t0 + t1 z.
struct LinearOde {
    std::array<cplx, 3> sigma;
    std::array<cplx, 2> tau;
    cplx eta;
};

// Continues a solution along the polyline `path` by Taylor steps of at most
// half the distance to the nearest zero of σ. Returns f^(k)(end)/k!.
std::vector<cplx> ode_continue(const LinearOde& ode, const std::vector<cplx>& path, cplx f, cplx df, int order);

// Classical functions on the principal branch.
// ₂F₁(a,b;c;w), w ∉ [1,∞).
cplx hyp2f1(cplx a, cplx b, cplx c, cplx w, Method m = Method::automatic, EvalInfo* info = nullptr);
Jet hyp2f1(cplx a, cplx b, cplx c, const Jet& w, Method m = Method::automatic, EvalInfo* info = nullptr);
// ₁F₁(a;c;w).
cplx hyp1f1(cplx a, cplx c, cplx w, EvalInfo* info = nullptr);
Jet hyp1f1(cplx a, cplx c, const Jet& w, EvalInfo* info = nullptr);
// ₀F₁(;c;w).
cplx hyp0f1(cplx c, cplx w, EvalInfo* info = nullptr);
Jet hyp0f1(cplx c, const Jet& w, EvalInfo* info = nullptr);
// ₂F₀(a,b;−;w), w ∉ [0,∞): optimal truncation of the asymptotic series where
// that reaches full precision, otherwise continuation from a point near 0.
cplx hyp2f0(cplx a, cplx b, cplx w, Method m = Method::automatic, EvalInfo* info = nullptr);
Jet hyp2f0(cplx a, cplx b, const Jet& w, Method m = Method::automatic, EvalInfo* info = nullptr);

struct AsymptoticValue {
    cplx value;
    double error;  // magnitude of the smallest term
};
// Sums the ₂F₀ series up to its smallest term. With tol > 0, throws
// ConvergenceError (carrying the best value) when error > tol·|value|.
AsymptoticValue eval_2f0_asymptotic(cplx a, cplx b, cplx w, double tol = 0.0);

/// The distinguished function of each family, in Lie-algebraic parameters:
/// 2f1 F_{α,β,μ}, gegenbauer S_{α,λ}, 1f1 F_{θ,α}, 2f0 F̃_{θ,α}, hermite S_λ,
/// 0f1 F_α. For 0f1, Norm::tilde selects the solution F̃_α decaying at +∞.
cplx eval_function(Family f, const std::vector<cplx>& lie, cplx w, Norm n = Norm::plain,
                   Method m = Method::automatic, EvalInfo* info = nullptr);
Jet eval_function(Family f, const std::vector<cplx>& lie, const Jet& w, Norm n = Norm::plain,
                  Method m = Method::automatic, EvalInfo* info = nullptr);
// Factor N with (normalized function) = N · (plain function). Throws
// DomainError for normalizations the family does not define.
cplx norm_factor(Family f, const std::vector<cplx>& lie, Norm n);
// Normalizations defined for the family, plain first.
std::vector<Norm> family_norms(Family f);

/// One printed expression of a standard solution.
struct SolutionForm {
    std::string text;
    std::function<cplx(cplx)> value;
    std::function<Jet(const Jet&)> jet;
};

struct StandardSolution {
    Family family;
    std::string behavior;  // e.g. "~ w^-alpha at 0"
    Norm norm = Norm::plain;
    std::vector<SolutionForm> forms;  // forms[0] is the defining expression
    std::string domain;               // where every form is on its principal branch
    std::function<bool(cplx)> in_domain;
};

std::vector<StandardSolution> standard_solutions(Family f, const std::vector<cplx>& lie);
// Throws DomainError outside s.domain.
cplx eval_solution(const StandardSolution& s, cplx w, int form = 0);

/// Entries of the printed connection matrix (for 0f1: a single row).
struct ConnectionMatrix {
    Family family;
    std::vector<cplx> params;
    std::vector<std::array<cplx, 2>> rows;
};

// 2f1: A_{α,β,μ}; 1f1: A_{θ,α}; 0f1: the row expressing F̃_α.
// Throws DomainError at sin(πμ) = 0 or sin(πα) = 0.
ConnectionMatrix connection_matrix(Family f, const std::vector<cplx>& lie);
// Closed-form inverse (2f1: A_{μ,β,α}; 1f1: the explicit matrix) and
// determinant of the 2×2 matrices.
ConnectionMatrix connection_inverse(Family f, const std::vector<cplx>& lie);
cplx connection_det(Family f, const std::vector<cplx>& lie);
// The two sides of the connection identity lhs(w) = A · rhs(w).
// 2f1: solutions at 0 in terms of those at ∞, w ∉ [0,∞).
// 1f1: solutions at ±∞ in terms of those at 0, Im w > 0.
// 0f1: F̃_α in terms of the solutions at 0, w ∉ ]−∞,0].
std::vector<cplx> connection_lhs(Family f, const std::vector<cplx>& lie, cplx w);
std::vector<cplx> connection_rhs(Family f, const std::vector<cplx>& lie, cplx w);

}  // namespace hyperclass
