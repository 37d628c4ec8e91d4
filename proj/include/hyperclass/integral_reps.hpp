#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hyperclass/families.hpp"
#include "hyperclass/quadrature.hpp"

namespace hyperclass {

/// One integral representation: a contour integral that equals a normalized
/// standard solution.
struct IntegralRep {
    std::string ref;         // e.g. "2f1.integrals[3]"
    Family family;
    std::string integral;    // integrand and contour in plain text
    std::string value;       // the solution it equals
    std::string conditions;  // parameter and domain constraints
    std::string note;        // for printed variants: what differs
    std::function<std::pair<Integrand, Contour>(const std::vector<cplx>&, cplx)> build;
    std::function<cplx(const std::vector<cplx>&, cplx)> expected;
    std::function<bool(const std::vector<cplx>&, cplx)> admissible;
    std::vector<std::pair<std::vector<cplx>, cplx>> samples;  // (Lie parameters, w)
};

// Verified rows, all families, in catalog order.
const std::vector<IntegralRep>& integral_reps();
std::vector<IntegralRep> integral_reps(Family f);
// Rows kept exactly as printed where they differ from the verified ones.
const std::vector<IntegralRep>& printed_integral_reps();

// Evaluates the integral. Throws PreconditionError outside the admissible set.
QuadResult integral_rep(const IntegralRep& rep, const std::vector<cplx>& lie, cplx w, const QuadOptions& opt = {});

/// ∫_{−∞}^0 + ∫_0^1 + ∫_1^∞ of (−t)^{(−1−α+β±μ)/2}(1−t)^{(−1+α−β±μ)/2}(w−t)^{(−1−α−β∓μ)/2},
/// the phases continued clockwise over 0 and 1 (Im w < 0). The sum vanishes.
/// The three pieces are in QuadResult::pieces.
QuadResult three_way_split(const std::vector<cplx>& lie, cplx w, int sign);

}  // namespace hyperclass
