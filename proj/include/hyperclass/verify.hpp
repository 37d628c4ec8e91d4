#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hyperclass/catalog.hpp"

namespace hyperclass {

enum class Status { pass, fail, skipped };
const char* status_name(Status s);

struct CheckResult {
    std::string id;   // short description of what is checked
    std::string ref;  // catalog locator
    CheckMode kind = CheckMode::symbolic;
    Status status = Status::skipped;
    // Symbolic: number of nonzero residue terms. Numeric: max relative error.
    double error = 0.0;
    double tolerance = 0.0;  // numeric rows
    int samples = 0;
    std::string detail;
};

struct VerificationReport {
    std::string suite;
    std::string family;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    int count(Status s) const;
    int passed() const { return count(Status::pass); }
    int failed() const { return count(Status::fail); }
    int skipped() const { return count(Status::skipped); }
    void append(const VerificationReport& other);
};

// Scale applied to every numeric tolerance (HYPERCLASS_TOL, default 1).
double tolerance_scale();

// Generic rational values (denominators 7, 11, 13) for every parameter symbol.
SymValues generic_values(std::mt19937_64& rng);
// Lie parameters of family f drawn from the same list.
std::vector<cplx> generic_params(Family f, std::mt19937_64& rng);

// Symbolic checks of single rows.
CheckResult check_transmutation(const TransmutationRow& row);
CheckResult check_factorization(const FactorizationRow& row);
// Symbolic rows are exact; numeric rows use jets on exponential test functions.
CheckResult check_conjugation(const ConjugationRow& row, std::uint64_t seed = 0);

VerificationReport verify_transmutations(const IdentityCatalog& c);
VerificationReport verify_factorizations(const IdentityCatalog& c);
VerificationReport verify_discrete_symmetries(const IdentityCatalog& c, std::uint64_t seed = 0);
VerificationReport verify_quadratic_links();
// Pairs factorization rows whose A₋ and A₊ swap under a parameter shift and
// checks A₊F₁ = (F₂ + c₁ − c₂)A₊ and A₋F₂ = (F₁ + c₂ − c₁)A₋.
VerificationReport verify_darboux(const IdentityCatalog& c);
// Corrupts one coefficient of a random row by +1; each check passes when the
// corrupted row is rejected.
VerificationReport verify_mutations(std::uint64_t seed, int count);

// Numeric suites. Errors are relative to the size of the terms being
// compared; every tolerance is multiplied by tolerance_scale().

// A·F_p = coefficient·F_tgt at 5 points per row (1e−10).
VerificationReport verify_recurrences(Family f, std::uint64_t seed = 0);
// The 4 expressions of each of the 6 standard ₂F₁ solutions agree pairwise
// (36 checks, 1e−10). Needs Im w > 0.
VerificationReport verify_kummer_table(const std::vector<cplx>& lie, cplx w);
// Five samples: (0.1, 0.2, 0.3) at 0.2+0.1i, then four seeded ones.
VerificationReport verify_kummer_table(std::uint64_t seed = 0);
// lhs = A·rhs at 10 points with Im w > 0 (1e−9); for 2f1 and 1f1 also the
// determinant (1e−12) and A·A⁻¹ = 1 (1e−10).
VerificationReport verify_connection(Family f, std::uint64_t seed = 0);
// Every integral representation row at its samples (1e−7).
VerificationReport verify_integral_reps(Family f);
// Each standard solution at 20 points of its domain (1e−9).
VerificationReport verify_ode_residuals(Family f, std::uint64_t seed = 0);
// For each transmutation row and 3 parameter sets, A applied to a solution of
// 𝓕_src is annihilated by 𝓕_tgt (1e−8).
VerificationReport verify_kernel_mapping(Family f, std::uint64_t seed = 0);
// Rows kept in their printed form where it is wrong; each check passes when
// the printed form is rejected.
VerificationReport verify_printed_forms();

}  // namespace hyperclass
