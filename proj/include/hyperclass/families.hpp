#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperclass/diffop.hpp"
#include "hyperclass/errors.hpp"

namespace hyperclass {

enum class Family { hyp2f1, gegenbauer, confluent, twof0, hermite, zerof1 };

inline constexpr Family kAllFamilies[] = {Family::hyp2f1,  Family::gegenbauer, Family::confluent,
                                          Family::twof0,   Family::hermite,    Family::zerof1};

// Normalizations of the distinguished solutions: F (plain), bold F
// (Gamma-normalized), and the families' I, II, 0 and tilde variants.
enum class Norm { plain, bold, I, II, zero, tilde };
const char* norm_name(Norm n);
std::optional<Norm> norm_from_name(const std::string& name);

// CLI name: "2f1", "gegenbauer", "1f1", "2f0", "hermite", "0f1".
const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

// Lie-algebraic parameter symbols, in record order:
// 2f1 (α,β,μ), gegenbauer (α,λ), 1f1 and 2f0 (θ,α), hermite (λ), 0f1 (α).
const std::vector<Sym>& family_symbols(Family f);
// Classical parameter names: "a", "b", "c" as applicable.
const std::vector<std::string>& classical_names(Family f);

/// Tagged parameter record. Entries are polynomials in the parameter
/// symbols (symbolic mode) or constants.
struct FamilyParams {
    Family family;
    std::vector<MultiPoly> values;

    // The record whose entries are the family's own symbols.
    static FamilyParams symbolic(Family f);
    // Parses one expression per entry, e.g. {"alpha+1", "beta-1", "mu"}.
    static FamilyParams parse(Family f, const std::vector<std::string>& exprs);
    // Substitutes numeric values for the family symbols.
    std::vector<cplx> evaluate(const SymValues& vals) const;
    std::string str() const;
};

bool operator==(const FamilyParams& a, const FamilyParams& b);

/// Numeric parameter values in record order.
struct NumericParams {
    Family family;
    std::vector<cplx> values;
    // Values assigned to the family symbols (others zero).
    SymValues sym_values() const;
};

// Family operator in the working variable x. Symbolic parameters stay symbols.
DiffOperator make_operator(const FamilyParams& p, Sym x = Sym::w);
// Same operator written in the classical parameters.
DiffOperator make_classical_operator(Family f, const std::vector<MultiPoly>& classical, Sym x = Sym::w);

std::vector<MultiPoly> lie_to_classical(const FamilyParams& p);
FamilyParams classical_to_lie(Family f, const std::vector<MultiPoly>& classical);
std::vector<cplx> lie_to_classical(Family f, const std::vector<cplx>& lie);
std::vector<cplx> classical_to_lie(Family f, const std::vector<cplx>& classical);

}  // namespace hyperclass
