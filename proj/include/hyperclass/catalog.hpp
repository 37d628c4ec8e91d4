#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperclass/families.hpp"
#include "hyperclass/multiplier.hpp"
#include "hyperclass/substitution.hpp"

namespace hyperclass {

enum class CheckMode { symbolic, numeric };

/// A ∘ (weight·𝓕_src) = (weight·𝓕_tgt) ∘ A.
struct TransmutationRow {
    std::string ref;
    DiffOperator A;
    RatFun weight;
    FamilyParams src, tgt;
    std::string note;  // set when the row differs from its printed form
};

/// weight·𝓕 = A₋ ∘ A₊ + constant.
struct FactorizationRow {
    std::string ref;
    RatFun weight;
    FamilyParams params;
    DiffOperator minus, plus;
    RatFun constant;
    std::string note;
};

/// 𝓕_src(w, ∂_w) = left · prefactor·𝓕_tgt(v, ∂_v) · right, where w is
/// given by `subst` in terms of v, or by w = sign·v/√(v²−1) when
/// `algebraic_sign` is nonzero (numeric rows only).
struct ConjugationRow {
    std::string ref;
    FamilyParams src;
    std::optional<Substitution> subst;
    int algebraic_sign = 0;
    Multiplier left{Sym::v}, right{Sym::v};
    RatFun prefactor;
    FamilyParams tgt;
    CheckMode mode = CheckMode::symbolic;
    std::string note;

    std::string str() const;
};

/// A·F_p(w) = coefficient·F_tgt(w) for the normalized solution F.
struct RecurrenceRow {
    std::string ref;
    DiffOperator A;
    RatFun coefficient;
    FamilyParams tgt;
    Norm norm;
};

struct IdentityCatalog {
    Family family;
    std::vector<TransmutationRow> transmutations;
    std::vector<FactorizationRow> factorizations;
    std::vector<ConjugationRow> symmetries;
    std::vector<RecurrenceRow> recurrences;
    // Rows as printed, where they differ from the verified entries above.
    std::vector<TransmutationRow> printed_transmutations;
    std::vector<FactorizationRow> printed_factorizations;
};

const IdentityCatalog& catalog(Family f);

// Quadratic and Möbius links between families.
const std::vector<ConjugationRow>& quadratic_links();

}  // namespace hyperclass
