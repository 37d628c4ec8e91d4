#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperclass/diffop.hpp"
#include "hyperclass/jet.hpp"

namespace hyperclass {

/// Power factor (a x + b)^γ with γ linear in the parameter symbols.
struct LinearFactor {
    GaussRational a, b;
    MultiPoly exponent;
};

/// Product of power factors times e^{q(x)}, deg q ≤ 2.
class Multiplier {
public:
    explicit Multiplier(Sym var = Sym::v) : var_(var) {}

    Multiplier& factor(const GaussRational& a, const GaussRational& b, const MultiPoly& exponent);
    Multiplier& exp_part(const MultiPoly& q);

    Sym var() const { return var_; }
    const std::vector<LinearFactor>& factors() const { return factors_; }
    const MultiPoly& exp_poly() const { return exp_; }
    bool is_trivial() const { return factors_.empty() && exp_.is_zero(); }

    Multiplier inverse() const;
    friend Multiplier operator*(const Multiplier& a, const Multiplier& b);

    // Logarithmic derivative m'/m.
    RatFun dlog() const;
    // The multiplier as a rational function, when every combined exponent is
    // an integer constant and the exponential part cancels.
    std::optional<RatFun> as_rational() const;

    // Principal-branch value at x.
    std::complex<double> evaluate(std::complex<double> x, const SymValues& params) const;
    Jet evaluate(const Jet& x, const SymValues& params) const;

    // Mutable access for mutation tests.
    std::vector<LinearFactor>& factors_mut() { return factors_; }
    MultiPoly& exp_mut() { return exp_; }

    std::string str() const;

private:
    Sym var_;
    std::vector<LinearFactor> factors_;
    MultiPoly exp_;
};

/// m⁻¹ ∘ F ∘ m via the shift ∂ ↦ ∂ + m'/m.
DiffOperator conjugate(const DiffOperator& F, const Multiplier& m);

}  // namespace hyperclass
