#pragma once

#include <complex>
#include <string>
#include <vector>

#include "hyperclass/ratfun.hpp"

namespace hyperclass {

class Jet;

/// Linear differential operator sum_k c_k(x) d^k/dx^k in one working
/// variable x, with rational-function coefficients that may also involve the
/// parameter symbols.
class DiffOperator {
public:
    explicit DiffOperator(Sym var = Sym::w) : var_(var) {}
    DiffOperator(Sym var, std::vector<RatFun> coeffs);

    // d/dx
    static DiffOperator d(Sym var);
    // Multiplication by f.
    static DiffOperator mult(Sym var, const RatFun& f);

    Sym var() const { return var_; }
    const std::vector<RatFun>& coeffs() const { return c_; }
    RatFun coeff(int k) const { return k < int(c_.size()) ? c_[k] : RatFun(); }
    int order() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    DiffOperator operator-() const;
    friend DiffOperator operator+(const DiffOperator& a, const DiffOperator& b);
    friend DiffOperator operator-(const DiffOperator& a, const DiffOperator& b) { return a + (-b); }
    // Composition (a∘b).
    friend DiffOperator operator*(const DiffOperator& a, const DiffOperator& b);
    friend DiffOperator operator*(const RatFun& f, const DiffOperator& a);
    friend DiffOperator operator+(const DiffOperator& a, const RatFun& f);
    friend DiffOperator operator-(const DiffOperator& a, const RatFun& f) { return a + (-f); }

    // Exact equality (coefficientwise cross-multiplication).
    friend bool equal(const DiffOperator& a, const DiffOperator& b);

    DiffOperator substitute_param(Sym s, const MultiPoly& q) const;

    // Coefficients evaluated at numeric values of all symbols.
    std::vector<std::complex<double>> coeffs_at(const SymValues& vals) const;

    // Mutable access for mutation tests.
    std::vector<RatFun>& coeffs_mut() { return c_; }

    std::string str() const;

private:
    void trim();

    Sym var_;
    std::vector<RatFun> c_;
};

DiffOperator compose(const DiffOperator& a, const DiffOperator& b);

/// Sum_k c_k f^{(k)}(z) with f given by its jet at z.
std::complex<double> jet_apply(const std::vector<std::complex<double>>& coeffs, const Jet& f);
std::complex<double> jet_apply(const DiffOperator& op, const SymValues& vals, const Jet& f);

}  // namespace hyperclass
