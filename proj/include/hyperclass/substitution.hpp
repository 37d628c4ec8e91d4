#pragma once

#include <string>

#include "hyperclass/diffop.hpp"
#include "hyperclass/jet.hpp"

namespace hyperclass {

/// Change of variable x = s(y): Möbius x = (p y + q)/(r y + s) or quadratic
/// x = c y² + d.
class Substitution {
public:
    enum class Kind { moebius, quadratic };

    static Substitution moebius(Sym x, Sym y, GaussRational p, GaussRational q, GaussRational r, GaussRational s);
    static Substitution quadratic(Sym x, Sym y, GaussRational c, GaussRational d);

    Kind kind() const { return kind_; }
    Sym source() const { return x_; }
    Sym target() const { return y_; }

    // x as a function of y, and dx/dy.
    RatFun x_of_y() const;
    RatFun dx_dy() const;
    Substitution inverse() const;  // Möbius only

    // Rewrites an operator in x as an operator in y.
    DiffOperator apply(const DiffOperator& F) const;

    std::complex<double> evaluate(std::complex<double> y) const;
    Jet evaluate(const Jet& y) const;

    std::string str() const;

    // Möbius coefficients (p, q, r, s) or quadratic (c, d, 0, 0).
    const GaussRational& coef(int i) const { return k_[i]; }

private:
    Kind kind_ = Kind::moebius;
    Sym x_ = Sym::w, y_ = Sym::v;
    GaussRational k_[4];
};

}  // namespace hyperclass
