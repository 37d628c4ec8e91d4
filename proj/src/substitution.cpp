#include "hyperclass/substitution.hpp"

#include "hyperclass/errors.hpp"

namespace hyperclass {

Substitution Substitution::moebius(Sym x, Sym y, GaussRational p, GaussRational q, GaussRational r,
                                   GaussRational s) {
    if ((p * s - q * r).is_zero()) throw PreconditionError("degenerate Möbius map (ps - qr = 0)");
    Substitution out;
    out.kind_ = Kind::moebius;
    out.x_ = x;
    out.y_ = y;
    out.k_[0] = p;
    out.k_[1] = q;
    out.k_[2] = r;
    out.k_[3] = s;
    return out;
}

Substitution Substitution::quadratic(Sym x, Sym y, GaussRational c, GaussRational d) {
    if (c.is_zero()) throw PreconditionError("degenerate quadratic substitution");
    Substitution out;
    out.kind_ = Kind::quadratic;
    out.x_ = x;
    out.y_ = y;
    out.k_[0] = c;
    out.k_[1] = d;
    return out;
}

RatFun Substitution::x_of_y() const {
    const MultiPoly y = MultiPoly::var(y_);
    if (kind_ == Kind::quadratic) return RatFun(y * y * k_[0] + MultiPoly(k_[1]));
    return RatFun(y * k_[0] + MultiPoly(k_[1]), y * k_[2] + MultiPoly(k_[3]));
}

RatFun Substitution::dx_dy() const {
    const MultiPoly y = MultiPoly::var(y_);
    if (kind_ == Kind::quadratic) return RatFun(y * (k_[0] * GaussRational(2)));
    MultiPoly den = y * k_[2] + MultiPoly(k_[3]);
    return RatFun(MultiPoly(k_[0] * k_[3] - k_[1] * k_[2]), den * den);
}

Substitution Substitution::inverse() const {
    if (kind_ != Kind::moebius) throw PreconditionError("quadratic substitution has no rational inverse");
    // y = (s x - q) / (-r x + p)
    return moebius(y_, x_, k_[3], -k_[1], -k_[2], k_[0]);
}

DiffOperator Substitution::apply(const DiffOperator& F) const {
    if (F.var() != x_) throw PreconditionError("operator is not in the substitution's source variable");
    const RatFun xy = x_of_y();
    DiffOperator chain = RatFun(1) / dx_dy() * DiffOperator::d(y_);
    DiffOperator power = DiffOperator::mult(y_, RatFun(1));
    DiffOperator out(y_);
    for (int k = 0; k <= F.order(); ++k) {
        if (k > 0) power = chain * power;
        if (F.coeff(k).is_zero()) continue;
        out = out + F.coeff(k).substitute(x_, xy) * power;
    }
    return out;
}

std::complex<double> Substitution::evaluate(std::complex<double> y) const {
    if (kind_ == Kind::quadratic) return k_[0].to_complex() * y * y + k_[1].to_complex();
    return (k_[0].to_complex() * y + k_[1].to_complex()) / (k_[2].to_complex() * y + k_[3].to_complex());
}

Jet Substitution::evaluate(const Jet& y) const {
    if (kind_ == Kind::quadratic) return y * y * k_[0].to_complex() + k_[1].to_complex();
    return (y * k_[0].to_complex() + k_[1].to_complex()) / (y * k_[2].to_complex() + k_[3].to_complex());
}

std::string Substitution::str() const {
    return std::string(sym_name(x_)) + " = " + x_of_y().str();
}

}  // namespace hyperclass
