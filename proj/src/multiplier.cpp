#include "hyperclass/multiplier.hpp"

#include <map>

#include "hyperclass/errors.hpp"

namespace hyperclass {

Multiplier& Multiplier::factor(const GaussRational& a, const GaussRational& b, const MultiPoly& exponent) {
    if (a.is_zero()) throw PreconditionError("multiplier factor must be non-constant");
    if (exponent.depends_on(Sym::w) || exponent.depends_on(Sym::v) || exponent.total_degree() > 1)
        throw PreconditionError("multiplier exponent must be linear in the parameters");
    factors_.push_back({a, b, exponent});
    return *this;
}

Multiplier& Multiplier::exp_part(const MultiPoly& q) {
    if (q.degree_in(var_) > 2 || q.total_degree() > q.degree_in(var_))
        throw PreconditionError("exponential part must be a quadratic in the working variable");
    exp_ = q;
    return *this;
}

Multiplier Multiplier::inverse() const {
    Multiplier r(var_);
    for (const auto& f : factors_) r.factors_.push_back({f.a, f.b, -f.exponent});
    r.exp_ = -exp_;
    return r;
}

Multiplier operator*(const Multiplier& a, const Multiplier& b) {
    if (a.var_ != b.var_ && !a.is_trivial() && !b.is_trivial())
        throw PreconditionError("multipliers in different variables");
    Multiplier r(a.is_trivial() ? b.var_ : a.var_);
    r.factors_ = a.factors_;
    r.factors_.insert(r.factors_.end(), b.factors_.begin(), b.factors_.end());
    r.exp_ = a.exp_ + b.exp_;
    return r;
}

RatFun Multiplier::dlog() const {
    const MultiPoly x = MultiPoly::var(var_);
    RatFun r(exp_.derivative(var_));
    for (const auto& f : factors_) {
        if (f.exponent.is_zero()) continue;
        r += RatFun(f.exponent * f.a, x * f.a + MultiPoly(f.b));
    }
    return r;
}

std::optional<RatFun> Multiplier::as_rational() const {
    if (!exp_.is_zero()) return std::nullopt;
    std::vector<std::pair<std::pair<GaussRational, GaussRational>, MultiPoly>> groups;
    for (const auto& f : factors_) {
        bool found = false;
        for (auto& g : groups)
            if (g.first.first == f.a && g.first.second == f.b) {
                g.second += f.exponent;
                found = true;
            }
        if (!found) groups.push_back({{f.a, f.b}, f.exponent});
    }
    const MultiPoly x = MultiPoly::var(var_);
    RatFun r(1);
    for (const auto& [ab, e] : groups) {
        if (e.is_zero()) continue;
        if (!e.is_constant() || !e.constant_term().is_integer()) return std::nullopt;
        long n = e.constant_term().re().get_num().get_si();
        r *= RatFun(x * ab.first + MultiPoly(ab.second)).pow(int(n));
    }
    return r;
}

std::complex<double> Multiplier::evaluate(std::complex<double> x, const SymValues& params) const {
    SymValues at = params;
    at[static_cast<int>(var_)] = x;
    std::complex<double> r = std::exp(exp_.evaluate(at));
    for (const auto& f : factors_) {
        std::complex<double> base = f.a.to_complex() * x + f.b.to_complex();
        std::complex<double> e = f.exponent.evaluate(at);
        if (e == 0.0) continue;
        if (base == 0.0) throw DomainError("multiplier evaluated at a branch point");
        r *= std::pow(base, e);
    }
    return r;
}

Jet Multiplier::evaluate(const Jet& x, const SymValues& params) const {
    SymValues at = params;
    Jet q = like(x, 0.0);
    // exp part as a polynomial in x with constant coefficients
    for (int k = exp_.degree_in(var_); k >= 0; --k) q = q * x + exp_.coeff_of(var_, k).evaluate(at);
    Jet r = exp(q);
    for (const auto& f : factors_) {
        std::complex<double> e = f.exponent.evaluate(at);
        if (e == 0.0) continue;
        r = r * pow(x * f.a.to_complex() + f.b.to_complex(), e);
    }
    return r;
}

std::string Multiplier::str() const {
    std::string out;
    const std::string x = sym_name(var_);
    for (const auto& f : factors_) {
        std::string base = MultiPoly(MultiPoly::var(var_) * f.a + MultiPoly(f.b)).str();
        out += "(" + base + ")^(" + f.exponent.str() + ")";
    }
    if (!exp_.is_zero()) out += "e^(" + exp_.str() + ")";
    return out.empty() ? "1" : out;
}

DiffOperator conjugate(const DiffOperator& F, const Multiplier& m) {
    if (m.is_trivial() || F.is_zero()) return F;
    if (m.var() != F.var()) throw PreconditionError("multiplier and operator in different variables");
    const Sym x = F.var();
    DiffOperator shift = DiffOperator::d(x) + m.dlog();
    DiffOperator power = DiffOperator::mult(x, RatFun(1));
    DiffOperator out(x);
    for (int k = 0; k <= F.order(); ++k) {
        if (k > 0) power = shift * power;
        if (!F.coeff(k).is_zero()) out = out + F.coeff(k) * power;
    }
    return out;
}

}  // namespace hyperclass
