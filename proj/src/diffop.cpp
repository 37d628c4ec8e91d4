#include "hyperclass/diffop.hpp"

#include "hyperclass/errors.hpp"
#include "hyperclass/jet.hpp"

namespace hyperclass {

DiffOperator::DiffOperator(Sym var, std::vector<RatFun> coeffs) : var_(var), c_(std::move(coeffs)) { trim(); }

void DiffOperator::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

DiffOperator DiffOperator::d(Sym var) { return DiffOperator(var, {RatFun(), RatFun(1)}); }

DiffOperator DiffOperator::mult(Sym var, const RatFun& f) { return DiffOperator(var, {f}); }

DiffOperator DiffOperator::operator-() const {
    DiffOperator r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

DiffOperator operator+(const DiffOperator& a, const DiffOperator& b) {
    if (a.var_ != b.var_ && !a.is_zero() && !b.is_zero())
        throw PreconditionError("operators in different working variables");
    DiffOperator r(a.is_zero() ? b.var_ : a.var_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = a.coeff(int(k)) + b.coeff(int(k));
    r.trim();
    return r;
}

DiffOperator operator+(const DiffOperator& a, const RatFun& f) { return a + DiffOperator::mult(a.var_, f); }

DiffOperator operator*(const RatFun& f, const DiffOperator& a) {
    DiffOperator r = a;
    for (auto& c : r.c_) c = f * c;
    r.trim();
    return r;
}

static long binomial(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

DiffOperator operator*(const DiffOperator& a, const DiffOperator& b) {
    if (a.is_zero() || b.is_zero()) return DiffOperator(a.var_);
    if (a.var_ != b.var_) throw PreconditionError("operators in different working variables");
    const Sym x = a.var_;
    const int na = a.order(), nb = b.order();
    // derivs[j][k] = k-th derivative of b_j
    std::vector<std::vector<RatFun>> derivs(nb + 1);
    for (int j = 0; j <= nb; ++j) {
        derivs[j].push_back(b.c_[j]);
        for (int k = 1; k <= na; ++k) derivs[j].push_back(derivs[j].back().derivative(x));
    }
    std::vector<RatFun> out(na + nb + 1);
    for (int i = 0; i <= na; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; j <= nb; ++j)
            for (int k = 0; k <= i; ++k) {
                const RatFun& bd = derivs[j][k];
                if (bd.is_zero()) continue;
                out[i - k + j] += a.c_[i] * bd * RatFun(binomial(i, k));
            }
    }
    return DiffOperator(x, std::move(out));
}

DiffOperator compose(const DiffOperator& a, const DiffOperator& b) { return a * b; }

bool equal(const DiffOperator& a, const DiffOperator& b) {
    size_t n = std::max(a.c_.size(), b.c_.size());
    for (size_t k = 0; k < n; ++k)
        if (!equal(a.coeff(int(k)), b.coeff(int(k)))) return false;
    return true;
}

DiffOperator DiffOperator::substitute_param(Sym s, const MultiPoly& q) const {
    DiffOperator r = *this;
    for (auto& c : r.c_) c = c.substitute(s, RatFun(q));
    r.trim();
    return r;
}

std::vector<std::complex<double>> DiffOperator::coeffs_at(const SymValues& vals) const {
    std::vector<std::complex<double>> out;
    for (const auto& c : c_) out.push_back(c.evaluate(vals));
    return out;
}

std::string DiffOperator::str() const {
    if (c_.empty()) return "0";
    std::string out;
    const std::string x = sym_name(var_);
    for (int k = order(); k >= 0; --k) {
        if (c_[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string d = k == 0 ? "" : (k == 1 ? "∂" + x : "∂" + x + "^" + std::to_string(k));
        std::string c = c_[k].str();
        if (k == 0)
            out += "(" + c + ")";
        else if (c == "1")
            out += d;
        else
            out += "(" + c + ")*" + d;
    }
    return out;
}

std::complex<double> jet_apply(const std::vector<std::complex<double>>& coeffs, const Jet& f) {
    if (int(coeffs.size()) - 1 > f.order()) throw PreconditionError("jet order below operator order");
    std::complex<double> s = 0;
    for (size_t k = 0; k < coeffs.size(); ++k) s += coeffs[k] * f.derivative(int(k));
    return s;
}

std::complex<double> jet_apply(const DiffOperator& op, const SymValues& vals, const Jet& f) {
    SymValues at = vals;
    at[static_cast<int>(op.var())] = f.center();
    return jet_apply(op.coeffs_at(at), f);
}

}  // namespace hyperclass
