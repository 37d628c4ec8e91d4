#include "hyperclass/ratfun.hpp"

#include <vector>

#include "hyperclass/errors.hpp"

namespace hyperclass {

RatFun::RatFun(const MultiPoly& num, const MultiPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    normalize();
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = MultiPoly(1);
        return;
    }
    GaussRational lc = den_.leading_coeff();
    if (!lc.is_one()) {
        GaussRational inv = GaussRational(1) / lc;
        num_ *= inv;
        den_ *= inv;
    }
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
    if (b.den_.is_constant()) return RatFun(a.num_ + b.num_ * a.den_, a.den_);
    if (a.den_.is_constant()) return RatFun(a.num_ * b.den_ + b.num_, b.den_);
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun();
    if (a.num_ == b.den_) return RatFun(b.num_, a.den_);
    if (b.num_ == a.den_) return RatFun(a.num_, b.den_);
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw DomainError("division by the zero rational function");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

bool equal(const RatFun& a, const RatFun& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
}

RatFun RatFun::derivative(Sym s) const {
    if (!den_.depends_on(s)) return RatFun(num_.derivative(s), den_);
    return RatFun(num_.derivative(s) * den_ - num_ * den_.derivative(s), den_ * den_);
}

RatFun RatFun::pow(int n) const {
    if (n < 0) return RatFun(1) / pow(-n);
    return RatFun(num_.pow(n), den_.pow(n));
}

static MultiPoly homogenized(const MultiPoly& p, Sym s, const MultiPoly& N, const MultiPoly& D, int deg) {
    std::vector<MultiPoly> npow{MultiPoly(1)}, dpow{MultiPoly(1)};
    for (int k = 1; k <= deg; ++k) {
        npow.push_back(npow.back() * N);
        dpow.push_back(dpow.back() * D);
    }
    MultiPoly r;
    for (int k = 0; k <= deg; ++k) {
        MultiPoly ck = p.coeff_of(s, k);
        if (!ck.is_zero()) r += ck * npow[k] * dpow[deg - k];
    }
    return r;
}

RatFun RatFun::substitute(Sym s, const RatFun& q) const {
    if (q.is_polynomial()) {
        GaussRational inv = GaussRational(1) / q.den_.constant_term();
        MultiPoly qp = q.num_ * inv;
        return RatFun(num_.substitute(s, qp), den_.substitute(s, qp));
    }
    int a = std::max(num_.degree_in(s), 0), b = std::max(den_.degree_in(s), 0);
    MultiPoly P = homogenized(num_, s, q.num_, q.den_, a);
    MultiPoly Q = homogenized(den_, s, q.num_, q.den_, b);
    if (a >= b) return RatFun(P, Q * q.den_.pow(a - b));
    return RatFun(P * q.den_.pow(b - a), Q);
}

std::complex<double> RatFun::evaluate(const SymValues& vals) const {
    std::complex<double> d = den_.evaluate(vals);
    if (d == 0.0) throw DomainError("evaluation at singular point");
    return num_.evaluate(vals) / d;
}

std::string RatFun::str() const {
    if (den_.is_constant() && den_.constant_term().is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace hyperclass
