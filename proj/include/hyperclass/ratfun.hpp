#pragma once

#include <string>

#include "hyperclass/multipoly.hpp"

namespace hyperclass {

/// Quotient of two polynomials. Only the scalar content is normalized
/// (denominator made monic in grlex order); no polynomial gcd is taken, so
/// equality goes through cross-multiplication.
class RatFun {
public:
    RatFun() : num_(), den_(1) {}
    RatFun(const MultiPoly& num) : num_(num), den_(1) {}
    RatFun(const GaussRational& c) : num_(c), den_(1) {}
    RatFun(long c) : num_(c), den_(1) {}
    RatFun(const MultiPoly& num, const MultiPoly& den);

    static RatFun var(Sym s) { return RatFun(MultiPoly::var(s)); }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RatFun operator-() const { return RatFun(-num_, den_, true); }
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }

    // Cross-multiplication test.
    friend bool equal(const RatFun& a, const RatFun& b);

    RatFun derivative(Sym s) const;
    RatFun pow(int n) const;
    RatFun substitute(Sym s, const RatFun& q) const;

    // Throws DomainError at a pole.
    std::complex<double> evaluate(const SymValues& vals) const;

    // Mutable access for mutation tests.
    MultiPoly& num_mut() { return num_; }

    std::string str() const;

private:
    RatFun(MultiPoly num, MultiPoly den, bool /*already normalized*/)
        : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    MultiPoly num_, den_;
};

}  // namespace hyperclass
