#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace hyperclass {

/// Exact Gaussian rational a + b i with arbitrary-precision a, b.
class GaussRational {
public:
    GaussRational() : re_(0), im_(0) {}
    GaussRational(long n) : re_(n), im_(0) {}
    GaussRational(long num, long den);
    GaussRational(mpq_class re, mpq_class im = 0);

    static GaussRational i() { return GaussRational(mpq_class(0), mpq_class(1)); }
    // Real literals only: "p" or "p/q".
    static GaussRational parse(const std::string& s);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_integer() const;

    GaussRational conj() const { return GaussRational(re_, -im_); }
    GaussRational operator-() const { return GaussRational(-re_, -im_); }

    GaussRational& operator+=(const GaussRational& o);
    GaussRational& operator-=(const GaussRational& o);
    GaussRational& operator*=(const GaussRational& o);
    GaussRational& operator/=(const GaussRational& o);

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
    std::string str() const;

private:
    mpq_class re_, im_;
};

}  // namespace hyperclass
