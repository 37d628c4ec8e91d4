#pragma once

#include <complex>
#include <vector>

namespace hyperclass {

/// Truncated Taylor expansion c_0 + c_1 h + ... + c_K h^K of a function of
/// z = center + h.
class Jet {
public:
    using cplx = std::complex<double>;
    static constexpr int kDefaultOrder = 4;

    Jet() : center_(0), c_(kDefaultOrder + 1, cplx(0)) {}
    Jet(cplx center, std::vector<cplx> coeffs) : center_(center), c_(std::move(coeffs)) {}

    // The identity function z at z0.
    static Jet variable(cplx z0, int order = kDefaultOrder);
    static Jet constant(cplx value, cplx center, int order = kDefaultOrder);

    int order() const { return int(c_.size()) - 1; }
    cplx center() const { return center_; }
    cplx value() const { return c_[0]; }
    cplx coeff(int k) const { return k < int(c_.size()) ? c_[k] : cplx(0); }
    // k-th derivative at the center.
    cplx derivative(int k) const;
    const std::vector<cplx>& coeffs() const { return c_; }

    Jet operator-() const;
    Jet& operator+=(const Jet& o);
    Jet& operator-=(const Jet& o);
    Jet& operator*=(const Jet& o);
    Jet& operator/=(const Jet& o);
    Jet& operator+=(cplx s) { c_[0] += s; return *this; }
    Jet& operator-=(cplx s) { c_[0] -= s; return *this; }
    Jet& operator*=(cplx s);
    Jet& operator/=(cplx s) { return *this *= (cplx(1) / s); }

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(Jet a, const Jet& b) { return a *= b; }
    friend Jet operator/(Jet a, const Jet& b) { return a /= b; }
    friend Jet operator+(Jet a, cplx s) { return a += s; }
    friend Jet operator+(cplx s, Jet a) { return a += s; }
    friend Jet operator-(Jet a, cplx s) { return a -= s; }
    friend Jet operator-(cplx s, const Jet& a) { return -a + s; }
    friend Jet operator*(Jet a, cplx s) { return a *= s; }
    friend Jet operator*(cplx s, Jet a) { return a *= s; }
    friend Jet operator/(Jet a, cplx s) { return a /= s; }
    friend Jet operator/(cplx s, const Jet& a);
    friend Jet operator+(Jet a, double s) { return a += cplx(s); }
    friend Jet operator+(double s, Jet a) { return a += cplx(s); }
    friend Jet operator-(Jet a, double s) { return a -= cplx(s); }
    friend Jet operator-(double s, const Jet& a) { return -a + cplx(s); }
    friend Jet operator*(Jet a, double s) { return a *= cplx(s); }
    friend Jet operator*(double s, Jet a) { return a *= cplx(s); }
    friend Jet operator/(Jet a, double s) { return a /= cplx(s); }
    friend Jet operator/(double s, const Jet& a) { return cplx(s) / a; }

private:
    cplx center_;
    std::vector<cplx> c_;
};

Jet exp(const Jet& a);
// Principal branch at the value of a.
Jet log(const Jet& a);
Jet pow(const Jet& a, std::complex<double> p);
Jet sqrt(const Jet& a);
Jet sin(const Jet& a);
Jet cos(const Jet& a);

// f(g) where f is given by its Taylor coefficients about g.value().
Jet compose(const std::vector<std::complex<double>>& f, const Jet& g);

// Helpers that let numeric code run on plain complex values or on jets.
inline std::complex<double> value_of(const std::complex<double>& z) { return z; }
inline std::complex<double> value_of(const Jet& z) { return z.value(); }
inline std::complex<double> like(const std::complex<double>&, std::complex<double> v) { return v; }
inline Jet like(const Jet& ref, std::complex<double> v) { return Jet::constant(v, ref.center(), ref.order()); }
inline std::complex<double> lift(const std::vector<std::complex<double>>& taylor, const std::complex<double>&) {
    return taylor.at(0);
}
inline Jet lift(const std::vector<std::complex<double>>& taylor, const Jet& g) { return compose(taylor, g); }
inline int jet_order(const std::complex<double>&) { return 0; }
inline int jet_order(const Jet& z) { return z.order(); }
// Largest coefficient magnitude (used in convergence tests).
inline double mag(const std::complex<double>& z) { return std::abs(z); }
double mag(const Jet& z);

}  // namespace hyperclass
