#include "hyperclass/jet.hpp"

#include <algorithm>
#include <cmath>

#include "hyperclass/errors.hpp"

namespace hyperclass {

using C = std::complex<double>;

Jet Jet::variable(C z0, int order) {
    std::vector<C> c(order + 1, C(0));
    c[0] = z0;
    if (order >= 1) c[1] = 1.0;
    return Jet(z0, std::move(c));
}

Jet Jet::constant(C value, C center, int order) {
    std::vector<C> c(order + 1, C(0));
    c[0] = value;
    return Jet(center, std::move(c));
}

C Jet::derivative(int k) const {
    double f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return coeff(k) * f;
}

Jet Jet::operator-() const {
    Jet r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Jet& Jet::operator+=(const Jet& o) {
    c_.resize(std::min(c_.size(), o.c_.size()));
    for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

Jet& Jet::operator-=(const Jet& o) {
    c_.resize(std::min(c_.size(), o.c_.size()));
    for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

Jet& Jet::operator*=(const Jet& o) {
    size_t n = std::min(c_.size(), o.c_.size());
    std::vector<C> r(n, C(0));
    for (size_t k = 0; k < n; ++k)
        for (size_t j = 0; j <= k; ++j) r[k] += c_[j] * o.c_[k - j];
    c_ = std::move(r);
    return *this;
}

Jet& Jet::operator/=(const Jet& o) {
    size_t n = std::min(c_.size(), o.c_.size());
    if (o.c_[0] == 0.0) throw DomainError("jet division by a function vanishing at the center");
    std::vector<C> q(n, C(0));
    for (size_t k = 0; k < n; ++k) {
        C s = c_[k];
        for (size_t j = 1; j <= k; ++j) s -= o.c_[j] * q[k - j];
        q[k] = s / o.c_[0];
    }
    c_ = std::move(q);
    return *this;
}

Jet& Jet::operator*=(C s) {
    for (auto& x : c_) x *= s;
    return *this;
}

Jet operator/(C s, const Jet& a) { return Jet::constant(s, a.center(), a.order()) / a; }

Jet exp(const Jet& a) {
    const int n = a.order();
    std::vector<C> e(n + 1, C(0));
    e[0] = std::exp(a.coeff(0));
    for (int k = 1; k <= n; ++k) {
        C s = 0;
        for (int j = 1; j <= k; ++j) s += double(j) * a.coeff(j) * e[k - j];
        e[k] = s / double(k);
    }
    return Jet(a.center(), std::move(e));
}

Jet log(const Jet& a) {
    const int n = a.order();
    const C a0 = a.coeff(0);
    if (a0 == 0.0) throw DomainError("logarithm of a jet vanishing at the center");
    std::vector<C> l(n + 1, C(0));
    l[0] = std::log(a0);
    for (int k = 1; k <= n; ++k) {
        C s = a.coeff(k);
        for (int j = 1; j < k; ++j) s -= double(j) / double(k) * l[j] * a.coeff(k - j);
        l[k] = s / a0;
    }
    return Jet(a.center(), std::move(l));
}

Jet pow(const Jet& a, C p) {
    const int n = a.order();
    const C a0 = a.coeff(0);
    if (a0 == 0.0) {
        if (p == 0.0) return Jet::constant(1.0, a.center(), n);
        throw DomainError("power of a jet vanishing at the center");
    }
    std::vector<C> b(n + 1, C(0));
    b[0] = std::pow(a0, p);
    for (int k = 1; k <= n; ++k) {
        C s = 0;
        for (int j = 1; j <= k; ++j) s += ((p + 1.0) * double(j) - double(k)) * a.coeff(j) * b[k - j];
        b[k] = s / (double(k) * a0);
    }
    return Jet(a.center(), std::move(b));
}

Jet sqrt(const Jet& a) { return pow(a, 0.5); }

Jet sin(const Jet& a) {
    const C i(0, 1);
    return (exp(i * a) - exp(-i * a)) / (2.0 * i);
}

Jet cos(const Jet& a) {
    const C i(0, 1);
    return (exp(i * a) + exp(-i * a)) / 2.0;
}

Jet compose(const std::vector<C>& f, const Jet& g) {
    Jet d = g - g.value();
    const int n = std::min<int>(g.order(), int(f.size()) - 1);
    Jet r = Jet::constant(f.at(n), g.center(), g.order());
    for (int k = n - 1; k >= 0; --k) r = r * d + f[k];
    return r;
}

double mag(const Jet& z) {
    double m = 0;
    for (const auto& c : z.coeffs()) m = std::max(m, std::abs(c));
    return m;
}

}  // namespace hyperclass
