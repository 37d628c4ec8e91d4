#include <cmath>
#include <numbers>

#include "hyperclass/numerics.hpp"

namespace hyperclass {

namespace {

constexpr double kPi = std::numbers::pi;

constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

// Γ(z) for Re z ≥ 1/2.
cplx gamma_right(cplx z) {
    z -= 1.0;
    cplx x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + double(i));
    const cplx t = z + kLanczosG + 0.5;
    return std::sqrt(2 * kPi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

// sin(πz) with exact zeros at the integers.
cplx sin_pi(cplx z) {
    if (z.imag() == 0.0 && z.real() == std::round(z.real())) return 0.0;
    return std::sin(kPi * z);
}

// Neumaier-compensated complex sum.
struct CompensatedSum {
    cplx sum = 0, comp = 0;
    double abs_sum = 0;
    void add(cplx x) {
        cplx t = sum + x;
        for (int part = 0; part < 2; ++part) {
            const double s = part ? sum.imag() : sum.real();
            const double v = part ? x.imag() : x.real();
            const double r = part ? t.imag() : t.real();
            const double c = std::abs(s) >= std::abs(v) ? (s - r) + v : (v - r) + s;
            comp += part ? cplx(0, c) : cplx(c, 0);
        }
        sum = t;
        abs_sum += std::abs(x);
    }
    cplx value() const { return sum + comp; }
};

}  // namespace

cplx gamma(cplx z) {
    if (is_nonpositive_integer(z)) throw PoleError("gamma: pole at nonpositive integer");
    if (z.real() < 0.5) return kPi / (sin_pi(z) * gamma_right(1.0 - z));
    return gamma_right(z);
}

cplx rgamma(cplx z) {
    if (is_nonpositive_integer(z)) return 0.0;
    if (z.real() < 0.5) return sin_pi(z) * gamma_right(1.0 - z) / kPi;
    return 1.0 / gamma_right(z);
}

cplx pochhammer(cplx a, int j) {
    if (j < 0) throw PreconditionError("pochhammer: negative index");
    cplx p = 1.0;
    for (int i = 0; i < j; ++i) p *= a + double(i);
    return p;
}

namespace {

cplx pfq_sum(const std::vector<cplx>& upper, const std::vector<cplx>& lower, cplx w, double* rel_error) {
    for (cplx b : lower)
        if (is_nonpositive_integer(b)) throw PoleError("pfq_series: lower parameter is a nonpositive integer");
    CompensatedSum s;
    cplx term = 1.0;
    int small = 0;
    for (int n = 0; n < 10000; ++n) {
        s.add(term);
        if (term == 0.0) break;
        const double scale = std::abs(s.value());
        if (std::abs(term) <= 1e-17 * scale) {
            if (++small == 3) break;
        } else {
            small = 0;
        }
        cplx ratio = w / double(n + 1);
        for (cplx a : upper) ratio *= a + double(n);
        for (cplx b : lower) ratio /= b + double(n);
        term *= ratio;
        if (n == 9999) throw ConvergenceError("pfq_series: no convergence within 10000 terms", s.value(), std::abs(term));
    }
    const cplx v = s.value();
    if (rel_error) *rel_error = 1e-16 * (s.abs_sum / std::max(std::abs(v), 1e-300) + 1.0);
    return v;
}

}  // namespace

cplx pfq_series(const std::vector<cplx>& upper, const std::vector<cplx>& lower, cplx w) {
    return pfq_sum(upper, lower, w, nullptr);
}

std::vector<cplx> pfq_taylor(const std::vector<cplx>& upper, const std::vector<cplx>& lower, cplx w, int order) {
    // f^(k)/k! = Π(a)_k / Π(b)_k / k! · pFq(a+k; b+k; w).
    std::vector<cplx> out(order + 1);
    cplx factor = 1.0;
    for (int k = 0; k <= order; ++k) {
        if (k > 0) {
            factor /= double(k);
            for (cplx a : upper) factor *= a + double(k - 1);
            for (cplx b : lower) factor /= b + double(k - 1);
        }
        if (factor == 0.0) {
            out[k] = 0.0;
            continue;
        }
        std::vector<cplx> up = upper, lo = lower;
        for (auto& a : up) a += double(k);
        for (auto& b : lo) b += double(k);
        out[k] = factor * pfq_sum(up, lo, w, nullptr);
    }
    return out;
}

const char* method_name(Method m) {
    switch (m) {
        case Method::automatic: return "automatic";
        case Method::series: return "series";
        case Method::pfaff: return "pfaff";
        case Method::connection: return "connection";
        case Method::continuation: return "continuation";
        case Method::asymptotic: return "asymptotic";
        case Method::quadrature: return "quadrature";
    }
    return "?";
}

std::optional<Method> method_from_name(const std::string& name) {
    for (Method m : {Method::automatic, Method::series, Method::pfaff, Method::connection, Method::continuation,
                     Method::asymptotic, Method::quadrature})
        if (name == method_name(m)) return m;
    return std::nullopt;
}

std::vector<cplx> ode_continue(const LinearOde& ode, const std::vector<cplx>& path, cplx f, cplx df, int order) {
    if (path.empty()) throw PreconditionError("ode_continue: empty path");
    std::vector<cplx> singular;
    {
        const cplx s0 = ode.sigma[0], s1 = ode.sigma[1], s2 = ode.sigma[2];
        if (s2 != 0.0) {
            const cplx d = std::sqrt(s1 * s1 - 4.0 * s2 * s0);
            singular = {(-s1 + d) / (2.0 * s2), (-s1 - d) / (2.0 * s2)};
        } else if (s1 != 0.0) {
            singular = {-s0 / s1};
        }
    }
    auto sigma = [&](cplx z) { return ode.sigma[0] + z * (ode.sigma[1] + z * ode.sigma[2]); };
    auto tau = [&](cplx z) { return ode.tau[0] + z * ode.tau[1]; };

    // Local Taylor coefficients at z given c0 = f, c1 = f', up to index n_max.
    auto coefficients = [&](cplx z, cplx c0, cplx c1, std::vector<cplx>& c, int n_max) {
        const cplx s0 = sigma(z), s1 = ode.sigma[1] + 2.0 * ode.sigma[2] * z, s2 = ode.sigma[2];
        const cplx t0 = tau(z), t1 = ode.tau[1];
        if (s0 == 0.0) throw DomainError("ode_continue: path meets a singular point");
        c.assign(n_max + 1, 0.0);
        c[0] = c0;
        if (n_max >= 1) c[1] = c1;
        for (int n = 0; n + 2 <= n_max; ++n) {
            const double dn = n;
            c[n + 2] = -((s1 * dn + t0) * (dn + 1) * c[n + 1] + (s2 * dn * (dn - 1) + t1 * dn + ode.eta) * c[n]) /
                       (s0 * (dn + 1) * (dn + 2));
        }
    };

    cplx z = path.front();
    std::vector<cplx> c;
    for (size_t leg = 1; leg < path.size(); ++leg) {
        const cplx target = path[leg];
        for (int guard = 0; z != target; ++guard) {
            if (guard > 100000) throw ConvergenceError("ode_continue: too many steps", f, 1.0);
            double dist = 1e300;
            for (cplx p : singular) dist = std::min(dist, std::abs(z - p));
            const cplx s0 = sigma(z);
            const double local = 1.0 / (1.0 + std::abs(tau(z) / s0) + std::sqrt(std::abs(ode.eta / s0)) +
                                        std::sqrt(std::abs(ode.tau[1] / s0)));
            const double hmax = std::min(0.5 * dist, 2.0 * local);
            cplx h = target - z;
            if (std::abs(h) > hmax) h *= hmax / std::abs(h);
            // Sum the local series at h.
            int n_max = 40;
            for (;;) {
                coefficients(z, f, df, c, n_max);
                cplx fs = 0, dfs = 0, hp = 1;
                int small = 0;
                bool done = false;
                for (int n = 0; n <= n_max; ++n) {
                    const cplx t = c[n] * hp;
                    fs += t;
                    if (n >= 1) dfs += double(n) * c[n] * (hp / h);
                    if (n > 2 && std::abs(t) <= 1e-17 * std::abs(fs) + 1e-300) {
                        if (++small == 3) {
                            done = true;
                            break;
                        }
                    } else {
                        small = 0;
                    }
                    hp *= h;
                }
                if (done) {
                    f = fs;
                    df = dfs;
                    break;
                }
                if (n_max >= 1280) throw ConvergenceError("ode_continue: local series did not converge", fs, 1.0);
                n_max *= 2;
            }
            z = (std::abs(target - (z + h)) < 1e-15 * (1 + std::abs(target))) ? target : z + h;
        }
    }
    coefficients(z, f, df, c, std::max(order, 1));
    c.resize(order + 1);
    return c;
}

}  // namespace hyperclass
