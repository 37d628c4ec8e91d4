#include <cmath>
#include <numbers>

#include "hyperclass/numerics.hpp"

namespace hyperclass {

namespace {

constexpr double kPi = std::numbers::pi;

using std::exp;
using std::pow;

bool near_integer(cplx z, double tol) {
    return std::abs(z.imag()) <= tol && std::abs(z.real() - std::round(z.real())) <= tol;
}

bool terminating(cplx a) { return a.imag() == 0.0 && a.real() <= 0.0 && a.real() == std::round(a.real()); }

template <class T>
T series(const std::vector<cplx>& up, const std::vector<cplx>& lo, const T& z) {
    return lift(pfq_taylor(up, lo, value_of(z), jet_order(z)), z);
}

void note(EvalInfo* info, Method m, double err) {
    if (!info) return;
    info->method = m;
    info->error = std::max(info->error, err);
}

// ---------------------------------------------------------------- 2F1

LinearOde ode_2f1(cplx a, cplx b, cplx c) {
    // w(1−w) f'' + (c − (a+b+1) w) f' − ab f = 0
    return LinearOde{{0.0, 1.0, -1.0}, {c, -(a + b + 1.0)}, -a * b};
}

std::vector<cplx> f21_continued(cplx a, cplx b, cplx c, cplx z, int order) {
    const double r = std::abs(z);
    const cplx start = r > 0.5 ? z * (0.5 / r) : z;
    const auto t = pfq_taylor({a, b}, {c}, start, 1);
    return ode_continue(ode_2f1(a, b, c), {start, z}, t[0], t[1], order);
}

template <class T>
T f21(cplx a, cplx b, cplx c, const T& z, Method m, EvalInfo* info) {
    const cplx z0 = value_of(z);
    if (terminating(c)) throw PoleError("2F1: c is a nonpositive integer");
    const bool poly = terminating(a) || terminating(b);
    if (!poly && z0.imag() == 0.0 && z0.real() >= 1.0) throw DomainError("2F1: point on the cut [1,inf)");
    const double az = std::abs(z0);
    const double apf = std::abs(z0 / (z0 - 1.0));
    const double ainf = az == 0 ? 1e300 : 1.0 / az;
    const cplx mu = a - b;
    const bool mu_generic = !near_integer(mu, 1e-8);
    const bool off_positive = !(z0.imag() == 0.0 && z0.real() >= 0.0);

    if (m == Method::automatic) {
        if (poly || az <= 0.6) m = Method::series;
        else if (apf <= 0.6) m = Method::pfaff;
        else if (ainf <= 0.6 && mu_generic && off_positive) m = Method::connection;
        else m = Method::continuation;
    }
    switch (m) {
        case Method::series:
            if (!poly && az > 0.9) throw PreconditionError("2F1 series: |w| > 0.9");
            note(info, m, 1e-15);
            return series({a, b}, {c}, z);
        case Method::pfaff: {
            if (apf > 0.9) throw PreconditionError("2F1 Pfaff: |w/(w-1)| > 0.9");
            note(info, m, 1e-15);
            const T x = z / (z - 1.0);
            return pow(cplx(1.0) - z, -a) * series({a, c - b}, {c}, x);
        }
        case Method::connection: {
            if (ainf > 0.9 || !off_positive) throw PreconditionError("2F1 connection: needs |1/w| <= 0.9, w off [0,inf)");
            if (!mu_generic) throw DomainError("2F1 connection: a - b is an integer");
            note(info, m, 1e-14);
            const T x = 1.0 / z;
            const T mz = -z;
            const cplx s = std::sin(kPi * mu);
            // Γ(c)·A_{α,β,μ} first row, then bold F at 1/w.
            const cplx g = gamma(c);
            const cplx k0 = -g * kPi / s * rgamma(b) * rgamma(c - a) * rgamma(1.0 + mu);
            const cplx k1 = g * kPi / s * rgamma(a) * rgamma(c - b) * rgamma(1.0 - mu);
            return k0 * pow(mz, -a) * series({a, a - c + 1.0}, {1.0 + mu}, x) +
                   k1 * pow(mz, -b) * series({b, b - c + 1.0}, {1.0 - mu}, x);
        }
        case Method::continuation: {
            note(info, m, 1e-13);
            return lift(f21_continued(a, b, c, z0, jet_order(z)), z);
        }
        default: throw PreconditionError(std::string("2F1: unsupported method ") + method_name(m));
    }
}

// ---------------------------------------------------------------- 1F1, 0F1

template <class T>
T f11(cplx a, cplx c, const T& z, EvalInfo* info) {
    if (terminating(c)) throw PoleError("1F1: c is a nonpositive integer");
    note(info, Method::series, 1e-15);
    if (value_of(z).real() < 0 && !terminating(a)) return exp(z) * series({c - a}, {c}, -z);
    return series({a}, {c}, z);
}

template <class T>
T f01(cplx c, const T& z, EvalInfo* info) {
    if (terminating(c)) throw PoleError("0F1: c is a nonpositive integer");
    note(info, Method::series, 1e-15);
    return series({}, {c}, z);
}

// ---------------------------------------------------------------- 2F0

LinearOde ode_2f0(cplx a, cplx b) {
    // w² f'' + (−1 + (1+a+b) w) f' + ab f = 0
    return LinearOde{{0.0, 0.0, 1.0}, {-1.0, 1.0 + a + b}, a * b};
}

bool accurate(const AsymptoticValue& v) { return v.error <= 2e-16 * std::abs(v.value); }

// f and f' at w by the asymptotic series; nullopt when not at full precision.
std::optional<std::array<cplx, 2>> f20_direct(cplx a, cplx b, cplx w) {
    const auto v = eval_2f0_asymptotic(a, b, w);
    if (!accurate(v)) return std::nullopt;
    const auto d = eval_2f0_asymptotic(a + 1.0, b + 1.0, w);
    if (!accurate(d)) return std::nullopt;
    return std::array<cplx, 2>{v.value, a * b * d.value};
}

std::vector<cplx> f20_taylor(cplx a, cplx b, cplx w, int order, Method m, EvalInfo* info) {
    if (terminating(a) || terminating(b)) {
        note(info, Method::series, 1e-15);
        // Terminating: the series is a polynomial; derivatives shift parameters.
        std::vector<cplx> out(order + 1);
        cplx factor = 1.0;
        for (int k = 0; k <= order; ++k) {
            if (k > 0) factor *= (a + double(k - 1)) * (b + double(k - 1)) / double(k);
            out[k] = factor == 0.0 ? cplx(0) : factor * pfq_series({a + double(k), b + double(k)}, {}, w);
        }
        return out;
    }
    if (w.imag() == 0.0 && w.real() >= 0.0) throw DomainError("2F0: point on the cut [0,inf)");
    const LinearOde ode = ode_2f0(a, b);
    if (m == Method::automatic || m == Method::asymptotic) {
        if (auto d = f20_direct(a, b, w)) {
            note(info, Method::asymptotic, 1e-15);
            return ode_continue(ode, {w}, (*d)[0], (*d)[1], order);
        }
        if (m == Method::asymptotic) {
            const auto v = eval_2f0_asymptotic(a, b, w);
            throw ConvergenceError("2F0: asymptotic series cannot reach full precision here", v.value, v.error);
        }
    } else if (m != Method::continuation) {
        throw PreconditionError(std::string("2F0: unsupported method ") + method_name(m));
    }
    // Start on the negative axis where the series is accurate, go out
    // radially, then along the circle |x| = |w| towards w.
    const double r = std::abs(w);
    double rs = std::min(r, 0.125);
    std::optional<std::array<cplx, 2>> d;
    for (int i = 0; i < 80 && !(d = f20_direct(a, b, -rs)); ++i) rs *= 0.7;
    if (!d) throw ConvergenceError("2F0: no starting point for continuation", 0.0, 1.0);
    std::vector<cplx> path{cplx(-rs), cplx(-r)};
    const double phi = std::arg(w);
    if (w.imag() != 0.0) {
        const double from = phi > 0 ? kPi : -kPi;
        const int pieces = 16;
        for (int k = 1; k <= pieces; ++k) path.push_back(std::polar(r, from + (phi - from) * k / pieces));
        path.back() = w;
    }
    note(info, Method::continuation, 1e-13);
    return ode_continue(ode, path, (*d)[0], (*d)[1], order);
}

template <class T>
T f20(cplx a, cplx b, const T& w, Method m, EvalInfo* info) {
    return lift(f20_taylor(a, b, value_of(w), jet_order(w), m, info), w);
}

}  // namespace

AsymptoticValue eval_2f0_asymptotic(cplx a, cplx b, cplx w, double tol) {
    cplx sum = 0, term = 1;
    double smallest = 1e300;
    double prev = 1e300;
    for (int n = 0; n < 10000; ++n) {
        const double at = std::abs(term);
        if (at > prev && n > 1) break;  // terms started to grow
        if (at == 0.0) {
            smallest = 0;
            break;
        }
        sum += term;
        smallest = at;
        prev = at;
        if (at <= 1e-17 * std::abs(sum)) break;
        term *= (a + double(n)) * (b + double(n)) * w / double(n + 1);
    }
    // The next (omitted) term bounds the error; the smallest included one is a safe estimate.
    AsymptoticValue v{sum, smallest};
    if (tol > 0 && v.error > tol * std::abs(v.value))
        throw ConvergenceError("2F0 asymptotic: tolerance unreachable", v.value, v.error);
    return v;
}

cplx hyp2f1(cplx a, cplx b, cplx c, cplx w, Method m, EvalInfo* info) { return f21(a, b, c, w, m, info); }
Jet hyp2f1(cplx a, cplx b, cplx c, const Jet& w, Method m, EvalInfo* info) { return f21(a, b, c, w, m, info); }
cplx hyp1f1(cplx a, cplx c, cplx w, EvalInfo* info) { return f11(a, c, w, info); }
Jet hyp1f1(cplx a, cplx c, const Jet& w, EvalInfo* info) { return f11(a, c, w, info); }
cplx hyp0f1(cplx c, cplx w, EvalInfo* info) { return f01(c, w, info); }
Jet hyp0f1(cplx c, const Jet& w, EvalInfo* info) { return f01(c, w, info); }
cplx hyp2f0(cplx a, cplx b, cplx w, Method m, EvalInfo* info) { return f20(a, b, w, m, info); }
Jet hyp2f0(cplx a, cplx b, const Jet& w, Method m, EvalInfo* info) { return f20(a, b, w, m, info); }

}  // namespace hyperclass
