#include <cmath>
#include <numbers>

#include "hyperclass/numerics.hpp"
#include "hyperclass/quadrature.hpp"

namespace hyperclass {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx I1(0.0, 1.0);

using std::exp;
using std::pow;
using std::sqrt;

// Lie-parameter wrappers around the classical evaluators.
template <class T>
T F2(cplx al, cplx be, cplx mu, const T& w) {
    return hyp2f1((1.0 + al + be + mu) / 2.0, (1.0 + al + be - mu) / 2.0, 1.0 + al, w);
}
template <class T>
T F2b(cplx al, cplx be, cplx mu, const T& w) {
    return rgamma(1.0 + al) * F2(al, be, mu, w);
}
template <class T>
T Sg(cplx al, cplx la, const T& w) {
    return F2(al, al, 2.0 * la, (1.0 - w) / 2.0);
}
template <class T>
T F1(cplx th, cplx al, const T& w) {
    return hyp1f1((1.0 + al + th) / 2.0, 1.0 + al, w);
}
template <class T>
T F1b(cplx th, cplx al, const T& w) {
    return rgamma(1.0 + al) * F1(th, al, w);
}
template <class T>
T Ft(cplx th, cplx al, const T& x, Method m = Method::automatic, EvalInfo* info = nullptr) {
    return hyp2f0((1.0 + al + th) / 2.0, (1.0 - al + th) / 2.0, x, m, info);
}
template <class T>
T F0(cplx al, const T& w) {
    return hyp0f1(1.0 + al, w);
}
template <class T>
T F0b(cplx al, const T& w) {
    return rgamma(1.0 + al) * F0(al, w);
}
// F̃_α(w) of the ₀F₁ family, decaying along the positive axis.
template <class T>
T F0t(cplx al, const T& w) {
    const T r = sqrt(w);
    return exp(-2.0 * r) * pow(w, -al / 2.0 - 0.25) * Ft(cplx(0.0), 2.0 * al, -1.0 / (4.0 * r));
}

// ---------------------------------------------------------------- Tricomi by quadrature

// F̃ᴵ_{θ,α}(x) from ∫_{−∞}^0 (−t)^A e^t (v−t)^C dt = v^C F̃ᴵ_{θ,α}(−1/v), v = −1/x.
cplx tricomi_quadrature(cplx th, cplx al, cplx x) {
    const cplx A = (-1.0 + th - al) / 2.0, C = (-1.0 - th - al) / 2.0;
    if (A.real() <= -1.0) throw PreconditionError("2F0 quadrature: needs Re(1+theta-alpha) > 0");
    const cplx v = -1.0 / x;
    Integrand f;
    f.c1 = 1.0;
    f.factors = {Factor{-1.0, {0.0}, A}, Factor{-1.0, {v}, C}};
    f.constant = pow(v, -C) * rgamma((1.0 - al + th) / 2.0);
    return integrate(f, Contour::from_infinity(-1.0, 0.0), QuadOptions{1e-13}).value;
}

std::vector<cplx> twof0_taylor(cplx th, cplx al, cplx x, int order, Method m, EvalInfo* info) {
    if (m != Method::quadrature) return {};
    const cplx a = (1.0 + al + th) / 2.0, b = (1.0 - al + th) / 2.0;
    const cplx f = tricomi_quadrature(th, al, x);
    if (order == 0) return {f};
    const cplx df = a * b * tricomi_quadrature(th + 2.0, al, x);
    if (info) {
        info->method = Method::quadrature;
        info->error = std::max(info->error, 1e-12);
    }
    return ode_continue(LinearOde{{0.0, 0.0, 1.0}, {-1.0, 1.0 + a + b}, a * b}, {x}, f, df, order);
}

// ---------------------------------------------------------------- Hermite

LinearOde ode_hermite(cplx lam) { return LinearOde{{1.0, 0.0, 0.0}, {0.0, -2.0}, -2.0 * (lam + 0.5)}; }

cplx hermite_norm(cplx lam) { return pow(cplx(2.0), -lam - 0.5) * gamma(lam + 0.5); }

// S and S' from w^{−a}F̃_{λ,½}(−w^{−2}) when the asymptotic series is at full precision.
std::optional<std::array<cplx, 2>> hermite_direct(cplx lam, cplx w) {
    const cplx a = lam + 0.5;
    const cplx x = -1.0 / (w * w);
    const auto f = eval_2f0_asymptotic(a / 2.0, a / 2.0 + 0.5, x);
    const auto d = eval_2f0_asymptotic(a / 2.0 + 1.0, a / 2.0 + 1.5, x);
    if (f.error > 2e-16 * std::abs(f.value) || d.error > 2e-16 * std::abs(d.value)) return std::nullopt;
    const cplx df = a / 2.0 * (a / 2.0 + 0.5) * d.value;
    const cplx p = pow(w, -a);
    return std::array<cplx, 2>{p * f.value, -a * p / w * f.value + p * df * 2.0 / (w * w * w)};
}

// Sᴵ_λ(w) = ∫₀^∞ e^{−t²−2tw} t^{λ−½} dt.
cplx hermite_quadrature_I(cplx lam, cplx w) {
    if (lam.real() <= -0.5) throw PreconditionError("Hermite quadrature: needs Re(lambda) > -1/2");
    Integrand f;
    f.c2 = -1.0;
    f.c1 = -2.0 * w;
    f.factors = {Factor{1.0, {0.0}, lam - 0.5}};
    return integrate(f, Contour::ray(0.0, 1.0), QuadOptions{1e-13}).value;
}

std::vector<cplx> hermite_taylor(cplx lam, cplx w, int order, Method m, EvalInfo* info) {
    const LinearOde ode = ode_hermite(lam);
    auto done = [&](Method used, double err) {
        if (info) {
            info->method = used;
            info->error = std::max(info->error, err);
        }
    };
    switch (m) {
        case Method::quadrature: {
            const cplx n = hermite_norm(lam);
            const cplx f = hermite_quadrature_I(lam, w) / n;
            const cplx df = -2.0 * hermite_quadrature_I(lam + 1.0, w) / n;
            done(m, 1e-12);
            return ode_continue(ode, {w}, f, df, order);
        }
        case Method::automatic:
        case Method::asymptotic: {
            const bool sector = w.real() > 0 && std::abs(std::arg(w)) <= kPi / 4 && std::abs(w) >= 6.0;
            if (sector) {
                if (auto d = hermite_direct(lam, w)) {
                    done(Method::asymptotic, 1e-15);
                    return ode_continue(ode, {w}, (*d)[0], (*d)[1], order);
                }
            }
            if (m == Method::asymptotic)
                throw PreconditionError("Hermite asymptotic: needs |w| >= 6, |arg w| <= pi/4 and full precision");
            [[fallthrough]];
        }
        case Method::continuation: {
            // Start where the asymptotic series reaches full precision; larger
            // |λ| needs a start further out. w0 >= Re w keeps Re(w^2) from growing
            // along the path, so the e^{w^2} solution is never amplified.
            for (double c : {7.0, 9.0, 12.0, 16.0, 22.0}) {
                const double w0 = std::max(c, w.real());
                const auto d = hermite_direct(lam, w0);
                if (!d) continue;
                done(Method::continuation, 1e-13);
                return ode_continue(ode, {w0, w}, (*d)[0], (*d)[1], order);
            }
            throw ConvergenceError("Hermite: asymptotic start value not accurate", 0.0, 1.0);
        }
        default: throw PreconditionError(std::string("Hermite: unsupported method ") + method_name(m));
    }
}

template <class T>
T Sh(cplx lam, const T& w, Method m = Method::automatic, EvalInfo* info = nullptr) {
    return lift(hermite_taylor(lam, value_of(w), jet_order(w), m, info), w);
}

// ---------------------------------------------------------------- family dispatch

void series_only(Method m, const char* what) {
    if (m != Method::automatic && m != Method::series)
        throw PreconditionError(std::string(what) + ": only the series method is available");
}

void param_count(Family f, const std::vector<cplx>& lie) {
    if (lie.size() != family_symbols(f).size())
        throw PreconditionError(std::string("wrong number of parameters for ") + family_name(f));
}

template <class T>
T eval_plain(Family f, const std::vector<cplx>& p, const T& w, Method m, EvalInfo* info) {
    switch (f) {
        case Family::hyp2f1:
            return hyp2f1((1.0 + p[0] + p[1] + p[2]) / 2.0, (1.0 + p[0] + p[1] - p[2]) / 2.0, 1.0 + p[0], w, m, info);
        case Family::gegenbauer:
            return hyp2f1((1.0 + 2.0 * p[0] + 2.0 * p[1]) / 2.0, (1.0 + 2.0 * p[0] - 2.0 * p[1]) / 2.0, 1.0 + p[0],
                          (1.0 - w) / 2.0, m, info);
        case Family::confluent:
            series_only(m, "1F1");
            return hyp1f1((1.0 + p[1] + p[0]) / 2.0, 1.0 + p[1], w, info);
        case Family::twof0:
            if (m == Method::quadrature) return lift(twof0_taylor(p[0], p[1], value_of(w), jet_order(w), m, info), w);
            return Ft(p[0], p[1], w, m, info);
        case Family::hermite: return Sh(p[0], w, m, info);
        case Family::zerof1:
            series_only(m, "0F1");
            return hyp0f1(1.0 + p[0], w, info);
    }
    throw PreconditionError("unknown family");
}

template <class T>
T eval_any(Family f, const std::vector<cplx>& lie, const T& w, Norm n, Method m, EvalInfo* info) {
    param_count(f, lie);
    if (f == Family::zerof1 && n == Norm::tilde) {
        series_only(m, "0F1 tilde");
        if (info) info->method = Method::asymptotic;
        return F0t(lie[0], w);
    }
    const cplx k = norm_factor(f, lie, n);
    return k * eval_plain(f, lie, w, m, info);
}

}  // namespace

std::vector<Norm> family_norms(Family f) {
    switch (f) {
        case Family::hyp2f1: return {Norm::plain, Norm::bold, Norm::I};
        case Family::gegenbauer: return {Norm::plain, Norm::bold, Norm::I, Norm::II, Norm::zero};
        case Family::confluent: return {Norm::plain, Norm::bold, Norm::I};
        case Family::twof0: return {Norm::plain, Norm::tilde, Norm::I};
        case Family::hermite: return {Norm::plain, Norm::I};
        case Family::zerof1: return {Norm::plain, Norm::bold, Norm::tilde};
    }
    return {};
}

cplx norm_factor(Family f, const std::vector<cplx>& p, Norm n) {
    param_count(f, p);
    if (n == Norm::plain) return 1.0;
    switch (f) {
        case Family::hyp2f1:
            if (n == Norm::bold) return rgamma(1.0 + p[0]);
            if (n == Norm::I)
                return gamma((1.0 + p[0] + p[1] - p[2]) / 2.0) * gamma((1.0 + p[0] - p[1] + p[2]) / 2.0) *
                       rgamma(1.0 + p[0]);
            break;
        case Family::gegenbauer: {
            const cplx al = p[0], la = p[1];
            if (n == Norm::bold) return rgamma(1.0 + al);
            if (n == Norm::I)
                return pow(cplx(2.0), -0.5 - al - la) * gamma((1.0 + 2.0 * al + 2.0 * la) / 2.0) *
                       gamma((1.0 - 2.0 * la) / 2.0) * rgamma(1.0 + al);
            if (n == Norm::II)
                return gamma((1.0 + 2.0 * al - 2.0 * la) / 2.0) * gamma((1.0 + 2.0 * al + 2.0 * la) / 2.0) *
                       rgamma(1.0 + 2.0 * al);
            if (n == Norm::zero) return std::sqrt(kPi) * gamma((1.0 + 2.0 * al) / 2.0) * rgamma(1.0 + al);
            break;
        }
        case Family::confluent:
            if (n == Norm::bold) return rgamma(1.0 + p[1]);
            if (n == Norm::I)
                return gamma((1.0 + p[1] + p[0]) / 2.0) * gamma((1.0 + p[1] - p[0]) / 2.0) * rgamma(1.0 + p[1]);
            break;
        case Family::twof0:
            if (n == Norm::tilde) return 1.0;
            if (n == Norm::I) return gamma((1.0 - p[1] + p[0]) / 2.0);
            break;
        case Family::hermite:
            if (n == Norm::I) return hermite_norm(p[0]);
            break;
        case Family::zerof1:
            if (n == Norm::bold) return rgamma(1.0 + p[0]);
            break;
    }
    throw DomainError(std::string("normalization ") + norm_name(n) + " is not a multiple of the plain function for " +
                      family_name(f));
}

cplx eval_function(Family f, const std::vector<cplx>& lie, cplx w, Norm n, Method m, EvalInfo* info) {
    return eval_any(f, lie, w, n, m, info);
}

Jet eval_function(Family f, const std::vector<cplx>& lie, const Jet& w, Norm n, Method m, EvalInfo* info) {
    return eval_any(f, lie, w, n, m, info);
}

// ---------------------------------------------------------------- standard solutions

namespace {

template <class G>
SolutionForm form(std::string text, G g) {
    return SolutionForm{std::move(text), [g](cplx w) { return g(w); }, [g](const Jet& w) { return g(w); }};
}

bool upper(cplx w) { return w.imag() > 0; }

StandardSolution solution(Family f, std::string behavior, Norm n, std::vector<SolutionForm> forms, std::string domain,
                          std::function<bool(cplx)> in) {
    return StandardSolution{f, std::move(behavior), n, std::move(forms), std::move(domain), std::move(in)};
}

std::vector<StandardSolution> solutions_2f1(cplx a, cplx b, cplx m) {
    const auto F = [](cplx x, cplx y, cplx z) { return [=](const auto& v) { return F2(x, y, z, v); }; };
    std::vector<StandardSolution> out;
    const std::string dom = "Im w > 0";
    // Expressions per solution, each written with q = w/(w-1), 1-1/w, 1/w or 1/(1-w).
    auto pw = [](const auto& x, cplx e) { return pow(x, e); };
    {
        auto f0 = F(a, b, m), f1 = F(a, -b, -m), f2 = F(a, -m, -b), f3 = F(a, m, b);
        out.push_back(solution(
            Family::hyp2f1, "~ 1 at 0", Norm::plain,
            {form("F_{a,b,m}(w)", [=](const auto& w) { return f0(w); }),
             form("(1-w)^{-b} F_{a,-b,-m}(w)", [=](const auto& w) { return pw(1.0 - w, -b) * f1(w); }),
             form("(1-w)^{(-1-a-b+m)/2} F_{a,-m,-b}(w/(w-1))",
                  [=](const auto& w) { return pw(1.0 - w, (-1.0 - a - b + m) / 2.0) * f2(w / (w - 1.0)); }),
             form("(1-w)^{(-1-a-b-m)/2} F_{a,m,b}(w/(w-1))",
                  [=](const auto& w) { return pw(1.0 - w, (-1.0 - a - b - m) / 2.0) * f3(w / (w - 1.0)); })},
            dom, upper));
    }
    {
        auto f0 = F(-a, b, -m), f1 = F(-a, -b, m), f2 = F(-a, -m, b), f3 = F(-a, m, -b);
        out.push_back(solution(
            Family::hyp2f1, "~ w^-a at 0", Norm::plain,
            {form("w^{-a} F_{-a,b,-m}(w)", [=](const auto& w) { return pw(w, -a) * f0(w); }),
             form("w^{-a} (1-w)^{-b} F_{-a,-b,m}(w)",
                  [=](const auto& w) { return pw(w, -a) * pw(1.0 - w, -b) * f1(w); }),
             form("w^{-a} (1-w)^{(-1+a-b+m)/2} F_{-a,-m,b}(w/(w-1))",
                  [=](const auto& w) {
                      return pw(w, -a) * pw(1.0 - w, (-1.0 + a - b + m) / 2.0) * f2(w / (w - 1.0));
                  }),
             form("w^{-a} (1-w)^{(-1+a-b-m)/2} F_{-a,m,-b}(w/(w-1))",
                  [=](const auto& w) {
                      return pw(w, -a) * pw(1.0 - w, (-1.0 + a - b - m) / 2.0) * f3(w / (w - 1.0));
                  })},
            dom, upper));
    }
    {
        auto f0 = F(b, a, m), f1 = F(b, -a, -m), f2 = F(b, -m, -a), f3 = F(b, m, a);
        out.push_back(solution(
            Family::hyp2f1, "~ 1 at 1", Norm::plain,
            {form("F_{b,a,m}(1-w)", [=](const auto& w) { return f0(1.0 - w); }),
             form("w^{-a} F_{b,-a,-m}(1-w)", [=](const auto& w) { return pw(w, -a) * f1(1.0 - w); }),
             form("w^{(-1-a-b+m)/2} F_{b,-m,-a}(1-1/w)",
                  [=](const auto& w) { return pw(w, (-1.0 - a - b + m) / 2.0) * f2(1.0 - 1.0 / w); }),
             form("w^{(-1-a-b-m)/2} F_{b,m,a}(1-1/w)",
                  [=](const auto& w) { return pw(w, (-1.0 - a - b - m) / 2.0) * f3(1.0 - 1.0 / w); })},
            dom, upper));
    }
    {
        auto f0 = F(-b, a, -m), f1 = F(-b, -a, m), f2 = F(-b, m, -a), f3 = F(-b, -m, a);
        out.push_back(solution(
            Family::hyp2f1, "~ (1-w)^-b at 1", Norm::plain,
            {form("(1-w)^{-b} F_{-b,a,-m}(1-w)", [=](const auto& w) { return pw(1.0 - w, -b) * f0(1.0 - w); }),
             form("w^{-a} (1-w)^{-b} F_{-b,-a,m}(1-w)",
                  [=](const auto& w) { return pw(w, -a) * pw(1.0 - w, -b) * f1(1.0 - w); }),
             form("w^{(-1-a+b-m)/2} (1-w)^{-b} F_{-b,m,-a}(1-1/w)",
                  [=](const auto& w) {
                      return pw(w, (-1.0 - a + b - m) / 2.0) * pw(1.0 - w, -b) * f2(1.0 - 1.0 / w);
                  }),
             form("w^{(-1-a+b+m)/2} (1-w)^{-b} F_{-b,-m,a}(1-1/w)",
                  [=](const auto& w) {
                      return pw(w, (-1.0 - a + b + m) / 2.0) * pw(1.0 - w, -b) * f3(1.0 - 1.0 / w);
                  })},
            dom, upper));
    }
    for (int s : {1, -1}) {
        const cplx ms = double(s) * m, as = double(s) * a;
        auto f0 = F(ms, b, as), f1 = F(ms, -b, -as), f2 = F(ms, a, double(s) * b), f3 = F(ms, -a, -double(s) * b);
        const std::string tag = s > 0 ? "" : "-", minus = s > 0 ? "-" : "+";
        out.push_back(solution(
            Family::hyp2f1, s > 0 ? "~ w^-(1+a+b+m)/2 at infinity" : "~ w^-(1+a+b-m)/2 at infinity", Norm::plain,
            {form("(-w)^{(-1-a-b" + minus + "m)/2} F_{" + tag + "m,b," + tag + "a}(1/w)",
                  [=](const auto& w) { return pw(-w, (-1.0 - a - b - ms) / 2.0) * f0(1.0 / w); }),
             form("(-w)^{(-1-a+b" + minus + "m)/2} (1-w)^{-b} F_{" + tag + "m,-b," + (s > 0 ? "-" : "") + "a}(1/w)",
                  [=](const auto& w) {
                      return pw(-w, (-1.0 - a + b - ms) / 2.0) * pw(1.0 - w, -b) * f1(1.0 / w);
                  }),
             form("(1-w)^{(-1-a-b" + minus + "m)/2} F_{" + tag + "m,a," + tag + "b}(1/(1-w))",
                  [=](const auto& w) { return pw(1.0 - w, (-1.0 - a - b - ms) / 2.0) * f2(1.0 / (1.0 - w)); }),
             form("(-w)^{-a} (1-w)^{(-1+a-b" + minus + "m)/2} F_{" + tag + "m,-a," + (s > 0 ? "-" : "") + "b}(1/(1-w))",
                  [=](const auto& w) {
                      return pw(-w, -a) * pw(1.0 - w, (-1.0 + a - b - ms) / 2.0) * f3(1.0 / (1.0 - w));
                  })},
            dom, upper));
    }
    return out;
}

std::vector<StandardSolution> solutions_gegenbauer(cplx a, cplx l) {
    auto pw = [](const auto& x, cplx e) { return pow(x, e); };
    auto quad_root = [](const auto& w) { return sqrt(w - 1.0) * sqrt(w + 1.0); };
    const std::string dom = "Re w > 0, Im w > 0";
    auto in = [](cplx w) { return w.real() > 0 && w.imag() > 0; };
    std::vector<StandardSolution> out;
    out.push_back(solution(
        Family::gegenbauer, "~ 1 at 1", Norm::plain,
        {form("S_{a,l}(w)", [=](const auto& w) { return Sg(a, l, w); }),
         form("F_{a,-1/2,l}(1-w^2)", [=](const auto& w) { return F2(a, cplx(-0.5), l, 1.0 - w * w); })},
        dom, in));
    out.push_back(solution(
        Family::gegenbauer, "~ (1-w)^-a at 1", Norm::plain,
        {form("(1-w^2)^{-a} S_{-a,-l}(w)", [=](const auto& w) { return pw(1.0 - w * w, -a) * Sg(-a, -l, w); }),
         form("2^{-a} (1-w)^{-a} F_{-a,a,-2l}((1-w)/2)",
              [=](const auto& w) {
                  return pow(cplx(2.0), -a) * pw(1.0 - w, -a) * F2(-a, a, -2.0 * l, (1.0 - w) / 2.0);
              })},
        dom, in));
    for (int s : {1, -1}) {
        const cplx ls = double(s) * l;
        const std::string plus = s > 0 ? "+" : "-";
        const std::string ntag = s > 0 ? "-" : "";
        out.push_back(solution(
            Family::gegenbauer, "~ w^{-1/2-a" + plus + "l} at infinity", Norm::plain,
            {form("(w^2-1)^{(-1-2a" + plus + "2l)/4} S_{" + ntag + "l," + ntag + "a}(w/sqrt(w^2-1))",
                  [=](const auto& w) {
                      return pw(w * w - 1.0, (-1.0 - 2.0 * a + 2.0 * ls) / 4.0) *
                             Sg(-ls, -double(s) * a, w / quad_root(w));
                  }),
             form("(1+w)^{-1/2-a" + plus + "l} F_{" + ntag + "2l,a," + ntag + "a}(2/(1+w))",
                  [=](const auto& w) {
                      return pw(1.0 + w, -0.5 - a + ls) * F2(-2.0 * ls, a, -double(s) * a, 2.0 / (1.0 + w));
                  }),
             form("w^{-1/2-a" + plus + "l} F_{" + ntag + "l,a,1/2}(w^-2)",
                  [=](const auto& w) { return pw(w, -0.5 - a + ls) * F2(-ls, a, cplx(0.5), 1.0 / (w * w)); })},
            dom, in));
    }
    return out;
}

std::vector<StandardSolution> solutions_confluent(cplx th, cplx al) {
    auto pw = [](const auto& x, cplx e) { return pow(x, e); };
    const std::string dom = "Im w > 0";
    std::vector<StandardSolution> out;
    out.push_back(solution(Family::confluent, "~ 1 at 0", Norm::plain,
                           {form("F_{t,a}(w)", [=](const auto& w) { return F1(th, al, w); }),
                            form("e^w F_{-t,a}(-w)", [=](const auto& w) { return exp(w) * F1(-th, al, -w); })},
                           dom, upper));
    out.push_back(solution(
        Family::confluent, "~ w^-a at 0", Norm::plain,
        {form("w^{-a} F_{t,-a}(w)", [=](const auto& w) { return pw(w, -al) * F1(th, -al, w); }),
         form("w^{-a} e^w F_{-t,-a}(-w)", [=](const auto& w) { return pw(w, -al) * exp(w) * F1(-th, -al, -w); })},
        dom, upper));
    out.push_back(solution(
        Family::confluent, "~ w^{(-1-t-a)/2} at +infinity", Norm::plain,
        {form("w^{(-1-t-a)/2} F~_{t,a}(-1/w)",
              [=](const auto& w) { return pw(w, (-1.0 - th - al) / 2.0) * Ft(th, al, -1.0 / w); }),
         form("w^{(-1-t-a)/2} F~_{t,-a}(-1/w)",
              [=](const auto& w) { return pw(w, (-1.0 - th - al) / 2.0) * Ft(th, -al, -1.0 / w); })},
        dom, upper));
    out.push_back(solution(Family::confluent, "~ e^w (-w)^{(-1+t-a)/2} at -infinity", Norm::plain,
                           {form("e^w (-w)^{(-1+t-a)/2} F~_{-t,a}(1/w)",
                                 [=](const auto& w) {
                                     return exp(w) * pw(-w, (-1.0 + th - al) / 2.0) * Ft(-th, al, 1.0 / w);
                                 }),
                            form("e^w (-w)^{(-1+t-a)/2} F~_{-t,-a}(1/w)",
                                 [=](const auto& w) {
                                     return exp(w) * pw(-w, (-1.0 + th - al) / 2.0) * Ft(-th, -al, 1.0 / w);
                                 })},
                           dom, upper));
    return out;
}

std::vector<StandardSolution> solutions_twof0(cplx th, cplx al) {
    return {solution(Family::twof0, "~ 1 at 0", Norm::plain,
                     {form("F~_{t,a}(w)", [=](const auto& w) { return Ft(th, al, w); }),
                      form("F~_{t,-a}(w)", [=](const auto& w) { return Ft(th, -al, w); })},
                     "Im w > 0", upper)};
}

std::vector<StandardSolution> solutions_hermite(cplx l) {
    const std::string dom = "Re w > 0, Im w > 0";
    auto in = [](cplx w) { return w.real() > 0 && w.imag() > 0; };
    return {
        solution(Family::hermite, "~ w^{-l-1/2} at +infinity", Norm::plain,
                 {form("S_l(w)", [=](const auto& w) { return Sh(l, w); }),
                  form("w^{-l-1/2} F~_{l,1/2}(-w^-2)",
                       [=](const auto& w) { return pow(w, -l - 0.5) * Ft(l, cplx(0.5), -1.0 / (w * w)); })},
                 dom, in),
        solution(Family::hermite, "~ e^{w^2} (-iw)^{l-1/2} at +infinity", Norm::plain,
                 {form("e^{w^2} S_{-l}(-iw)", [=](const auto& w) { return exp(w * w) * Sh(-l, -I1 * w); }),
                  form("(-iw)^{l-1/2} e^{w^2} F~_{-l,1/2}(w^-2)",
                       [=](const auto& w) {
                           return pow(-I1 * w, l - 0.5) * exp(w * w) * Ft(-l, cplx(0.5), 1.0 / (w * w));
                       })},
                 dom, in),
    };
}

std::vector<StandardSolution> solutions_zerof1(cplx al) {
    const std::string dom = "w not in (-inf, 0]";
    auto in = [](cplx w) { return !(w.imag() == 0.0 && w.real() <= 0.0); };
    auto pw = [](const auto& x, cplx e) { return pow(x, e); };
    return {
        solution(Family::zerof1, "~ 1 at 0", Norm::plain,
                 {form("F_a(w)", [=](const auto& w) { return F0(al, w); }),
                  form("e^{-2 sqrt w} F_{0,2a}(4 sqrt w)",
                       [=](const auto& w) { return exp(-2.0 * sqrt(w)) * F1(cplx(0.0), 2.0 * al, 4.0 * sqrt(w)); }),
                  form("e^{2 sqrt w} F_{0,2a}(-4 sqrt w)",
                       [=](const auto& w) { return exp(2.0 * sqrt(w)) * F1(cplx(0.0), 2.0 * al, -4.0 * sqrt(w)); })},
                 dom, in),
        solution(Family::zerof1, "~ w^-a at 0", Norm::plain,
                 {form("w^{-a} F_{-a}(w)", [=](const auto& w) { return pw(w, -al) * F0(-al, w); }),
                  form("w^{-a} e^{-2 sqrt w} F_{0,-2a}(4 sqrt w)",
                       [=](const auto& w) {
                           return pw(w, -al) * exp(-2.0 * sqrt(w)) * F1(cplx(0.0), -2.0 * al, 4.0 * sqrt(w));
                       }),
                  form("w^{-a} e^{2 sqrt w} F_{0,-2a}(-4 sqrt w)",
                       [=](const auto& w) {
                           return pw(w, -al) * exp(2.0 * sqrt(w)) * F1(cplx(0.0), -2.0 * al, -4.0 * sqrt(w));
                       })},
                 dom, in),
        solution(Family::zerof1, "~ e^{-2 sqrt w} w^{-a/2-1/4} at +infinity", Norm::tilde,
                 {form("e^{-2 sqrt w} w^{-a/2-1/4} F~_{0,2a}(-1/(4 sqrt w))",
                       [=](const auto& w) { return F0t(al, w); }),
                  form("e^{-2 sqrt w} w^{-a/2-1/4} F~_{0,-2a}(-1/(4 sqrt w))",
                       [=](const auto& w) {
                           const auto r = sqrt(w);
                           return exp(-2.0 * r) * pw(w, -al / 2.0 - 0.25) * Ft(cplx(0.0), -2.0 * al, -1.0 / (4.0 * r));
                       }),
                  form("w^{-a} F~_{-a}(w)", [=](const auto& w) { return pw(w, -al) * F0t(-al, w); })},
                 dom, in),
    };
}

}  // namespace

std::vector<StandardSolution> standard_solutions(Family f, const std::vector<cplx>& p) {
    param_count(f, p);
    switch (f) {
        case Family::hyp2f1: return solutions_2f1(p[0], p[1], p[2]);
        case Family::gegenbauer: return solutions_gegenbauer(p[0], p[1]);
        case Family::confluent: return solutions_confluent(p[0], p[1]);
        case Family::twof0: return solutions_twof0(p[0], p[1]);
        case Family::hermite: return solutions_hermite(p[0]);
        case Family::zerof1: return solutions_zerof1(p[0]);
    }
    return {};
}

cplx eval_solution(const StandardSolution& s, cplx w, int form) {
    if (!s.in_domain(w)) throw DomainError("standard solution '" + s.behavior + "': w outside " + s.domain);
    if (form < 0 || form >= int(s.forms.size())) throw PreconditionError("standard solution: no such form");
    return s.forms[form].value(w);
}

// ---------------------------------------------------------------- connection formulas

namespace {

cplx sin_pi_checked(cplx x, const char* what) {
    const cplx s = std::sin(kPi * x);
    if (std::abs(s) < 1e-12) throw DomainError(std::string("connection matrix: sin(pi*") + what + ") vanishes");
    return s;
}

}  // namespace

ConnectionMatrix connection_matrix(Family f, const std::vector<cplx>& p) {
    param_count(f, p);
    switch (f) {
        case Family::hyp2f1: {
            const cplx a = p[0], b = p[1], m = p[2];
            const cplx k = kPi / sin_pi_checked(m, "mu");
            return {f, p,
                    {{-k * rgamma((1.0 + a + b - m) / 2.0) * rgamma((1.0 + a - b - m) / 2.0),
                      k * rgamma((1.0 + a + b + m) / 2.0) * rgamma((1.0 + a - b + m) / 2.0)},
                     {-k * rgamma((1.0 - a - b - m) / 2.0) * rgamma((1.0 - a + b - m) / 2.0),
                      k * rgamma((1.0 - a - b + m) / 2.0) * rgamma((1.0 - a + b + m) / 2.0)}}};
        }
        case Family::confluent: {
            const cplx t = p[0], a = p[1];
            const cplx k = kPi / sin_pi_checked(a, "alpha");
            const cplx e = std::exp(-I1 * kPi * a / 2.0);
            return {f, p,
                    {{-k * rgamma((1.0 + t - a) / 2.0), k * e * rgamma((1.0 + t + a) / 2.0)},
                     {-k * rgamma((1.0 - t - a) / 2.0), k / e * rgamma((1.0 - t + a) / 2.0)}}};
        }
        case Family::zerof1: {
            const cplx s = sin_pi_checked(p[0], "alpha");
            const double r = std::sqrt(kPi);
            return {f, p, {{-r / s, r / s}}};
        }
        default: throw DomainError(std::string("no connection matrix for ") + family_name(f));
    }
}

ConnectionMatrix connection_inverse(Family f, const std::vector<cplx>& p) {
    param_count(f, p);
    switch (f) {
        case Family::hyp2f1: {
            auto inv = connection_matrix(f, {p[2], p[1], p[0]});
            inv.params = p;
            return inv;
        }
        case Family::confluent: {
            const cplx t = p[0], a = p[1];
            sin_pi_checked(a, "alpha");
            const cplx k = I1 * std::exp(I1 * kPi * t / 2.0);
            const cplx e = std::exp(I1 * kPi * a / 2.0);
            return {f, p,
                    {{k * e * rgamma((1.0 - t + a) / 2.0), -k / e * rgamma((1.0 + t + a) / 2.0)},
                     {k * rgamma((1.0 - t - a) / 2.0), -k * rgamma((1.0 + t - a) / 2.0)}}};
        }
        default: throw DomainError(std::string("no invertible connection matrix for ") + family_name(f));
    }
}

cplx connection_det(Family f, const std::vector<cplx>& p) {
    param_count(f, p);
    switch (f) {
        case Family::hyp2f1: return -std::sin(kPi * p[0]) / sin_pi_checked(p[2], "mu");
        case Family::confluent:
            return -I1 * kPi * std::exp(-I1 * kPi * p[0] / 2.0) / sin_pi_checked(p[1], "alpha");
        default: throw DomainError(std::string("no 2x2 connection matrix for ") + family_name(f));
    }
}

std::vector<cplx> connection_lhs(Family f, const std::vector<cplx>& p, cplx w) {
    param_count(f, p);
    switch (f) {
        case Family::hyp2f1: {
            if (w.imag() == 0.0 && w.real() >= 0.0) throw DomainError("2f1 connection: w on [0,inf)");
            const cplx a = p[0], b = p[1], m = p[2];
            return {F2b(a, b, m, w), pow(-w, -a) * F2b(-a, b, -m, w)};
        }
        case Family::confluent: {
            if (w.imag() <= 0.0) throw DomainError("1f1 connection: needs Im w > 0");
            const cplx t = p[0], a = p[1];
            return {pow(w, (-1.0 - t - a) / 2.0) * Ft(t, a, -1.0 / w),
                    exp(w) * pow(-w, (-1.0 + t - a) / 2.0) * Ft(-t, a, 1.0 / w)};
        }
        case Family::zerof1: {
            if (w.imag() == 0.0 && w.real() <= 0.0) throw DomainError("0f1 connection: w on (-inf,0]");
            return {F0t(p[0], w)};
        }
        default: throw DomainError(std::string("no connection formula for ") + family_name(f));
    }
}

std::vector<cplx> connection_rhs(Family f, const std::vector<cplx>& p, cplx w) {
    param_count(f, p);
    switch (f) {
        case Family::hyp2f1: {
            if (w.imag() == 0.0 && w.real() >= 0.0) throw DomainError("2f1 connection: w on [0,inf)");
            const cplx a = p[0], b = p[1], m = p[2];
            return {pow(-w, (-1.0 - a - b - m) / 2.0) * F2b(m, b, a, 1.0 / w),
                    pow(-w, (-1.0 - a - b + m) / 2.0) * F2b(-m, b, -a, 1.0 / w)};
        }
        case Family::confluent: {
            if (w.imag() <= 0.0) throw DomainError("1f1 connection: needs Im w > 0");
            const cplx t = p[0], a = p[1];
            return {F1b(t, a, w), pow(-I1 * w, -a) * F1b(t, -a, w)};
        }
        case Family::zerof1: {
            if (w.imag() == 0.0 && w.real() <= 0.0) throw DomainError("0f1 connection: w on (-inf,0]");
            return {F0b(p[0], w), pow(w, -p[0]) * F0b(-p[0], w)};
        }
        default: throw DomainError(std::string("no connection formula for ") + family_name(f));
    }
}

}  // namespace hyperclass
