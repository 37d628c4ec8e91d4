#include "hyperclass/integral_reps.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "hyperclass/numerics.hpp"

namespace hyperclass {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx I1(0.0, 1.0);

using P = std::vector<cplx>;
using Build = std::pair<Integrand, Contour>;

// Shorthand for the linear factors of the printed integrands.
Factor t_(cplx e) { return Factor(1.0, {0.0}, e); }
Factor mt_(cplx e) { return Factor(-1.0, {0.0}, e); }
Factor tm(cplx r, cplx e) { return Factor(1.0, {r}, e); }   // (t − r)^e
Factor mt(cplx r, cplx e) { return Factor(-1.0, {r}, e); }  // (r − t)^e

Integrand product(std::vector<Factor> fs) {
    Integrand f;
    f.factors = std::move(fs);
    return f;
}

cplx fn(Family f, const P& p, cplx w, Norm n) { return eval_function(f, p, w, n); }

bool off_ray_pos(cplx w, double from) { return !(w.imag() == 0.0 && w.real() >= from); }
bool off_ray_neg(cplx w, double from) { return !(w.imag() == 0.0 && w.real() <= from); }

struct Registry {
    std::vector<IntegralRep> rows, printed;
    std::array<int, 6> count{};

    IntegralRep& add(Family f, std::string integral, std::string value, std::string conditions,
                     std::function<Build(const P&, cplx)> build, std::function<cplx(const P&, cplx)> expected,
                     std::function<bool(const P&, cplx)> admissible, std::vector<std::pair<P, cplx>> samples) {
        const int k = count[static_cast<int>(f)]++;
        rows.push_back({std::string(family_name(f)) + ".integrals[" + std::to_string(k) + "]", f, std::move(integral),
                        std::move(value), std::move(conditions), "", std::move(build), std::move(expected),
                        std::move(admissible), std::move(samples)});
        return rows.back();
    }
    void add_printed(const IntegralRep& fixed, std::string integral, std::string value, std::string note,
                     std::function<Build(const P&, cplx)> build, std::function<cplx(const P&, cplx)> expected) {
        IntegralRep r = fixed;
        r.integral = std::move(integral);
        r.value = std::move(value);
        r.note = std::move(note);
        if (build) r.build = std::move(build);
        if (expected) r.expected = std::move(expected);
        printed.push_back(std::move(r));
    }
};

// ---------------------------------------------------------------- 2F1

struct Exps2f1 {
    cplx A, B, C;
};
Exps2f1 exps(const P& p) {
    const cplx a = p[0], b = p[1], m = p[2];
    return {(-1.0 - a + b + m) / 2.0, (-1.0 + a - b + m) / 2.0, (-1.0 - a - b - m) / 2.0};
}

void add_2f1(Registry& R) {
    const Family F = Family::hyp2f1;
    const P p1{0.11, 0.07, 0.05}, p2{0.2, 0.1, 0.05}, p3{0.3, -0.1, 0.2};
    auto fI = [F](cplx a, cplx b, cplx m, cplx z) { return fn(F, {a, b, m}, z, Norm::I); };
    auto positive = [](const P& p, cplx) {
        const auto e = exps(p);
        return e.A.real() > -1 && e.B.real() > -1 && e.C.real() > -1 && (e.A + e.B + e.C).real() < -1;
    };
    R.add(F, "int_1^inf t^A (t-1)^B (t-w)^C dt", "F^I_{a,b,m}(w)", "w not in [1,inf)",
          [](const P& p, cplx w) {
              const auto e = exps(p);
              return Build{product({t_(e.A), tm(1.0, e.B), tm(w, e.C)}), Contour::ray(1.0, 1.0)};
          },
          [fI](const P& p, cplx w) { return fI(p[0], p[1], p[2], w); },
          [positive](const P& p, cplx w) { return positive(p, w) && off_ray_pos(w, 1.0); },
          {{p1, {0.3, 0.2}}, {p2, 0.3}, {p3, {-0.5, 0.4}}});
    R.add(F, "int_0^w t^A (1-t)^B (w-t)^C dt", "w^{-a} F^I_{-a,b,-m}(w)", "w not in (-inf,0] or [1,inf)",
          [](const P& p, cplx w) {
              const auto e = exps(p);
              return Build{product({t_(e.A), mt(1.0, e.B), mt(w, e.C)}), Contour::segment(0.0, w)};
          },
          [fI](const P& p, cplx w) { return std::pow(w, -p[0]) * fI(-p[0], p[1], -p[2], w); },
          [positive](const P& p, cplx w) { return positive(p, w) && off_ray_neg(w, 0.0) && off_ray_pos(w, 1.0); },
          {{p1, {0.3, 0.2}}, {p2, {0.6, -0.1}}, {p3, {-0.4, 0.5}}});
    R.add(F, "int_w^0 (-t)^A (1-t)^B (t-w)^C dt", "(-w)^{-a} F^I_{-a,b,-m}(w)", "w not in [0,inf)",
          [](const P& p, cplx w) {
              const auto e = exps(p);
              return Build{product({mt_(e.A), mt(1.0, e.B), tm(w, e.C)}), Contour::segment(w, 0.0)};
          },
          [fI](const P& p, cplx w) { return std::pow(-w, -p[0]) * fI(-p[0], p[1], -p[2], w); },
          [positive](const P& p, cplx w) { return positive(p, w) && off_ray_pos(w, 0.0); },
          {{p1, {-0.4, 0.3}}, {p2, {-0.3, -0.2}}, {p3, {0.2, 0.5}}});
    R.add(F, "int_-inf^0 (-t)^A (1-t)^B (w-t)^C dt", "F^I_{b,a,m}(1-w)", "w not in (-inf,0]",
          [](const P& p, cplx w) {
              const auto e = exps(p);
              return Build{product({mt_(e.A), mt(1.0, e.B), mt(w, e.C)}), Contour::from_infinity(-1.0, 0.0)};
          },
          [fI](const P& p, cplx w) { return fI(p[1], p[0], p[2], 1.0 - w); },
          [positive](const P& p, cplx w) { return positive(p, w) && off_ray_neg(w, 0.0); },
          {{p1, {0.3, 0.2}}, {p2, 0.5}, {p3, {2.0, 1.0}}});
    R.add(F, "int_w^1 t^A (1-t)^B (t-w)^C dt", "(1-w)^{-b} F^I_{-b,a,-m}(1-w)", "w not in (-inf,0] or [1,inf)",
          [](const P& p, cplx w) {
              const auto e = exps(p);
              return Build{product({t_(e.A), mt(1.0, e.B), tm(w, e.C)}), Contour::segment(w, 1.0)};
          },
          [fI](const P& p, cplx w) { return std::pow(1.0 - w, -p[1]) * fI(-p[1], p[0], -p[2], 1.0 - w); },
          [positive](const P& p, cplx w) { return positive(p, w) && off_ray_neg(w, 0.0) && off_ray_pos(w, 1.0); },
          {{p1, {0.3, 0.2}}, {p2, 0.5}, {p3, {-0.5, 0.5}}});
    R.add(F, "int_1^w t^A (t-1)^B (w-t)^C dt", "(w-1)^{-b} F^I_{-b,a,-m}(1-w)", "w not in (-inf,1]",
          [](const P& p, cplx w) {
              const auto e = exps(p);
              return Build{product({t_(e.A), tm(1.0, e.B), mt(w, e.C)}), Contour::segment(1.0, w)};
          },
          [fI](const P& p, cplx w) { return std::pow(w - 1.0, -p[1]) * fI(-p[1], p[0], -p[2], 1.0 - w); },
          [positive](const P& p, cplx w) { return positive(p, w) && off_ray_neg(w, 1.0); },
          {{p1, {1.6, 0.3}}, {p2, 2.5}, {p3, {1.2, -0.5}}});
    R.add(F, "int_w^inf t^A (t-1)^B (t-w)^C dt", "w^{(-1-a-b+m)/2} F^I_{-m,b,-a}(1/w)",
          "w not in (-inf,1], ray to +inf",
          [](const P& p, cplx w) {
              const auto e = exps(p);
              return Build{product({t_(e.A), tm(1.0, e.B), tm(w, e.C)}), Contour::ray(w, 1.0)};
          },
          [fI](const P& p, cplx w) {
              return std::pow(w, (-1.0 - p[0] - p[1] + p[2]) / 2.0) * fI(-p[2], p[1], -p[0], 1.0 / w);
          },
          [positive](const P& p, cplx w) { return positive(p, w) && off_ray_neg(w, 1.0); },
          {{p1, {1.6, 0.3}}, {p2, 3.0}, {p3, {0.5, 0.5}}});
    R.add(F, "int_-inf^w (-t)^A (1-t)^B (w-t)^C dt", "(-w)^{(-1-a-b+m)/2} F^I_{-m,b,-a}(1/w)",
          "w not in [0,inf), ray from -inf",
          [](const P& p, cplx w) {
              const auto e = exps(p);
              return Build{product({mt_(e.A), mt(1.0, e.B), mt(w, e.C)}), Contour::from_infinity(-1.0, w)};
          },
          [fI](const P& p, cplx w) {
              return std::pow(-w, (-1.0 - p[0] - p[1] + p[2]) / 2.0) * fI(-p[2], p[1], -p[0], 1.0 / w);
          },
          [positive](const P& p, cplx w) { return positive(p, w) && off_ray_pos(w, 0.0); },
          {{p1, {-0.4, 0.3}}, {p2, {-2.0, -0.5}}, {p3, {0.5, 0.5}}});
    auto& r9 = R.add(
        F, "int_0^1 t^A (1-t)^B (t-w)^C dt", "(-w)^{(-1-a-b-m)/2} F^I_{m,b,a}(1/w)", "w not in [0,inf)",
        [](const P& p, cplx w) {
            const auto e = exps(p);
            return Build{product({t_(e.A), mt(1.0, e.B), tm(w, e.C)}), Contour::segment(0.0, 1.0)};
        },
        [fI](const P& p, cplx w) {
            return std::pow(-w, (-1.0 - p[0] - p[1] - p[2]) / 2.0) * fI(p[2], p[1], p[0], 1.0 / w);
        },
        [positive](const P& p, cplx w) { return positive(p, w) && off_ray_pos(w, 0.0); },
        {{p1, {-0.4, 0.3}}, {p2, -2.0}, {p3, {0.5, 0.5}}});
    auto& r10 = R.add(
        F, "int_0^1 t^A (1-t)^B (w-t)^C dt", "w^{(-1-a-b-m)/2} F^I_{m,b,a}(1/w)", "w not in (-inf,1]",
        [](const P& p, cplx w) {
            const auto e = exps(p);
            return Build{product({t_(e.A), mt(1.0, e.B), mt(w, e.C)}), Contour::segment(0.0, 1.0)};
        },
        [fI](const P& p, cplx w) {
            return std::pow(w, (-1.0 - p[0] - p[1] - p[2]) / 2.0) * fI(p[2], p[1], p[0], 1.0 / w);
        },
        [positive](const P& p, cplx w) { return positive(p, w) && off_ray_neg(w, 1.0); },
        {{p1, {1.6, 0.3}}, {p2, 3.0}, {p3, {1.2, -0.4}}});
    // As printed: the power of t on [0,1] reads (−1−α+β−μ)/2.
    const IntegralRep c9 = r9, c10 = r10;
    R.add_printed(c9, "int_0^1 t^{(-1-a+b-m)/2} (1-t)^B (t-w)^C dt", c9.value, "t exponent has -m where +m is needed",
                  [](const P& p, cplx w) {
                      const auto e = exps(p);
                      return Build{product({t_((-1.0 - p[0] + p[1] - p[2]) / 2.0), mt(1.0, e.B), tm(w, e.C)}),
                                   Contour::segment(0.0, 1.0)};
                  },
                  nullptr);
    R.add_printed(c10, "int_0^1 t^{(-1-a+b-m)/2} (1-t)^B (w-t)^C dt", c10.value, "t exponent has -m where +m is needed",
                  [](const P& p, cplx w) {
                      const auto e = exps(p);
                      return Build{product({t_((-1.0 - p[0] + p[1] - p[2]) / 2.0), mt(1.0, e.B), mt(w, e.C)}),
                                   Contour::segment(0.0, 1.0)};
                  },
                  nullptr);
}

// ---------------------------------------------------------------- Gegenbauer

cplx quad_root(cplx w) { return std::sqrt(w - 1.0) * std::sqrt(w + 1.0); }

void add_gegenbauer(Registry& R) {
    const Family F = Family::gegenbauer;
    auto S = [F](cplx a, cplx l, cplx z, Norm n) { return fn(F, {a, l}, z, n); };
    auto Pe = [](const P& p) { return -0.5 - p[1]; };
    auto Qe = [](const P& p) { return -0.5 - p[0] + p[1]; };
    auto t2m1 = [](cplx e) { return Factor(1.0, {1.0, -1.0}, e); };    // (t²−1)^e
    auto one_m_t2 = [](cplx e) { return Factor(-1.0, {1.0, -1.0}, e); };  // (1−t²)^e
    auto quad = [](cplx w, cplx e) {  // (t² + 2tw + 1)^e
        const cplx s = std::sqrt(1.0 - w * w);
        return Factor(1.0, {-w + I1 * s, -w - I1 * s}, e);
    };
    auto ok = [](const P& p) { return std::abs(p[1].real()) < 0.5 && p[0].real() + p[1].real() > -0.5; };
    const P g1{0.13, 0.1}, g2{0.2, 0.15}, g3{0.3, -0.1};

    R.add(F, "int_-inf^-1 (t^2-1)^{-1/2-l} (w-t)^{-1/2-a+l} dt", "S^I_{a,l}(w)", "w not in (-inf,-1]",
          [=](const P& p, cplx w) {
              return Build{product({t2m1(Pe(p)), mt(w, Qe(p))}), Contour::from_infinity(-1.0, -1.0)};
          },
          [=](const P& p, cplx w) { return S(p[0], p[1], w, Norm::I); },
          [=](const P& p, cplx w) { return ok(p) && off_ray_neg(w, -1.0); },
          {{g1, {0.3, 0.2}}, {g2, 1.5}, {g3, {-0.5, 0.5}}});
    auto& a2 = R.add(
        F, "int_w^1 (1-t^2)^{-1/2-l} (t-w)^{-1/2-a+l} dt", "(1-w^2)^{-a} S^I_{-a,l}(w)",
        "w not in (-inf,-1] or [1,inf)",
        [=](const P& p, cplx w) { return Build{product({one_m_t2(Pe(p)), tm(w, Qe(p))}), Contour::segment(w, 1.0)}; },
        [=](const P& p, cplx w) { return std::pow(1.0 - w * w, -p[0]) * S(-p[0], p[1], w, Norm::I); },
        [=](const P& p, cplx w) { return ok(p) && Qe(p).real() > -1 && off_ray_neg(w, -1.0) && off_ray_pos(w, 1.0); },
        {{g1, {0.3, 0.2}}, {g1, 0.5}, {g2, {-0.2, 0.1}}});
    const IntegralRep c2 = a2;
    R.add_printed(c2, "int_w^1 (1-t^2)^{-1/2-l} (w-t)^{-1/2-a+l} dt", "(1-w^2)^{-a} S^I_{-a,-l}(w)",
                  "printed with (w-t) and S^I_{-a,-l}; the integral equals (t-w) with S^I_{-a,l}",
                  [=](const P& p, cplx w) {
                      return Build{product({one_m_t2(Pe(p)), mt(w, Qe(p))}), Contour::segment(w, 1.0)};
                  },
                  [=](const P& p, cplx w) { return std::pow(1.0 - w * w, -p[0]) * S(-p[0], -p[1], w, Norm::I); });
    R.add(F, "int_-1^1 (1-t^2)^{-1/2-l} (w-t)^{-1/2-a+l} dt",
          "(w^2-1)^{(-1-2a+2l)/4} S^0_{-l,a}(w/sqrt(w^2-1))", "w not in (-inf,1]",
          [=](const P& p, cplx w) {
              return Build{product({one_m_t2(Pe(p)), mt(w, Qe(p))}), Contour::segment(-1.0, 1.0)};
          },
          [=](const P& p, cplx w) {
              return std::pow(w * w - 1.0, (-1.0 - 2.0 * p[0] + 2.0 * p[1]) / 4.0) *
                     S(-p[1], p[0], w / quad_root(w), Norm::zero);
          },
          [=](const P& p, cplx w) { return ok(p) && w.real() > 1; },
          {{g1, {1.6, 0.3}}, {g2, 2.5}, {g3, {1.3, -0.4}}});
    R.add(F, "int_w^inf (t^2-1)^{-1/2-l} (t-w)^{-1/2-a+l} dt",
          "(w^2-1)^{(-1-2a-2l)/4} S^II_{l,a}(w/sqrt(w^2-1))", "w not in (-inf,1]",
          [=](const P& p, cplx w) { return Build{product({t2m1(Pe(p)), tm(w, Qe(p))}), Contour::ray(w, 1.0)}; },
          [=](const P& p, cplx w) {
              return std::pow(w * w - 1.0, (-1.0 - 2.0 * p[0] - 2.0 * p[1]) / 4.0) *
                     S(p[1], p[0], w / quad_root(w), Norm::II);
          },
          [=](const P& p, cplx w) { return ok(p) && Qe(p).real() > -1 && w.real() > 1; },
          {{g1, {1.6, 0.3}}, {g2, 2.5}, {g3, {1.3, -0.4}}});
    R.add(F, "int_0^inf (t^2+2tw+1)^{-a-1/2} t^{-1/2+a+l} dt", "S^II_{a,l}(w)", "w not in (-inf,-1]",
          [=](const P& p, cplx w) {
              return Build{product({quad(w, -p[0] - 0.5), t_(-0.5 + p[0] + p[1])}), Contour::ray(0.0, 1.0)};
          },
          [=](const P& p, cplx w) { return S(p[0], p[1], w, Norm::II); },
          [=](const P& p, cplx w) {
              return (p[0] + p[1]).real() > -0.5 && (p[1] - p[0]).real() < 0.5 && off_ray_neg(w, -1.0);
          },
          {{{0.6, 0.1}, 0.5}, {g1, {0.3, 0.2}}, {g1, {1.6, 0.3}}});
    R.add(F, "int_{-i sqrt(1-w^2)-w}^{i sqrt(1-w^2)-w} (t^2+2tw+1)^{-a-1/2} (-t)^{-1/2+a+l} dt",
          "i (1-w^2)^{-a} S^0_{-a,-l}(w)", "-1 < Re w < 1",
          [=](const P& p, cplx w) {
              const cplx s = std::sqrt(1.0 - w * w);
              return Build{product({quad(w, -p[0] - 0.5), mt_(-0.5 + p[0] + p[1])}),
                           Contour::segment(-I1 * s - w, I1 * s - w)};
          },
          [=](const P& p, cplx w) { return I1 * std::pow(1.0 - w * w, -p[0]) * S(-p[0], -p[1], w, Norm::zero); },
          [=](const P& p, cplx w) { return p[0].real() < 0.5 && w.real() > 0 && w.real() < 1; },
          {{g1, {0.3, 0.2}}, {g1, 0.5}, {g3, {0.2, -0.1}}});
    const P h1{-0.13, 0.05}, h2{-0.2, 0.1}, h3{0.1, -0.05};
    R.add(F, "int_{sqrt(w^2-1)-w}^0 (t^2+2tw+1)^{-a-1/2} (-t)^{-1/2+a-l} dt",
          "(w^2-1)^{(-1-2a+2l)/4} S^I_{-l,a}(w/sqrt(w^2-1))", "Re w > 1",
          [=](const P& p, cplx w) {
              return Build{product({quad(w, -p[0] - 0.5), mt_(-0.5 + p[0] - p[1])}),
                           Contour::segment(quad_root(w) - w, 0.0)};
          },
          [=](const P& p, cplx w) {
              return std::pow(w * w - 1.0, (-1.0 - 2.0 * p[0] + 2.0 * p[1]) / 4.0) *
                     S(-p[1], p[0], w / quad_root(w), Norm::I);
          },
          [=](const P& p, cplx w) { return p[0].real() < 0.5 && (p[0] - p[1]).real() > -0.5 && w.real() > 1; },
          {{h1, {1.6, 0.3}}, {h1, 1.8}, {h2, {2.5, 0.5}}});
    R.add(F, "int_-inf^{-sqrt(w^2-1)-w} (t^2+2tw+1)^{-a-1/2} (-t)^{-1/2+a-l} dt",
          "(w^2-1)^{-1/4-a/2-l/2} S^I_{l,a}(w/sqrt(w^2-1))", "Re w > 1",
          [=](const P& p, cplx w) {
              return Build{product({quad(w, -p[0] - 0.5), mt_(-0.5 + p[0] - p[1])}),
                           Contour::from_infinity(-1.0, -quad_root(w) - w)};
          },
          [=](const P& p, cplx w) {
              return std::pow(w * w - 1.0, -0.25 - p[0] / 2.0 - p[1] / 2.0) * S(p[1], p[0], w / quad_root(w), Norm::I);
          },
          [=](const P& p, cplx w) { return p[0].real() < 0.5 && (p[0] + p[1]).real() > -0.5 && w.real() > 1; },
          {{h1, {1.6, 0.3}}, {h1, 1.8}, {h3, {2.5, 0.5}}});
}

// ---------------------------------------------------------------- confluent

void add_confluent(Registry& R) {
    const Family F = Family::confluent, T = Family::twof0;
    auto ex = [](const P& p) {
        const cplx th = p[0], a = p[1];
        return std::array<cplx, 3>{(-1.0 + th - a) / 2.0, (-1.0 - th - a) / 2.0, (-1.0 - th + a) / 2.0};
    };
    auto F1 = [F](cplx th, cplx a, cplx z, Norm n) { return fn(F, {th, a}, z, n); };
    auto FtI = [T](cplx th, cplx a, cplx x) { return fn(T, {th, a}, x, Norm::I); };
    const P c1{0.12, 0.21}, c2{0.3, -0.2}, c3{-0.2, 0.4};
    auto with_exp = [](Integrand f, cplx c1v, cplx cm1) {
        f.c1 = c1v;
        f.cm1 = cm1;
        return f;
    };

    R.add(F, "(1/2 pi i) int_{]-inf,(0,w)^+,-inf[} t^A e^t (t-w)^C dt", "F_{t,a}(w)", "any w",
          [=](const P& p, cplx w) {
              const auto e = ex(p);
              Integrand f = with_exp(product({Factor(1.0, {0.0}, e[0], 0, -kPi), Factor(1.0, {w}, e[1], 0, -kPi)}),
                                     1.0, 0.0);
              f.constant = 1.0 / (2.0 * kPi * I1);
              return Build{f, Contour::hankel(0.0, std::abs(w) + 1.0)};
          },
          [=](const P& p, cplx w) { return F1(p[0], p[1], w, Norm::bold); },
          [](const P&, cplx) { return true; }, {{c1, {0.7, 0.3}}, {c2, {-1.0, 0.5}}, {c3, {2.0, -1.0}}});
    auto ac = [=](const P& p) {
        const auto e = ex(p);
        return e[0].real() > -1 && e[1].real() > -1;
    };
    R.add(F, "int_0^w t^A e^t (w-t)^C dt", "w^{-a} F^I_{t,-a}(w)", "w not in (-inf,0]",
          [=](const P& p, cplx w) {
              const auto e = ex(p);
              return Build{with_exp(product({t_(e[0]), mt(w, e[1])}), 1.0, 0.0), Contour::segment(0.0, w)};
          },
          [=](const P& p, cplx w) { return std::pow(w, -p[1]) * F1(p[0], -p[1], w, Norm::I); },
          [=](const P& p, cplx w) { return ac(p) && off_ray_neg(w, 0.0); },
          {{c1, {0.7, 0.3}}, {c1, {2.0, 1.0}}, {c2, {-1.0, 0.5}}});
    R.add(F, "int_w^0 (-t)^A e^t (t-w)^C dt", "(-w)^{-a} F^I_{t,-a}(w)", "w not in [0,inf)",
          [=](const P& p, cplx w) {
              const auto e = ex(p);
              return Build{with_exp(product({mt_(e[0]), tm(w, e[1])}), 1.0, 0.0), Contour::segment(w, 0.0)};
          },
          [=](const P& p, cplx w) { return std::pow(-w, -p[1]) * F1(p[0], -p[1], w, Norm::I); },
          [=](const P& p, cplx w) { return ac(p) && off_ray_pos(w, 0.0); },
          {{c1, {-0.8, 0.4}}, {c1, {-2.0, -1.0}}, {c2, {0.5, 0.5}}});
    R.add(F, "int_-inf^0 (-t)^A e^t (w-t)^C dt", "w^C F~^I_{t,a}(-1/w)", "w not in (-inf,0]",
          [=](const P& p, cplx w) {
              const auto e = ex(p);
              return Build{with_exp(product({mt_(e[0]), mt(w, e[1])}), 1.0, 0.0), Contour::from_infinity(-1.0, 0.0)};
          },
          [=](const P& p, cplx w) { return std::pow(w, ex(p)[1]) * FtI(p[0], p[1], -1.0 / w); },
          [=](const P& p, cplx w) { return ex(p)[0].real() > -1 && off_ray_neg(w, 0.0); },
          {{c1, {0.7, 0.3}}, {c1, 2.0}, {c2, {0.5, -1.0}}});
    R.add(F, "int_-inf^w (-t)^A e^t (w-t)^C dt", "e^w (-w)^A F~^I_{-t,a}(1/w)", "w not in [0,inf)",
          [=](const P& p, cplx w) {
              const auto e = ex(p);
              return Build{with_exp(product({mt_(e[0]), mt(w, e[1])}), 1.0, 0.0), Contour::from_infinity(-1.0, w)};
          },
          [=](const P& p, cplx w) { return std::exp(w) * std::pow(-w, ex(p)[0]) * FtI(-p[0], p[1], 1.0 / w); },
          [=](const P& p, cplx w) { return ex(p)[1].real() > -1 && off_ray_pos(w, 0.0); },
          {{c1, {-0.8, 0.4}}, {c1, -2.0}, {c2, {-0.5, -1.0}}});
    R.add(F, "int_1^inf e^{w/t} t^{-1-a} (t-1)^E dt", "F^I_{t,a}(w)", "any w",
          [=](const P& p, cplx w) {
              const auto e = ex(p);
              return Build{with_exp(product({t_(-1.0 - p[1]), tm(1.0, e[2])}), 0.0, w), Contour::ray(1.0, 1.0)};
          },
          [=](const P& p, cplx w) { return F1(p[0], p[1], w, Norm::I); },
          [=](const P& p, cplx) { return ex(p)[2].real() > -1 && (1.0 + p[0] + p[1]).real() > 0; },
          {{c1, {0.7, 0.3}}, {c1, {-2.0, 1.0}}, {c3, 3.0}});
    R.add(F, "(1/2 pi i) int_{(0-0)^+} e^{w/t} t^{-1-a} (1-t)^E dt", "w^{-a} F_{t,-a}(w)", "Re w > 0",
          [=](const P& p, cplx w) {
              const auto e = ex(p);
              const double r = std::min(std::abs(w), 0.5);
              Integrand f = with_exp(product({Factor(1.0, {0.0}, -1.0 - p[1], 0, -kPi), mt(1.0, e[2])}), 0.0, w);
              f.constant = 1.0 / (2.0 * kPi * I1);
              Contour c;
              c.add(Piece::segment(0.0, -r)).add(Piece::arc(0.0, r, -kPi, kPi)).add(Piece::segment(-r, 0.0));
              return Build{f, c};
          },
          [=](const P& p, cplx w) { return std::pow(w, -p[1]) * F1(p[0], -p[1], w, Norm::bold); },
          [](const P&, cplx w) { return w.real() > 0; }, {{c1, {0.7, 0.3}}, {c1, 1.5}, {c2, {0.4, -0.6}}});
    R.add(F, "int_-inf^0 e^{w/t} (-t)^{-1-a} (1-t)^E dt", "w^C F~^I_{t,-a}(-1/w)", "Re w > 0",
          [=](const P& p, cplx w) {
              const auto e = ex(p);
              return Build{with_exp(product({mt_(-1.0 - p[1]), mt(1.0, e[2])}), 0.0, w),
                           Contour::from_infinity(-1.0, 0.0)};
          },
          [=](const P& p, cplx w) { return std::pow(w, ex(p)[1]) * FtI(p[0], -p[1], -1.0 / w); },
          [=](const P& p, cplx w) { return (1.0 + p[0] + p[1]).real() > 0 && w.real() > 0; },
          {{c1, {0.7, 0.3}}, {c1, 1.5}, {c2, {0.4, -0.6}}});
    R.add(F, "int_0^1 e^{w/t} t^{-1-a} (1-t)^E dt", "e^w (-w)^A F~^I_{-t,-a}(1/w)", "Re w < 0",
          [=](const P& p, cplx w) {
              const auto e = ex(p);
              return Build{with_exp(product({t_(-1.0 - p[1]), mt(1.0, e[2])}), 0.0, w), Contour::segment(0.0, 1.0)};
          },
          [=](const P& p, cplx w) { return std::exp(w) * std::pow(-w, ex(p)[0]) * FtI(-p[0], -p[1], 1.0 / w); },
          [=](const P& p, cplx w) { return (1.0 - p[0] + p[1]).real() > 0 && w.real() < 0; },
          {{c1, {-0.6, 0.3}}, {c1, -1.5}, {c2, {-0.4, -0.6}}});
}

// ---------------------------------------------------------------- Hermite

void add_hermite(Registry& R) {
    const Family F = Family::hermite;
    auto S = [F](cplx l, cplx z, Norm n) { return fn(F, {l}, z, n); };
    const P l1{0.4}, l2{-0.3}, l3{0.1};
    R.add(F, "int_{Re t = Re w - 1} e^{t^2} (w-t)^{-l-1/2} dy,  t = c + iy", "sqrt(pi) S_l(w)", "any w",
          [](const P& p, cplx w) {
              Integrand f = product({mt(w, -p[0] - 0.5)});
              f.c2 = 1.0;
              f.constant = -I1;
              const cplx mid(w.real() - 1.0, w.imag());
              Contour c;
              c.add(Piece::ray_in(-I1, mid)).add(Piece::ray_out(mid, I1));
              return Build{f, c};
          },
          [=](const P& p, cplx w) { return std::sqrt(kPi) * S(p[0], w, Norm::plain); },
          [](const P&, cplx) { return true; }, {{l1, {0.7, 0.4}}, {l1, {1.5, -0.3}}, {l2, 1.2}});
    R.add(F, "int_0^inf e^{(w+is)^2} s^{-l-1/2} ds", "e^{w^2} S^I_{-l}(-iw)", "Re l < 1/2",
          [](const P& p, cplx w) {
              Integrand f = product({Factor(-I1, {w}, -p[0] - 0.5)});
              f.c2 = 1.0;
              f.constant = -I1;
              return Build{f, Contour::ray(w, I1)};
          },
          [=](const P& p, cplx w) { return std::exp(w * w) * S(-p[0], -I1 * w, Norm::I); },
          [](const P& p, cplx) { return p[0].real() < 0.5; }, {{l1, {-0.7, 0.4}}, {l1, {0.5, -0.6}}, {l2, 1.2}});
    R.add(F, "int_0^inf e^{-t^2-2tw} t^{l-1/2} dt", "S^I_l(w)", "Re l > -1/2",
          [](const P& p, cplx w) {
              Integrand f = product({t_(p[0] - 0.5)});
              f.c2 = -1.0;
              f.c1 = -2.0 * w;
              return Build{f, Contour::ray(0.0, 1.0)};
          },
          [=](const P& p, cplx w) { return S(p[0], w, Norm::I); },
          [](const P& p, cplx) { return p[0].real() > -0.5; }, {{l1, 1.2}, {l1, {-0.7, 0.4}}, {l3, {0.5, -0.6}}});
    R.add(F, "int_{R - i/2} e^{-t^2-2tw} (it)^{l-1/2} dt", "sqrt(pi) e^{w^2} S_{-l}(-iw)", "any w",
          [](const P& p, cplx w) {
              Integrand f = product({Factor(I1, {0.0}, p[0] - 0.5)});
              f.c2 = -1.0;
              f.c1 = -2.0 * w;
              const cplx mid(0.0, -0.5);
              Contour c;
              c.add(Piece::ray_in(-1.0, mid)).add(Piece::ray_out(mid, 1.0));
              return Build{f, c};
          },
          [=](const P& p, cplx w) { return std::sqrt(kPi) * std::exp(w * w) * S(-p[0], -I1 * w, Norm::plain); },
          [](const P&, cplx) { return true; }, {{l1, {-0.7, 0.4}}, {l1, {0.5, -0.6}}, {l2, {1.2, 0.3}}});
}

// ---------------------------------------------------------------- 0F1

void add_zerof1(Registry& R) {
    const Family F = Family::zerof1;
    auto G = [F](cplx a, cplx z, Norm n) { return fn(F, {a}, z, n); };
    const P a1{0.3}, a2{-0.4}, a0{0.0};
    auto exps = [](cplx c1, cplx cm1, std::vector<Factor> fs) {
        Integrand f = product(std::move(fs));
        f.c1 = c1;
        f.cm1 = cm1;
        return f;
    };
    R.add(F, "(1/2 pi i) int_{]-inf,0^+,-inf[} e^t e^{w/t} t^{-a-1} dt", "F_a(w)", "any w",
          [=](const P& p, cplx w) {
              Integrand f = exps(1.0, w, {Factor(1.0, {0.0}, -p[0] - 1.0, 0, -kPi)});
              f.constant = 1.0 / (2.0 * kPi * I1);
              return Build{f, Contour::hankel(0.0, std::max(1.0, std::sqrt(std::abs(w))))};
          },
          [=](const P& p, cplx w) { return G(p[0], w, Norm::bold); }, [](const P&, cplx) { return true; },
          {{a1, {0.6, 0.3}}, {a1, 4.0}, {a2, {-2.0, 1.0}}});
    R.add(F, "(1/2 pi i) int_{(0-0)^+} e^t e^{w/t} t^{-a-1} dt", "w^{-a} F_{-a}(w)", "Re w > 0",
          [=](const P& p, cplx w) {
              Integrand f = exps(1.0, w, {Factor(1.0, {0.0}, -p[0] - 1.0, 0, -kPi)});
              f.constant = 1.0 / (2.0 * kPi * I1);
              const double r = std::min(std::abs(w), 0.5);
              Contour c;
              c.add(Piece::segment(0.0, -r)).add(Piece::arc(0.0, r, -kPi, kPi)).add(Piece::segment(-r, 0.0));
              return Build{f, c};
          },
          [=](const P& p, cplx w) { return std::pow(w, -p[0]) * G(-p[0], w, Norm::bold); },
          [](const P&, cplx w) { return w.real() > 0; }, {{a0, 0.25}, {a1, {0.6, 0.3}}, {a2, {2.0, -1.0}}});
    R.add(F, "int_-inf^0 e^t e^{w/t} (-t)^{-a-1} dt", "sqrt(pi) F~_a(w)", "Re w > 0",
          [=](const P& p, cplx w) {
              return Build{exps(1.0, w, {mt_(-p[0] - 1.0)}), Contour::from_infinity(-1.0, 0.0)};
          },
          [=](const P& p, cplx w) { return std::sqrt(kPi) * G(p[0], w, Norm::tilde); },
          [](const P&, cplx w) { return w.real() > 0; }, {{a1, {0.6, 0.3}}, {a1, 2.0}, {a2, {0.5, -1.0}}});
    const P b1{0.5}, b2{0.3}, b3{-0.2};
    R.add(F, "int_-1^1 (1-t^2)^{a-1/2} e^{2t sqrt w} dt", "Gamma(a+1/2) sqrt(pi) F_a(w)", "Re a > -1/2",
          [=](const P& p, cplx w) {
              return Build{exps(2.0 * std::sqrt(w), 0.0, {Factor(-1.0, {1.0, -1.0}, p[0] - 0.5)}),
                           Contour::segment(-1.0, 1.0)};
          },
          [=](const P& p, cplx w) { return gamma(p[0] + 0.5) * std::sqrt(kPi) * G(p[0], w, Norm::bold); },
          [](const P& p, cplx) { return p[0].real() > -0.5; }, {{b1, 0.4}, {b2, {0.6, 0.3}}, {b3, {-2.0, 1.0}}});
    R.add(F, "int_{-sqrt w}^{sqrt w} (w-t^2)^{-a-1/2} e^{2t} dt", "Gamma(1/2-a) sqrt(pi) w^{-a} F_{-a}(w)",
          "Re a < 1/2, w not in (-inf,0]",
          [=](const P& p, cplx w) {
              const cplx r = std::sqrt(w);
              return Build{exps(2.0, 0.0, {Factor(-1.0, {r, -r}, -p[0] - 0.5)}), Contour::segment(-r, r)};
          },
          [=](const P& p, cplx w) {
              return gamma(0.5 - p[0]) * std::sqrt(kPi) * std::pow(w, -p[0]) * G(-p[0], w, Norm::bold);
          },
          [](const P& p, cplx w) { return p[0].real() < 0.5 && off_ray_neg(w, 0.0); },
          {{a1, {0.6, 0.3}}, {a1, 2.0}, {a2, {0.5, -1.0}}});
    R.add(F, "int_-inf^-1 (t^2-1)^{a-1/2} e^{2t sqrt w} dt", "1/2 Gamma(a+1/2) F~_a(w)",
          "Re a > -1/2, w not in (-inf,0]",
          [=](const P& p, cplx w) {
              return Build{exps(2.0 * std::sqrt(w), 0.0, {Factor(1.0, {1.0, -1.0}, p[0] - 0.5)}),
                           Contour::from_infinity(-1.0, -1.0)};
          },
          [=](const P& p, cplx w) { return 0.5 * gamma(p[0] + 0.5) * G(p[0], w, Norm::tilde); },
          [](const P& p, cplx w) { return p[0].real() > -0.5 && off_ray_neg(w, 0.0); },
          {{a1, {0.6, 0.3}}, {a1, 2.0}, {b3, {0.5, -1.0}}});
    R.add(F, "int_-inf^{-sqrt w} (t^2-w)^{-a-1/2} e^{2t} dt", "1/2 Gamma(1/2-a) F~_a(w)",
          "Re a < 1/2, w not in (-inf,0]",
          [=](const P& p, cplx w) {
              const cplx r = std::sqrt(w);
              return Build{exps(2.0, 0.0, {Factor(1.0, {r, -r}, -p[0] - 0.5)}), Contour::from_infinity(-1.0, -r)};
          },
          [=](const P& p, cplx w) { return 0.5 * gamma(0.5 - p[0]) * G(p[0], w, Norm::tilde); },
          [](const P& p, cplx w) { return p[0].real() < 0.5 && off_ray_neg(w, 0.0); },
          {{a1, {0.6, 0.3}}, {a1, 2.0}, {a2, {0.5, -1.0}}});
}

const Registry& registry() {
    static const Registry R = [] {
        Registry r;
        add_2f1(r);
        add_gegenbauer(r);
        add_confluent(r);
        add_hermite(r);
        add_zerof1(r);
        return r;
    }();
    return R;
}

}  // namespace

const std::vector<IntegralRep>& integral_reps() { return registry().rows; }

std::vector<IntegralRep> integral_reps(Family f) {
    std::vector<IntegralRep> out;
    for (const auto& r : registry().rows)
        if (r.family == f) out.push_back(r);
    return out;
}

const std::vector<IntegralRep>& printed_integral_reps() { return registry().printed; }

QuadResult integral_rep(const IntegralRep& rep, const std::vector<cplx>& lie, cplx w, const QuadOptions& opt) {
    if (!rep.admissible(lie, w)) throw PreconditionError(rep.ref + ": outside " + rep.conditions);
    const auto [f, c] = rep.build(lie, w);
    return integrate(f, c, opt);
}

QuadResult three_way_split(const std::vector<cplx>& p, cplx w, int sign) {
    if (w.imag() >= 0) throw PreconditionError("three-way split: needs Im w < 0");
    const cplx a = p.at(0), b = p.at(1), m = double(sign) * p.at(2);
    Integrand f = product({mt_((-1.0 - a + b + m) / 2.0), mt(1.0, (-1.0 + a - b + m) / 2.0),
                           mt(w, (-1.0 - a - b - m) / 2.0)});
    // Along the real axis, passing above 0 and 1.
    Contour c;
    c.add(Piece::ray_in(-1.0, 0.0)).turn(0.0, -kPi).add(Piece::segment(0.0, 1.0)).turn(1.0, -kPi).add(
        Piece::ray_out(1.0, 1.0));
    return integrate(f, c);
}


}  // namespace hyperclass
