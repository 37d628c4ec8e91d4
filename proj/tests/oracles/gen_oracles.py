"""Regenerates oracle headers from mpmath (50 digits). Run from this directory."""
import mpmath as mp

mp.mp.dps = 50


def c(z):
    z = mp.mpc(z)
    return "{%s, %s}" % (mp.nstr(z.real, 20, min_fixed=-1, max_fixed=1), mp.nstr(z.imag, 20, min_fixed=-1, max_fixed=1))


def lst(xs):
    return "{" + ", ".join(c(x) for x in xs) + "}"


# ---- classical functions
hyp2f1_cases = []
for (a, b, cc) in [((0.3, 0.1), (0.7, -0.2), (1.4, 0.05)), (0.5, 0.25, 1.75), (1, 1, 2), (-0.35, 1.2, 0.6)]:
    for w in [0.2 + 0.1j, 0.5, -0.8 + 0.3j, 0.9 + 0.2j, 0.5 + 0.8j, 1.2 + 0.5j, 3 - 2j, -7 + 1j, 0.999 + 0.01j, 1 + 1j]:
        a_, b_, c_ = (mp.mpc(*x) if isinstance(x, tuple) else mp.mpf(x) for x in (a, b, cc))
        hyp2f1_cases.append((a_, b_, c_, mp.mpc(w), mp.hyp2f1(a_, b_, c_, w)))

def kappa(a_list, b_list, w):
    """sum |term_k| / |F|: how much the power series cancels."""
    t, s, k = mp.mpf(1), mp.mpf(1), 0
    while True:
        num = mp.fprod(abs(a + k) for a in a_list)
        den = mp.fprod(abs(b + k) for b in b_list) * (k + 1)
        t *= num / den * abs(w)
        s += t
        k += 1
        if k > 20 and t < s * mp.mpf(10) ** -30:
            break
    F = mp.hyper(a_list, b_list, w)
    return s / abs(F)


hyp1f1_cases = [(mp.mpf(a), mp.mpf(cc), mp.mpc(w), mp.hyp1f1(a, cc, w), kappa([mp.mpf(a)], [mp.mpf(cc)], mp.mpc(w)))
                for (a, cc) in [(0.5, 1.5), (-0.3, 0.7), (1.2, 2.6)]
                for w in [0.5, -2 + 1j, 5 - 3j, -20 + 3j, 12j]]
hyp0f1_cases = [(mp.mpf(cc), mp.mpc(w), mp.hyp0f1(cc, w), kappa([], [mp.mpf(cc)], mp.mpc(w)))
                for cc in [0.7, 1.3, 2.5] for w in [0.25, -3 + 1j, 10 + 2j, -30 + 0.5j]]
hyp2f0_cases = [(mp.mpf(a), mp.mpf(b), mp.mpc(w), mp.hyp2f0(a, b, w))
                for (a, b) in [(0.4, 0.6), (0.25, 1.1)]
                for w in [-0.05, -0.5 + 0.2j, -2 + 1j, 0.3 + 0.4j, -0.02 - 0.01j]]
gamma_cases = [(mp.mpc(z), mp.gamma(z)) for z in [0.5, 3.7, -2.5 + 0.3j, 1 + 5j, 0.1 - 0.2j, 12.5, -7.3]]


# ---- family functions with their normalizations
def fam_2f1(al, be, mu, w, n):
    a, b, cc = (1 + al + be + mu) / 2, (1 + al + be - mu) / 2, 1 + al
    F = mp.hyp2f1(a, b, cc, w)
    return {"plain": F, "bold": F * mp.rgamma(cc),
            "I": F * mp.gamma((1 + al + be - mu) / 2) * mp.gamma((1 + al - be + mu) / 2) * mp.rgamma(1 + al)}[n]


def fam_geg(al, la, w, n):
    F = mp.hyp2f1((1 + 2 * al + 2 * la) / 2, (1 + 2 * al - 2 * la) / 2, 1 + al, (1 - w) / 2)
    return {"plain": F, "bold": F * mp.rgamma(1 + al),
            "I": F * 2 ** (-0.5 - al - la) * mp.gamma((1 + 2 * al + 2 * la) / 2) * mp.gamma((1 - 2 * la) / 2) * mp.rgamma(al + 1),
            "II": F * mp.gamma((1 + 2 * al - 2 * la) / 2) * mp.gamma((1 + 2 * al + 2 * la) / 2) * mp.rgamma(2 * al + 1),
            "0": F * mp.sqrt(mp.pi) * mp.gamma((1 + 2 * al) / 2) * mp.rgamma(al + 1)}[n]


def fam_1f1(th, al, w, n):
    F = mp.hyp1f1((1 + al + th) / 2, 1 + al, w)
    return {"plain": F, "bold": F * mp.rgamma(1 + al),
            "I": F * mp.gamma((1 + al + th) / 2) * mp.gamma((1 + al - th) / 2) * mp.rgamma(1 + al)}[n]


def fam_2f0(th, al, x, n):
    F = mp.hyp2f0((1 + al + th) / 2, (1 - al + th) / 2, x)
    return {"plain": F, "tilde": F, "I": F * mp.gamma((1 - al + th) / 2)}[n]


def fam_herm(la, w, n):
    a = la + 0.5
    S = 2 ** a * mp.hermite(-a, w)
    return {"plain": S, "I": S * 2 ** (-la - 0.5) * mp.gamma(la + 0.5)}[n]


def fam_0f1(al, w, n):
    if n == "tilde":
        s = mp.sqrt(w)
        return mp.exp(-2 * s) * w ** (-al / 2 - 0.25) * mp.hyp2f0((1 + 2 * al) / 2, (1 - 2 * al) / 2, -1 / (4 * s))
    F = mp.hyp0f1(al + 1, w)
    return {"plain": F, "bold": F * mp.rgamma(al + 1)}[n]


family_cases = []
for n in ["plain", "bold", "I"]:
    for p in [(0.11, 0.07, 0.05), (0.3, -0.2, 0.45)]:
        for w in [0.3 + 0.2j, -1 + 0.5j, 2 + 1j]:
            family_cases.append(("2f1", p, w, n, fam_2f1(*map(mp.mpf, p), mp.mpc(w), n)))
for n in ["plain", "bold", "I", "II", "0"]:
    for p in [(0.13, 0.1), (0.6, 0.1)]:
        for w in [0.5, 0.3 + 0.2j, 1.6 + 0.3j]:
            family_cases.append(("gegenbauer", p, w, n, fam_geg(*map(mp.mpf, p), mp.mpc(w), n)))
for n in ["plain", "bold", "I"]:
    for p in [(0.12, 0.21), (-0.4, 0.55)]:
        for w in [0.7 + 0.3j, -5 + 1j, 8 - 2j]:
            family_cases.append(("1f1", p, w, n, fam_1f1(*map(mp.mpf, p), mp.mpc(w), n)))
for n in ["plain", "I"]:
    for p in [(0.12, 0.21), (0.5, -0.3)]:
        for w in [-0.1 + 0.05j, -1 + 0.5j, -3 - 2j, 0.4 + 0.6j]:
            family_cases.append(("2f0", p, w, n, fam_2f0(*map(mp.mpf, p), mp.mpc(w), n)))
for n in ["plain", "I"]:
    for p in [(0.4,), (-0.3,), (1.7,)]:
        for w in [1.2, 0.5 + 0.5j, -0.7 + 0.4j, 3 + 2j, 9]:
            family_cases.append(("hermite", p, w, n, fam_herm(mp.mpf(p[0]), mp.mpc(w), n)))
for n in ["plain", "bold", "tilde"]:
    for p in [(0.3,), (-0.45,)]:
        for w in [0.5 + 0.2j, 4 + 3j, -2 + 1j, 30]:
            family_cases.append(("0f1", p, w, n, fam_0f1(mp.mpf(p[0]), mp.mpc(w), n)))

# ---- integrals by direct mpmath quadrature
inf = mp.inf


def quad(f, iv):
    """mp.quad, cross-checked against a finer rule."""
    v = mp.quad(f, iv)
    assert abs(v - mp.quad(f, iv, maxdegree=12)) < 1e-25 * max(1, abs(v)), iv
    return v


integrals = [
    ("exp(-t^2-2t) over [0,inf)", quad(lambda t: mp.exp(-t * t - 2 * t), [0, inf])),
    # Closed form: mp.quad is inaccurate with both endpoints this singular.
    ("t^-0.9 (1-t)^-0.8 over [0,1]", mp.beta(mp.mpf("0.1"), mp.mpf("0.2"))),
    ("exp(-t^2-2.4t) t^-0.1 over [0,inf)", quad(lambda t: mp.exp(-t * t - 2.4 * t) * t ** -0.1, [0, inf])),
    ("(t^2+t+1)^-1.1 t^0.2 over [0,inf)", quad(lambda t: (t * t + t + 1) ** -1.1 * t ** 0.2, [0, inf])),
    ("(1-t^2)^0 exp(2t sqrt 0.4) over [-1,1]", quad(lambda t: mp.exp(2 * t * mp.sqrt(0.4)), [-1, 1])),
    ("hankel 0f1 a=0.3 w=0.25", mp.rgamma(1.3) * mp.hyp0f1(1.3, 0.25)),
    ("exp(t) over the circle |t|=1, /2 pi i", mp.mpf(0)),
    ("1/t over the circle |t|=1, /2 pi i", mp.mpf(1)),
]

with open("../numerics_oracle.hpp", "w") as f:
    f.write("// Generated by oracles/gen_oracles.py from mpmath at 50 digits. Do not edit.\n")
    f.write("#pragma once\n\n#include <complex>\n#include <vector>\n\nnamespace oracle {\n\nusing cplx = std::complex<double>;\n\n")
    f.write("struct Hyp2f1 { cplx a, b, c, w, value; };\ninline const std::vector<Hyp2f1> hyp2f1 = {\n")
    for a, b, cc, w, v in hyp2f1_cases:
        f.write("    {%s, %s, %s, %s, %s},\n" % (c(a), c(b), c(cc), c(w), c(v)))
    f.write("};\n\nstruct Hyp1f1 { double a, c; cplx w, value; double kappa; };\ninline const std::vector<Hyp1f1> hyp1f1 = {\n")
    for a, cc, w, v, k in hyp1f1_cases:
        f.write("    {%s, %s, %s, %s, %s},\n" % (mp.nstr(a, 17), mp.nstr(cc, 17), c(w), c(v), mp.nstr(k, 6)))
    f.write("};\n\nstruct Hyp0f1 { double c; cplx w, value; double kappa; };\ninline const std::vector<Hyp0f1> hyp0f1 = {\n")
    for cc, w, v, k in hyp0f1_cases:
        f.write("    {%s, %s, %s, %s},\n" % (mp.nstr(cc, 17), c(w), c(v), mp.nstr(k, 6)))
    f.write("};\n\nstruct Hyp2f0 { double a, b; cplx w, value; };\ninline const std::vector<Hyp2f0> hyp2f0 = {\n")
    for a, b, w, v in hyp2f0_cases:
        f.write("    {%s, %s, %s, %s},\n" % (mp.nstr(a, 17), mp.nstr(b, 17), c(w), c(v)))
    f.write("};\n\nstruct Gamma { cplx z, value; };\ninline const std::vector<Gamma> gamma = {\n")
    for z, v in gamma_cases:
        f.write("    {%s, %s},\n" % (c(z), c(v)))
    f.write("};\n\nstruct FamilyValue { const char* family; std::vector<cplx> lie; cplx w; const char* norm; cplx value; };\n")
    f.write("inline const std::vector<FamilyValue> family = {\n")
    for fam, p, w, n, v in family_cases:
        f.write('    {"%s", %s, %s, "%s", %s},\n' % (fam, lst(p), c(w), n, c(v)))
    f.write("};\n\nstruct Integral { const char* what; cplx value; };\ninline const std::vector<Integral> integrals = {\n")
    for what, v in integrals:
        f.write('    {"%s", %s},\n' % (what, c(v)))
    f.write("};\n\n}  // namespace oracle\n")
print(len(hyp2f1_cases), len(family_cases))
