#include <cmath>
#include <cstdlib>
#include <random>

#include "hyperclass/jet.hpp"
#include "hyperclass/verify.hpp"

namespace hyperclass {

namespace {

int residue_terms(const DiffOperator& r) {
    int n = 0;
    for (const auto& c : r.coeffs()) n += int(c.num().terms().size());
    return n;
}

CheckResult symbolic_result(std::string id, std::string ref, const DiffOperator& residue) {
    CheckResult r;
    r.id = std::move(id);
    r.ref = std::move(ref);
    r.kind = CheckMode::symbolic;
    r.error = residue_terms(residue);
    r.status = residue.is_zero() ? Status::pass : Status::fail;
    if (!residue.is_zero()) {
        r.detail = "residue " + residue.str();
        if (r.detail.size() > 400) r.detail = r.detail.substr(0, 400) + "...";
    }
    return r;
}

std::string op_id(const DiffOperator& A, const FamilyParams& src, const FamilyParams& tgt) {
    return A.str() + ": " + src.str() + " -> " + tgt.str();
}

DiffOperator shifted(const DiffOperator& A, Family f, const std::vector<int>& s) {
    DiffOperator out = A;
    const auto& syms = family_symbols(f);
    for (size_t i = 0; i < syms.size(); ++i)
        if (s[i] != 0) out = out.substitute_param(syms[i], MultiPoly::var(syms[i]) + MultiPoly(s[i]));
    return out;
}

RatFun shifted(const RatFun& f, Family fam, const std::vector<int>& s) {
    RatFun out = f;
    const auto& syms = family_symbols(fam);
    for (size_t i = 0; i < syms.size(); ++i)
        if (s[i] != 0) out = out.substitute(syms[i], RatFun(MultiPoly::var(syms[i]) + MultiPoly(s[i])));
    return out;
}

// The row's numeric form: w = sign·v/√(v²−1), checked on e^{cv} at sample
// points in the first quadrant with Re v > 1.
CheckResult check_algebraic(const ConjugationRow& row, std::uint64_t seed) {
    CheckResult res;
    res.id = row.str();
    res.ref = row.ref;
    res.kind = CheckMode::numeric;
    std::mt19937_64 rng(seed);
    const SymValues vals = generic_values(rng);
    std::uniform_real_distribution<double> re(1.3, 3.0), im(0.1, 1.5);
    const DiffOperator Fs = make_operator(row.src, Sym::w);
    const DiffOperator Ft = row.prefactor * make_operator(row.tgt, Sym::v);
    const cplx cs[] = {cplx(0.3, 0.0), cplx(1.0, 0.2), cplx(-0.7, 0.0)};
    const int order = 4;
    double worst = 0;
    for (int k = 0; k < 10; ++k) {
        const cplx v0(re(rng), im(rng));
        const cplx w0 = double(row.algebraic_sign) * v0 / (std::sqrt(v0 - 1.0) * std::sqrt(v0 + 1.0));
        Jet w = Jet::variable(w0, order);
        Jet v = w / (sqrt(w - 1.0) * sqrt(w + 1.0));
        if (std::abs(v.value() - v0) > std::abs(v.value() + v0)) v = -v;
        Jet vv = Jet::variable(v0, order);
        for (cplx c : cs) {
            cplx lhs = jet_apply(Fs, vals, exp(v * c));
            Jet g = row.right.evaluate(vv, vals) * exp(vv * c);
            cplx left = row.left.evaluate(v0, vals);
            cplx rhs = left * jet_apply(Ft, vals, g);
            auto coeffs = Ft.coeffs_at([&] {
                SymValues s = vals;
                s[size_t(Sym::v)] = v0;
                return s;
            }());
            double scale = 0;
            for (size_t j = 0; j < coeffs.size(); ++j)
                scale += std::abs(coeffs[j] * g.derivative(int(j)));
            scale *= std::abs(left);
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(scale, 1e-300));
            ++res.samples;
        }
    }
    res.error = worst;
    res.status = worst <= 1e-9 * tolerance_scale() ? Status::pass : Status::fail;
    return res;
}

VerificationReport make_report(const char* suite, Family f) {
    VerificationReport r;
    r.suite = suite;
    r.family = family_name(f);
    return r;
}

}  // namespace

SymValues generic_values(std::mt19937_64& rng) {
    static const double pool[] = {3.0 / 7,  2.0 / 11,  -5.0 / 13, 4.0 / 13,  6.0 / 7,  -3.0 / 11,
                                  9.0 / 13, -2.0 / 7,  5.0 / 11,  -8.0 / 13, 1.0 / 7,  7.0 / 11};
    SymValues v{};
    for (int s = int(Sym::alpha); s < kNumSyms; ++s) v[s] = pool[rng() % std::size(pool)];
    return v;
}

std::vector<cplx> generic_params(Family f, std::mt19937_64& rng) {
    const SymValues v = generic_values(rng);
    std::vector<cplx> out;
    for (Sym s : family_symbols(f)) out.push_back(v[size_t(s)]);
    return out;
}

const char* status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped";
    }
    return "?";
}

int VerificationReport::count(Status s) const {
    int n = 0;
    for (const auto& c : checks) n += c.status == s;
    return n;
}

void VerificationReport::append(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

double tolerance_scale() {
    static const double scale = [] {
        const char* env = std::getenv("HYPERCLASS_TOL");
        if (!env) return 1.0;
        char* end = nullptr;
        double v = std::strtod(env, &end);
        return (end != env && v > 0) ? v : 1.0;
    }();
    return scale;
}

CheckResult check_transmutation(const TransmutationRow& row) {
    const DiffOperator W = DiffOperator::mult(Sym::w, row.weight);
    const DiffOperator Fs = W * make_operator(row.src), Ft = W * make_operator(row.tgt);
    auto r = symbolic_result(op_id(row.A, row.src, row.tgt), row.ref, row.A * Fs - Ft * row.A);
    if (!row.note.empty()) r.detail = r.detail.empty() ? row.note : row.note + "; " + r.detail;
    return r;
}

CheckResult check_factorization(const FactorizationRow& row) {
    const DiffOperator lhs = row.weight * make_operator(row.params);
    const DiffOperator rhs = row.minus * row.plus + row.constant;
    return symbolic_result("(" + row.weight.str() + ")F = (" + row.minus.str() + ")(" + row.plus.str() + ") + " +
                               row.constant.str(),
                           row.ref, lhs - rhs);
}

CheckResult check_conjugation(const ConjugationRow& row, std::uint64_t seed) {
    if (row.mode == CheckMode::numeric || !row.subst) return check_algebraic(row, seed);
    const DiffOperator lhs = row.subst->apply(make_operator(row.src, Sym::w));
    const auto ratio = (row.left * row.right).as_rational();
    if (!ratio) {
        CheckResult r;
        r.id = row.str();
        r.ref = row.ref;
        r.status = Status::fail;
        r.error = 1;
        r.detail = "left and right multipliers do not combine to a rational function";
        return r;
    }
    const DiffOperator G = row.prefactor * make_operator(row.tgt, Sym::v);
    const DiffOperator rhs = *ratio * conjugate(G, row.right);
    auto r = symbolic_result(row.str(), row.ref, lhs - rhs);
    if (!row.note.empty()) r.detail = r.detail.empty() ? row.note : row.note + "; " + r.detail;
    return r;
}

VerificationReport verify_transmutations(const IdentityCatalog& c) {
    auto rep = make_report("transmutations", c.family);
    for (const auto& row : c.transmutations) rep.checks.push_back(check_transmutation(row));
    return rep;
}

VerificationReport verify_factorizations(const IdentityCatalog& c) {
    auto rep = make_report("factorizations", c.family);
    for (const auto& row : c.factorizations) rep.checks.push_back(check_factorization(row));
    return rep;
}

VerificationReport verify_discrete_symmetries(const IdentityCatalog& c, std::uint64_t seed) {
    auto rep = make_report("symmetries", c.family);
    rep.seed = seed;
    for (const auto& row : c.symmetries) rep.checks.push_back(check_conjugation(row, seed));
    return rep;
}

VerificationReport verify_quadratic_links() {
    VerificationReport rep;
    rep.suite = "links";
    rep.family = "all";
    for (const auto& row : quadratic_links()) rep.checks.push_back(check_conjugation(row));
    return rep;
}

VerificationReport verify_darboux(const IdentityCatalog& c) {
    auto rep = make_report("darboux", c.family);
    const Family f = c.family;
    const size_t n = family_symbols(f).size();
    std::vector<std::vector<int>> shifts;
    std::vector<int> s(n, -2);
    for (;;) {
        shifts.push_back(s);
        size_t i = 0;
        while (i < n && s[i] == 2) s[i++] = -2;
        if (i == n) break;
        ++s[i];
    }
    for (const auto& row : c.factorizations) {
        CheckResult res;
        res.ref = row.ref;
        res.id = "constants of " + row.ref + " and its partner";
        bool found = false;
        for (const auto& other : c.factorizations) {
            if (!equal(other.weight, row.weight)) continue;
            for (const auto& sh : shifts) {
                if (!equal(shifted(other.minus, f, sh), row.plus) || !equal(shifted(other.plus, f, sh), row.minus))
                    continue;
                FamilyParams p2 = row.params;
                for (size_t i = 0; i < n; ++i) p2.values[i] += MultiPoly(sh[i]);
                const DiffOperator W = DiffOperator::mult(Sym::w, row.weight);
                const DiffOperator F1 = W * make_operator(row.params), F2 = W * make_operator(p2);
                const RatFun c1 = row.constant, c2 = shifted(other.constant, f, sh);
                DiffOperator r1 = row.plus * F1 - (F2 + (c1 - c2)) * row.plus;
                DiffOperator r2 = row.minus * F2 - (F1 + (c2 - c1)) * row.minus;
                res = symbolic_result(res.id, res.ref, r1 + r2);
                res.id = "constants of " + row.ref + " and " + other.ref;
                found = true;
                break;
            }
            if (found) break;
        }
        if (!found) {
            res.status = Status::fail;
            res.error = 1;
            res.detail = "no partner factorization under integer parameter shifts";
        }
        rep.checks.push_back(res);
    }
    return rep;
}

VerificationReport verify_mutations(std::uint64_t seed, int count) {
    VerificationReport rep;
    rep.suite = "mutations";
    rep.family = "all";
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    auto pick = [&](size_t n) { return size_t(rng() % n); };
    auto bump = [&](MultiPoly& p) {
        if (p.is_zero()) {
            p += MultiPoly(1);
            return;
        }
        auto it = p.terms().begin();
        std::advance(it, pick(p.terms().size()));
        p.add_to_term(it->first, GaussRational(1));
    };
    // A single-term operator would only be rescaled, so its order-zero
    // coefficient is bumped instead.
    auto bump_op = [&](DiffOperator& A) {
        auto& cs = A.coeffs_mut();
        if (residue_terms(A) == 1)
            cs[0].num_mut() += MultiPoly(1);
        else
            bump(cs[pick(cs.size())].num_mut());
    };

    std::vector<Family> fams;
    for (Family f : kAllFamilies)
        if (!catalog(f).transmutations.empty()) fams.push_back(f);

    for (int k = 0; k < count; ++k) {
        CheckResult inner;
        std::string what;
        const int kind = int(pick(4));
        if (kind == 3) {
            ConjugationRow row = quadratic_links()[pick(quadratic_links().size())];
            if (pick(2) == 0) {
                bump(row.prefactor.num_mut());
                what = "prefactor";
            } else {
                bump(row.tgt.values[pick(row.tgt.values.size())]);
                what = "target parameter";
            }
            inner = check_conjugation(row);
        } else {
            const IdentityCatalog& c = catalog(fams[pick(fams.size())]);
            if (kind == 0) {
                TransmutationRow row = c.transmutations[pick(c.transmutations.size())];
                if (pick(2) == 0) {
                    bump_op(row.A);
                    what = "operator";
                } else {
                    bump(row.tgt.values[pick(row.tgt.values.size())]);
                    what = "target parameter";
                }
                inner = check_transmutation(row);
            } else if (kind == 1) {
                FactorizationRow row = c.factorizations[pick(c.factorizations.size())];
                switch (pick(3)) {
                    case 0: bump_op(row.minus); what = "left factor"; break;
                    case 1: bump_op(row.plus); what = "right factor"; break;
                    default: bump(row.constant.num_mut()); what = "constant"; break;
                }
                inner = check_factorization(row);
            } else {
                std::vector<ConjugationRow> rows;
                for (const auto& r : c.symmetries)
                    if (r.mode == CheckMode::symbolic) rows.push_back(r);
                ConjugationRow row = rows[pick(rows.size())];
                if (pick(2) == 0) {
                    bump(row.prefactor.num_mut());
                    what = "prefactor";
                } else {
                    bump(row.tgt.values[pick(row.tgt.values.size())]);
                    what = "target parameter";
                }
                inner = check_conjugation(row);
            }
        }
        CheckResult r;
        r.id = "corrupted " + what + " of " + inner.ref + " is rejected";
        r.ref = inner.ref;
        r.kind = CheckMode::symbolic;
        r.status = inner.status == Status::fail ? Status::pass : Status::fail;
        r.error = inner.error;
        r.detail = inner.status == Status::fail ? "" : "corrupted row still verified";
        rep.checks.push_back(r);
    }
    return rep;
}

}  // namespace hyperclass
