// hyperclass command line: eval | verify | catalog | plotdata.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage error,
// 3 domain, degeneracy or convergence error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperclass/catalog.hpp"
#include "hyperclass/integral_reps.hpp"
#include "hyperclass/numerics.hpp"
#include "hyperclass/verify.hpp"

using namespace hyperclass;
using ojson = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ------------------------------------------------------------ number format

// Accepts "re", "re,im", "re+im i", "re-im i" and "im i".
std::optional<cplx> parse_complex(std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
    if (s.empty()) return std::nullopt;
    auto number = [](const std::string& t) -> std::optional<double> {
        if (t.empty()) return std::nullopt;
        char* end = nullptr;
        const double v = std::strtod(t.c_str(), &end);
        if (end != t.c_str() + t.size()) return std::nullopt;
        return v;
    };
    if (const auto comma = s.find(','); comma != std::string::npos) {
        const auto re = number(s.substr(0, comma)), im = number(s.substr(comma + 1));
        if (!re || !im) return std::nullopt;
        return cplx(*re, *im);
    }
    if (s.back() != 'i') {
        const auto re = number(s);
        if (!re) return std::nullopt;
        return cplx(*re);
    }
    s.pop_back();
    // Split before the last sign that is not part of an exponent.
    for (size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            const auto re = number(s.substr(0, k)), im = number(s.substr(k));
            if (!re || !im) return std::nullopt;
            return cplx(*re, *im);
        }
    }
    const auto im = number(s);
    if (!im) return std::nullopt;
    return cplx(0.0, *im);
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

// 15 significant digits, "re±im i"; the imaginary part is omitted when zero.
std::string format_complex(cplx z) {
    if (z.imag() == 0.0) return fmt(z.real());
    return fmt(z.real()) + (std::signbit(z.imag()) ? "-" : "+") + fmt(std::abs(z.imag())) + " i";
}

cplx require_complex(const std::string& what, const std::string& text) {
    const auto z = parse_complex(text);
    if (!z) throw UsageError("cannot parse " + what + " '" + text + "' (expected re, re,im or re+im i)");
    return *z;
}

ojson complex_json(cplx z) { return ojson{{"re", z.real()}, {"im", z.imag()}}; }

// ------------------------------------------------------------ names

Family require_family(const std::string& name) {
    if (auto f = family_from_name(name)) return *f;
    throw UsageError("unknown family '" + name + "' (2f1, gegenbauer, 1f1, 2f0, hermite, 0f1)");
}

const char* lie_name(Sym s) {
    switch (s) {
        case Sym::alpha: return "alpha";
        case Sym::beta: return "beta";
        case Sym::mu: return "mu";
        case Sym::theta: return "theta";
        case Sym::lambda: return "lambda";
        default: return "?";
    }
}

const std::vector<std::string> kParamNames{"a", "b", "c", "alpha", "beta", "mu", "theta", "lambda"};

// Parameter flags shared by eval, verify and plotdata.
struct ParamFlags {
    std::map<std::string, std::string> given;

    void add_to(CLI::App* app) {
        for (const auto& n : kParamNames) app->add_option("--" + n, given[n], "parameter " + n + " (re or re,im)");
    }

    bool any() const {
        for (const auto& [n, v] : given)
            if (!v.empty()) return true;
        return false;
    }

    // Lie parameters of f, from either the classical or the Lie names.
    std::vector<cplx> lie(Family f) const {
        std::vector<std::string> lie_names;
        for (Sym s : family_symbols(f)) lie_names.push_back(lie_name(s));
        const auto& cl_names = classical_names(f);
        auto is_in = [](const std::vector<std::string>& v, const std::string& n) {
            return std::find(v.begin(), v.end(), n) != v.end();
        };
        bool classical = false, liealg = false;
        for (const auto& [n, v] : given) {
            if (v.empty()) continue;
            if (is_in(cl_names, n)) classical = true;
            if (is_in(lie_names, n)) liealg = true;
            if (!is_in(cl_names, n) && !is_in(lie_names, n))
                throw UsageError("--" + n + " is not a parameter of " + family_name(f));
        }
        if (classical && liealg) throw UsageError("mix of classical and Lie parameter names");
        const auto& names = classical ? cl_names : lie_names;
        std::vector<cplx> vals;
        for (const auto& n : names) {
            const auto it = given.find(n);
            if (it == given.end() || it->second.empty()) {
                std::string all;
                for (const auto& m : names) all += " --" + m;
                throw UsageError(std::string(family_name(f)) + " needs" + all);
            }
            vals.push_back(require_complex("--" + n, it->second));
        }
        return classical ? classical_to_lie(f, vals) : vals;
    }
};

std::string lie_str(Family f, const std::vector<cplx>& lie) {
    std::string s;
    const auto& syms = family_symbols(f);
    for (size_t k = 0; k < syms.size(); ++k) s += std::string(k ? ", " : "") + lie_name(syms[k]) + "=" + format_complex(lie[k]);
    return s;
}

Norm require_norm(Family f, const std::string& name) {
    const auto n = norm_from_name(name);
    const auto ok = family_norms(f);
    if (!n || std::find(ok.begin(), ok.end(), *n) == ok.end()) {
        std::string all;
        for (Norm m : ok) all += std::string(" ") + norm_name(m);
        throw UsageError("normalization '" + name + "' not defined for " + family_name(f) + " (" + all + " )");
    }
    return *n;
}

Method require_method(const std::string& name) {
    if (auto m = method_from_name(name)) return *m;
    throw UsageError("unknown method '" + name + "'");
}

void require_format(const std::string& fmt_name, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (fmt_name == a) return;
    throw UsageError("unsupported format '" + fmt_name + "'");
}

// ------------------------------------------------------------ eval

struct EvalConfig {
    std::string family, norm = "plain", method = "automatic", format = "text";
    std::vector<std::string> points;
    ParamFlags params;
};

int cmd_eval(const EvalConfig& cfg) {
    const Family f = require_family(cfg.family);
    require_format(cfg.format, {"text", "json", "csv"});
    const auto lie = cfg.params.lie(f);
    const Norm n = require_norm(f, cfg.norm);
    const Method m = require_method(cfg.method);
    std::vector<cplx> ws;
    for (const auto& p : cfg.points) ws.push_back(require_complex("--w", p));

    ojson results = ojson::array();
    if (cfg.format == "csv") std::cout << "w,value,method,error\n";
    for (cplx w : ws) {
        EvalInfo info;
        const cplx v = eval_function(f, lie, w, n, m, &info);
        if (cfg.format == "text") {
            std::cout << format_complex(v) << "    w=" << format_complex(w) << "  method=" << method_name(info.method)
                      << "  error~" << fmt(info.error) << "\n";
        } else if (cfg.format == "csv") {
            std::cout << format_complex(w) << "," << format_complex(v) << "," << method_name(info.method) << ","
                      << fmt(info.error) << "\n";
        } else {
            results.push_back(ojson{{"w", complex_json(w)},
                                    {"value", complex_json(v)},
                                    {"text", format_complex(v)},
                                    {"method", method_name(info.method)},
                                    {"error", info.error}});
        }
    }
    if (cfg.format == "json") {
        ojson out{{"family", family_name(f)}, {"params", lie_str(f, lie)}, {"norm", norm_name(n)}, {"results", results}};
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

// ------------------------------------------------------------ verify

const std::vector<std::string> kSuites{"transmutations", "factorizations", "symmetries", "quadratic", "recurrences",
                                       "kummer",         "connection",     "integrals",  "residuals", "all"};

struct VerifyConfig {
    std::string suite, family, format = "json", corrupt;
    std::vector<std::string> points;
    std::uint64_t seed = 0;
    ParamFlags params;
};

// Copy of a catalog with one coefficient of the row `loc` bumped by 1.
IdentityCatalog corrupted(const IdentityCatalog& c, const std::string& loc) {
    IdentityCatalog out = c;
    for (auto& r : out.transmutations)
        if (r.ref == loc) {
            r.tgt.values[0] += MultiPoly(1);
            return out;
        }
    for (auto& r : out.factorizations)
        if (r.ref == loc) {
            r.constant.num_mut() += MultiPoly(1);
            return out;
        }
    for (auto& r : out.symmetries)
        if (r.ref == loc) {
            r.tgt.values[0] += MultiPoly(1);
            return out;
        }
    throw UsageError("--corrupt: no transmutation, factorization or symmetry row '" + loc + "'");
}

bool has_connection(Family f) { return f == Family::hyp2f1 || f == Family::confluent || f == Family::zerof1; }

VerificationReport run_verify(const VerifyConfig& cfg) {
    if (std::find(kSuites.begin(), kSuites.end(), cfg.suite) == kSuites.end()) {
        std::string all;
        for (const auto& s : kSuites) all += " " + s;
        throw UsageError("unknown suite '" + cfg.suite + "' (" + all + " )");
    }
    require_format(cfg.format, {"json", "text"});
    std::vector<Family> fams;
    if (cfg.family.empty()) fams.assign(std::begin(kAllFamilies), std::end(kAllFamilies));
    else fams.push_back(require_family(cfg.family));

    const std::string& s = cfg.suite;
    const bool all = s == "all";
    if (!cfg.corrupt.empty() && !(all || s == "transmutations" || s == "factorizations" || s == "symmetries"))
        throw UsageError("--corrupt applies to transmutations, factorizations, symmetries and all");
    std::optional<Family> corrupt_family;
    if (!cfg.corrupt.empty()) {
        corrupt_family = family_from_name(cfg.corrupt.substr(0, cfg.corrupt.find('.')));
        if (!corrupt_family) throw UsageError("--corrupt: bad locator '" + cfg.corrupt + "'");
        corrupted(catalog(*corrupt_family), cfg.corrupt);  // validates the locator up front
    }
    if (cfg.params.any() && s != "kummer") throw UsageError("parameters are only taken by the kummer suite");
    if (!cfg.points.empty() && s != "kummer") throw UsageError("--w is only taken by the kummer suite");
    if (s == "kummer" && !cfg.family.empty() && fams[0] != Family::hyp2f1)
        throw UsageError("Kummer's table belongs to 2f1");
    if (s == "connection" && !cfg.family.empty() && !has_connection(fams[0]))
        throw UsageError("connection formulas exist for 2f1, 1f1 and 0f1");

    VerificationReport rep;
    rep.suite = s;
    rep.family = cfg.family.empty() ? "all" : cfg.family;
    rep.seed = cfg.seed;

    for (Family f : fams) {
        const IdentityCatalog cat =
            corrupt_family == f ? corrupted(catalog(f), cfg.corrupt) : catalog(f);
        if (all || s == "transmutations") rep.append(verify_transmutations(cat));
        if (all || s == "factorizations") rep.append(verify_factorizations(cat));
        if (all) rep.append(verify_darboux(cat));
        if (all || s == "symmetries") rep.append(verify_discrete_symmetries(cat, cfg.seed));
        if (all || s == "recurrences") rep.append(verify_recurrences(f, cfg.seed));
        if ((all || s == "connection") && has_connection(f)) rep.append(verify_connection(f, cfg.seed));
        if (all || s == "integrals") rep.append(verify_integral_reps(f));
        if (all || s == "residuals") rep.append(verify_ode_residuals(f, cfg.seed));
        if (all) rep.append(verify_kernel_mapping(f, cfg.seed));
    }
    if (s == "kummer") {
        if (cfg.params.any() || !cfg.points.empty()) {
            if (cfg.points.size() != 1) throw UsageError("kummer with explicit parameters needs one --w");
            const auto lie = cfg.params.lie(Family::hyp2f1);
            const cplx w = require_complex("--w", cfg.points[0]);
            if (w.imag() <= 0) throw DomainError("Kummer's table is checked for Im w > 0");
            rep.append(verify_kummer_table(lie, w));
        } else {
            rep.append(verify_kummer_table(cfg.seed));
        }
    }
    const bool global = cfg.family.empty();
    if (all && (global || fams[0] == Family::hyp2f1)) rep.append(verify_kummer_table(cfg.seed));
    if ((all && global) || s == "quadratic") rep.append(verify_quadratic_links());
    if (all && global) {
        rep.append(verify_printed_forms());
        rep.append(verify_mutations(cfg.seed, 20));
    }
    rep.suite = s;
    rep.family = cfg.family.empty() ? "all" : cfg.family;
    rep.seed = cfg.seed;
    return rep;
}

int cmd_verify(const VerifyConfig& cfg) {
    const VerificationReport rep = run_verify(cfg);
    if (cfg.format == "json") {
        ojson checks = ojson::array();
        for (const auto& c : rep.checks)
            checks.push_back(ojson{{"id", c.id},
                                   {"paper_ref", c.ref},
                                   {"kind", c.kind == CheckMode::symbolic ? "symbolic" : "numeric"},
                                   {"status", status_name(c.status)},
                                   {"error", c.error}});
        ojson out{{"suite", rep.suite},   {"family", rep.family},   {"seed", rep.seed},      {"checks", checks},
                  {"passed", rep.passed()}, {"failed", rep.failed()}, {"skipped", rep.skipped()}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& c : rep.checks) {
            std::cout << status_name(c.status) << "  " << c.ref << "  " << c.id << "  error=" << fmt(c.error);
            if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
            std::cout << "\n";
        }
        std::cout << rep.suite << " [" << rep.family << "]: " << rep.passed() << " passed, " << rep.failed()
                  << " failed, " << rep.skipped() << " skipped\n";
    }
    return rep.failed() == 0 ? 0 : 1;
}

// ------------------------------------------------------------ catalog

struct CatalogConfig {
    std::string family, format = "text";
};

int cmd_catalog(const CatalogConfig& cfg) {
    const Family f = require_family(cfg.family);
    require_format(cfg.format, {"text", "json"});
    const IdentityCatalog& c = catalog(f);

    ojson tr = ojson::array(), fa = ojson::array(), sy = ojson::array(), rc = ojson::array(), ir = ojson::array();
    for (const auto& r : c.transmutations)
        tr.push_back(ojson{{"location", r.ref},
                           {"operator", r.A.str()},
                           {"weight", r.weight.str()},
                           {"source", r.src.str()},
                           {"target", r.tgt.str()},
                           {"note", r.note}});
    for (const auto& r : c.factorizations)
        fa.push_back(ojson{{"location", r.ref},
                           {"weight", r.weight.str()},
                           {"params", r.params.str()},
                           {"minus", r.minus.str()},
                           {"plus", r.plus.str()},
                           {"constant", r.constant.str()},
                           {"note", r.note}});
    for (const auto& r : c.symmetries)
        sy.push_back(ojson{{"location", r.ref},
                           {"row", r.str()},
                           {"mode", r.mode == CheckMode::symbolic ? "symbolic" : "numeric"},
                           {"note", r.note}});
    for (const auto& r : c.recurrences)
        rc.push_back(ojson{{"location", r.ref},
                           {"operator", r.A.str()},
                           {"coefficient", r.coefficient.str()},
                           {"target", r.tgt.str()},
                           {"norm", norm_name(r.norm)}});
    for (const auto& r : integral_reps(f))
        ir.push_back(ojson{{"location", r.ref},
                           {"integral", r.integral},
                           {"value", r.value},
                           {"conditions", r.conditions},
                           {"note", r.note}});

    if (cfg.format == "json") {
        ojson out{{"family", family_name(f)},
                  {"transmutations", tr},
                  {"factorizations", fa},
                  {"symmetries", sy},
                  {"recurrences", rc},
                  {"integrals", ir}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    auto section = [](const char* title, const ojson& rows, auto&& line) {
        std::cout << title << " (" << rows.size() << ")\n";
        for (const auto& r : rows) std::cout << "  " << r["location"].get<std::string>() << "  " << line(r) << "\n";
        std::cout << "\n";
    };
    auto note = [](const ojson& r) {
        const auto n = r["note"].get<std::string>();
        return n.empty() ? std::string() : "    [" + n + "]";
    };
    std::cout << family_name(f) << "\n\n";
    section("transmutations", tr, [&](const ojson& r) {
        return "A = " + r["operator"].get<std::string>() + ";  " + r["source"].get<std::string>() + " -> " +
               r["target"].get<std::string>() + ";  weight " + r["weight"].get<std::string>() + note(r);
    });
    section("factorizations", fa, [&](const ojson& r) {
        return r["weight"].get<std::string>() + " * F(" + r["params"].get<std::string>() + ") = (" +
               r["minus"].get<std::string>() + ")(" + r["plus"].get<std::string>() + ") + " +
               r["constant"].get<std::string>() + note(r);
    });
    section("symmetries", sy, [&](const ojson& r) {
        return r["row"].get<std::string>() + "  [" + r["mode"].get<std::string>() + "]" + note(r);
    });
    section("recurrences", rc, [&](const ojson& r) {
        return r["operator"].get<std::string>() + " F -> (" + r["coefficient"].get<std::string>() + ") F(" +
               r["target"].get<std::string>() + "), norm " + r["norm"].get<std::string>();
    });
    section("integrals", ir, [&](const ojson& r) {
        return r["integral"].get<std::string>() + " = " + r["value"].get<std::string>() + ",  " +
               r["conditions"].get<std::string>() + note(r);
    });
    return 0;
}

// ------------------------------------------------------------ plotdata

struct PlotConfig {
    std::string family, norm = "plain", method = "automatic", from, to, format = "csv";
    int n = 101;
    ParamFlags params;
};

int cmd_plotdata(const PlotConfig& cfg) {
    const Family f = require_family(cfg.family);
    require_format(cfg.format, {"csv", "json"});
    const auto lie = cfg.params.lie(f);
    const Norm nrm = require_norm(f, cfg.norm);
    const Method m = require_method(cfg.method);
    if (cfg.n < 1) throw UsageError("--n must be at least 1");
    const cplx a = require_complex("--from", cfg.from), b = require_complex("--to", cfg.to);

    ojson rows = ojson::array();
    if (cfg.format == "csv") std::cout << "w_re,w_im,value_re,value_im\n";
    for (int k = 0; k < cfg.n; ++k) {
        const cplx w = cfg.n == 1 ? a : a + (b - a) * (double(k) / (cfg.n - 1));
        const cplx v = eval_function(f, lie, w, nrm, m);
        if (cfg.format == "csv")
            std::cout << fmt(w.real()) << "," << fmt(w.imag()) << "," << fmt(v.real()) << "," << fmt(v.imag()) << "\n";
        else
            rows.push_back(ojson{{"w", complex_json(w)}, {"value", complex_json(v)}});
    }
    if (cfg.format == "json")
        std::cout << ojson{{"family", family_name(f)}, {"params", lie_str(f, lie)}, {"samples", rows}}.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hypergeometric-class equations: evaluation and identity verification"};
    app.require_subcommand(1);

    EvalConfig ec;
    auto* eval = app.add_subcommand("eval", "evaluate the distinguished function of a family");
    eval->add_option("family", ec.family, "2f1 | gegenbauer | 1f1 | 2f0 | hermite | 0f1")->required();
    ec.params.add_to(eval);
    eval->add_option("--w", ec.points, "evaluation point(s)")->required();
    eval->add_option("--norm", ec.norm, "normalization: plain, bold, I, II, 0, tilde");
    eval->add_option("--method", ec.method,
                     "automatic, series, pfaff, connection, continuation, asymptotic, quadrature");
    eval->add_option("--format", ec.format, "text | json | csv");

    VerifyConfig vc;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", vc.suite,
                       "transmutations | factorizations | symmetries | quadratic | recurrences | kummer | "
                       "connection | integrals | residuals | all")
        ->required();
    verify->add_option("--family", vc.family, "restrict to one family");
    verify->add_option("--seed", vc.seed, "seed for sampled points (default 0)");
    verify->add_option("--format", vc.format, "json | text");
    verify->add_option("--w", vc.points, "kummer: the sample point (Im w > 0)");
    verify->add_option("--corrupt", vc.corrupt, "bump one coefficient of this catalog row before verifying");
    vc.params.add_to(verify);

    CatalogConfig cc;
    auto* cat = app.add_subcommand("catalog", "list the identity rows of a family");
    cat->add_option("family", cc.family)->required();
    cat->add_option("--format", cc.format, "text | json");

    PlotConfig pc;
    auto* plot = app.add_subcommand("plotdata", "sample a function on a segment");
    plot->add_option("family", pc.family)->required();
    pc.params.add_to(plot);
    plot->add_option("--from", pc.from, "segment start")->required();
    plot->add_option("--to", pc.to, "segment end")->required();
    plot->add_option("--n", pc.n, "number of samples");
    plot->add_option("--norm", pc.norm);
    plot->add_option("--method", pc.method);
    plot->add_option("--format", pc.format, "csv | json");

    double tol_scale = 0;
    app.add_option("--tol-scale", tol_scale, "multiply every numeric tolerance (overrides HYPERCLASS_TOL)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (tol_scale > 0) setenv("HYPERCLASS_TOL", fmt(tol_scale).c_str(), 1);

    try {
        if (*eval) return cmd_eval(ec);
        if (*verify) return cmd_verify(vc);
        if (*cat) return cmd_catalog(cc);
        if (*plot) return cmd_plotdata(pc);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ConvergenceError& e) {
        std::cerr << "no convergence: " << e.what() << " (best " << format_complex(e.best) << ", error ~"
                  << fmt(e.estimate) << ")\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
