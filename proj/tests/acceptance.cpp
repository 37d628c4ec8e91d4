// One PASS/FAIL line per acceptance criterion; exit 0 iff every line passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <string>

#include "hyperclass/catalog.hpp"
#include "hyperclass/numerics.hpp"
#include "hyperclass/verify.hpp"

using namespace hyperclass;

namespace {

const Family kCatalogFamilies[] = {Family::hyp2f1, Family::gegenbauer, Family::confluent, Family::hermite,
                                   Family::zerof1};

int failures = 0;

void line(int id, bool ok, const std::string& what) {
    std::printf("%s  %2d  %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
    if (!ok) ++failures;
}

double seconds(const std::function<void()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string time_str(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", s);
    return buf;
}

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1e", x);
    return buf;
}

double worst_error(const VerificationReport& r) {
    double w = 0;
    for (const auto& c : r.checks)
        if (c.kind == CheckMode::numeric) w = std::max(w, c.error);
    return w;
}

// "2f1 12/12, gegenbauer 8/8, ..." with a pass flag: every family has the
// expected number of rows and all pass.
struct Tally {
    bool ok = true;
    std::string text;

    void add(const std::string& name, const VerificationReport& r, int expected) {
        const int total = int(r.checks.size());
        ok = ok && total == expected && r.passed() == expected;
        if (!text.empty()) text += ", ";
        text += name + " " + std::to_string(r.passed()) + "/" + std::to_string(total);
        if (total != expected) text += " (expected " + std::to_string(expected) + ")";
    }
};

const std::map<Family, int> kRowCounts{{Family::hyp2f1, 12},
                                       {Family::gegenbauer, 8},
                                       {Family::confluent, 6},
                                       {Family::hermite, 4},
                                       {Family::zerof1, 2}};

}  // namespace

int main() {
    // 1. Transmutations, exact.
    {
        Tally t;
        const double s = seconds([&] {
            for (Family f : kCatalogFamilies) t.add(family_name(f), verify_transmutations(catalog(f)), kRowCounts.at(f));
        });
        line(1, t.ok && s < 10, "symbolic transmutations: " + t.text + "; " + time_str(s) + " (limit 10 s)");
    }

    // 2. Factorizations and the Darboux constant shifts, exact.
    {
        Tally t, d;
        for (Family f : kCatalogFamilies) {
            t.add(family_name(f), verify_factorizations(catalog(f)), kRowCounts.at(f));
            d.add(family_name(f), verify_darboux(catalog(f)), kRowCounts.at(f));
        }
        line(2, t.ok && d.ok, "symbolic factorizations: " + t.text + "; Darboux shifts: " + d.text);
    }

    // 3. Discrete symmetries: exact, except four algebraic Gegenbauer rows at 1e-9.
    {
        Tally t;
        const std::map<Family, int> counts{{Family::hyp2f1, 24},
                                           {Family::gegenbauer, 8},
                                           {Family::confluent, 4},
                                           {Family::hermite, 4},
                                           {Family::zerof1, 1}};
        int geg_exact = 0, geg_numeric = 0;
        double geg_err = 0;
        for (Family f : kCatalogFamilies) {
            const auto r = verify_discrete_symmetries(catalog(f));
            t.add(family_name(f), r, counts.at(f));
            if (f != Family::gegenbauer) continue;
            for (const auto& c : r.checks) {
                if (c.kind == CheckMode::symbolic) {
                    geg_exact += c.status == Status::pass;
                } else {
                    geg_numeric += c.status == Status::pass;
                    geg_err = std::max(geg_err, c.error);
                }
            }
        }
        const bool ok = t.ok && geg_exact == 4 && geg_numeric == 4 && geg_err <= 1e-9;
        line(3, ok,
             "discrete symmetries: " + t.text + " (gegenbauer " + std::to_string(geg_exact) + " exact + " +
                 std::to_string(geg_numeric) + " numeric, max error " + sci(geg_err) + " <= 1e-9)");
    }

    // 4. Quadratic links, exact.
    {
        const auto r = verify_quadratic_links();
        bool exact = true;
        for (const auto& c : r.checks) exact = exact && c.kind == CheckMode::symbolic;
        const bool ok = r.checks.size() == 6 && r.passed() == 6 && exact;
        line(4, ok, "quadratic links: " + std::to_string(r.passed()) + "/" + std::to_string(r.checks.size()) +
                        " exact (expected 6)");
    }

    // 5. Kummer's table: 36 agreements at each of 5 samples, 1e-10.
    {
        const auto r = verify_kummer_table(0);
        const double e = worst_error(r);
        const bool ok = r.checks.size() == 180 && r.passed() == 180 && e <= 1e-10;
        line(5, ok, "Kummer's table: " + std::to_string(r.passed()) + "/180 pairwise agreements at 5 samples, max error " +
                        sci(e) + " <= 1e-10");
    }

    // 6. Recurrences, 5 points per row, 1e-10.
    {
        Tally t;
        double e = 0;
        bool five = true;
        for (Family f : kCatalogFamilies) {
            const auto r = verify_recurrences(f);
            t.add(family_name(f), r, kRowCounts.at(f));
            e = std::max(e, worst_error(r));
            for (const auto& c : r.checks) five = five && c.samples >= 5;
        }
        line(6, t.ok && five && e <= 1e-10,
             "recurrences: " + t.text + " at 5 points each, max error " + sci(e) + " <= 1e-10");
    }

    // 7. Connection formulas.
    {
        const auto a = verify_connection(Family::hyp2f1), b = verify_connection(Family::confluent),
                   c = verify_connection(Family::zerof1);
        bool ten = true;
        for (const auto* r : {&a, &b, &c})
            for (const auto& ch : r->checks)
                if (ch.id.find("solutions") == 0) ten = ten && ch.samples == 10;
        const bool ok = a.checks.size() == 3 && a.passed() == 3 && b.checks.size() == 3 && b.passed() == 3 &&
                        c.checks.size() == 1 && c.passed() == 1 && ten;
        line(7, ok,
             "connection: 2f1 vector identity at 10 points " + sci(a.checks[0].error) + " <= 1e-9, det " +
                 sci(a.checks[1].error) + " <= 1e-12, inverse " + sci(a.checks[2].error) + " <= 1e-10; 1f1 " +
                 sci(b.checks[0].error) + ", det " + sci(b.checks[1].error) + ", inverse " + sci(b.checks[2].error) +
                 " (corrected closed forms); 0f1 " + sci(c.checks[0].error));
        // The printed confluent inverse and determinant are reported, not counted.
        const auto printed = verify_printed_forms();
        for (const auto& ch : printed.checks)
            if (ch.ref == "1f1.connection")
                std::printf("INFO      known misprint: printed confluent %s: %s\n",
                            ch.id.find("det") != std::string::npos ? "det" : "inverse", ch.detail.c_str());
    }

    // 8. Integral representations, >= 3 samples per row, 1e-7, under 60 s.
    {
        Tally t;
        bool three = true;
        double e = 0;
        const std::map<Family, int> counts{{Family::hyp2f1, 10},
                                           {Family::gegenbauer, 8},
                                           {Family::confluent, 9},
                                           {Family::hermite, 4},
                                           {Family::zerof1, 7}};
        const double s = seconds([&] {
            for (Family f : kCatalogFamilies) {
                const auto r = verify_integral_reps(f);
                t.add(family_name(f), r, counts.at(f));
                e = std::max(e, worst_error(r));
                for (const auto& c : r.checks) three = three && c.samples >= 3;
            }
        });
        line(8, t.ok && three && e <= 1e-7 && s < 60,
             "integral representations: " + t.text + ", >= 3 samples each, max error " + sci(e) + " <= 1e-7; " +
                 time_str(s) + " (limit 60 s)");
    }

    // 9. ODE residuals of the standard solutions at 20 points, 1e-9.
    {
        Tally t;
        const std::map<Family, int> counts{{Family::hyp2f1, 6},
                                           {Family::gegenbauer, 4},
                                           {Family::confluent, 4},
                                           {Family::hermite, 2},
                                           {Family::zerof1, 3}};
        bool twenty = true;
        double e = 0;
        for (Family f : kCatalogFamilies) {
            const auto r = verify_ode_residuals(f);
            t.add(family_name(f), r, counts.at(f));
            e = std::max(e, worst_error(r));
            for (const auto& c : r.checks) twenty = twenty && c.samples == 20;
        }
        line(9, t.ok && twenty && e <= 1e-9,
             "ODE residuals: " + t.text + " solutions at 20 points, max residual " + sci(e) + " <= 1e-9");
    }

    // 10. Mutation sensitivity.
    {
        const auto r = verify_mutations(0, 20);
        line(10, r.checks.size() == 20 && r.passed() == 20,
             "mutation sensitivity: " + std::to_string(r.passed()) + "/20 corrupted rows rejected");
    }

    // 11. Spot anchors.
    {
        const double e1 = std::abs(hyp2f1(1.0, 1.0, 2.0, 0.5) - 2.0 * std::log(2.0)) / (2.0 * std::log(2.0));
        const double e2 = std::abs(gamma(cplx(0.5)) - std::sqrt(std::numbers::pi)) / std::sqrt(std::numbers::pi);
        line(11, e1 <= 1e-12 && e2 <= 1e-13,
             "anchors: 2F1(1,1;2;1/2) = 2 ln 2 error " + sci(e1) + " <= 1e-12; Gamma(1/2) = sqrt(pi) error " +
                 sci(e2) + " <= 1e-13");
    }

    std::printf("%s: %d of 11 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
