#include "doctest.h"
#include "hyperclass/parse.hpp"
#include "hyperclass/verify.hpp"

using namespace hyperclass;

namespace {

void require_all_pass(const VerificationReport& r) {
    for (const auto& c : r.checks) {
        INFO(r.suite << " " << c.ref << ": " << c.id << " " << c.detail);
        CHECK(c.status == Status::pass);
    }
}

}  // namespace

TEST_CASE("transmutation relations hold exactly") {
    for (Family f : kAllFamilies) require_all_pass(verify_transmutations(catalog(f)));
}

TEST_CASE("factorizations hold exactly") {
    for (Family f : kAllFamilies) require_all_pass(verify_factorizations(catalog(f)));
}

TEST_CASE("discrete symmetries hold") {
    for (Family f : kAllFamilies) require_all_pass(verify_discrete_symmetries(catalog(f)));
}

TEST_CASE("quadratic and Moebius links hold exactly") { require_all_pass(verify_quadratic_links()); }

TEST_CASE("factorization constants pair up") {
    for (Family f : kAllFamilies) require_all_pass(verify_darboux(catalog(f)));
}

TEST_CASE("corrupted rows are rejected") {
    auto r = verify_mutations(0, 60);
    CHECK(r.checks.size() == 60);
    require_all_pass(r);
}

TEST_CASE("rows kept in their printed form fail") {
    size_t n = 0;
    for (Family f : kAllFamilies) {
        for (const auto& row : catalog(f).printed_transmutations) {
            INFO(row.ref);
            CHECK(check_transmutation(row).status == Status::fail);
            ++n;
        }
        for (const auto& row : catalog(f).printed_factorizations) {
            INFO(row.ref);
            CHECK(check_factorization(row).status == Status::fail);
            ++n;
        }
    }
    CHECK(n == 11);
}

TEST_CASE("row checks on hand-built examples") {
    TransmutationRow good{"example", DiffOperator::d(Sym::w), RatFun(1), FamilyParams::symbolic(Family::hyp2f1),
                          FamilyParams::parse(Family::hyp2f1, {"alpha+1", "beta+1", "mu"}), ""};
    CHECK(check_transmutation(good).status == Status::pass);
    auto bad = good;
    bad.tgt = FamilyParams::parse(Family::hyp2f1, {"alpha+1", "beta", "mu"});
    auto r = check_transmutation(bad);
    CHECK(r.status == Status::fail);
    CHECK(r.error > 0);

    TransmutationRow conf{"example", parse_operator("D - 1"), RatFun(1), FamilyParams::symbolic(Family::confluent),
                          FamilyParams::parse(Family::confluent, {"theta-1", "alpha+1"}), ""};
    CHECK(check_transmutation(conf).status == Status::pass);

    FactorizationRow herm{"example", RatFun(1), FamilyParams::symbolic(Family::hermite), parse_operator("D - 2*w"),
                          parse_operator("D"), parse_ratfun("-2*lambda - 1")};
    CHECK(check_factorization(herm).status == Status::pass);
}
