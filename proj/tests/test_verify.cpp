#include "hlrook/verify.hpp"

#include "hlrook/json_io.hpp"

#include <doctest.h>

using namespace hlrook;

TEST_CASE("main check on the running example and complete graphs") {
    CHECK(check_main(DyckPath::parse("2,2,4,4,5")).verified());
    for (int n = 1; n <= 5; ++n) {
        CHECK(check_main(DyckPath::complete(n)).verified());
    }
    for (int n = 0; n <= 4; ++n) {
        for (const DyckPath& p : dyck_paths(n)) {
            CHECK(check_main(p).verified());
        }
    }
}

TEST_CASE("mutation: the ungated rule yields a counterexample") {
    const CheckReport r = check_main(DyckPath::parse("2,2,4,4,5"), FreeCellRule::ungated);
    CHECK_FALSE(r.verified());
    CHECK(r.identity == "main");
    const SymFunc lhs = symfunc_from_json(r.lhs);
    const SymFunc rhs = symfunc_from_json(r.rhs);
    CHECK(lhs != rhs);
}

TEST_CASE("modular law") {
    const ModularTriple t{DyckPath::parse("2,2,3"), DyckPath::parse("2,3,3"), DyckPath::parse("3,3,3"), 2, 1};
    const auto reports = check_modular_triple(t, ModularLevel::r_poly);
    CHECK(reports.size() == 3);
    for (const auto& r : reports) {
        CHECK(r.verified());
    }
    CHECK(check_modular_triple(t, ModularLevel::chromatic).at(0).verified());
    for (int n = 2; n <= 5; ++n) {
        for (const auto& r : check_modular(n, ModularLevel::r_poly)) {
            CHECK(r.verified());
        }
    }
    CHECK(check_modular(1, ModularLevel::r_poly).empty());
}

TEST_CASE("multiplicativity") {
    const auto reports = check_multiplicativity(DyckPath::parse("1"), 1, true);
    CHECK(reports.size() == 3);
    for (const auto& r : reports) {
        CHECK(r.verified());
    }
    CHECK(reports.back().identity == "mult-function");
    CHECK_THROWS_AS(check_multiplicativity(DyckPath::parse("1"), 0), std::invalid_argument);
}

TEST_CASE("LLT, principal specialization and the q = 1 formula") {
    CHECK(check_llt(DyckPath::parse("1")).verified());
    CHECK(check_llt(DyckPath::parse("2,2")).verified());
    const auto ps = check_principal(DyckPath::parse("2,2"), 4);
    CHECK(ps.size() == 5);
    for (const auto& r : ps) {
        CHECK(r.verified());
    }
    CHECK(check_monomial_at_one(DyckPath::parse("2,2,4,4,5")).verified());
}

TEST_CASE("sweep ordering and counts") {
    const SweepResult main4 = sweep(4, {Identity::main});
    CHECK(main4.reports.size() == 23);
    CHECK(main4.all_verified());
    CHECK(main4.reports.front().instance == "heights=-");
    CHECK(sweep(4, {}).reports.empty());

    const SweepResult serial = sweep(3, all_identities());
    CHECK(serial.all_verified());
    SweepOptions parallel;
    parallel.jobs = 4;
    const SweepResult threaded = sweep(3, all_identities(), parallel);
    REQUIRE(threaded.reports.size() == serial.reports.size());
    for (std::size_t i = 0; i < serial.reports.size(); ++i) {
        CHECK(threaded.reports[i].identity == serial.reports[i].identity);
        CHECK(threaded.reports[i].instance == serial.reports[i].instance);
    }
}

TEST_CASE("sweep keeps the first counterexample per identity") {
    SweepOptions mutated;
    mutated.rule = FreeCellRule::ungated;
    const SweepResult r = sweep(5, {Identity::main}, mutated);
    CHECK_FALSE(r.all_verified());
    REQUIRE(r.first_counterexample.contains("main"));
    const auto first = std::find_if(r.reports.begin(), r.reports.end(),
                                    [](const CheckReport& c) { return !c.verified(); });
    CHECK(r.first_counterexample.at("main").instance == first->instance);
}

TEST_CASE("identity names") {
    for (Identity id : all_identities()) {
        CHECK(parse_identity(identity_name(id)) == id);
    }
    CHECK_THROWS_AS(parse_identity("nope"), std::invalid_argument);
}
