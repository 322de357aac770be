#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "qrr/error.hpp"
#include "qrr/harness.hpp"

using namespace qrr;

TEST_CASE("involution suites pass at moderate bounds") {
    const SuiteResult phi = check_involution("phi", 18);
    CHECK(phi.passed);
    CHECK(!phi.firstFailure.has_value());
    CHECK(phi.fixedByWeight.at(18) == 5);
    CHECK(phi.pairsByWeight.at(18) == 26);
    CHECK(phi.fixedPoints > 0);
    CHECK(phi.domainSize ==
          phi.fixedPoints + 2 * phi.cancellingPairs);

    const SuiteResult iota = check_involution("iota", 10);
    CHECK(iota.passed);
    CHECK(iota.fixedByWeight.at(9) == 8);
    CHECK(iota.pairsByWeight.at(9) == 38);
    CHECK(iota.domainSize == iota.fixedPoints + 2 * iota.cancellingPairs);

    const SuiteResult p1 = check_involution("psi1", 40);
    CHECK(p1.passed);
    const SuiteResult p2 = check_involution("psi2", 40);
    CHECK(p2.passed);

    CHECK_THROWS_WITH_AS(check_involution("alpha", 10),
                         doctest::Contains("UnknownMap"), Error);
}

TEST_CASE("bijection suites pass at moderate bounds") {
    BijectionBounds a;
    a.maxWeight = 24;
    a.shapeBound = 4;
    CHECK(check_bijection("alpha", a).passed);

    BijectionBounds t;
    t.maxWeight = 20;
    t.shapeBound = 3;
    CHECK(check_bijection("tau", t).passed);

    BijectionBounds th;
    th.maxWeight = 20;
    CHECK(check_bijection("theta1", th).passed);
    CHECK(check_bijection("theta2", th).passed);

    CHECK_THROWS_WITH_AS(check_bijection("phi", th),
                         doctest::Contains("UnknownMap"), Error);
}

TEST_CASE("generating-function cross checks") {
    CHECK(cross_check_gf({FamilyKind::Do, -1, -1}, "DOGF", 14).passed);
    CHECK(cross_check_gf({FamilyKind::R, -1, -1}, "RR1", 16).passed);
    CHECK(cross_check_gf({FamilyKind::R, -1, -1}, "RR2", 16).passed);
    CHECK(cross_check_gf({FamilyKind::D, -1, -1}, "HKX3PC", 14).passed);
    CHECK_THROWS_WITH_AS(cross_check_gf({FamilyKind::D, -1, -1}, "RR1", 10),
                         doctest::Contains("UnregisteredCrossCheck"), Error);
}

TEST_CASE("cancellation tables") {
    const InvolutionTable t = involution_table("phi", 18);
    CHECK(t.fixedRows.size() == 5);
    CHECK(t.pairRows.size() == 26);
    // canonical order: ascending first component
    for (size_t i = 1; i < t.fixedRows.size(); ++i)
        CHECK(t.fixedRows[i - 1] < t.fixedRows[i]);

    const std::string zero = emit_table("phi", 0);
    CHECK(zero == "map phi, total weight 0\n"
                  "fixed points (1):\n"
                  "  (ε | ε)\n"
                  "cancelling pairs (0):\n");

    // byte-stable across repeated calls
    CHECK(emit_table("iota", 9) == emit_table("iota", 9));
    CHECK(emit_table("psi1", 12) == emit_table("psi1", 12));
}

TEST_CASE("result formatting") {
    const SuiteResult r = check_involution("phi", 8);
    const std::string line = format_result(r);
    CHECK(line.find("involution phi: PASS") == 0);
    CHECK(line.find("domain=") != std::string::npos);
    CHECK(line.find("fixed=") != std::string::npos);
}
