#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "qrr/catalog.hpp"
#include "qrr/error.hpp"
#include "qrr/families.hpp"

using namespace qrr;

namespace {

/// Applies a marker/variable substitution to a series: q -> q^qmul,
/// x -> sx * x^{xx} y^{xy} q^{qx/4}, y -> sy * x^{yx} y^{yy} q^{qy/4}.
struct Subst {
    int qmul = 1;
    int xx = 1, xy = 0, qx = 0, sx = 1;
    int yx = 0, yy = 1, qy = 0, sy = 1;
};

QSeries substitute(const QSeries& src, const Subst& s, int order) {
    QSeries out = QSeries::zero(order);
    for (int e = 0; e <= 4 * src.order(); ++e) {
        for (const auto& [key, c] : src.coeff_q(e).terms()) {
            const auto [a, b] = key;
            const long ne = 1L * s.qmul * e + 1L * s.qx * a + 1L * s.qy * b;
            if (ne > 4L * order)
                continue;
            Int nc = c;
            if (s.sx < 0 && a % 2)
                nc = -nc;
            if (s.sy < 0 && b % 2)
                nc = -nc;
            PolyXY t = out.coeff_q(static_cast<int>(ne));
            t.add_term(s.xx * a + s.yx * b, s.xy * a + s.yy * b, nc);
            out.set_coeff_q(static_cast<int>(ne), t);
        }
    }
    return out;
}

} // namespace

TEST_CASE("catalog lists exactly the registered identities") {
    const std::vector<std::string> listed = catalog_list();
    const std::set<std::string> ids(listed.begin(), listed.end());
    const std::set<std::string> expect = {
        "RR1",  "RR2",  "ROG1",   "ROG2",   "HKX1",   "HKX2", "HKX3", "LW",
        "CY1",  "CY2",  "CY3",    "CY4",    "PCY1",   "PCY2", "DOGF", "WYR",
        "MAIN1", "MAIN2", "HKX2PC", "HKX3PC", "LWGENY", "LWGENK", "WZ"};
    CHECK(ids == expect);
    CHECK(ids.size() == 23);
    CHECK(find_identity("LW").multivariate);
    CHECK(!find_identity("RR1").multivariate);
    CHECK(find_identity("LWGENK").params == std::vector<int>{1, 2, 3});
    CHECK_THROWS_WITH_AS(find_identity("BOGUS"),
                         doctest::Contains("UnknownIdentity"), Error);
}

TEST_CASE("spot coefficients") {
    // q^9 coefficient of both sides of the first identity is 5
    CHECK(eval_sum_side("RR1", 9).coeff(9) == PolyXY::constant(5));
    CHECK(eval_product_side("RR1", 9).coeff(9) == PolyXY::constant(5));
    // both sides of every identity share the same constant term; it is 1
    // except for the three signed parent forms that start with a marker
    // polynomial
    for (const IdentityEntry& e : catalog())
        for (int p : e.params) {
            const PolyXY c0 = eval_sum_side(e.id, 4, p).coeff(0);
            CHECK(eval_product_side(e.id, 4, p).coeff(0) == c0);
            if (e.id != "HKX2" && e.id != "HKX3" && e.id != "WYR")
                CHECK(c0 == PolyXY::constant(1));
        }
    // x^2 q^4 on the single-sum side of the first parameterized entry
    CHECK(eval_product_side("PCY1", 4).coeff(4).coeff(2, 0) == 1);
}

TEST_CASE("quarter-grid cancellation") {
    for (const char* id : {"CY1", "CY2", "CY3", "CY4"}) {
        const QSeries s = eval_sum_side(id, 12);
        CHECK(s.is_integral_grid());
        for (int e = 0; e <= 4 * s.order(); ++e)
            if (e % 4 != 0)
                CHECK(s.coeff_q(e).is_zero());
    }
}

TEST_CASE("every identity verifies at moderate order") {
    for (const IdentityEntry& e : catalog()) {
        const int N = e.multivariate ? 14 : 20;
        const VerificationReport r = verify_identity(e.id, N);
        INFO(e.id);
        CHECK(r.equal);
    }
}

TEST_CASE("a wrong pairing is detected") {
    const QSeries lhs = eval_sum_side("RR1", 10);
    const QSeries rhs = eval_product_side("RR2", 10);
    const auto d = QSeries::first_difference(lhs, rhs);
    REQUIRE(d.has_value());
    CHECK(d->quarter == 4); // q^1: 1 vs 0
    CHECK(d->lhs == 1);
    CHECK(d->rhs == 0);
}

TEST_CASE("substitution coherence") {
    const int N = 12;
    // (x -> xyq, y -> yq, q -> q^2) carries the two-parameter parent onto
    // the strict-odd double sum.
    {
        Subst s;
        s.qmul = 2;
        s.xx = 1;
        s.xy = 1;
        s.qx = 4;
        s.yy = 1;
        s.qy = 4;
        const QSeries lhs = substitute(eval_sum_side("WYR", 2 * N), s, N);
        CHECK(lhs.equal_up_to_order(eval_sum_side("MAIN1", N)));
        const QSeries rhs = substitute(eval_product_side("WYR", 2 * N), s, N);
        CHECK(rhs.equal_up_to_order(eval_product_side("MAIN1", N)));
    }
    // (x -> -x, y -> -yq) clears the signs of the three-index sum.
    {
        Subst s;
        s.sx = -1;
        s.sy = -1;
        s.qy = 4;
        const QSeries lhs = substitute(eval_sum_side("HKX2", N), s, N);
        CHECK(lhs.equal_up_to_order(eval_sum_side("HKX2PC", N)));
        const QSeries rhs = substitute(eval_product_side("HKX2", N), s, N);
        CHECK(rhs.equal_up_to_order(eval_product_side("HKX2PC", N)));
    }
    // (x -> -xq, then multiply by (q;q)oo) turns the quotient identity
    // into the tail-product identity.
    {
        Subst s;
        s.sx = -1;
        s.qx = 4;
        const QSeries eulerInf = pochhammer_infinite(PolyXY::constant(1), 4, 4, N);
        const QSeries lhs =
            substitute(eval_sum_side("HKX3", N), s, N) * eulerInf;
        CHECK(lhs.equal_up_to_order(eval_sum_side("HKX3PC", N)));
        const QSeries rhs =
            substitute(eval_product_side("HKX3", N), s, N) * eulerInf;
        CHECK(rhs.equal_up_to_order(eval_product_side("HKX3PC", N)));
    }
    // y = 1 specialization of the y-refined variant gives the x-marked sum.
    {
        Subst s;
        s.yx = 0;
        s.yy = 0; // y -> 1
        const QSeries lhs = substitute(eval_sum_side("LWGENY", N), s, N);
        CHECK(lhs.equal_up_to_order(eval_sum_side("LW", N)));
        const QSeries rhs = substitute(eval_product_side("LWGENY", N), s, N);
        CHECK(rhs.equal_up_to_order(eval_product_side("LW", N)));
    }
    // modulus parameter 2 of the k-family gives the same identity.
    {
        CHECK(eval_sum_side("LWGENK", N, 2)
                  .equal_up_to_order(eval_sum_side("LW", N)));
        CHECK(eval_product_side("LWGENK", N, 2)
                  .equal_up_to_order(eval_product_side("LW", N)));
    }
}

TEST_CASE("verification reports carry the discrepancy") {
    const VerificationReport ok = verify_identity("WZ", 16);
    CHECK(ok.equal);
    CHECK(!ok.firstDiscrepancy.has_value());
}
