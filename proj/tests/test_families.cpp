#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qrr/catalog.hpp"
#include "qrr/error.hpp"
#include "qrr/families.hpp"

using namespace qrr;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
}

TEST_CASE("family names parse and render") {
    const FamilyId f = parse_family("AI_2");
    CHECK(f.kind == FamilyKind::AI);
    CHECK(f.a == 2);
    CHECK(family_name(parse_family("Do")) == "Do");
    CHECK(family_name(parse_family("AIIR_1_2")) == "AIIR_1_2");
    CHECK_THROWS_AS(parse_family("NOPE"), Error);
}

TEST_CASE("membership predicates") {
    CHECK(is_member({FamilyKind::AV, 1, -1}, P({1, 3})));
    CHECK(is_member({FamilyKind::AV, 2, -1}, P({2, 4, 6})));
    CHECK(!is_member({FamilyKind::AV, 1, -1}, P({1, 2})));
    CHECK(is_member({FamilyKind::RI, 1, -1}, P({4})));
    CHECK(is_member({FamilyKind::RI, -1, -1}, P({4, 12})));
    CHECK(!is_member({FamilyKind::RI, -1, -1}, P({4, 8})));
    CHECK(is_member({FamilyKind::RII, 1, -1}, P({8})));
    CHECK(is_member({FamilyKind::R, 0, 0}, P({1, 3, 5})));
    CHECK(!is_member({FamilyKind::R, 0, 0}, P({1, 2})));
    CHECK(is_member({FamilyKind::De, 0, 0}, P({2, 4})));
    CHECK(!is_member({FamilyKind::De, 0, 0}, P({2, 3})));

    // label constraints
    const LabeledPartition ok(P({1, 5}), {Label::XY, Label::Y});
    CHECK(is_member({FamilyKind::AI, 2, -1}, ok));
    const LabeledPartition tight(P({1, 3}), {Label::XY, Label::Y});
    CHECK(!is_member({FamilyKind::AI, 2, -1}, tight)); // xy needs gap >= 4
    const LabeledPartition topXY(P({1, 3}), {Label::Y, Label::XY});
    CHECK(is_member({FamilyKind::AI, 2, -1}, topXY)); // top part unconstrained

    const LabeledPartition a3(P({2, 3}), {Label::X, Label::None});
    CHECK(is_member({FamilyKind::AIII, 1, 1}, a3));
    const LabeledPartition a3bad(P({2, 3}), {Label::None, Label::X});
    CHECK(!is_member({FamilyKind::AIII, 1, 1}, a3bad)); // unlabeled needs gap >= 2
}

TEST_CASE("bounded enumeration") {
    int exactly9 = 0;
    for (const Partition& p : enumerate_plain({FamilyKind::R, 0, 0}, 9))
        if (p.weight() == 9)
            ++exactly9;
    CHECK(exactly9 == 5); // 9, 1+8, 2+7, 3+6, 1+3+5

    const auto empties = enumerate_plain({FamilyKind::Do, 0, 0}, 0);
    REQUIRE(empties.size() == 1);
    CHECK(empties[0].empty());

    std::set<Partition> de6;
    for (const Partition& p : enumerate_plain({FamilyKind::De, 0, 0}, 6))
        if (p.weight() == 6)
            de6.insert(p);
    CHECK(de6 == std::set<Partition>{P({6}), P({2, 4})});

    // no duplicates, all members, weights within bound
    const auto ds = enumerate_plain({FamilyKind::D, 0, 0}, 12);
    std::set<Partition> seen;
    for (const Partition& p : ds) {
        CHECK(p.weight() <= 12);
        CHECK(is_member({FamilyKind::D, 0, 0}, p));
        CHECK(seen.insert(p).second);
    }
}

TEST_CASE("labeled enumeration honours the label constraints") {
    for (const LabeledPartition& lp :
         enumerate_labeled({FamilyKind::AI, 2, -1}, 12)) {
        CHECK(is_member({FamilyKind::AI, 2, -1}, lp));
    }
    for (const LabeledPartition& lp :
         enumerate_labeled({FamilyKind::AIIR, 1, 1}, 12)) {
        CHECK(is_member({FamilyKind::AIIR, 1, 1}, lp));
    }
    // count check: one part, weight w, two label choices unless constrained
    const auto a4 = enumerate_labeled({FamilyKind::AIV, 1, -1}, 5);
    CHECK(a4.size() == 3); // (1), (3), (5), all labeled x
}

TEST_CASE("generator specs") {
    GenSpec g;
    g.minGap = 2;
    g.minPart = 2;
    int n9 = 0;
    for (const Partition& p : gen_partitions(9, g))
        if (p.weight() == 9)
            ++n9;
    CHECK(n9 == 3); // 9, 2+7, 3+6

    const auto vs = gen_star_vectors(2, 2);
    // (0,0),(0,1),(0,2),(1,1) -- weakly increasing, sum <= 2
    CHECK(vs.size() == 4);
}

TEST_CASE("weighted generating functions") {
    const QSeries gf =
        weighted_gf({FamilyKind::Do, -1, -1}, WeightRule::Sol2Len, 10);
    CHECK(gf.coeff(1) == PolyXY::monomial(1, 1)); // only (1)
    CHECK(gf.coeff(0) == PolyXY::constant(1));

    CHECK(weighted_gf({FamilyKind::Do, -1, -1}, WeightRule::Sol2Len, 16)
              .equal_up_to_order(eval_sum_side("DOGF", 16)));

    // D with x^length = (-xq; q)_infty
    const QSeries dgf = weighted_gf({FamilyKind::D, -1, -1}, WeightRule::XLen, 14);
    const QSeries prod = pochhammer_infinite(
        PolyXY::monomial(1, 0) * PolyXY::constant(-1), 4, 4, 14);
    CHECK(dgf.equal_up_to_order(prod));

    // enumeration counts match gf coefficients
    const QSeries rgf = weighted_gf({FamilyKind::R, 0, 0}, WeightRule::Plain, 12);
    for (int w = 0; w <= 12; ++w) {
        long cnt = 0;
        for (const Partition& p : enumerate_plain({FamilyKind::R, 0, 0}, 12))
            if (p.weight() == w)
                ++cnt;
        CHECK(rgf.coeff(w) == PolyXY::constant(cnt));
    }
}

TEST_CASE("member signs") {
    CHECK(member_sign({FamilyKind::BIII, 0, 0}, P({2, 5})) == 1);
    CHECK(member_sign({FamilyKind::BIII, 0, 0}, P({2})) == -1);
    // eta pad sign: odd exactly when a-b == 2,3 (mod 4)
    CHECK(member_sign({FamilyKind::ETA, 2, 0},
                      P(std::vector<int>{})) == -1); // C(2,2)=1
    CHECK(member_sign({FamilyKind::ETA, 1, 0},
                      P(std::vector<int>{})) == 1); // C(1,2)=0
    CHECK(member_sign({FamilyKind::ETA, 0, 2},
                      P(std::vector<int>{})) == -1); // C(-2,2)=3
}

TEST_CASE("rendered enumeration covers composite families") {
    const auto pstar = enumerate_rendered({FamilyKind::Pstar, 3, -1}, 2);
    CHECK(!pstar.empty());
    for (const std::string& s : pstar)
        CHECK(s.front() == '(');
    const auto mii = enumerate_rendered({FamilyKind::MII, -1, -1}, 10);
    CHECK(!mii.empty());
}
