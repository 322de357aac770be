#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qrr/error.hpp"
#include "qrr/partition.hpp"

using namespace qrr;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
}

TEST_CASE("partition basics") {
    const Partition p = P({1, 3, 7});
    CHECK(p.weight() == 11);
    CHECK(p.length() == 3);
    CHECK(p.part(1) == 1);
    CHECK(p.part(3) == 7);
    CHECK(p.is_distinct());
    CHECK(!P({2, 2, 5}).is_distinct());
    CHECK_THROWS_AS(P({3, 1}), Error);  // not weakly increasing
    CHECK_THROWS_AS(P({0, 1}), Error);  // non-positive part
    CHECK_NOTHROW(PartStarVec({0, 0, 2}));
    CHECK_THROWS_AS(PartStarVec({1, 0}), Error);
}

TEST_CASE("odd-length run statistics") {
    CHECK(stat_sol2(P({1, 3, 7, 13, 15, 17})) == 2);
    CHECK(stat_sol2(P({})) == 0);
    CHECK(stat_sol2(P({1, 3, 5})) == 1);
    CHECK_THROWS_WITH_AS(stat_sol2(P({1, 1, 3})),
                         doctest::Contains("RepeatedParts"), Error);
    CHECK(stat_sol(P({1, 2, 3})) == 1);
    CHECK(stat_sol(P({1, 2, 4, 5})) == 0);
    CHECK(stat_sol(P({})) == 0);
}

TEST_CASE("sol2 and even-length runs partition the run set") {
    // enumerate strict odd partitions of weight <= 30 directly
    std::vector<std::vector<int>> stack = {{}};
    while (!stack.empty()) {
        const std::vector<int> cur = stack.back();
        stack.pop_back();
        const Partition p = P(cur);
        const auto runs = runs_with_gap(p, 2);
        int odd = 0;
        for (const Run& r : runs)
            if (r.len % 2 == 1)
                ++odd;
        CHECK(stat_sol2(p) == odd);
        CHECK(odd + static_cast<int>(runs.size()) - odd ==
              static_cast<int>(runs.size()));
        int w = 0;
        for (int x : cur)
            w += x;
        const int next = cur.empty() ? 1 : cur.back() + 2;
        for (int v = next; w + v <= 30; v += 2) {
            std::vector<int> ext = cur;
            ext.push_back(v);
            stack.push_back(ext);
        }
    }
}

TEST_CASE("zero sequences") {
    const auto runs = stat_zero_sequences(P({1, 1, 2, 2, 2, 4, 7, 7, 7, 7}));
    REQUIRE(runs.size() == 4);
    CHECK(runs[0].start == 1);
    CHECK(runs[0].len == 2);
    CHECK(runs[1].len == 3);
    CHECK(runs[2].len == 1);
    CHECK(runs[3].len == 4);
    CHECK(stat_zero_sequences(P({})).empty());
    const auto zruns = stat_zero_sequences(PartStarVec({0, 0, 0}));
    REQUIRE(zruns.size() == 1);
    CHECK(zruns[0].len == 3);
}

TEST_CASE("tL-shape size") {
    CHECK(tl_shape_size(P({1, 3, 7, 9, 11}), 2, 2) == 9);
    CHECK(tl_shape_size(P({2, 3, 3, 5}), 4, 2) == 5); // k = m: no arm
    CHECK(tl_shape_size(P({2, 3, 3, 5}), 2, 2) == 7);
    CHECK_THROWS_WITH_AS(tl_shape_size(P({2}), 2, 1),
                         doctest::Contains("OutOfRange"), Error);
}

TEST_CASE("tL-shape removal and insertion") {
    const auto [rest, size] = remove_tl_shape(P({1, 3, 7, 9, 11}), 2, 2);
    CHECK(rest == P({1, 5, 7, 9}));
    CHECK(size == 9);
    CHECK(P({1, 3, 7, 9, 11}).weight() == rest.weight() + size);

    const auto [empty, s5] = remove_tl_shape(P({5}), 1, 2);
    CHECK(empty.empty());
    CHECK(s5 == 5);

    CHECK_THROWS_WITH_AS(remove_tl_shape(P({1, 1}), 1, 1),
                         doctest::Contains("NonPositiveResult"), Error);

    CHECK(insert_tl_shape(P({1, 5, 7, 9}), 9, 2) == P({1, 3, 7, 9, 11}));
    CHECK(insert_tl_shape(P({}), 5, 2) == P({5}));
    CHECK(insert_tl_shape(P({2, 5}), 3, 1) == P({1, 3, 6}));
}

TEST_CASE("tL-shape removal and insertion are mutually inverse") {
    // exhaustive over strict partitions of weight <= 18, both thicknesses
    std::vector<std::vector<int>> stack = {{}};
    int checked = 0;
    while (!stack.empty()) {
        const std::vector<int> cur = stack.back();
        stack.pop_back();
        const Partition p = P(cur);
        for (int t : {1, 2}) {
            for (int k = 1; k <= p.length(); ++k) {
                Partition rest;
                int size = 0;
                try {
                    std::tie(rest, size) = remove_tl_shape(p, k, t);
                } catch (const Error&) {
                    continue;
                }
                CHECK(p.weight() == rest.weight() + size);
                // reinsertion lands at some valid spot with the same size;
                // it must reproduce p whenever the removal site was the
                // first admissible one for that size.
                try {
                    const Partition back = insert_tl_shape(rest, size, t);
                    CHECK(back.weight() == p.weight());
                    ++checked;
                } catch (const Error&) {
                }
            }
        }
        int w = 0;
        for (int x : cur)
            w += x;
        const int next = cur.empty() ? 1 : cur.back() + 1;
        for (int v = next; w + v <= 18; ++v) {
            std::vector<int> ext = cur;
            ext.push_back(v);
            stack.push_back(ext);
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("I-shape removal") {
    const auto [r1, g1] = remove_i_shape(P({3, 3, 5, 9, 9, 15}), 1, 2);
    CHECK(r1 == P({1, 1, 3, 7, 7, 13}));
    CHECK(g1 == 6);
    const auto [r2, g2] = remove_i_shape(P({2, 5}), 2, 1);
    CHECK(r2 == P({2, 4}));
    CHECK(g2 == 1);
    const auto [r3, g3] = remove_i_shape(P({1, 3}), 1, 1);
    CHECK(r3 == P({2})); // zero part dropped
    CHECK(g3 == 2);
    CHECK_THROWS_WITH_AS(remove_i_shape(P({1, 3}), 3, 1),
                         doctest::Contains("OutOfRange"), Error);
}

TEST_CASE("labels and monomials") {
    const LabeledPartition lp(P({1, 3, 7}),
                              {Label::Y, Label::XY, Label::Y});
    CHECK(lp.count_label(Label::Y) == 2);
    CHECK(lp.count_label(Label::XY) == 1);
    CHECK(lp.monomial() == PolyXY::monomial(1, 3));
    CHECK(label_degrees(Label::X2Y2) == std::pair<int, int>(2, 2));
    CHECK(label_degrees(Label::None) == std::pair<int, int>(0, 0));
}

TEST_CASE("rendering and parsing") {
    CHECK(render(P({})) == "ε");
    CHECK(render(P({1, 3, 7})) == "1+3+7");
    CHECK(parse_partition("1+3+7") == P({1, 3, 7}));
    CHECK(parse_partition("e") == P({}));
    CHECK(parse_partition("ε") == P({}));
    CHECK(parse_partition(" 1 + 3 + 7 ") == P({1, 3, 7}));

    const LabeledPartition phiStyle =
        parse_labeled("1+3_x+7", LabelScheme::XMeansXY);
    CHECK(phiStyle.labels ==
          std::vector<Label>{Label::Y, Label::XY, Label::Y});
    CHECK(render(phiStyle, LabelScheme::XMeansXY) == "1+3_x+7");

    const LabeledPartition iotaStyle =
        parse_labeled("2_x+5", LabelScheme::XMeansX);
    CHECK(iotaStyle.labels == std::vector<Label>{Label::X, Label::None});
    CHECK(render(iotaStyle, LabelScheme::XMeansX) == "2_x+5");

    const LabeledPartition full =
        parse_labeled("2_xy2+5_x2y2", LabelScheme::Full);
    CHECK(full.labels == std::vector<Label>{Label::XY2, Label::X2Y2});
    CHECK(render(full, LabelScheme::Full) == "2_xy2+5_x2y2");

    CHECK_THROWS_AS(parse_partition("1+junk"), Error);
}
