// End-to-end acceptance gate: one line of output per criterion, nonzero
// exit when any of them fails.  Everything checked here is exact-integer
// equality; no tolerances anywhere.
#include <iostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qrr/catalog.hpp"
#include "qrr/families.hpp"
#include "qrr/harness.hpp"
#include "qrr/maps.hpp"
#include "qrr/series.hpp"

using namespace qrr;

namespace {

bool anyFailed = false;

void report(bool ok, const std::string& what) {
    std::cout << (ok ? "PASS" : "FAIL") << ": " << what << "\n";
    if (!ok)
        anyFailed = true;
}

std::string phi_row(const LabeledPair& p) {
    return "(" + render(p.lam, LabelScheme::XMeansXY) + " | " + render(p.mu) +
           ")";
}
std::string iota_row(const LabeledPair& p) {
    return "(" + render(p.lam, LabelScheme::XMeansX) + " | " + render(p.mu) +
           ")";
}

// 1. every catalog identity verifies at the deep default orders
void criterion_identities() {
    bool ok = true;
    for (const IdentityEntry& e : catalog()) {
        const VerificationReport r =
            verify_identity(e.id, e.multivariate ? 30 : 50);
        ok = ok && r.equal;
    }
    report(ok, "all 23 identities verify at order 50 (30 multivariate)");
}

// 2. the q^9 coefficient of the first identity is 5, confirmed by direct
// enumeration of both partition classes
void criterion_coefficient_nine() {
    bool ok = eval_sum_side("RR1", 9).coeff(9) == PolyXY::constant(5) &&
              eval_product_side("RR1", 9).coeff(9) == PolyXY::constant(5);
    GenSpec gap2;
    gap2.minGap = 2;
    int nGap = 0;
    for (const Partition& p : gen_partitions(9, gap2))
        if (p.weight() == 9)
            ++nGap;
    GenSpec mod5;
    mod5.modulus = 5;
    mod5.residues = {1, 4};
    int nMod = 0;
    for (const Partition& p : gen_partitions(9, mod5))
        if (p.weight() == 9)
            ++nMod;
    ok = ok && nGap == 5 && nMod == 5;
    report(ok, "q^9 coefficient 5 matches both brute-forced partition classes");
}

// 3. the four quarter-grid sums collapse onto integral powers
void criterion_quarter_cancellation() {
    bool ok = true;
    for (const char* id : {"CY1", "CY2", "CY3", "CY4"}) {
        const QSeries s = eval_sum_side(id, 50);
        ok = ok && s.is_integral_grid();
        ok = ok && verify_identity(id, 50).equal;
    }
    report(ok, "quarter-exponent sums cancel to the integral grid at order 50");
}

// 4. the thickness-2 involution cancels exhaustively and reproduces the
// published weight-18 table
void criterion_phi() {
    bool ok = check_involution("phi", 20).passed;
    const InvolutionTable t = involution_table("phi", 18);
    const std::set<std::string> fixed(t.fixedRows.begin(), t.fixedRows.end());
    const std::set<std::pair<std::string, std::string>> pairs(
        t.pairRows.begin(), t.pairRows.end());
    const std::set<std::string> expectFixed = {
        "(1_x+17_x | ε)", "(3_x+15_x | ε)", "(5_x+13_x | ε)",
        "(7_x+11_x | ε)", "(1+3+5_x+9_x | ε)"};
    const std::set<std::pair<std::string, std::string>> expectPairs = {
        {"(1 | 17)", "(ε | 1+17)"},
        {"(1 | 3+5+9)", "(ε | 1+3+5+9)"},
        {"(3 | 15)", "(ε | 3+15)"},
        {"(3 | 3+5+7)", "(1+5 | 5+7)"},
        {"(5 | 13)", "(ε | 5+13)"},
        {"(7 | 11)", "(ε | 7+11)"},
        {"(9 | 9)", "(7+11 | ε)"},
        {"(11 | 7)", "(5+13 | ε)"},
        {"(13 | 5)", "(3+15 | ε)"},
        {"(15 | 3)", "(1+17 | ε)"},
        {"(1+3_x | 5+9)", "(1_x | 3+5+9)"},
        {"(1+5_x | 5+7)", "(3_x | 3+5+7)"},
        {"(1_x+5 | 5+7)", "(1+3_x+7 | 7)"},
        {"(1+3+5 | 9)", "(1+3 | 5+9)"},
        {"(1+3+7 | 7)", "(1+3+5+9 | ε)"},
        {"(1+3_x+7_x | 7)", "(1_x+5_x | 5+7)"},
        {"(1+17_x | ε)", "(15_x | 3)"},
        {"(1_x+17 | ε)", "(1_x | 17)"},
        {"(3_x+15 | ε)", "(3_x | 15)"},
        {"(3+15_x | ε)", "(13_x | 5)"},
        {"(5_x+13 | ε)", "(5_x | 13)"},
        {"(5+13_x | ε)", "(11_x | 7)"},
        {"(7_x+11 | ε)", "(7_x | 11)"},
        {"(7+11_x | ε)", "(9_x | 9)"},
        {"(1+3+5+9_x | ε)", "(1+3+7_x | 7)"},
        {"(1+3+5_x+9 | ε)", "(1+3+5_x | 9)"},
    };
    ok = ok && fixed == expectFixed && pairs == expectPairs;
    report(ok, "thickness-2 involution passes to weight 20 and matches the "
               "weight-18 table (5 fixed, 26 pairs)");
}

// 5. the thickness-1 involution cancels exhaustively, reproduces the
// weight-9 table, and its fixed points sum to the distinct-part product
void criterion_iota() {
    bool ok = check_involution("iota", 15).passed;
    const InvolutionTable t = involution_table("iota", 9);
    const std::set<std::string> fixed(t.fixedRows.begin(), t.fixedRows.end());
    const std::set<std::pair<std::string, std::string>> pairs(
        t.pairRows.begin(), t.pairRows.end());
    const std::set<std::string> expectFixed = {
        "(9_x | ε)",         "(1_x+8_x | ε)",     "(2_x+7_x | ε)",
        "(3_x+6_x | ε)",     "(4_x+5_x | ε)",     "(1_x+2_x+6_x | ε)",
        "(1_x+3_x+5_x | ε)", "(2_x+3_x+4_x | ε)"};
    const std::set<std::pair<std::string, std::string>> expectPairs = {
        {"(ε | 9)", "(9 | ε)"},
        {"(ε | 1+2+6)", "(1 | 2+6)"},
        {"(ε | 1+3+5)", "(1 | 3+5)"},
        {"(ε | 2+3+4)", "(2 | 3+4)"},
        {"(7 | 2)", "(1+8 | ε)"},
        {"(7_x | 2)", "(1+8_x | ε)"},
        {"(6 | 3)", "(2+7 | ε)"},
        {"(6_x | 3)", "(2+7_x | ε)"},
        {"(5 | 4)", "(3+6 | ε)"},
        {"(5_x | 4)", "(3+6_x | ε)"},
        {"(4 | 5)", "(ε | 4+5)"},
        {"(4_x | 5)", "(4_x+5 | ε)"},
        {"(3 | 6)", "(ε | 3+6)"},
        {"(3_x | 6)", "(3_x+6 | ε)"},
        {"(2 | 7)", "(ε | 2+7)"},
        {"(2_x | 7)", "(2_x+7 | ε)"},
        {"(1 | 8)", "(ε | 1+8)"},
        {"(1_x | 8)", "(1_x+8 | ε)"},
        {"(1+5 | 3)", "(4 | 2+3)"},
        {"(1_x+5 | 3)", "(1_x+2+6 | ε)"},
        {"(1+5_x | 3)", "(4_x | 2+3)"},
        {"(1_x+5_x | 3)", "(1_x+2+6_x | ε)"},
        {"(2+4 | 3)", "(1+3+5 | ε)"},
        {"(2_x+4 | 3)", "(1+3_x+5 | ε)"},
        {"(2+4_x | 3)", "(1+3+5_x | ε)"},
        {"(2_x+4_x | 3)", "(1+3_x+5_x | ε)"},
        {"(1+4 | 4)", "(3 | 2+4)"},
        {"(1_x+4 | 4)", "(1_x+3+5 | ε)"},
        {"(1+4_x | 4)", "(3_x | 2+4)"},
        {"(1_x+4_x | 4)", "(1_x+3+5_x | ε)"},
        {"(2_x+3 | 4)", "(2_x | 3+4)"},
        {"(2_x+3_x | 4)", "(2_x+3_x+4 | ε)"},
        {"(1+3 | 5)", "(2 | 2+5)"},
        {"(1_x+3 | 5)", "(1_x | 3+5)"},
        {"(1+3_x | 5)", "(2_x | 2+5)"},
        {"(1_x+3_x | 5)", "(1_x+3_x+5 | ε)"},
        {"(1_x+2 | 6)", "(1_x | 2+6)"},
        {"(1_x+2_x | 6)", "(1_x+2_x+6 | ε)"},
    };
    ok = ok && fixed == expectFixed && pairs == expectPairs;

    // signed fixed-point sum at weight 9 equals the q^9 coefficient of
    // (-xq; q)_infty
    PolyXY fixedSum;
    for (const LabeledPartition& lam :
         enumerate_labeled({FamilyKind::AIII, -1, -1}, 9)) {
        const LabeledPair in{lam, Partition(std::vector<int>{})};
        if (lam.weight() == 9 && iota_is_fixed(in)) {
            if (iota_sign(in) > 0)
                fixedSum = fixedSum + iota_marker(in);
            else
                fixedSum = fixedSum - iota_marker(in);
        }
    }
    const QSeries prod = pochhammer_infinite(
        PolyXY::monomial(1, 0) * PolyXY::constant(-1), 4, 4, 9);
    ok = ok && fixedSum == prod.coeff(9);
    report(ok, "thickness-1 involution passes to weight 15, matches the "
               "weight-9 table (8 fixed, 38 pairs), fixed points sum to the "
               "distinct-part product");
}

// 6. both arithmetic-progression involutions, including their fixed-point
// folds, pass at weight 60
void criterion_psi() {
    const bool ok = check_involution("psi1", 60).passed &&
                    check_involution("psi2", 60).passed;
    report(ok, "both arithmetic-progression involutions and their folds pass "
               "to weight 60");
}

// 7. all four weight-preserving bijections pass their exhaustive checks
void criterion_bijections() {
    BijectionBounds a;
    a.maxWeight = 40;
    a.shapeBound = 6;
    BijectionBounds t;
    t.maxWeight = 30;
    t.shapeBound = 4;
    BijectionBounds th;
    th.maxWeight = 30;
    const bool ok = check_bijection("alpha", a).passed &&
                    check_bijection("tau", t).passed &&
                    check_bijection("theta1", th).passed &&
                    check_bijection("theta2", th).passed;
    report(ok, "all four bijections pass (shape decomposition to weight 40, "
               "labeled moves to weight 30, both iterations to weight 30)");
}

// 8. enumerated family sums agree with the catalog series
void criterion_cross_checks() {
    const bool ok =
        cross_check_gf({FamilyKind::Do, -1, -1}, "DOGF", 20).passed &&
        cross_check_gf({FamilyKind::R, -1, -1}, "RR1", 25).passed &&
        cross_check_gf({FamilyKind::R, -1, -1}, "RR2", 25).passed &&
        cross_check_gf({FamilyKind::D, -1, -1}, "HKX3PC", 20).passed;
    report(ok, "all four generating-function cross checks agree");
}

// 9. repeated runs produce byte-identical reports
void criterion_determinism() {
    bool ok = true;
    for (const char* m : {"phi", "iota", "psi1", "psi2"}) {
        const int w = std::string(m) == "phi" ? 18 : 9;
        ok = ok && emit_table(m, w) == emit_table(m, w);
    }
    ok = ok && format_result(check_involution("phi", 14)) ==
                   format_result(check_involution("phi", 14));
    ok = ok && format_result(check_bijection("theta2", BijectionBounds{20, 6})) ==
                   format_result(check_bijection("theta2", BijectionBounds{20, 6}));
    report(ok, "reports are byte-identical across repeated runs");
}

} // namespace

int main() {
    criterion_identities();
    criterion_coefficient_nine();
    criterion_quarter_cancellation();
    criterion_phi();
    criterion_iota();
    criterion_psi();
    criterion_bijections();
    criterion_cross_checks();
    criterion_determinism();
    return anyFailed ? 1 : 0;
}
