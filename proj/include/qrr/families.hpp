#pragma once

#include <string>
#include <vector>

#include "qrr/partition.hpp"
#include "qrr/series.hpp"

namespace qrr {

/// The lettered partition families of the identities' combinatorial
/// interpretations, plus the classical sets they are built from.
enum class FamilyKind {
    P,      // all partitions
    Pstar,  // zero-allowing vectors of declared length a
    D,      // distinct parts
    Do,     // distinct odd parts
    De,     // distinct even parts
    R,      // gaps >= 2
    Ek,     // parts multiples of a
    Ekn,    // parts multiples of a, length <= b
    F,      // parts == 1 (mod 4), each labeled x
    AI,     // a distinct odd parts, labels y / xy (xy needs gap >= 4 above)
    BI,     // distinct odd parts >= 2a+1, labels y
    AIIL,   // triples (base, mu, eta) with mu in E_{2,a}, eta in E_{4,b}... see maps
    BIIL,   // strict, min >= a+b+1, labels x^2y
    AIIR,   // strict, min >= 2, a parts xy^2 and b parts x^2y^2 (gap >= 2 above x^2y^2)
    BIIR,   // strict, min >= a+b+1, labels x^2y (same as BIIL)
    AIII,   // strict, a parts labeled x, b unlabeled (gap >= 2 above unlabeled)
    BIII,   // strict, min >= a+b+1, sign (-1)^length
    AIV,    // a odd parts (repetition allowed), labels x
    BIV,    // distinct even parts >= 2a+2
    AV,     // 2a or 2a-1 parts, gaps >= 2; with 2a-1 parts the smallest > 1
    BV,     // strict, min >= 2a+1
    AVI,    // (1+8k_1)+...+(2a-1+8k_a), K weakly increasing >= 0, labels x
    BVI,    // (2a+2r-1+8t_r), r=1..b, labels x with sign (-1)^b
    AVII,   // (6r-3+4a_r), r=1..a, labels x
    BVII,   // same shape with length b
    ETA,    // (2,2,...,2) with a*b twos, sign from C(a-b,2)
    RI,     // parts 8m-4+16s_m, m = 1..a (a = -1: any length)
    RII,    // parts 16m-8+8s_m, m = 1..a (a = -1: any length)
    MI,     // AVI members of length a whose K has no odd-length 0-sequence
    MII,    // AVII pairs (lambda, lambda) of length a with the 2^{a^2} pad
};

struct FamilyId {
    FamilyKind kind;
    int a = 0;
    int b = 0;
};

FamilyId parse_family(const std::string& text);
std::string family_name(const FamilyId& f);

// --- generic bounded partition generation -----------------------------------

struct GenSpec {
    int minPart = 1;
    int minGap = 0;               // next part minus previous part
    int modulus = 1;
    std::vector<int> residues;    // allowed residues mod modulus (empty: all)
    int maxLen = -1;              // -1: unlimited
    int exactLen = -1;            // -1: any
};

/// All partitions with weight <= maxWeight matching the spec, in
/// lexicographic order of their (weakly increasing) part lists.
std::vector<Partition> gen_partitions(int maxWeight, const GenSpec& spec);

/// Weakly increasing vectors of `len` non-negative entries with sum <= maxSum.
std::vector<PartStarVec> gen_star_vectors(int len, int maxSum);

// --- family operations ------------------------------------------------------

bool is_member(const FamilyId& f, const Partition& p);
bool is_member(const FamilyId& f, const LabeledPartition& p);
bool is_member(const FamilyId& f, const PartStarVec& v);

/// Whether the family's objects carry per-part label choices (and so must
/// be enumerated as LabeledPartition).
bool is_labeled_family(const FamilyId& f);

std::vector<Partition> enumerate_plain(const FamilyId& f, int maxWeight);
std::vector<LabeledPartition> enumerate_labeled(const FamilyId& f, int maxWeight);

/// Text form of every member, covering the composite (triple) families
/// that have no single-partition representation.
std::vector<std::string> enumerate_rendered(const FamilyId& f, int maxWeight);

/// Sign carried by a member under the family's sign rule (+1 when the
/// family is unsigned).
int member_sign(const FamilyId& f, const LabeledPartition& p);
int member_sign(const FamilyId& f, const Partition& p);

/// Marker statistic attached to each member when summing a family into a
/// series.
enum class WeightRule {
    Plain,    // q^{|lambda|} only
    ByLabels, // label monomial times q^{|lambda|}
    Sol2Len,  // x^{sol_2} y^{length}
    XLen,     // x^{length}
    X2Len,    // x^{2*length}
};

QSeries weighted_gf(const FamilyId& f, WeightRule rule, int order);

} // namespace qrr
