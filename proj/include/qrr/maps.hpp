#pragma once

#include <string>
#include <vector>

#include "qrr/partition.hpp"

namespace qrr {

// ---- strict-odd decomposition bijection ------------------------------------

/// Increment data for a strict-odd partition with i singletons and j
/// pairs: mu holds i weakly increasing even increments (added to the
/// singletons), eta holds j weakly increasing multiples of 4 (spent on
/// pair moves).
struct StrictOddDecomp {
    int i = 0;
    int j = 0;
    PartStarVec mu;
    PartStarVec eta;

    auto operator<=>(const StrictOddDecomp&) const = default;
};

/// The minimal strict-odd partition with j bottom pairs [4s-3, 4s-1] and
/// i singletons 4j+1, 4j+5, ..., 4j+4i-3.
Partition alpha_base(int i, int j);

/// Apply the increments to the base: weight grows by |mu| + |eta| while
/// the length stays i + 2j and the odd-2-run count stays i.
Partition map_alpha(const StrictOddDecomp& d);
StrictOddDecomp map_alpha_inverse(const Partition& p);

// ---- the two tL-shape involutions ------------------------------------------

/// Shared shape of the two sign-reversing involutions: a labeled left
/// component and a plain right component whose parts all carry the same
/// implicit label.
struct LabeledPair {
    LabeledPartition lam;
    Partition mu;

    auto operator<=>(const LabeledPair&) const = default;
};

/// Involution trading a 2L-shape between the components; thickness-2
/// analogue of map_iota.  lam uses labels Y / XY, mu parts are implicit Y.
LabeledPair map_phi(const LabeledPair& in);
bool phi_is_fixed(const LabeledPair& in);
/// (-1)^{number of Y-labeled parts of lam}.
int phi_sign(const LabeledPair& in);
/// x^{#XY} y^{l(lam) + l(mu)}.
PolyXY phi_marker(const LabeledPair& in);

/// Thickness-1 involution; lam uses labels X / none, mu parts unlabeled.
LabeledPair map_iota(const LabeledPair& in);
bool iota_is_fixed(const LabeledPair& in);
/// (-1)^{l(mu)}.
int iota_sign(const LabeledPair& in);
/// x^{number of X-labeled parts of lam}.
PolyXY iota_marker(const LabeledPair& in);

// ---- the forward-move bijection --------------------------------------------

/// Increment data over the two-block base (2)...(j+1) [xy^2] and
/// (j+2),(j+4),...,(j+2k) [x^2y^2]: mu holds j weakly increasing
/// increments spent on moves of the xy^2 parts, eta holds k increments
/// added to the x^2y^2 parts.
struct TauDecomp {
    int j = 0;
    int k = 0;
    PartStarVec mu;
    PartStarVec eta;

    auto operator<=>(const TauDecomp&) const = default;
};

LabeledPartition tau_base(int j, int k);
LabeledPartition map_tau(const TauDecomp& d);
TauDecomp map_tau_inverse(const LabeledPartition& lam);

// ---- the two I-shape iteration bijections ----------------------------------

struct PartitionPair {
    Partition a;
    Partition b;

    auto operator<=>(const PartitionPair&) const = default;
};

/// (odd parts with labels x, distinct even parts >= 2l+2)  ->
/// (parts == 1 mod 4, distinct even parts); length of the first
/// component is preserved.
PartitionPair map_theta1(const PartitionPair& in);
PartitionPair map_theta1_inverse(const PartitionPair& in);

/// (gap->=2 partition with 2i or 2i-1 parts, strict parts >= 2i+1)  ->
/// (distinct even parts, strict partition).
PartitionPair map_theta2(const PartitionPair& in);
PartitionPair map_theta2_inverse(const PartitionPair& in);

// ---- the two arithmetic-progression involutions ----------------------------

/// Involution on pairs lam = (1+8k_1)+...+(2i-1+8k_i),
/// mu = (2i+1+8t_1)+...+(2i+2j-1+8t_j); trades the 2L-shape at the first
/// odd-length run of equal K-entries against the smallest part of mu.
PartitionPair map_psi1(const PartitionPair& in);
bool psi1_is_fixed(const PartitionPair& in);
/// (-1)^{l(mu)}.
int psi1_sign(const PartitionPair& in);

/// Merge adjacent part pairs of a psi1 fixed point (even length 2n) into
/// the gap->=2 partition (8m-4+16s_m); throws OddLength on odd length.
Partition psi1_fold(const Partition& lam);
Partition psi1_fold_inverse(const Partition& pi);

/// Triple (lam, mu, eta^{(i,j)}) with lam = (3+4a_1)+...+(6i-3+4a_i),
/// mu likewise over B, and eta the pad of i*j twos carrying the sign
/// (-1)^{C(i-j,2)}.  eta is determined by the component lengths.
struct SignedTriple {
    Partition lam;
    Partition mu;

    auto operator<=>(const SignedTriple&) const = default;

    Partition eta() const;
    /// |lam| + |mu| + |eta|.
    int total_weight() const;
};

/// Involution swapping the tail of the two components at the first index
/// where their increment sequences differ.
SignedTriple map_psi2(const SignedTriple& in);
bool psi2_is_fixed(const SignedTriple& in);
/// (-1)^{C(i-j,2)}: odd exactly when i-j == 2, 3 (mod 4).
int psi2_sign(const SignedTriple& in);

/// Componentwise sum lam_m + mu_m + (4m-2) of a fixed triple, landing in
/// the gap->=2 family (16m-8+8a_m); throws NotFixed otherwise.
Partition psi2_fold(const SignedTriple& t);
SignedTriple psi2_fold_inverse(const Partition& pi);

// ---- uniform driver --------------------------------------------------------

struct MapReport {
    std::string input;
    std::string output;
    int weightIn = 0;
    int weightOut = 0;
    std::string markerIn;  // label monomial, "1" when trivial
    std::string markerOut;
    int signIn = 1;
    int signOut = 1;
    bool isFixedPoint = false;
};

std::vector<std::string> map_list();

/// Parse a rendered domain object ("(comp | comp | ...)"), apply the map
/// (or its inverse for the four one-way bijections), and report both
/// sides.  Involutions ignore the inverse flag.
MapReport run_map(const std::string& mapId, const std::string& input,
                  bool inverse = false);

} // namespace qrr
