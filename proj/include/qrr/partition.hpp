#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qrr/poly.hpp"

namespace qrr {

/// Integer partition with parts listed weakly increasing (the smallest
/// part first), matching the bottom-up indexing of all shape formulas.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int weight() const;
    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }
    bool is_distinct() const;

    /// 1-based access from the smallest part.
    int part(int k) const { return parts.at(static_cast<size_t>(k) - 1); }

    auto operator<=>(const Partition&) const = default;
};

/// Weakly increasing vector of non-negative entries with significant
/// length; zeros count as entries (and as 0-sequence members).
struct PartStarVec {
    std::vector<int> entries;

    PartStarVec() = default;
    explicit PartStarVec(std::vector<int> e);

    int weight() const;
    int length() const { return static_cast<int>(entries.size()); }

    auto operator<=>(const PartStarVec&) const = default;
};

/// Marker-label alphabet used by the weighted partition families.
enum class Label { None, X, Y, XY, XY2, X2Y2, X2Y };

/// Marker monomial attached to a label (x-degree, y-degree).
std::pair<int, int> label_degrees(Label l);

struct LabeledPartition {
    Partition parts;
    std::vector<Label> labels; // one per part

    LabeledPartition() = default;
    LabeledPartition(Partition p, std::vector<Label> l);

    int weight() const { return parts.weight(); }
    int length() const { return parts.length(); }
    int count_label(Label l) const;

    /// Product of the per-part label monomials.
    PolyXY monomial() const;

    auto operator<=>(const LabeledPartition&) const = default;
};

// --- statistics ------------------------------------------------------------

struct Run {
    int start; // 1-based position of the first part of the run
    int len;
};

/// Maximal runs with adjacent difference exactly `gap`.
std::vector<Run> runs_with_gap(const Partition& p, int gap);

/// Number of maximal 2-sequences of odd length; parts must be distinct.
int stat_sol2(const Partition& p);

/// Number of maximal 1-sequences of odd length; parts must be distinct.
int stat_sol(const Partition& p);

/// Maximal equal-part runs, in order.
std::vector<Run> stat_zero_sequences(const Partition& p);
std::vector<Run> stat_zero_sequences(const PartStarVec& v);

// --- Ferrers shape surgery --------------------------------------------------

/// s_{k,t} = lambda_k + t*(m-k); 1 <= k <= m, 1 <= t <= lambda_k.
int tl_shape_size(const Partition& p, int k, int t);

/// Delete part k and subtract t from every higher part.  Returns the new
/// partition and the removed size; throws NonPositiveResult if a reduced
/// part would drop to zero or below.
std::pair<Partition, int> remove_tl_shape(const Partition& p, int k, int t);

/// Exact inverse of remove_tl_shape: place a new part so that the
/// tL-shape rooted at it has the given size; all higher parts grow by t.
Partition insert_tl_shape(const Partition& p, int size, int t);

/// Subtract `times` from parts k..m (the I-shape column); parts that
/// reach zero are dropped.  Returns the new partition and the per-pass
/// size g_k = m-k+1; the removed weight is times*g_k.
std::pair<Partition, int> remove_i_shape(const Partition& p, int k, int times);

// --- text form --------------------------------------------------------------

/// How a "_x" suffix should be read when parsing; rendering uses the
/// same table in reverse.
enum class LabelScheme {
    Plain,   // no labels
    XMeansXY,// phi families: bare part = y, "_x" = xy
    XMeansX, // iota/theta families: bare part = unlabeled, "_x" = x
    Full,    // explicit suffixes _x, _xy, _xy2, _x2y2, _x2y
};

std::string render(const Partition& p);
std::string render(const LabeledPartition& p, LabelScheme scheme);
Partition parse_partition(const std::string& text);
LabeledPartition parse_labeled(const std::string& text, LabelScheme scheme);

} // namespace qrr
