#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qrr/families.hpp"
#include "qrr/maps.hpp"

namespace qrr {

/// Outcome of one exhaustive suite.  `passed` is true exactly when no
/// failure was recorded; `firstFailure` then stays empty.
struct SuiteResult {
    std::string suite;
    bool passed = true;
    long domainSize = 0;
    long fixedPoints = 0;
    long cancellingPairs = 0;
    std::map<int, long> fixedByWeight;
    std::map<int, long> pairsByWeight;
    std::optional<std::string> firstFailure;
};

/// Exhaustively checks one of the four sign-reversing involutions (phi,
/// iota, psi1, psi2) over its full domain up to the given total weight:
/// image stays in the family, the square is the identity, weight and
/// label monomial are preserved, the sign flips off fixed points, and
/// the signed aggregate of the fixed points equals the registered target
/// series.  For psi1/psi2 the fixed-point folds are also verified to be
/// weight-preserving bijections onto their arithmetic-progression images.
SuiteResult check_involution(const std::string& mapId, int maxWeight);

struct BijectionBounds {
    int maxWeight = 30;
    /// alpha: bound on i + 2j; tau: bound on both j and k; unused by the
    /// two iteration maps.
    int shapeBound = 6;
};

/// Exhaustively checks one of the four weight-preserving bijections
/// (alpha, tau, theta1, theta2): forward image lands in the target
/// family, the inverse roundtrips, and the image matches an independently
/// enumerated codomain at every weight.
SuiteResult check_bijection(const std::string& mapId,
                            const BijectionBounds& bounds);

/// Compares an enumerated weighted family sum against the registered side
/// of a catalog identity, coefficient by coefficient up to the order.
/// Registered pairings: (Do, DOGF), (R, RR1), (R, RR2) [smallest part
/// > 1], (D, HKX3PC).
SuiteResult cross_check_gf(const FamilyId& family, const std::string& identityId,
                           int order);

/// All rows of an involution's cancellation table at one exact total
/// weight, in canonical order (first component ascending, then labels,
/// then second component).  Pair rows list the negative member first.
struct InvolutionTable {
    std::string mapId;
    int weight = 0;
    std::vector<std::string> fixedRows;
    std::vector<std::pair<std::string, std::string>> pairRows;
};

InvolutionTable involution_table(const std::string& mapId, int weight);

/// Renders involution_table as a byte-stable text block.
std::string emit_table(const std::string& mapId, int weight);

/// One-line human rendering of a suite result.
std::string format_result(const SuiteResult& r);

} // namespace qrr
