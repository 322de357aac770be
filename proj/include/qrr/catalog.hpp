#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qrr/series.hpp"

namespace qrr {

/// One sum-to-product identity with evaluators for both sides.  Entries
/// with a free integer parameter (the modulus family) carry the values it
/// is instantiated at; all other entries have params = {0}.
struct IdentityEntry {
    std::string id;
    std::string summary;
    bool multivariate; // uses the x/y markers
    std::vector<int> params;
    std::function<QSeries(int order, int param)> sum_side;
    std::function<QSeries(int order, int param)> product_side;
};

const std::vector<IdentityEntry>& catalog();
std::vector<std::string> catalog_list();
const IdentityEntry& find_identity(const std::string& id);

QSeries eval_sum_side(const std::string& id, int order, int param = 0);
QSeries eval_product_side(const std::string& id, int order, int param = 0);

struct VerificationReport {
    std::string id;
    int order = 0;
    bool equal = false;
    int failedParam = 0; // meaningful only when !equal
    std::optional<QSeries::Discrepancy> firstDiscrepancy;
};

/// Compare both sides coefficientwise to the given order, across every
/// registered parameter instance.
VerificationReport verify_identity(const std::string& id, int order);

} // namespace qrr
