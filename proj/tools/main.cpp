// Command-line front door: verify identities, run maps on explicit
// inputs, run exhaustive map checks, enumerate families, emit
// cancellation tables.
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qrr/catalog.hpp"
#include "qrr/error.hpp"
#include "qrr/families.hpp"
#include "qrr/harness.hpp"
#include "qrr/maps.hpp"

using json = nlohmann::ordered_json;
using namespace qrr;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int default_order(const IdentityEntry& e) { return e.multivariate ? 30 : 50; }

json report_json(const VerificationReport& r) {
    json j;
    j["id"] = r.id;
    j["order"] = r.order;
    j["status"] = r.equal ? "pass" : "fail";
    if (r.equal) {
        j["discrepancy"] = nullptr;
    } else {
        json d;
        d["param"] = r.failedParam;
        if (r.firstDiscrepancy) {
            d["quarterExponent"] = r.firstDiscrepancy->quarter;
            d["xdeg"] = r.firstDiscrepancy->xdeg;
            d["ydeg"] = r.firstDiscrepancy->ydeg;
            d["sumSide"] = r.firstDiscrepancy->lhs.get_str();
            d["productSide"] = r.firstDiscrepancy->rhs.get_str();
        }
        j["discrepancy"] = d;
    }
    return j;
}

json suite_json(const SuiteResult& r) {
    json j;
    j["suite"] = r.suite;
    j["status"] = r.passed ? "pass" : "fail";
    json c;
    c["domain"] = r.domainSize;
    c["fixed"] = r.fixedPoints;
    c["pairs"] = r.cancellingPairs;
    j["counters"] = c;
    j["discrepancy"] = r.firstFailure ? json(*r.firstFailure) : json(nullptr);
    return j;
}

void print_report(const VerificationReport& r, bool asJson) {
    if (asJson) {
        std::cout << report_json(r).dump() << "\n";
        return;
    }
    if (r.equal) {
        std::cout << r.id << ": equal to q^" << r.order << "\n";
        return;
    }
    std::cout << r.id << ": MISMATCH";
    if (r.firstDiscrepancy)
        std::cout << " at q^" << r.firstDiscrepancy->quarter << "/4 (x^"
                  << r.firstDiscrepancy->xdeg << " y^" << r.firstDiscrepancy->ydeg
                  << "): " << r.firstDiscrepancy->lhs.get_str() << " vs "
                  << r.firstDiscrepancy->rhs.get_str();
    if (r.failedParam)
        std::cout << " [param " << r.failedParam << "]";
    std::cout << "\n";
}

int cmd_verify(const std::string& id, int order, bool all, bool asJson) {
    bool ok = true;
    if (all) {
        for (const IdentityEntry& e : catalog()) {
            const VerificationReport r =
                verify_identity(e.id, order > 0 ? order : default_order(e));
            print_report(r, asJson);
            ok = ok && r.equal;
        }
    } else {
        const IdentityEntry& e = find_identity(id);
        const VerificationReport r =
            verify_identity(e.id, order > 0 ? order : default_order(e));
        print_report(r, asJson);
        ok = r.equal;
    }
    return ok ? 0 : kExitFail;
}

int cmd_run_map(const std::string& mapId, const std::string& input, bool inverse,
                bool asJson) {
    const MapReport r = run_map(mapId, input, inverse);
    if (asJson) {
        json j;
        j["map"] = mapId;
        j["inverse"] = inverse;
        j["input"] = r.input;
        j["output"] = r.output;
        j["weightIn"] = r.weightIn;
        j["weightOut"] = r.weightOut;
        j["markerIn"] = r.markerIn;
        j["markerOut"] = r.markerOut;
        j["signIn"] = r.signIn;
        j["signOut"] = r.signOut;
        j["fixedPoint"] = r.isFixedPoint;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << r.output << "\n";
    }
    return 0;
}

int cmd_check_map(const std::string& mapId, int maxWeight, bool asJson) {
    SuiteResult r;
    if (mapId == "phi" || mapId == "iota" || mapId == "psi1" ||
        mapId == "psi2") {
        r = check_involution(mapId,
                             maxWeight > 0 ? maxWeight
                             : (mapId[0] == 'p' ? 60 : 30));
    } else {
        BijectionBounds b;
        b.maxWeight = maxWeight > 0 ? maxWeight : (mapId == "alpha" ? 40 : 30);
        b.shapeBound = mapId == "tau" ? 4 : 6;
        r = check_bijection(mapId, b);
    }
    if (asJson)
        std::cout << suite_json(r).dump() << "\n";
    else
        std::cout << format_result(r) << "\n";
    return r.passed ? 0 : kExitFail;
}

int cmd_enumerate(const std::string& familyText, int maxWeight, bool asJson) {
    const FamilyId f = parse_family(familyText);
    const std::vector<std::string> members = enumerate_rendered(f, maxWeight);
    if (asJson) {
        json j;
        j["family"] = family_name(f);
        j["maxWeight"] = maxWeight;
        j["members"] = members;
        std::cout << j.dump() << "\n";
    } else {
        for (const std::string& m : members)
            std::cout << m << "\n";
    }
    return 0;
}

int cmd_emit_table(const std::string& mapId, int weight, bool asJson) {
    if (asJson) {
        const InvolutionTable t = involution_table(mapId, weight);
        json j;
        j["map"] = t.mapId;
        j["weight"] = t.weight;
        j["fixed"] = t.fixedRows;
        json pairs = json::array();
        for (const auto& [neg, pos] : t.pairRows)
            pairs.push_back(json::array({neg, pos}));
        j["pairs"] = pairs;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << emit_table(mapId, weight);
    }
    return 0;
}

int cmd_list(bool asJson) {
    if (asJson) {
        json j;
        j["identities"] = catalog_list();
        j["maps"] = map_list();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "identities:";
        for (const std::string& id : catalog_list())
            std::cout << " " << id;
        std::cout << "\nmaps:";
        for (const std::string& id : map_list())
            std::cout << " " << id;
        std::cout << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact q-series identity and partition-map toolkit"};
    app.require_subcommand(1);
    bool asJson = false;
    app.add_flag("--json", asJson, "structured record output");

    std::string id, input, familyText;
    int order = -1, maxWeight = 30, weight = 18;
    bool all = false, inverse = false;

    auto* vi = app.add_subcommand("verify-identity",
                                  "compare both sides of an identity");
    vi->add_option("id", id, "identity id (see `list`)");
    vi->add_option("--order", order, "truncation order (default per identity)");
    vi->add_flag("--all", all, "verify every catalog entry");

    auto* rm = app.add_subcommand("run-map", "apply a map to one input");
    rm->add_option("map", id, "map id")->required();
    rm->add_option("--input", input, "rendered domain element")->required();
    rm->add_flag("--inverse", inverse, "apply the inverse direction");

    auto* cm = app.add_subcommand("check-map", "exhaustive bounded map check");
    cm->add_option("map", id, "map id")->required();
    cm->add_option("--max-weight", maxWeight, "total weight bound");

    auto* en = app.add_subcommand("enumerate", "list family members");
    en->add_option("family", familyText, "family id, e.g. Do or AI_2")
        ->required();
    en->add_option("--max-weight", maxWeight, "total weight bound");

    auto* et = app.add_subcommand("emit-table", "cancellation table at a weight");
    et->add_option("map", id, "involution id")->required();
    et->add_option("--weight", weight, "exact total weight");

    auto* ls = app.add_subcommand("list", "list identities and maps");

    // let the global --json flag appear after the subcommand name too
    for (CLI::App* sub : app.get_subcommands({}))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (vi->parsed()) {
            if (!all && id.empty())
                throw Error("Usage", "verify-identity needs an id or --all");
            return cmd_verify(id, order, all, asJson);
        }
        if (rm->parsed())
            return cmd_run_map(id, input, inverse, asJson);
        if (cm->parsed())
            return cmd_check_map(id, cm->count("--max-weight") ? maxWeight : -1,
                                 asJson);
        if (en->parsed())
            return cmd_enumerate(familyText, maxWeight, asJson);
        if (et->parsed())
            return cmd_emit_table(id, weight, asJson);
        if (ls->parsed())
            return cmd_list(asJson);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
