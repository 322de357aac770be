#include "qrr/harness.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "qrr/catalog.hpp"
#include "qrr/error.hpp"
#include "qrr/series.hpp"

namespace qrr {

namespace {

void record_failure(SuiteResult& r, const std::string& what) {
    r.passed = false;
    if (!r.firstFailure)
        r.firstFailure = what;
}

// --- involution domains ------------------------------------------------------

std::vector<LabeledPair> phi_domain(int maxWeight) {
    std::vector<LabeledPair> out;
    for (int j = 0; j * j <= maxWeight; ++j) {
        // j distinct odd parts weigh at least j^2
        for (const LabeledPartition& lam :
             enumerate_labeled({FamilyKind::AI, j, -1}, maxWeight)) {
            GenSpec mu;
            mu.minPart = 2 * j + 1;
            mu.minGap = 2;
            mu.modulus = 2;
            mu.residues = {1};
            for (const Partition& m :
                 gen_partitions(maxWeight - lam.weight(), mu))
                out.push_back({lam, m});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LabeledPair> iota_domain(int maxWeight) {
    std::vector<LabeledPair> out;
    for (const LabeledPartition& lam :
         enumerate_labeled({FamilyKind::AIII, -1, -1}, maxWeight)) {
        GenSpec mu;
        mu.minPart = lam.length() + 1;
        mu.minGap = 1;
        for (const Partition& m : gen_partitions(maxWeight - lam.weight(), mu))
            out.push_back({lam, m});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PartitionPair> psi1_domain(int maxWeight) {
    std::vector<PartitionPair> out;
    for (int i = 0; i * i <= maxWeight; ++i) {
        for (const PartStarVec& K :
             gen_star_vectors(i, (maxWeight - i * i) / 8)) {
            std::vector<int> lamParts;
            for (int r = 1; r <= i; ++r)
                lamParts.push_back(2 * r - 1 + 8 * K.entries[r - 1]);
            const Partition lam(lamParts);
            for (int j = 0;; ++j) {
                const int base = lam.weight() + j * (2 * i + j);
                if (base > maxWeight)
                    break;
                for (const PartStarVec& T :
                     gen_star_vectors(j, (maxWeight - base) / 8)) {
                    std::vector<int> muParts;
                    for (int r = 1; r <= j; ++r)
                        muParts.push_back(2 * i + 2 * r - 1 +
                                          8 * T.entries[r - 1]);
                    out.push_back({lam, Partition(muParts)});
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SignedTriple> psi2_domain(int maxWeight) {
    std::vector<SignedTriple> out;
    for (int i = 0; 3 * i * i <= maxWeight; ++i) {
        for (const PartStarVec& A :
             gen_star_vectors(i, (maxWeight - 3 * i * i) / 4)) {
            std::vector<int> lamParts;
            for (int r = 1; r <= i; ++r)
                lamParts.push_back(6 * r - 3 + 4 * A.entries[r - 1]);
            const Partition lam(lamParts);
            for (int j = 0;
                 lam.weight() + 3 * j * j + 2 * i * j <= maxWeight; ++j) {
                const int rest =
                    maxWeight - lam.weight() - 3 * j * j - 2 * i * j;
                for (const PartStarVec& B : gen_star_vectors(j, rest / 4)) {
                    std::vector<int> muParts;
                    for (int r = 1; r <= j; ++r)
                        muParts.push_back(6 * r - 3 + 4 * B.entries[r - 1]);
                    out.push_back({lam, Partition(muParts)});
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// --- per-map hooks -----------------------------------------------------------

template <typename T> struct InvolutionOps {
    std::function<std::vector<T>(int)> domain;
    std::function<T(const T&)> apply;
    std::function<bool(const T&)> fixed;
    std::function<int(const T&)> sign;
    std::function<PolyXY(const T&)> marker;
    std::function<int(const T&)> weight;
    std::function<bool(const T&)> member;
    std::function<std::string(const T&)> row;
    std::function<QSeries(int)> target;
    /// Extra per-suite validation over all fixed points (psi folds).
    std::function<void(const std::vector<T>&, int, SuiteResult&)> extra;
};

LabeledPartition all_x(const Partition& p) {
    return LabeledPartition(p, std::vector<Label>(p.parts.size(), Label::X));
}

std::string pair_row(const LabeledPair& p, LabelScheme scheme) {
    return "(" + render(p.lam, scheme) + " | " + render(p.mu) + ")";
}

QSeries single_x_sum(int order, int qQuarterPerN2, int pochQuarterStep) {
    // sum_n x^{2n} q^{(qQuarterPerN2/4) n^2} / (q^s; q^s)_n
    QSeries r = QSeries::zero(order);
    for (int n = 0; 1L * qQuarterPerN2 * n * n <= 4L * order; ++n) {
        QSeries t = pochhammer_finite(PolyXY::constant(1), pochQuarterStep,
                                      pochQuarterStep, n, order)
                        .inverted();
        t = (t * PolyXY::monomial(2 * n, 0)).shifted(qQuarterPerN2 * n * n);
        r += t;
    }
    return r;
}

template <typename T>
SuiteResult run_involution(const std::string& suite, int maxWeight,
                           const InvolutionOps<T>& ops) {
    SuiteResult res;
    res.suite = suite;
    const std::vector<T> domain = ops.domain(maxWeight);
    res.domainSize = static_cast<long>(domain.size());
    QSeries fixedSum = QSeries::zero(maxWeight);
    std::vector<T> fixedElems;
    for (const T& in : domain) {
        const int w = ops.weight(in);
        const T out = ops.apply(in);
        if (!ops.member(out))
            record_failure(res, "image outside family at " + ops.row(in));
        if (ops.weight(out) != w)
            record_failure(res, "weight changed at " + ops.row(in));
        if (!(ops.marker(out) == ops.marker(in)))
            record_failure(res, "marker changed at " + ops.row(in));
        if (!(ops.apply(out) == in))
            record_failure(res, "square is not identity at " + ops.row(in));
        if (ops.fixed(in)) {
            if (!(out == in))
                record_failure(res, "fixed point moved: " + ops.row(in));
            ++res.fixedPoints;
            ++res.fixedByWeight[w];
            fixedElems.push_back(in);
            PolyXY c = fixedSum.coeff(w);
            if (ops.sign(in) > 0)
                c = c + ops.marker(in);
            else
                c = c - ops.marker(in);
            fixedSum.set_coeff_q(4 * w, c);
        } else {
            if (out == in)
                record_failure(res, "non-fixed point unchanged: " + ops.row(in));
            if (ops.sign(out) != -ops.sign(in))
                record_failure(res, "sign not reversed at " + ops.row(in));
            if (ops.sign(in) < 0) {
                ++res.cancellingPairs;
                ++res.pairsByWeight[w];
            }
        }
    }
    if (const auto d = QSeries::first_difference(fixedSum, ops.target(maxWeight))) {
        std::ostringstream os;
        os << "fixed-point sum differs from target at q^" << d->quarter
           << "/4, x^" << d->xdeg << " y^" << d->ydeg << ": " << d->lhs.get_str()
           << " vs " << d->rhs.get_str();
        record_failure(res, os.str());
    }
    if (ops.extra)
        ops.extra(fixedElems, maxWeight, res);
    return res;
}

/// Shared fold validation for the two arithmetic-progression involutions:
/// the folds of the fixed points must biject onto the registered image
/// family, preserve weight, and their x^{2*length} sum must equal the
/// target series.
template <typename T>
void check_fold(const std::vector<T>& fixedElems, int maxWeight, SuiteResult& res,
                const FamilyId& image,
                const std::function<Partition(const T&)>& fold,
                const std::function<T(const Partition&)>& unfold,
                const std::function<int(const T&)>& weight,
                const QSeries& target) {
    std::set<Partition> folded;
    QSeries foldSum = QSeries::zero(maxWeight);
    for (const T& t : fixedElems) {
        const Partition pi = fold(t);
        if (pi.weight() != weight(t))
            record_failure(res, "fold changed weight of " + render(pi));
        if (!is_member(image, pi))
            record_failure(res, "fold outside image family: " + render(pi));
        if (!(unfold(pi) == t))
            record_failure(res, "fold roundtrip failed at " + render(pi));
        if (!folded.insert(pi).second)
            record_failure(res, "fold collision at " + render(pi));
        foldSum.set_coeff_q(4 * pi.weight(),
                            foldSum.coeff(pi.weight()) +
                                PolyXY::monomial(2 * pi.length(), 0));
    }
    std::set<Partition> expect;
    for (const Partition& p : enumerate_plain(image, maxWeight))
        expect.insert(p);
    if (folded != expect)
        record_failure(res, "fold image does not exhaust the family");
    if (QSeries::first_difference(foldSum, target))
        record_failure(res, "fold sum differs from target series");
}

InvolutionOps<LabeledPair> phi_ops() {
    InvolutionOps<LabeledPair> ops;
    ops.domain = phi_domain;
    ops.apply = map_phi;
    ops.fixed = phi_is_fixed;
    ops.sign = phi_sign;
    ops.marker = phi_marker;
    ops.weight = [](const LabeledPair& p) {
        return p.lam.weight() + p.mu.weight();
    };
    ops.member = [](const LabeledPair& p) {
        const int j = p.lam.length();
        return is_member({FamilyKind::AI, j, -1}, p.lam) &&
               is_member({FamilyKind::BI, j, -1},
                         LabeledPartition(p.mu, std::vector<Label>(
                                                    p.mu.parts.size(), Label::Y)));
    };
    ops.row = [](const LabeledPair& p) {
        return pair_row(p, LabelScheme::XMeansXY);
    };
    ops.target = [](int order) {
        return weighted_gf({FamilyKind::Do, -1, -1}, WeightRule::Sol2Len, order);
    };
    return ops;
}

InvolutionOps<LabeledPair> iota_ops() {
    InvolutionOps<LabeledPair> ops;
    ops.domain = iota_domain;
    ops.apply = map_iota;
    ops.fixed = iota_is_fixed;
    ops.sign = iota_sign;
    ops.marker = iota_marker;
    ops.weight = [](const LabeledPair& p) {
        return p.lam.weight() + p.mu.weight();
    };
    ops.member = [](const LabeledPair& p) {
        const int i = p.lam.count_label(Label::X);
        const int j = p.lam.count_label(Label::None);
        return is_member({FamilyKind::AIII, i, j}, p.lam) &&
               is_member({FamilyKind::BIII, i, j}, p.mu);
    };
    ops.row = [](const LabeledPair& p) {
        return pair_row(p, LabelScheme::XMeansX);
    };
    ops.target = [](int order) {
        // (-xq; q)_infty: strict partitions marked x^length.
        return pochhammer_infinite(PolyXY::monomial(1, 0) * PolyXY::constant(-1),
                                   4, 4, order);
    };
    return ops;
}

InvolutionOps<PartitionPair> psi1_ops() {
    InvolutionOps<PartitionPair> ops;
    ops.domain = psi1_domain;
    ops.apply = map_psi1;
    ops.fixed = psi1_is_fixed;
    ops.sign = psi1_sign;
    ops.marker = [](const PartitionPair& p) {
        return PolyXY::monomial(p.a.length() + p.b.length(), 0);
    };
    ops.weight = [](const PartitionPair& p) {
        return p.a.weight() + p.b.weight();
    };
    ops.member = [](const PartitionPair& p) {
        const int i = p.a.length();
        const int j = p.b.length();
        return is_member({FamilyKind::AVI, i, -1}, all_x(p.a)) &&
               is_member({FamilyKind::BVI, i, j}, all_x(p.b));
    };
    ops.row = [](const PartitionPair& p) {
        return "(" + render(p.a) + " | " + render(p.b) + ")";
    };
    ops.target = [](int order) { return single_x_sum(order, 16, 64); };
    ops.extra = [](const std::vector<PartitionPair>& fixedElems, int maxWeight,
                   SuiteResult& res) {
        check_fold<PartitionPair>(
            fixedElems, maxWeight, res, {FamilyKind::RI, -1, -1},
            [](const PartitionPair& p) { return psi1_fold(p.a); },
            [](const Partition& pi) {
                return PartitionPair{psi1_fold_inverse(pi),
                                     Partition(std::vector<int>{})};
            },
            [](const PartitionPair& p) { return p.a.weight(); },
            single_x_sum(maxWeight, 16, 64));
    };
    return ops;
}

InvolutionOps<SignedTriple> psi2_ops() {
    InvolutionOps<SignedTriple> ops;
    ops.domain = psi2_domain;
    ops.apply = map_psi2;
    ops.fixed = psi2_is_fixed;
    ops.sign = psi2_sign;
    ops.marker = [](const SignedTriple& t) {
        return PolyXY::monomial(t.lam.length() + t.mu.length(), 0);
    };
    ops.weight = [](const SignedTriple& t) { return t.total_weight(); };
    ops.member = [](const SignedTriple& t) {
        return is_member({FamilyKind::AVII, t.lam.length(), -1}, all_x(t.lam)) &&
               is_member({FamilyKind::BVII, t.mu.length(), -1}, all_x(t.mu));
    };
    ops.row = [](const SignedTriple& t) {
        return "(" + render(t.lam) + " | " + render(t.mu) + " | " +
               render(t.eta()) + ")";
    };
    ops.target = [](int order) { return single_x_sum(order, 32, 32); };
    ops.extra = [](const std::vector<SignedTriple>& fixedElems, int maxWeight,
                   SuiteResult& res) {
        check_fold<SignedTriple>(
            fixedElems, maxWeight, res, {FamilyKind::RII, -1, -1},
            psi2_fold, psi2_fold_inverse,
            [](const SignedTriple& t) { return t.total_weight(); },
            single_x_sum(maxWeight, 32, 32));
    };
    return ops;
}

// --- bijection suites --------------------------------------------------------

SuiteResult check_alpha(const BijectionBounds& b) {
    SuiteResult res;
    res.suite = "bijection alpha";
    for (int j = 0; 2 * j <= b.shapeBound; ++j) {
        for (int i = 0; i + 2 * j <= b.shapeBound; ++i) {
            const Partition base = alpha_base(i, j);
            if (base.weight() > b.maxWeight)
                continue;
            std::set<Partition> image;
            for (const PartStarVec& muRaw : gen_star_vectors(
                     i, (b.maxWeight - base.weight()) / 2)) {
                std::vector<int> mu2;
                for (int e : muRaw.entries)
                    mu2.push_back(2 * e);
                const PartStarVec mu(mu2);
                for (const PartStarVec& etaRaw : gen_star_vectors(
                         j, (b.maxWeight - base.weight() - mu.weight()) / 4)) {
                    std::vector<int> eta4;
                    for (int e : etaRaw.entries)
                        eta4.push_back(4 * e);
                    const StrictOddDecomp d{i, j, mu, PartStarVec(eta4)};
                    const Partition out = map_alpha(d);
                    ++res.domainSize;
                    if (out.weight() !=
                        base.weight() + d.mu.weight() + d.eta.weight())
                        record_failure(res, "weight drift at " + render(out));
                    if (!is_member({FamilyKind::Do, -1, -1}, out) ||
                        out.length() != i + 2 * j || stat_sol2(out) != i)
                        record_failure(res, "image statistics wrong at " +
                                                render(out));
                    if (!image.insert(out).second)
                        record_failure(res, "image collision at " + render(out));
                    if (!(map_alpha_inverse(out) == d))
                        record_failure(res, "roundtrip failed at " + render(out));
                }
            }
            GenSpec oddStrict;
            oddStrict.modulus = 2;
            oddStrict.residues = {1};
            oddStrict.minGap = 2;
            std::set<Partition> target;
            for (const Partition& p : gen_partitions(b.maxWeight, oddStrict))
                if (p.length() == i + 2 * j && stat_sol2(p) == i)
                    target.insert(p);
            if (image != target) {
                std::ostringstream os;
                os << "image misses codomain at i=" << i << " j=" << j << " ("
                   << image.size() << " vs " << target.size() << ")";
                record_failure(res, os.str());
            }
        }
    }
    return res;
}

SuiteResult check_tau(const BijectionBounds& b) {
    SuiteResult res;
    res.suite = "bijection tau";
    for (int j = 0; j <= b.shapeBound; ++j) {
        for (int k = 0; k <= b.shapeBound; ++k) {
            const LabeledPartition base = tau_base(j, k);
            if (base.weight() > b.maxWeight)
                continue;
            std::set<LabeledPartition> image;
            for (const PartStarVec& mu :
                 gen_star_vectors(j, b.maxWeight - base.weight())) {
                for (const PartStarVec& eta : gen_star_vectors(
                         k, b.maxWeight - base.weight() - mu.weight())) {
                    const TauDecomp d{j, k, mu, eta};
                    const LabeledPartition out = map_tau(d);
                    ++res.domainSize;
                    if (out.weight() !=
                        base.weight() + mu.weight() + eta.weight())
                        record_failure(res, "weight drift at " +
                                                render(out, LabelScheme::Full));
                    if (!is_member({FamilyKind::AIIR, j, k}, out))
                        record_failure(res, "image outside family at " +
                                                render(out, LabelScheme::Full));
                    if (!image.insert(out).second)
                        record_failure(res, "image collision at " +
                                                render(out, LabelScheme::Full));
                    if (!(map_tau_inverse(out) == d))
                        record_failure(res, "roundtrip failed at " +
                                                render(out, LabelScheme::Full));
                }
            }
            std::set<LabeledPartition> target;
            for (const LabeledPartition& lp :
                 enumerate_labeled({FamilyKind::AIIR, j, k}, b.maxWeight))
                target.insert(lp);
            if (image != target) {
                std::ostringstream os;
                os << "image misses codomain at j=" << j << " k=" << k << " ("
                   << image.size() << " vs " << target.size() << ")";
                record_failure(res, os.str());
            }
        }
    }
    return res;
}

SuiteResult check_theta1(const BijectionBounds& b) {
    SuiteResult res;
    res.suite = "bijection theta1";
    const int W = b.maxWeight;
    std::map<int, long> domainByW, targetByW;
    std::set<std::pair<Partition, Partition>> image;
    for (int i = 0; i <= W; ++i) {
        GenSpec odd;
        odd.modulus = 2;
        odd.residues = {1};
        odd.exactLen = i;
        for (const Partition& lam : gen_partitions(W, odd)) {
            GenSpec biv;
            biv.minPart = 2 * i + 2;
            biv.modulus = 2;
            biv.residues = {0};
            biv.minGap = 2;
            for (const Partition& mu : gen_partitions(W - lam.weight(), biv)) {
                const PartitionPair in{lam, mu};
                const PartitionPair out = map_theta1(in);
                ++res.domainSize;
                const int w = lam.weight() + mu.weight();
                bool shape = out.a.weight() + out.b.weight() == w &&
                             out.a.length() == lam.length() &&
                             is_member({FamilyKind::De, -1, -1}, out.b);
                for (int r = 1; r <= out.a.length(); ++r)
                    shape = shape && out.a.part(r) % 4 == 1;
                if (!shape)
                    record_failure(res, "image shape wrong at (" + render(lam) +
                                            " | " + render(mu) + ")");
                if (!(map_theta1_inverse(out) == in))
                    record_failure(res, "roundtrip failed at (" + render(lam) +
                                            " | " + render(mu) + ")");
                if (!image.insert({out.a, out.b}).second)
                    record_failure(res, "image collision at (" + render(out.a) +
                                            " | " + render(out.b) + ")");
                ++domainByW[w];
            }
        }
    }
    GenSpec f;
    f.modulus = 4;
    f.residues = {1};
    GenSpec de;
    de.modulus = 2;
    de.residues = {0};
    de.minGap = 2;
    for (const Partition& beta : gen_partitions(W, f))
        for (const Partition& gamma : gen_partitions(W - beta.weight(), de))
            ++targetByW[beta.weight() + gamma.weight()];
    if (domainByW != targetByW)
        record_failure(res, "per-weight cardinality mismatch with codomain");
    // the worked example, independent of the sweep bound
    const PartitionPair ex =
        map_theta1({parse_partition("3+3+5+9+9+15"), parse_partition("14+16")});
    if (render(ex.a) != "1+1+1+5+5+9" || render(ex.b) != "2+8+12+14+16")
        record_failure(res, "worked example mismatch: (" + render(ex.a) + " | " +
                                render(ex.b) + ")");
    return res;
}

SuiteResult check_theta2(const BijectionBounds& b) {
    SuiteResult res;
    res.suite = "bijection theta2";
    const int W = b.maxWeight;
    std::map<int, long> domainByW, targetByW;
    std::set<std::pair<Partition, Partition>> image;
    GenSpec r2;
    r2.minGap = 2;
    const std::vector<Partition> gap2 = gen_partitions(W, r2);
    for (int i = 0; i == 0 || 2 * i - 1 <= W; ++i) {
        for (const Partition& lam : gap2) {
            const int l = lam.length();
            if (!(l == 2 * i || (l == 2 * i - 1 && lam.part(1) > 1)))
                continue;
            GenSpec bv;
            bv.minPart = 2 * i + 1;
            bv.minGap = 1;
            for (const Partition& mu : gen_partitions(W - lam.weight(), bv)) {
                const PartitionPair in{lam, mu};
                const PartitionPair out = map_theta2(in);
                ++res.domainSize;
                const int w = lam.weight() + mu.weight();
                if (out.a.weight() + out.b.weight() != w ||
                    !is_member({FamilyKind::De, -1, -1}, out.a) ||
                    !out.b.is_distinct())
                    record_failure(res, "image shape wrong at (" + render(lam) +
                                            " | " + render(mu) + ")");
                if (!(map_theta2_inverse(out) == in))
                    record_failure(res, "roundtrip failed at (" + render(lam) +
                                            " | " + render(mu) + ")");
                if (!image.insert({out.a, out.b}).second)
                    record_failure(res, "image collision at (" + render(out.a) +
                                            " | " + render(out.b) + ")");
                ++domainByW[w];
            }
        }
    }
    GenSpec de;
    de.modulus = 2;
    de.residues = {0};
    de.minGap = 2;
    GenSpec strict;
    strict.minGap = 1;
    for (const Partition& beta : gen_partitions(W, de))
        for (const Partition& gamma : gen_partitions(W - beta.weight(), strict))
            ++targetByW[beta.weight() + gamma.weight()];
    if (domainByW != targetByW)
        record_failure(res, "per-weight cardinality mismatch with codomain");
    return res;
}

} // namespace

SuiteResult check_involution(const std::string& mapId, int maxWeight) {
    if (mapId == "phi")
        return run_involution("involution phi", maxWeight, phi_ops());
    if (mapId == "iota")
        return run_involution("involution iota", maxWeight, iota_ops());
    if (mapId == "psi1")
        return run_involution("involution psi1", maxWeight, psi1_ops());
    if (mapId == "psi2")
        return run_involution("involution psi2", maxWeight, psi2_ops());
    fail("UnknownMap", "no involution named '" + mapId + "'");
}

SuiteResult check_bijection(const std::string& mapId,
                            const BijectionBounds& bounds) {
    if (mapId == "alpha")
        return check_alpha(bounds);
    if (mapId == "tau")
        return check_tau(bounds);
    if (mapId == "theta1")
        return check_theta1(bounds);
    if (mapId == "theta2")
        return check_theta2(bounds);
    fail("UnknownMap", "no bijection named '" + mapId + "'");
}

SuiteResult cross_check_gf(const FamilyId& family, const std::string& identityId,
                           int order) {
    SuiteResult res;
    res.suite = "cross-check " + family_name(family) + " vs " + identityId;
    QSeries lhs = QSeries::zero(order);
    auto accumulate = [&](const Partition& p, const PolyXY& mark) {
        lhs.set_coeff_q(4 * p.weight(), lhs.coeff(p.weight()) + mark);
        ++res.domainSize;
    };
    QSeries rhs = QSeries::zero(order);
    if (family.kind == FamilyKind::Do && identityId == "DOGF") {
        GenSpec oddStrict;
        oddStrict.modulus = 2;
        oddStrict.residues = {1};
        oddStrict.minGap = 2;
        for (const Partition& p : gen_partitions(order, oddStrict))
            accumulate(p, PolyXY::monomial(stat_sol2(p), p.length()));
        rhs = eval_sum_side("DOGF", order);
    } else if (family.kind == FamilyKind::R && identityId == "RR1") {
        GenSpec g;
        g.minGap = 2;
        for (const Partition& p : gen_partitions(order, g))
            accumulate(p, PolyXY::constant(1));
        rhs = eval_product_side("RR1", order);
    } else if (family.kind == FamilyKind::R && identityId == "RR2") {
        GenSpec g;
        g.minGap = 2;
        g.minPart = 2;
        for (const Partition& p : gen_partitions(order, g))
            accumulate(p, PolyXY::constant(1));
        rhs = eval_product_side("RR2", order);
    } else if (family.kind == FamilyKind::D && identityId == "HKX3PC") {
        GenSpec g;
        g.minGap = 1;
        for (const Partition& p : gen_partitions(order, g))
            accumulate(p, PolyXY::monomial(p.length(), 0));
        rhs = eval_product_side("HKX3PC", order);
    } else {
        fail("UnregisteredCrossCheck",
             "no registered pairing of " + family_name(family) + " with " +
                 identityId);
    }
    if (const auto d = QSeries::first_difference(lhs, rhs)) {
        std::ostringstream os;
        os << "coefficient mismatch at q^" << d->quarter << "/4, x^" << d->xdeg
           << " y^" << d->ydeg << ": " << d->lhs.get_str() << " vs "
           << d->rhs.get_str();
        record_failure(res, os.str());
    }
    return res;
}

namespace {

template <typename T>
InvolutionTable build_table(const std::string& mapId, int weight,
                            const InvolutionOps<T>& ops) {
    InvolutionTable t;
    t.mapId = mapId;
    t.weight = weight;
    for (const T& in : ops.domain(weight)) {
        if (ops.weight(in) != weight)
            continue;
        if (ops.fixed(in)) {
            t.fixedRows.push_back(ops.row(in));
        } else if (ops.sign(in) < 0) {
            t.pairRows.emplace_back(ops.row(in), ops.row(ops.apply(in)));
        }
    }
    return t;
}

} // namespace

InvolutionTable involution_table(const std::string& mapId, int weight) {
    if (mapId == "phi")
        return build_table(mapId, weight, phi_ops());
    if (mapId == "iota")
        return build_table(mapId, weight, iota_ops());
    if (mapId == "psi1")
        return build_table(mapId, weight, psi1_ops());
    if (mapId == "psi2")
        return build_table(mapId, weight, psi2_ops());
    fail("UnknownMap", "no involution named '" + mapId + "'");
}

std::string emit_table(const std::string& mapId, int weight) {
    const InvolutionTable t = involution_table(mapId, weight);
    std::ostringstream os;
    os << "map " << t.mapId << ", total weight " << t.weight << "\n";
    os << "fixed points (" << t.fixedRows.size() << "):\n";
    for (const std::string& r : t.fixedRows)
        os << "  " << r << "\n";
    os << "cancelling pairs (" << t.pairRows.size() << "):\n";
    for (const auto& [neg, pos] : t.pairRows)
        os << "  -" << neg << "  <->  +" << pos << "\n";
    return os.str();
}

std::string format_result(const SuiteResult& r) {
    std::ostringstream os;
    os << r.suite << ": " << (r.passed ? "PASS" : "FAIL")
       << "  domain=" << r.domainSize;
    if (r.fixedPoints || r.cancellingPairs)
        os << " fixed=" << r.fixedPoints << " pairs=" << r.cancellingPairs;
    if (r.firstFailure)
        os << "  [" << *r.firstFailure << "]";
    return os.str();
}

} // namespace qrr
