#include "qrr/maps.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "qrr/error.hpp"

namespace qrr {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

/// Front-pad a star vector with zeros up to the declared length.
std::vector<int> padded(const PartStarVec& v, int len, const char* what) {
    if (v.length() > len)
        fail("BadIncrementShape",
             std::string(what) + " has more than " + std::to_string(len) +
                 " entries");
    std::vector<int> out(static_cast<size_t>(len - v.length()), 0);
    out.insert(out.end(), v.entries.begin(), v.entries.end());
    return out;
}

bool strictly_increasing(const std::vector<int>& v) {
    return std::adjacent_find(v.begin(), v.end(),
                              std::greater_equal<int>()) == v.end();
}

} // namespace

// ---- strict-odd decomposition bijection ------------------------------------

Partition alpha_base(int i, int j) {
    std::vector<int> parts;
    for (int s = 1; s <= j; ++s) {
        parts.push_back(4 * s - 3);
        parts.push_back(4 * s - 1);
    }
    for (int r = 1; r <= i; ++r)
        parts.push_back(4 * j + 4 * r - 3);
    return Partition(std::move(parts));
}

Partition map_alpha(const StrictOddDecomp& d) {
    if (d.i < 0 || d.j < 0)
        fail("BadIncrementShape", "negative base parameters");
    const std::vector<int> mu = padded(d.mu, d.i, "mu");
    const std::vector<int> eta = padded(d.eta, d.j, "eta");
    for (int v : mu)
        if (v % 2 != 0)
            fail("BadIncrementShape", "mu entries must be even");
    for (int v : eta)
        if (v % 4 != 0)
            fail("BadIncrementShape", "eta entries must be multiples of 4");

    std::vector<int> pairBase(static_cast<size_t>(d.j));
    for (int s = 1; s <= d.j; ++s)
        pairBase[static_cast<size_t>(s - 1)] = 4 * s - 3;
    std::set<int> singles;
    for (int r = 1; r <= d.i; ++r)
        singles.insert(4 * d.j + 4 * r - 3 + mu[static_cast<size_t>(r - 1)]);

    // Pairs advance by whole double-steps (weight 4 each); hitting a
    // singleton swaps it below the pair.
    for (int s = d.j; s >= 1; --s) {
        int b = pairBase[static_cast<size_t>(s - 1)];
        for (int step = eta[static_cast<size_t>(s - 1)] / 4; step > 0; --step) {
            auto hit = singles.find(b + 4);
            if (hit != singles.end()) {
                singles.erase(hit);
                singles.insert(b);
                b += 4;
            } else {
                b += 2;
            }
        }
        pairBase[static_cast<size_t>(s - 1)] = b;
    }

    std::vector<int> parts;
    for (int b : pairBase) {
        parts.push_back(b);
        parts.push_back(b + 2);
    }
    parts.insert(parts.end(), singles.begin(), singles.end());
    std::sort(parts.begin(), parts.end());
    if (!strictly_increasing(parts))
        fail("BadIncrementShape", "increments collide");
    return Partition(std::move(parts));
}

StrictOddDecomp map_alpha_inverse(const Partition& p) {
    for (int r = 1; r <= p.length(); ++r)
        if (p.part(r) % 2 == 0)
            fail("NotInTarget", "parts must be odd");
    if (!p.is_distinct())
        fail("NotInTarget", "parts must be distinct");

    // Within each maximal 2-run the pairs sit at the bottom; an odd run
    // leaves its top part as a singleton.
    std::vector<int> pairBase;
    std::set<int> singles;
    for (const Run& run : runs_with_gap(p, 2)) {
        const int v = p.part(run.start);
        for (int t = 0; t + 1 < run.len; t += 2)
            pairBase.push_back(v + 2 * t);
        if (run.len % 2 == 1)
            singles.insert(v + 2 * (run.len - 1));
    }
    const int j = static_cast<int>(pairBase.size());
    const int i = static_cast<int>(singles.size());

    std::vector<int> eta(static_cast<size_t>(j));
    for (int s = 1; s <= j; ++s) {
        int b = pairBase[static_cast<size_t>(s - 1)];
        int steps = 0;
        while (b > 4 * s - 3) {
            auto hit = singles.find(b - 4);
            if (hit != singles.end() && b - 4 >= 4 * s - 3) {
                singles.erase(hit);
                singles.insert(b);
                b -= 4;
            } else {
                b -= 2;
            }
            ++steps;
        }
        eta[static_cast<size_t>(s - 1)] = 4 * steps;
    }

    std::vector<int> mu;
    int r = 1;
    for (int v : singles) {
        mu.push_back(v - (4 * j + 4 * r - 3));
        ++r;
    }
    for (size_t t = 0; t < mu.size(); ++t)
        if (mu[t] < 0 || mu[t] % 2 != 0 || (t > 0 && mu[t - 1] > mu[t]))
            fail("NotInTarget", "partition is not reachable from the base");
    for (size_t t = 1; t < eta.size(); ++t)
        if (eta[t - 1] > eta[t])
            fail("NotInTarget", "partition is not reachable from the base");
    return {i, j, PartStarVec(std::move(mu)), PartStarVec(std::move(eta))};
}

// ---- phi --------------------------------------------------------------------

namespace {

void check_phi_pair(const LabeledPair& in) {
    const int j = in.lam.length();
    for (int r = 1; r <= j; ++r) {
        const int v = in.lam.parts.part(r);
        const Label l = in.lam.labels[static_cast<size_t>(r - 1)];
        if (v % 2 == 0)
            fail("NotInFamily", "left parts must be odd");
        if (r > 1 && in.lam.parts.part(r - 1) >= v)
            fail("NotInFamily", "left parts must be distinct");
        if (l != Label::Y && l != Label::XY)
            fail("NotInFamily", "left labels must be y or xy");
        if (l == Label::XY && r < j && in.lam.parts.part(r + 1) - v < 4)
            fail("NotInFamily", "an xy part needs a gap of at least 4 above");
    }
    for (int r = 1; r <= in.mu.length(); ++r) {
        const int v = in.mu.part(r);
        if (v % 2 == 0 || v < 2 * j + 1)
            fail("NotInFamily", "right parts must be odd and >= 2j+1");
        if (r > 1 && in.mu.part(r - 1) >= v)
            fail("NotInFamily", "right parts must be distinct");
    }
}

/// 1-based position of the smallest part of the first illegal 2-run, or
/// 0 when every run is legal.
int phi_first_illegal(const LabeledPartition& lam) {
    for (const Run& run : runs_with_gap(lam.parts, 2)) {
        const auto label = [&](int k) {
            return lam.labels[static_cast<size_t>(run.start + k - 2)];
        };
        bool illegal;
        if (run.len % 2 == 1) {
            illegal = true;
            for (int k = 1; k <= run.len; ++k)
                if (label(k) != Label::Y)
                    illegal = false;
        } else {
            illegal = label(run.len) == Label::XY;
            for (int k = 1; k < run.len; ++k)
                if (label(k) != Label::Y)
                    illegal = false;
        }
        if (illegal)
            return run.start;
    }
    return 0;
}

} // namespace

bool phi_is_fixed(const LabeledPair& in) {
    check_phi_pair(in);
    return in.mu.empty() && phi_first_illegal(in.lam) == 0;
}

int phi_sign(const LabeledPair& in) {
    return in.lam.count_label(Label::Y) % 2 == 0 ? 1 : -1;
}

PolyXY phi_marker(const LabeledPair& in) {
    return PolyXY::monomial(in.lam.count_label(Label::XY),
                            in.lam.length() + in.mu.length());
}

LabeledPair map_phi(const LabeledPair& in) {
    check_phi_pair(in);
    const int j = in.lam.length();
    const int a = phi_first_illegal(in.lam);
    const int sfi = a == 0 ? kInf : in.lam.parts.part(a) + 2 * (j - a);
    const int mu1 = in.mu.empty() ? kInf : in.mu.part(1);
    if (sfi == kInf && mu1 == kInf)
        return in;

    if (sfi < mu1) {
        // Remove the 2L-shape rooted at part a and hand its size to the
        // right component.
        std::vector<int> parts;
        std::vector<Label> labels;
        for (int r = 1; r <= j; ++r) {
            if (r == a)
                continue;
            parts.push_back(in.lam.parts.part(r) - (r > a ? 2 : 0));
            labels.push_back(in.lam.labels[static_cast<size_t>(r - 1)]);
        }
        std::vector<int> mu = {sfi};
        mu.insert(mu.end(), in.mu.parts.begin(), in.mu.parts.end());
        return {{Partition(std::move(parts)), std::move(labels)},
                Partition(std::move(mu))};
    }

    // Insert mu1 into the left component as a 2L-shape.
    std::vector<int> mu(in.mu.parts.begin() + 1, in.mu.parts.end());
    int pos, v; // insert v as part pos+1
    if (j == 0 || in.lam.parts.part(1) + 2 * j >= mu1) {
        pos = 0;
        v = mu1 - 2 * j;
    } else {
        pos = 1;
        while (pos < j &&
               in.lam.parts.part(pos + 1) + 2 * j - 2 * (pos + 1) + 2 < mu1)
            ++pos;
        v = mu1 - 2 * j + 2 * pos;
    }
    std::vector<int> parts;
    std::vector<Label> labels;
    for (int r = 1; r <= pos; ++r) {
        parts.push_back(in.lam.parts.part(r));
        labels.push_back(in.lam.labels[static_cast<size_t>(r - 1)]);
    }
    parts.push_back(v);
    labels.push_back(Label::Y);
    for (int r = pos + 1; r <= j; ++r) {
        parts.push_back(in.lam.parts.part(r) + 2);
        labels.push_back(in.lam.labels[static_cast<size_t>(r - 1)]);
    }
    return {{Partition(std::move(parts)), std::move(labels)},
            Partition(std::move(mu))};
}

// ---- iota -------------------------------------------------------------------

namespace {

void check_iota_pair(const LabeledPair& in) {
    const int l = in.lam.length();
    for (int r = 1; r <= l; ++r) {
        const int v = in.lam.parts.part(r);
        const Label lab = in.lam.labels[static_cast<size_t>(r - 1)];
        if (r > 1 && in.lam.parts.part(r - 1) >= v)
            fail("NotInFamily", "left parts must be distinct");
        if (lab != Label::X && lab != Label::None)
            fail("NotInFamily", "left labels must be x or none");
        if (lab == Label::None && r < l && in.lam.parts.part(r + 1) - v < 2)
            fail("NotInFamily",
                 "an unlabeled part needs a gap of at least 2 above");
    }
    for (int r = 1; r <= in.mu.length(); ++r) {
        const int v = in.mu.part(r);
        if (v < l + 1)
            fail("NotInFamily", "right parts must be >= l(lam)+1");
        if (r > 1 && in.mu.part(r - 1) >= v)
            fail("NotInFamily", "right parts must be distinct");
    }
}

int iota_first_unlabeled(const LabeledPartition& lam) {
    for (int r = 1; r <= lam.length(); ++r)
        if (lam.labels[static_cast<size_t>(r - 1)] == Label::None)
            return r;
    return 0;
}

} // namespace

bool iota_is_fixed(const LabeledPair& in) {
    check_iota_pair(in);
    return in.mu.empty() && iota_first_unlabeled(in.lam) == 0;
}

int iota_sign(const LabeledPair& in) {
    return in.mu.length() % 2 == 0 ? 1 : -1;
}

PolyXY iota_marker(const LabeledPair& in) {
    return PolyXY::monomial(in.lam.count_label(Label::X), 0);
}

LabeledPair map_iota(const LabeledPair& in) {
    check_iota_pair(in);
    const int l = in.lam.length();
    const int k = iota_first_unlabeled(in.lam);
    const int sfi = k == 0 ? kInf : in.lam.parts.part(k) + (l - k);
    const int mu1 = in.mu.empty() ? kInf : in.mu.part(1);
    if (sfi == kInf && mu1 == kInf)
        return in;

    if (sfi < mu1) {
        std::vector<int> parts;
        std::vector<Label> labels;
        for (int r = 1; r <= l; ++r) {
            if (r == k)
                continue;
            parts.push_back(in.lam.parts.part(r) - (r > k ? 1 : 0));
            labels.push_back(in.lam.labels[static_cast<size_t>(r - 1)]);
        }
        std::vector<int> mu = {sfi};
        mu.insert(mu.end(), in.mu.parts.begin(), in.mu.parts.end());
        return {{Partition(std::move(parts)), std::move(labels)},
                Partition(std::move(mu))};
    }

    // Insert mu1 as an L-shape: place the new unlabeled part above the
    // highest position whose own L-shape, once the part sits on top of
    // it, would not exceed mu1.
    std::vector<int> mu(in.mu.parts.begin() + 1, in.mu.parts.end());
    int pos = 0;
    for (int r = 1; r <= l; ++r)
        if (in.lam.parts.part(r) + (l - r) + 1 <= mu1)
            pos = r;
    const int v = mu1 - (l - pos);
    std::vector<int> parts;
    std::vector<Label> labels;
    for (int r = 1; r <= pos; ++r) {
        parts.push_back(in.lam.parts.part(r));
        labels.push_back(in.lam.labels[static_cast<size_t>(r - 1)]);
    }
    parts.push_back(v);
    labels.push_back(Label::None);
    for (int r = pos + 1; r <= l; ++r) {
        parts.push_back(in.lam.parts.part(r) + 1);
        labels.push_back(in.lam.labels[static_cast<size_t>(r - 1)]);
    }
    return {{Partition(std::move(parts)), std::move(labels)},
            Partition(std::move(mu))};
}

// ---- tau --------------------------------------------------------------------

LabeledPartition tau_base(int j, int k) {
    std::vector<int> parts;
    std::vector<Label> labels;
    for (int s = 1; s <= j; ++s) {
        parts.push_back(s + 1);
        labels.push_back(Label::XY2);
    }
    for (int s = 1; s <= k; ++s) {
        parts.push_back(j + 2 * s);
        labels.push_back(Label::X2Y2);
    }
    return {Partition(std::move(parts)), std::move(labels)};
}

LabeledPartition map_tau(const TauDecomp& d) {
    if (d.j < 0 || d.k < 0)
        fail("BadIncrementShape", "negative base parameters");
    const std::vector<int> mu = padded(d.mu, d.j, "mu");
    const std::vector<int> eta = padded(d.eta, d.k, "eta");

    std::map<int, Label> at; // value -> label
    for (int s = 1; s <= d.j; ++s)
        at[s + 1] = Label::XY2;
    for (int s = 1; s <= d.k; ++s)
        at[d.j + 2 * s + eta[static_cast<size_t>(s - 1)]] = Label::X2Y2;
    if (static_cast<int>(at.size()) != d.j + d.k)
        fail("BadIncrementShape", "increments collide");

    // One forward move lifts the mover by one; landing next to an
    // occupied value swaps that part underneath instead.
    for (int s = d.j; s >= 1; --s) {
        int v = s + 1;
        for (int step = mu[static_cast<size_t>(s - 1)]; step > 0; --step) {
            auto hit = at.find(v + 1);
            if (hit != at.end()) {
                const Label other = hit->second;
                at.erase(hit);
                at.erase(v);
                at[v] = other;
                at[v + 2] = Label::XY2;
                v += 2;
            } else {
                at.erase(v);
                at[v + 1] = Label::XY2;
                v += 1;
            }
        }
    }

    std::vector<int> parts;
    std::vector<Label> labels;
    for (const auto& [value, label] : at) {
        parts.push_back(value);
        labels.push_back(label);
    }
    return {Partition(std::move(parts)), std::move(labels)};
}

TauDecomp map_tau_inverse(const LabeledPartition& lam) {
    const int l = lam.length();
    for (int r = 1; r <= l; ++r) {
        const int v = lam.parts.part(r);
        const Label lab = lam.labels[static_cast<size_t>(r - 1)];
        if (v < 2)
            fail("NotInTarget", "parts must be >= 2");
        if (r > 1 && lam.parts.part(r - 1) >= v)
            fail("NotInTarget", "parts must be distinct");
        if (lab != Label::XY2 && lab != Label::X2Y2)
            fail("NotInTarget", "labels must be xy2 or x2y2");
        if (lab == Label::X2Y2 && r < l && lam.parts.part(r + 1) - v < 2)
            fail("NotInTarget",
                 "an x2y2 part needs a gap of at least 2 above");
    }
    const int j = lam.count_label(Label::XY2);
    const int k = lam.count_label(Label::X2Y2);

    std::map<int, Label> at;
    for (int r = 1; r <= l; ++r)
        at[lam.parts.part(r)] = lam.labels[static_cast<size_t>(r - 1)];

    std::vector<int> mu(static_cast<size_t>(j));
    for (int s = 1; s <= j; ++s) {
        // The mover is the s-th smallest xy2-labeled part.
        int v = 0, seen = 0;
        for (const auto& [value, label] : at)
            if (label == Label::XY2 && ++seen == s) {
                v = value;
                break;
            }
        int steps = 0;
        while (v > s + 1) {
            auto hit = at.find(v - 2);
            if (hit != at.end() && v - 2 >= s + 1) {
                const Label other = hit->second;
                at.erase(hit);
                at.erase(v);
                at[v - 1] = other;
                at[v - 2] = Label::XY2;
                v -= 2;
            } else {
                at.erase(v);
                at[v - 1] = Label::XY2;
                v -= 1;
            }
            ++steps;
        }
        mu[static_cast<size_t>(s - 1)] = steps;
    }

    std::vector<int> eta(static_cast<size_t>(k));
    int s = 0;
    for (const auto& [value, label] : at)
        if (label == Label::X2Y2) {
            ++s;
            eta[static_cast<size_t>(s - 1)] = value - (j + 2 * s);
        }
    for (size_t t = 0; t < eta.size(); ++t)
        if (eta[t] < 0 || (t > 0 && eta[t - 1] > eta[t]))
            fail("NotInTarget", "partition is not reachable from the base");
    for (size_t t = 1; t < mu.size(); ++t)
        if (mu[t - 1] > mu[t])
            fail("NotInTarget", "partition is not reachable from the base");
    return {j, k, PartStarVec(std::move(mu)), PartStarVec(std::move(eta))};
}

// ---- theta1 -----------------------------------------------------------------

namespace {

void check_theta1_pair(const PartitionPair& in) {
    const int l = in.a.length();
    for (int r = 1; r <= l; ++r)
        if (in.a.part(r) % 2 == 0)
            fail("NotInFamily", "left parts must be odd");
    for (int r = 1; r <= in.b.length(); ++r) {
        const int v = in.b.part(r);
        if (v % 2 != 0 || v < 2 * l + 2)
            fail("NotInFamily", "right parts must be even and >= 2l+2");
        if (r > 1 && in.b.part(r - 1) >= v)
            fail("NotInFamily", "right parts must be distinct");
    }
}

} // namespace

PartitionPair map_theta1(const PartitionPair& in) {
    check_theta1_pair(in);
    std::vector<int> beta = in.a.parts;
    std::vector<int> emitted;
    const int l = static_cast<int>(beta.size());
    for (;;) {
        int t = 0;
        while (t < l && beta[static_cast<size_t>(t)] % 4 != 3)
            ++t;
        if (t == l)
            break;
        emitted.push_back(2 * (l - t));
        for (int r = t; r < l; ++r)
            beta[static_cast<size_t>(r)] -= 2;
    }
    std::vector<int> gamma(emitted.rbegin(), emitted.rend());
    gamma.insert(gamma.end(), in.b.parts.begin(), in.b.parts.end());
    return {Partition(std::move(beta)), Partition(std::move(gamma))};
}

PartitionPair map_theta1_inverse(const PartitionPair& in) {
    const int l = in.a.length();
    for (int r = 1; r <= l; ++r)
        if (in.a.part(r) % 4 != 1)
            fail("NotInFamily", "left parts must be == 1 mod 4");
    for (int r = 1; r <= in.b.length(); ++r) {
        const int v = in.b.part(r);
        if (v % 2 != 0)
            fail("NotInFamily", "right parts must be even");
        if (r > 1 && in.b.part(r - 1) >= v)
            fail("NotInFamily", "right parts must be distinct");
    }
    std::vector<int> lam = in.a.parts;
    std::vector<int> mu;
    for (int r = 1; r <= in.b.length(); ++r) {
        const int v = in.b.part(r);
        if (v < 2 * l + 2) {
            // Undo the emission: grow the top v/2 parts by 2 each.
            for (int t = l - v / 2; t < l; ++t)
                lam[static_cast<size_t>(t)] += 2;
        } else {
            mu.push_back(v);
        }
    }
    return {Partition(std::move(lam)), Partition(std::move(mu))};
}

// ---- theta2 -----------------------------------------------------------------

namespace {

void check_theta2_pair(const PartitionPair& in) {
    const int l = in.a.length();
    for (int r = 2; r <= l; ++r)
        if (in.a.part(r) - in.a.part(r - 1) < 2)
            fail("NotInFamily", "left parts must differ by at least 2");
    int i;
    if (l % 2 == 0) {
        i = l / 2;
    } else {
        i = (l + 1) / 2;
        if (in.a.part(1) < 2)
            fail("NotInFamily",
                 "with an odd number of parts the smallest must exceed 1");
    }
    for (int r = 1; r <= in.b.length(); ++r) {
        const int v = in.b.part(r);
        if (v < 2 * i + 1)
            fail("NotInFamily", "right parts must be >= 2i+1");
        if (r > 1 && in.b.part(r - 1) >= v)
            fail("NotInFamily", "right parts must be distinct");
    }
}

} // namespace

PartitionPair map_theta2(const PartitionPair& in) {
    check_theta2_pair(in);
    std::vector<int> beta = in.a.parts;
    std::vector<int> emitted;
    for (;;) {
        const int m = static_cast<int>(beta.size());
        int t = 0;
        while (t < m && beta[static_cast<size_t>(t)] % 2 == 0)
            ++t;
        if (t == m)
            break;
        emitted.push_back(m - t);
        for (int r = t; r < m; ++r)
            beta[static_cast<size_t>(r)] -= 1;
        if (beta[static_cast<size_t>(t)] == 0)
            beta.erase(beta.begin() + t);
    }
    std::vector<int> gamma(emitted.rbegin(), emitted.rend());
    gamma.insert(gamma.end(), in.b.parts.begin(), in.b.parts.end());
    return {Partition(std::move(beta)), Partition(std::move(gamma))};
}

PartitionPair map_theta2_inverse(const PartitionPair& in) {
    for (int r = 1; r <= in.a.length(); ++r) {
        const int v = in.a.part(r);
        if (v % 2 != 0)
            fail("NotInFamily", "left parts must be even");
        if (r > 1 && in.a.part(r - 1) >= v)
            fail("NotInFamily", "left parts must be distinct");
    }
    if (!in.b.is_distinct())
        fail("NotInFamily", "right parts must be distinct");

    std::vector<int> lam = in.a.parts;
    std::vector<int> mu;
    int r = 1;
    for (; r <= in.b.length(); ++r) {
        const int c = in.b.part(r);
        const int m = static_cast<int>(lam.size());
        if (c <= m) {
            for (int t = m - c; t < m; ++t)
                lam[static_cast<size_t>(t)] += 1;
        } else if (c == m + 1 && m % 2 == 1) {
            // Undo the dropped zero: every part grows by 1 and the
            // bottom 1 returns.
            for (int& part : lam)
                part += 1;
            lam.insert(lam.begin(), 1);
        } else {
            break;
        }
    }
    for (; r <= in.b.length(); ++r)
        mu.push_back(in.b.part(r));

    PartitionPair out{Partition(std::move(lam)), Partition(std::move(mu))};
    check_theta2_pair(out);
    return out;
}

// ---- psi1 -------------------------------------------------------------------

namespace {

struct Psi1Decoded {
    std::vector<int> K;
    std::vector<int> T;
};

Psi1Decoded psi1_decode(const PartitionPair& in) {
    Psi1Decoded d;
    const int i = in.a.length();
    for (int r = 1; r <= i; ++r) {
        const int inc = in.a.part(r) - (2 * r - 1);
        if (inc < 0 || inc % 8 != 0)
            fail("NotInFamily", "left parts must have the form 2r-1+8k_r");
        d.K.push_back(inc / 8);
    }
    for (int r = 1; r <= in.b.length(); ++r) {
        const int inc = in.b.part(r) - (2 * i + 2 * r - 1);
        if (inc < 0 || inc % 8 != 0)
            fail("NotInFamily", "right parts must have the form 2i+2r-1+8t_r");
        d.T.push_back(inc / 8);
    }
    for (size_t t = 1; t < d.K.size(); ++t)
        if (d.K[t - 1] > d.K[t])
            fail("NotInFamily", "left increments must be weakly increasing");
    for (size_t t = 1; t < d.T.size(); ++t)
        if (d.T[t - 1] > d.T[t])
            fail("NotInFamily", "right increments must be weakly increasing");
    return d;
}

PartitionPair psi1_encode(const std::vector<int>& K, const std::vector<int>& T) {
    const int i = static_cast<int>(K.size());
    std::vector<int> lam, mu;
    for (int r = 1; r <= i; ++r)
        lam.push_back(2 * r - 1 + 8 * K[static_cast<size_t>(r - 1)]);
    for (int r = 1; r <= static_cast<int>(T.size()); ++r)
        mu.push_back(2 * i + 2 * r - 1 + 8 * T[static_cast<size_t>(r - 1)]);
    return {Partition(std::move(lam)), Partition(std::move(mu))};
}

/// First index (1-based) of the first odd-length run of equal K-entries,
/// or 0 when every run has even length.
int psi1_first_odd_run(const std::vector<int>& K) {
    for (const Run& run : stat_zero_sequences(PartStarVec(K)))
        if (run.len % 2 == 1)
            return run.start;
    return 0;
}

} // namespace

bool psi1_is_fixed(const PartitionPair& in) {
    const Psi1Decoded d = psi1_decode(in);
    return d.T.empty() && psi1_first_odd_run(d.K) == 0;
}

int psi1_sign(const PartitionPair& in) {
    psi1_decode(in);
    return in.b.length() % 2 == 0 ? 1 : -1;
}

PartitionPair map_psi1(const PartitionPair& in) {
    Psi1Decoded d = psi1_decode(in);
    const int m = psi1_first_odd_run(d.K);
    const int fval = m == 0 ? kInf : d.K[static_cast<size_t>(m - 1)];
    const int t1 = d.T.empty() ? kInf : d.T.front();
    if (fval == kInf && t1 == kInf)
        return in;

    if (fval <= t1) {
        std::vector<int> K = d.K;
        K.erase(K.begin() + (m - 1));
        std::vector<int> T = {fval};
        T.insert(T.end(), d.T.begin(), d.T.end());
        return psi1_encode(K, T);
    }
    std::vector<int> K = d.K;
    K.insert(std::upper_bound(K.begin(), K.end(), t1 - 1), t1);
    std::vector<int> T(d.T.begin() + 1, d.T.end());
    return psi1_encode(K, T);
}

Partition psi1_fold(const Partition& lam) {
    const Psi1Decoded d = psi1_decode({lam, Partition()});
    if (lam.length() % 2 != 0)
        fail("OddLength", "folding needs an even number of parts");
    if (psi1_first_odd_run(d.K) != 0)
        fail("NotFixed", "an odd-length equal-entry run remains");
    std::vector<int> parts;
    for (int t = 1; t <= lam.length() / 2; ++t)
        parts.push_back(lam.part(2 * t - 1) + lam.part(2 * t));
    return Partition(std::move(parts));
}

Partition psi1_fold_inverse(const Partition& pi) {
    std::vector<int> K;
    for (int t = 1; t <= pi.length(); ++t) {
        const int inc = pi.part(t) - (8 * t - 4);
        if (inc < 0 || inc % 16 != 0)
            fail("NotInTarget", "parts must have the form 8m-4+16s_m");
        K.push_back(inc / 16);
        K.push_back(inc / 16);
    }
    for (size_t t = 1; t < K.size(); ++t)
        if (K[t - 1] > K[t])
            fail("NotInTarget", "increments must be weakly increasing");
    return psi1_encode(K, {}).a;
}

// ---- psi2 -------------------------------------------------------------------

namespace {

std::vector<int> psi2_decode(const Partition& p) {
    std::vector<int> inc;
    for (int r = 1; r <= p.length(); ++r) {
        const int d = p.part(r) - (6 * r - 3);
        if (d < 0 || d % 4 != 0)
            fail("NotInFamily", "parts must have the form 6r-3+4a_r");
        inc.push_back(d / 4);
    }
    for (size_t t = 1; t < inc.size(); ++t)
        if (inc[t - 1] > inc[t])
            fail("NotInFamily", "increments must be weakly increasing");
    return inc;
}

Partition psi2_encode(const std::vector<int>& inc) {
    std::vector<int> parts;
    for (int r = 1; r <= static_cast<int>(inc.size()); ++r)
        parts.push_back(6 * r - 3 + 4 * inc[static_cast<size_t>(r - 1)]);
    return Partition(std::move(parts));
}

} // namespace

Partition SignedTriple::eta() const {
    return Partition(
        std::vector<int>(static_cast<size_t>(lam.length() * mu.length()), 2));
}

int SignedTriple::total_weight() const {
    return lam.weight() + mu.weight() + 2 * lam.length() * mu.length();
}

bool psi2_is_fixed(const SignedTriple& in) {
    return psi2_decode(in.lam) == psi2_decode(in.mu);
}

int psi2_sign(const SignedTriple& in) {
    const int d = ((in.lam.length() - in.mu.length()) % 4 + 4) % 4;
    return (d == 2 || d == 3) ? -1 : 1;
}

SignedTriple map_psi2(const SignedTriple& in) {
    const std::vector<int> A = psi2_decode(in.lam);
    const std::vector<int> B = psi2_decode(in.mu);
    const int i = static_cast<int>(A.size());
    const int j = static_cast<int>(B.size());
    const auto entry = [](const std::vector<int>& v, int r) {
        return r <= static_cast<int>(v.size()) ? v[static_cast<size_t>(r - 1)]
                                               : kInf;
    };
    int p = 1;
    while (p <= std::max(i, j) && entry(A, p) == entry(B, p))
        ++p;
    if (p > std::max(i, j))
        return in; // fixed: equal lengths, equal increments

    std::vector<int> A2, B2;
    if (entry(A, p) > entry(B, p)) {
        // The smaller mu-side increment migrates into lam at slot p.
        A2.assign(A.begin(), A.begin() + (p - 1));
        A2.push_back(entry(B, p));
        for (int r = p; r <= i; ++r)
            A2.push_back(entry(A, r) - 1);
        B2.assign(B.begin(), B.begin() + (p - 1));
        for (int r = p + 1; r <= j; ++r)
            B2.push_back(entry(B, r) + 1);
    } else {
        B2.assign(B.begin(), B.begin() + (p - 1));
        B2.push_back(entry(A, p));
        for (int r = p; r <= j; ++r)
            B2.push_back(entry(B, r) - 1);
        A2.assign(A.begin(), A.begin() + (p - 1));
        for (int r = p + 1; r <= i; ++r)
            A2.push_back(entry(A, r) + 1);
    }
    return {psi2_encode(A2), psi2_encode(B2)};
}

Partition psi2_fold(const SignedTriple& t) {
    if (!psi2_is_fixed(t))
        fail("NotFixed", "only fixed triples fold");
    std::vector<int> parts;
    for (int m = 1; m <= t.lam.length(); ++m)
        parts.push_back(t.lam.part(m) + t.mu.part(m) + (4 * m - 2));
    return Partition(std::move(parts));
}

SignedTriple psi2_fold_inverse(const Partition& pi) {
    std::vector<int> inc;
    for (int m = 1; m <= pi.length(); ++m) {
        const int d = pi.part(m) - (16 * m - 8);
        if (d < 0 || d % 8 != 0)
            fail("NotInTarget", "parts must have the form 16m-8+8a_m");
        inc.push_back(d / 8);
    }
    for (size_t t = 1; t < inc.size(); ++t)
        if (inc[t - 1] > inc[t])
            fail("NotInTarget", "increments must be weakly increasing");
    const Partition half = psi2_encode(inc);
    return {half, half};
}

// ---- uniform driver ---------------------------------------------------------

namespace {

std::vector<std::string> split_components(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (!s.empty() && s.front() == '(' && s.back() == ')')
        s = s.substr(1, s.size() - 2);
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == '|') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

void need_components(const std::vector<std::string>& c, size_t lo, size_t hi,
                     const std::string& mapId) {
    if (c.size() < lo || c.size() > hi)
        fail("ParseError", "wrong number of components for " + mapId);
}

PartStarVec star_of_partition(const Partition& p) {
    return PartStarVec(p.parts);
}

std::string render_star(const PartStarVec& v) {
    std::vector<int> nz;
    for (int e : v.entries)
        if (e > 0)
            nz.push_back(e);
    return render(Partition(std::move(nz)));
}

std::string join2(const std::string& a, const std::string& b) {
    return "(" + a + " | " + b + ")";
}

std::string join3(const std::string& a, const std::string& b,
                  const std::string& c) {
    return "(" + a + " | " + b + " | " + c + ")";
}

/// Recover (i, j) from a rendered base partition.
std::pair<int, int> alpha_base_params(const Partition& base) {
    const int l = base.length();
    for (int j = l / 2; j >= 0; --j)
        if (base == alpha_base(l - 2 * j, j))
            return {l - 2 * j, j};
    fail("BadIncrementShape", "not a base partition");
}

MapReport finish(MapReport r) {
    return r;
}

} // namespace

std::vector<std::string> map_list() {
    return {"alpha", "phi", "tau", "iota", "theta1", "theta2", "psi1", "psi2"};
}

MapReport run_map(const std::string& mapId, const std::string& input,
                  bool inverse) {
    const std::vector<std::string> comp = split_components(input);
    MapReport r;
    r.markerIn = r.markerOut = "1";

    if (mapId == "alpha") {
        if (!inverse) {
            need_components(comp, 3, 3, mapId);
            const Partition base = parse_partition(comp[0]);
            const auto [i, j] = alpha_base_params(base);
            StrictOddDecomp d{i, j, star_of_partition(parse_partition(comp[1])),
                              star_of_partition(parse_partition(comp[2]))};
            const Partition out = map_alpha(d);
            r.input = join3(render(base), render_star(d.mu), render_star(d.eta));
            r.output = render(out);
            r.weightIn = base.weight() + d.mu.weight() + d.eta.weight();
            r.weightOut = out.weight();
            r.markerIn = PolyXY::monomial(i, i + 2 * j).str();
            r.markerOut = PolyXY::monomial(stat_sol2(out), out.length()).str();
        } else {
            need_components(comp, 1, 1, mapId);
            const Partition p = parse_partition(comp[0]);
            const StrictOddDecomp d = map_alpha_inverse(p);
            r.input = render(p);
            r.output = join3(render(alpha_base(d.i, d.j)), render_star(d.mu),
                             render_star(d.eta));
            r.weightIn = p.weight();
            r.weightOut = alpha_base(d.i, d.j).weight() + d.mu.weight() +
                          d.eta.weight();
            r.markerIn = PolyXY::monomial(stat_sol2(p), p.length()).str();
            r.markerOut = PolyXY::monomial(d.i, d.i + 2 * d.j).str();
        }
        return finish(r);
    }

    if (mapId == "phi" || mapId == "iota") {
        need_components(comp, 2, 2, mapId);
        const LabelScheme scheme =
            mapId == "phi" ? LabelScheme::XMeansXY : LabelScheme::XMeansX;
        const LabeledPair in{parse_labeled(comp[0], scheme),
                             parse_partition(comp[1])};
        const LabeledPair out = mapId == "phi" ? map_phi(in) : map_iota(in);
        r.input = join2(render(in.lam, scheme), render(in.mu));
        r.output = join2(render(out.lam, scheme), render(out.mu));
        r.weightIn = in.lam.weight() + in.mu.weight();
        r.weightOut = out.lam.weight() + out.mu.weight();
        if (mapId == "phi") {
            r.markerIn = phi_marker(in).str();
            r.markerOut = phi_marker(out).str();
            r.signIn = phi_sign(in);
            r.signOut = phi_sign(out);
            r.isFixedPoint = phi_is_fixed(in);
        } else {
            r.markerIn = iota_marker(in).str();
            r.markerOut = iota_marker(out).str();
            r.signIn = iota_sign(in);
            r.signOut = iota_sign(out);
            r.isFixedPoint = iota_is_fixed(in);
        }
        return finish(r);
    }

    if (mapId == "tau") {
        if (!inverse) {
            need_components(comp, 3, 3, mapId);
            const LabeledPartition base =
                parse_labeled(comp[0], LabelScheme::Full);
            const int j = base.count_label(Label::XY2);
            const int k = base.count_label(Label::X2Y2);
            if (base != tau_base(j, k))
                fail("BadIncrementShape", "not a base partition");
            TauDecomp d{j, k, star_of_partition(parse_partition(comp[1])),
                        star_of_partition(parse_partition(comp[2]))};
            const LabeledPartition out = map_tau(d);
            r.input = join3(render(base, LabelScheme::Full), render_star(d.mu),
                            render_star(d.eta));
            r.output = render(out, LabelScheme::Full);
            r.weightIn = base.weight() + d.mu.weight() + d.eta.weight();
            r.weightOut = out.weight();
            r.markerIn = base.monomial().str();
            r.markerOut = out.monomial().str();
        } else {
            need_components(comp, 1, 1, mapId);
            const LabeledPartition lam =
                parse_labeled(comp[0], LabelScheme::Full);
            const TauDecomp d = map_tau_inverse(lam);
            const LabeledPartition base = tau_base(d.j, d.k);
            r.input = render(lam, LabelScheme::Full);
            r.output = join3(render(base, LabelScheme::Full), render_star(d.mu),
                             render_star(d.eta));
            r.weightIn = lam.weight();
            r.weightOut = base.weight() + d.mu.weight() + d.eta.weight();
            r.markerIn = lam.monomial().str();
            r.markerOut = base.monomial().str();
        }
        return finish(r);
    }

    if (mapId == "theta1" || mapId == "theta2") {
        need_components(comp, 2, 2, mapId);
        const PartitionPair in{parse_partition(comp[0]),
                               parse_partition(comp[1])};
        PartitionPair out;
        if (mapId == "theta1")
            out = inverse ? map_theta1_inverse(in) : map_theta1(in);
        else
            out = inverse ? map_theta2_inverse(in) : map_theta2(in);
        r.input = join2(render(in.a), render(in.b));
        r.output = join2(render(out.a), render(out.b));
        r.weightIn = in.a.weight() + in.b.weight();
        r.weightOut = out.a.weight() + out.b.weight();
        if (mapId == "theta1") {
            r.markerIn = PolyXY::monomial(in.a.length(), 0).str();
            r.markerOut = PolyXY::monomial(out.a.length(), 0).str();
        }
        return finish(r);
    }

    if (mapId == "psi1") {
        need_components(comp, 2, 2, mapId);
        const PartitionPair in{parse_partition(comp[0]),
                               parse_partition(comp[1])};
        const PartitionPair out = map_psi1(in);
        r.input = join2(render(in.a), render(in.b));
        r.output = join2(render(out.a), render(out.b));
        r.weightIn = in.a.weight() + in.b.weight();
        r.weightOut = out.a.weight() + out.b.weight();
        r.markerIn = PolyXY::monomial(in.a.length() + in.b.length(), 0).str();
        r.markerOut = PolyXY::monomial(out.a.length() + out.b.length(), 0).str();
        r.signIn = psi1_sign(in);
        r.signOut = psi1_sign(out);
        r.isFixedPoint = psi1_is_fixed(in);
        return finish(r);
    }

    if (mapId == "psi2") {
        need_components(comp, 2, 3, mapId);
        const SignedTriple in{parse_partition(comp[0]),
                              parse_partition(comp[1])};
        if (comp.size() == 3 && parse_partition(comp[2]) != in.eta())
            fail("NotInFamily", "third component must be the pad of 2s");
        const SignedTriple out = map_psi2(in);
        r.input = join3(render(in.lam), render(in.mu), render(in.eta()));
        r.output = join3(render(out.lam), render(out.mu), render(out.eta()));
        r.weightIn = in.total_weight();
        r.weightOut = out.total_weight();
        r.markerIn =
            PolyXY::monomial(in.lam.length() + in.mu.length(), 0).str();
        r.markerOut =
            PolyXY::monomial(out.lam.length() + out.mu.length(), 0).str();
        r.signIn = psi2_sign(in);
        r.signOut = psi2_sign(out);
        r.isFixedPoint = psi2_is_fixed(in);
        return finish(r);
    }

    fail("UnknownMap", "no map named " + mapId);
}

} // namespace qrr
