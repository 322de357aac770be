#include "qrr/families.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "qrr/error.hpp"

namespace qrr {

namespace {

struct KindInfo {
    const char* name;
    int params;
};

const std::map<FamilyKind, KindInfo>& kind_table() {
    static const std::map<FamilyKind, KindInfo> t = {
        {FamilyKind::P, {"P", 0}},       {FamilyKind::Pstar, {"Pstar", 1}},
        {FamilyKind::D, {"D", 0}},       {FamilyKind::Do, {"Do", 0}},
        {FamilyKind::De, {"De", 0}},     {FamilyKind::R, {"R", 0}},
        {FamilyKind::Ek, {"Ek", 1}},     {FamilyKind::Ekn, {"Ekn", 2}},
        {FamilyKind::F, {"F", 0}},       {FamilyKind::AI, {"AI", 1}},
        {FamilyKind::BI, {"BI", 1}},     {FamilyKind::AIIL, {"AIIL", 2}},
        {FamilyKind::BIIL, {"BIIL", 2}}, {FamilyKind::AIIR, {"AIIR", 2}},
        {FamilyKind::BIIR, {"BIIR", 2}}, {FamilyKind::AIII, {"AIII", 2}},
        {FamilyKind::BIII, {"BIII", 2}}, {FamilyKind::AIV, {"AIV", 1}},
        {FamilyKind::BIV, {"BIV", 1}},   {FamilyKind::AV, {"AV", 1}},
        {FamilyKind::BV, {"BV", 1}},     {FamilyKind::AVI, {"AVI", 1}},
        {FamilyKind::BVI, {"BVI", 2}},   {FamilyKind::AVII, {"AVII", 1}},
        {FamilyKind::BVII, {"BVII", 1}}, {FamilyKind::ETA, {"ETA", 2}},
        {FamilyKind::RI, {"RI", 1}},     {FamilyKind::RII, {"RII", 1}},
        {FamilyKind::MI, {"MI", 1}},     {FamilyKind::MII, {"MII", 1}},
    };
    return t;
}

bool part_allowed(int v, const GenSpec& s) {
    if (s.residues.empty())
        return true;
    const int r = v % s.modulus;
    return std::find(s.residues.begin(), s.residues.end(), r) != s.residues.end();
}

} // namespace

FamilyId parse_family(const std::string& text) {
    std::vector<std::string> tok;
    std::string cur;
    for (char c : text) {
        if (c == '_') {
            tok.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    tok.push_back(cur);
    for (const auto& [kind, info] : kind_table()) {
        if (tok[0] != info.name)
            continue;
        if (static_cast<int>(tok.size()) - 1 > info.params)
            fail("ParseError", "too many parameters for family " + tok[0]);
        FamilyId f{kind, -1, -1};
        try {
            if (tok.size() > 1)
                f.a = std::stoi(tok[1]);
            if (tok.size() > 2)
                f.b = std::stoi(tok[2]);
        } catch (const std::exception&) {
            fail("ParseError", "bad family parameter in '" + text + "'");
        }
        return f;
    }
    fail("ParseError", "unknown family '" + text + "'");
}

std::string family_name(const FamilyId& f) {
    const KindInfo& info = kind_table().at(f.kind);
    std::ostringstream os;
    os << info.name;
    if (info.params >= 1 && f.a >= 0)
        os << "_" << f.a;
    if (info.params >= 2 && f.b >= 0)
        os << "_" << f.b;
    return os.str();
}

std::vector<Partition> gen_partitions(int maxWeight, const GenSpec& spec) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int minNext, int remaining) {
        const int len = static_cast<int>(cur.size());
        if (spec.exactLen < 0 || len == spec.exactLen)
            out.emplace_back(cur);
        if (spec.maxLen >= 0 && len >= spec.maxLen)
            return;
        if (spec.exactLen >= 0 && len >= spec.exactLen)
            return;
        for (int v = minNext; v <= remaining; ++v) {
            if (!part_allowed(v, spec))
                continue;
            cur.push_back(v);
            rec(v + spec.minGap, remaining - v);
            cur.pop_back();
        }
    };
    rec(spec.minPart, maxWeight);
    return out;
}

std::vector<PartStarVec> gen_star_vectors(int len, int maxSum) {
    std::vector<PartStarVec> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int minNext, int remaining) {
        if (static_cast<int>(cur.size()) == len) {
            out.emplace_back(cur);
            return;
        }
        for (int v = minNext; v <= remaining; ++v) {
            cur.push_back(v);
            rec(v, remaining - v);
            cur.pop_back();
        }
    };
    if (len >= 0 && maxSum >= 0)
        rec(0, maxSum);
    return out;
}

// --- membership -------------------------------------------------------------

namespace {

bool gaps_at_least(const Partition& p, int g) {
    for (int r = 1; r < p.length(); ++r)
        if (p.part(r + 1) - p.part(r) < g)
            return false;
    return true;
}

bool all_residue(const Partition& p, int mod, int res) {
    for (int v : p.parts)
        if (v % mod != res)
            return false;
    return true;
}

/// Does p have the form part(r) = first + step*(r-1) + inc*s_r with
/// (s_1..s_m) a weakly increasing non-negative vector?
bool has_arithmetic_star_form(const Partition& p, int first, int step, int inc) {
    int prev = 0;
    for (int r = 1; r <= p.length(); ++r) {
        const int d = p.part(r) - (first + step * (r - 1));
        if (d < 0 || d % inc != 0 || d / inc < prev)
            return false;
        prev = d / inc;
    }
    return true;
}

PartStarVec star_of(const Partition& p, int first, int step, int inc) {
    std::vector<int> s;
    for (int r = 1; r <= p.length(); ++r)
        s.push_back((p.part(r) - (first + step * (r - 1))) / inc);
    return PartStarVec(std::move(s));
}

bool labels_all(const LabeledPartition& p, Label l) {
    for (Label v : p.labels)
        if (v != l)
            return false;
    return true;
}

bool no_odd_zero_run(const PartStarVec& v) {
    for (const Run& r : stat_zero_sequences(v))
        if (r.len % 2 == 1)
            return false;
    return true;
}

} // namespace

bool is_member(const FamilyId& f, const Partition& p) {
    switch (f.kind) {
    case FamilyKind::P:
        return true;
    case FamilyKind::D:
        return p.is_distinct();
    case FamilyKind::Do:
        return p.is_distinct() && all_residue(p, 2, 1);
    case FamilyKind::De:
        return p.is_distinct() && all_residue(p, 2, 0);
    case FamilyKind::R:
        return gaps_at_least(p, 2);
    case FamilyKind::Ek:
        return all_residue(p, f.a, 0);
    case FamilyKind::Ekn:
        return all_residue(p, f.a, 0) && p.length() <= f.b;
    case FamilyKind::BIII:
        return p.is_distinct() && (p.empty() || p.part(1) >= f.a + f.b + 1);
    case FamilyKind::BIV:
        return p.is_distinct() && all_residue(p, 2, 0) &&
               (p.empty() || p.part(1) >= 2 * f.a + 2);
    case FamilyKind::AV: {
        if (!gaps_at_least(p, 2))
            return false;
        const int m = p.length();
        if (m == 2 * f.a)
            return true;
        return m == 2 * f.a - 1 && p.part(1) >= 2;
    }
    case FamilyKind::BV:
        return p.is_distinct() && (p.empty() || p.part(1) >= 2 * f.a + 1);
    case FamilyKind::ETA: {
        const int n = f.a * f.b;
        return p.length() == n && (n == 0 || (p.part(1) == 2 && p.part(n) == 2));
    }
    case FamilyKind::RI:
        return (f.a < 0 || p.length() == f.a) &&
               has_arithmetic_star_form(p, 4, 8, 16);
    case FamilyKind::RII:
        return (f.a < 0 || p.length() == f.a) &&
               has_arithmetic_star_form(p, 8, 16, 8);
    default:
        fail("WrongObjectKind",
             "family " + family_name(f) + " does not contain bare partitions");
    }
}

bool is_member(const FamilyId& f, const LabeledPartition& lp) {
    const Partition& p = lp.parts;
    switch (f.kind) {
    case FamilyKind::F:
        return all_residue(p, 4, 1) && labels_all(lp, Label::X);
    case FamilyKind::AI: {
        if (f.a >= 0 && p.length() != f.a)
            return false;
        if (!p.is_distinct() || !all_residue(p, 2, 1))
            return false;
        for (int r = 1; r <= p.length(); ++r) {
            const Label l = lp.labels[static_cast<size_t>(r) - 1];
            if (l != Label::Y && l != Label::XY)
                return false;
            if (l == Label::XY && r < p.length() && p.part(r + 1) - p.part(r) < 4)
                return false;
        }
        return true;
    }
    case FamilyKind::BI:
        return p.is_distinct() && all_residue(p, 2, 1) &&
               (p.empty() || p.part(1) >= 2 * f.a + 1) && labels_all(lp, Label::Y);
    case FamilyKind::BIIL:
    case FamilyKind::BIIR:
        return p.is_distinct() && (p.empty() || p.part(1) >= f.a + f.b + 1) &&
               labels_all(lp, Label::X2Y);
    case FamilyKind::AIIR: {
        if (!p.is_distinct() || (!p.empty() && p.part(1) < 2))
            return false;
        int nxy2 = 0, nx2y2 = 0;
        for (int r = 1; r <= p.length(); ++r) {
            const Label l = lp.labels[static_cast<size_t>(r) - 1];
            if (l == Label::XY2) {
                ++nxy2;
            } else if (l == Label::X2Y2) {
                ++nx2y2;
                if (r < p.length() && p.part(r + 1) - p.part(r) < 2)
                    return false;
            } else {
                return false;
            }
        }
        return (f.a < 0 || nxy2 == f.a) && (f.b < 0 || nx2y2 == f.b);
    }
    case FamilyKind::AIII: {
        if (!p.is_distinct())
            return false;
        int nx = 0, nplain = 0;
        for (int r = 1; r <= p.length(); ++r) {
            const Label l = lp.labels[static_cast<size_t>(r) - 1];
            if (l == Label::X) {
                ++nx;
            } else if (l == Label::None) {
                ++nplain;
                if (r < p.length() && p.part(r + 1) - p.part(r) < 2)
                    return false;
            } else {
                return false;
            }
        }
        return (f.a < 0 || nx == f.a) && (f.b < 0 || nplain == f.b);
    }
    case FamilyKind::AIV:
        return (f.a < 0 || p.length() == f.a) && all_residue(p, 2, 1) &&
               labels_all(lp, Label::X);
    case FamilyKind::AVI:
        return (f.a < 0 || p.length() == f.a) &&
               has_arithmetic_star_form(p, 1, 2, 8) && labels_all(lp, Label::X);
    case FamilyKind::BVI:
        return (f.b < 0 || p.length() == f.b) &&
               has_arithmetic_star_form(p, 2 * f.a + 1, 2, 8) &&
               labels_all(lp, Label::X);
    case FamilyKind::AVII:
    case FamilyKind::BVII:
        return (f.a < 0 || p.length() == f.a) &&
               has_arithmetic_star_form(p, 3, 6, 4) && labels_all(lp, Label::X);
    case FamilyKind::MI:
        return is_member({FamilyKind::AVI, f.a, -1}, lp) &&
               no_odd_zero_run(star_of(p, 1, 2, 8));
    default:
        fail("WrongObjectKind",
             "family " + family_name(f) + " does not contain labeled partitions");
    }
}

bool is_member(const FamilyId& f, const PartStarVec& v) {
    if (f.kind == FamilyKind::Pstar)
        return f.a < 0 || v.length() == f.a;
    fail("WrongObjectKind",
         "family " + family_name(f) + " does not contain star vectors");
}

bool is_labeled_family(const FamilyId& f) {
    switch (f.kind) {
    case FamilyKind::F:
    case FamilyKind::AI:
    case FamilyKind::BI:
    case FamilyKind::BIIL:
    case FamilyKind::AIIR:
    case FamilyKind::BIIR:
    case FamilyKind::AIII:
    case FamilyKind::AIV:
    case FamilyKind::AVI:
    case FamilyKind::BVI:
    case FamilyKind::AVII:
    case FamilyKind::BVII:
    case FamilyKind::MI:
        return true;
    default:
        return false;
    }
}

// --- enumeration ------------------------------------------------------------

namespace {

std::vector<Partition> star_form_partitions(int first, int step, int inc,
                                            int len, int maxWeight) {
    std::vector<Partition> out;
    auto emit_for_len = [&](int n) {
        int base = 0;
        for (int m = 1; m <= n; ++m)
            base += first + step * (m - 1);
        if (base > maxWeight)
            return false;
        for (const PartStarVec& s : gen_star_vectors(n, (maxWeight - base) / inc)) {
            std::vector<int> parts;
            for (int m = 1; m <= n; ++m)
                parts.push_back(first + step * (m - 1) + inc * s.entries[m - 1]);
            out.emplace_back(std::move(parts));
        }
        return true;
    };
    if (len >= 0) {
        emit_for_len(len);
    } else {
        for (int n = 0; emit_for_len(n); ++n) {
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LabeledPartition> with_constant_label(std::vector<Partition> ps,
                                                  Label l) {
    std::vector<LabeledPartition> out;
    out.reserve(ps.size());
    for (Partition& p : ps) {
        std::vector<Label> labels(p.parts.size(), l);
        out.emplace_back(std::move(p), std::move(labels));
    }
    return out;
}

/// All admissible label vectors for one partition, lexicographic in the
/// given option order; `ok(r, l)` checks the per-position constraint.
void expand_labels(const Partition& p, const std::vector<Label>& options,
                   const std::function<bool(int, Label)>& ok,
                   const std::function<bool(const std::vector<Label>&)>& accept,
                   std::vector<LabeledPartition>& out) {
    std::vector<Label> cur;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(cur.size()) == p.length()) {
            if (accept(cur))
                out.emplace_back(p, cur);
            return;
        }
        const int r = static_cast<int>(cur.size()) + 1;
        for (Label l : options) {
            if (!ok(r, l))
                continue;
            cur.push_back(l);
            rec();
            cur.pop_back();
        }
    };
    rec();
}

} // namespace

std::vector<Partition> enumerate_plain(const FamilyId& f, int maxWeight) {
    GenSpec s;
    switch (f.kind) {
    case FamilyKind::P:
        break;
    case FamilyKind::D:
        s.minGap = 1;
        break;
    case FamilyKind::Do:
        s.minGap = 1;
        s.modulus = 2;
        s.residues = {1};
        break;
    case FamilyKind::De:
        s.minGap = 1;
        s.modulus = 2;
        s.residues = {0};
        break;
    case FamilyKind::R:
        s.minGap = 2;
        break;
    case FamilyKind::Ek:
        s.modulus = f.a;
        s.residues = {0};
        break;
    case FamilyKind::Ekn:
        s.modulus = f.a;
        s.residues = {0};
        s.maxLen = f.b;
        break;
    case FamilyKind::BIII:
        s.minGap = 1;
        s.minPart = std::max(1, f.a + f.b + 1);
        break;
    case FamilyKind::BIV:
        s.minGap = 1;
        s.modulus = 2;
        s.residues = {0};
        s.minPart = std::max(2, 2 * f.a + 2);
        break;
    case FamilyKind::BV:
        s.minGap = 1;
        s.minPart = std::max(1, 2 * f.a + 1);
        break;
    case FamilyKind::AV: {
        GenSpec even;
        even.minGap = 2;
        even.exactLen = 2 * f.a;
        std::vector<Partition> out = gen_partitions(maxWeight, even);
        if (f.a >= 1) {
            GenSpec odd;
            odd.minGap = 2;
            odd.exactLen = 2 * f.a - 1;
            odd.minPart = 2;
            std::vector<Partition> extra = gen_partitions(maxWeight, odd);
            out.insert(out.end(), extra.begin(), extra.end());
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    case FamilyKind::ETA: {
        std::vector<Partition> out;
        const int n = f.a * f.b;
        if (2 * n <= maxWeight)
            out.emplace_back(std::vector<int>(static_cast<size_t>(n), 2));
        return out;
    }
    case FamilyKind::RI:
        return star_form_partitions(4, 8, 16, f.a, maxWeight);
    case FamilyKind::RII:
        return star_form_partitions(8, 16, 8, f.a, maxWeight);
    default:
        fail("WrongObjectKind",
             "family " + family_name(f) + " is not a plain-partition family");
    }
    return gen_partitions(maxWeight, s);
}

std::vector<LabeledPartition> enumerate_labeled(const FamilyId& f, int maxWeight) {
    switch (f.kind) {
    case FamilyKind::F: {
        GenSpec s;
        s.modulus = 4;
        s.residues = {1};
        return with_constant_label(gen_partitions(maxWeight, s), Label::X);
    }
    case FamilyKind::BI: {
        GenSpec s;
        s.minGap = 1;
        s.modulus = 2;
        s.residues = {1};
        s.minPart = std::max(1, 2 * f.a + 1);
        return with_constant_label(gen_partitions(maxWeight, s), Label::Y);
    }
    case FamilyKind::BIIL:
    case FamilyKind::BIIR: {
        GenSpec s;
        s.minGap = 1;
        s.minPart = std::max(1, f.a + f.b + 1);
        return with_constant_label(gen_partitions(maxWeight, s), Label::X2Y);
    }
    case FamilyKind::AIV: {
        GenSpec s;
        s.modulus = 2;
        s.residues = {1};
        s.exactLen = f.a;
        return with_constant_label(gen_partitions(maxWeight, s), Label::X);
    }
    case FamilyKind::AVI:
        return with_constant_label(star_form_partitions(1, 2, 8, f.a, maxWeight),
                                   Label::X);
    case FamilyKind::BVI:
        return with_constant_label(
            star_form_partitions(2 * f.a + 1, 2, 8, f.b, maxWeight), Label::X);
    case FamilyKind::AVII:
    case FamilyKind::BVII:
        return with_constant_label(star_form_partitions(3, 6, 4, f.a, maxWeight),
                                   Label::X);
    case FamilyKind::MI: {
        std::vector<LabeledPartition> out;
        for (LabeledPartition& lp :
             enumerate_labeled({FamilyKind::AVI, f.a, -1}, maxWeight))
            if (no_odd_zero_run(star_of(lp.parts, 1, 2, 8)))
                out.push_back(std::move(lp));
        return out;
    }
    case FamilyKind::AI: {
        GenSpec s;
        s.minGap = 1;
        s.modulus = 2;
        s.residues = {1};
        if (f.a >= 0)
            s.exactLen = f.a;
        std::vector<LabeledPartition> out;
        for (const Partition& p : gen_partitions(maxWeight, s)) {
            expand_labels(
                p, {Label::Y, Label::XY},
                [&](int r, Label l) {
                    return l != Label::XY || r == p.length() ||
                           p.part(r + 1) - p.part(r) >= 4;
                },
                [](const std::vector<Label>&) { return true; }, out);
        }
        return out;
    }
    case FamilyKind::AIIR: {
        GenSpec s;
        s.minGap = 1;
        s.minPart = 2;
        if (f.a >= 0 && f.b >= 0)
            s.exactLen = f.a + f.b;
        std::vector<LabeledPartition> out;
        for (const Partition& p : gen_partitions(maxWeight, s)) {
            expand_labels(
                p, {Label::XY2, Label::X2Y2},
                [&](int r, Label l) {
                    return l != Label::X2Y2 || r == p.length() ||
                           p.part(r + 1) - p.part(r) >= 2;
                },
                [&](const std::vector<Label>& ls) {
                    return f.a < 0 ||
                           std::count(ls.begin(), ls.end(), Label::XY2) == f.a;
                },
                out);
        }
        return out;
    }
    case FamilyKind::AIII: {
        GenSpec s;
        s.minGap = 1;
        if (f.a >= 0 && f.b >= 0)
            s.exactLen = f.a + f.b;
        std::vector<LabeledPartition> out;
        for (const Partition& p : gen_partitions(maxWeight, s)) {
            expand_labels(
                p, {Label::None, Label::X},
                [&](int r, Label l) {
                    return l != Label::None || r == p.length() ||
                           p.part(r + 1) - p.part(r) >= 2;
                },
                [&](const std::vector<Label>& ls) {
                    return f.a < 0 ||
                           std::count(ls.begin(), ls.end(), Label::X) == f.a;
                },
                out);
        }
        return out;
    }
    default:
        fail("WrongObjectKind",
             "family " + family_name(f) + " is not a labeled-partition family");
    }
}

int member_sign(const FamilyId& f, const LabeledPartition& p) {
    switch (f.kind) {
    case FamilyKind::AI:
        return p.count_label(Label::Y) % 2 == 0 ? 1 : -1;
    case FamilyKind::BVI:
        return p.length() % 2 == 0 ? 1 : -1;
    default:
        return 1;
    }
}

int member_sign(const FamilyId& f, const Partition& p) {
    switch (f.kind) {
    case FamilyKind::BIII:
        return p.length() % 2 == 0 ? 1 : -1;
    case FamilyKind::ETA: {
        const int d = f.a - f.b;
        // binomial(d, 2) = d(d-1)/2, valid for negative d as well
        return (d * (d - 1) / 2) % 2 == 0 ? 1 : -1;
    }
    default:
        return 1;
    }
}

QSeries weighted_gf(const FamilyId& f, WeightRule rule, int order) {
    QSeries r = QSeries::zero(order);
    auto add = [&](int weight, int sign, const PolyXY& mono) {
        PolyXY c = mono * PolyXY::constant(sign);
        r.set_coeff_q(4 * weight, r.coeff_q(4 * weight) + c);
    };
    if (is_labeled_family(f)) {
        for (const LabeledPartition& lp : enumerate_labeled(f, order)) {
            PolyXY mono = PolyXY::constant(1);
            switch (rule) {
            case WeightRule::Plain: break;
            case WeightRule::ByLabels: mono = lp.monomial(); break;
            case WeightRule::Sol2Len:
                mono = PolyXY::monomial(stat_sol2(lp.parts), lp.length());
                break;
            case WeightRule::XLen: mono = PolyXY::monomial(lp.length(), 0); break;
            case WeightRule::X2Len:
                mono = PolyXY::monomial(2 * lp.length(), 0);
                break;
            }
            add(lp.weight(), member_sign(f, lp), mono);
        }
    } else {
        for (const Partition& p : enumerate_plain(f, order)) {
            PolyXY mono = PolyXY::constant(1);
            switch (rule) {
            case WeightRule::Plain: break;
            case WeightRule::ByLabels:
                fail("WrongObjectKind", "label weights need a labeled family");
            case WeightRule::Sol2Len:
                mono = PolyXY::monomial(stat_sol2(p), p.length());
                break;
            case WeightRule::XLen: mono = PolyXY::monomial(p.length(), 0); break;
            case WeightRule::X2Len:
                mono = PolyXY::monomial(2 * p.length(), 0);
                break;
            }
            add(p.weight(), member_sign(f, p), mono);
        }
    }
    return r;
}

std::vector<std::string> enumerate_rendered(const FamilyId& f, int maxWeight) {
    std::vector<std::string> out;
    switch (f.kind) {
    case FamilyKind::Pstar: {
        for (const PartStarVec& v : gen_star_vectors(f.a, maxWeight)) {
            std::ostringstream os;
            os << "(";
            for (int r = 0; r < v.length(); ++r)
                os << (r ? "," : "") << v.entries[static_cast<size_t>(r)];
            os << ")";
            out.push_back(os.str());
        }
        return out;
    }
    case FamilyKind::AIIL: {
        const int j = f.a, k = f.b;
        std::vector<int> baseParts;
        std::vector<Label> baseLabels;
        for (int s = 1; s <= j; ++s) {
            baseParts.push_back(s + 1);
            baseLabels.push_back(Label::XY2);
        }
        for (int s = 1; s <= k; ++s) {
            baseParts.push_back(j + 2 * s);
            baseLabels.push_back(Label::X2Y2);
        }
        LabeledPartition base{Partition(baseParts), baseLabels};
        const int rest = maxWeight - base.weight();
        if (rest < 0)
            return out;
        GenSpec mu, eta;
        mu.maxLen = j;
        eta.maxLen = k;
        for (const Partition& m : gen_partitions(rest, mu))
            for (const Partition& e : gen_partitions(rest - m.weight(), eta))
                out.push_back("(" + render(base, LabelScheme::Full) + " | " +
                              render(m) + " | " + render(e) + ")");
        return out;
    }
    case FamilyKind::MII: {
        const int i = f.a;
        Partition eta(std::vector<int>(static_cast<size_t>(i * i), 2));
        for (const LabeledPartition& lp : enumerate_labeled(
                 {FamilyKind::AVII, i, -1}, (maxWeight - eta.weight()) / 2)) {
            if (2 * lp.weight() + eta.weight() > maxWeight)
                continue;
            out.push_back("(" + render(lp, LabelScheme::XMeansX) + " | " +
                          render(lp, LabelScheme::XMeansX) + " | " + render(eta) +
                          ")");
        }
        return out;
    }
    default:
        break;
    }
    if (is_labeled_family(f)) {
        LabelScheme scheme = LabelScheme::Full;
        if (f.kind == FamilyKind::AI)
            scheme = LabelScheme::XMeansXY;
        else if (f.kind == FamilyKind::AIII || f.kind == FamilyKind::F ||
                 f.kind == FamilyKind::AIV || f.kind == FamilyKind::AVI ||
                 f.kind == FamilyKind::BVI || f.kind == FamilyKind::AVII ||
                 f.kind == FamilyKind::BVII || f.kind == FamilyKind::MI)
            scheme = LabelScheme::XMeansX;
        for (const LabeledPartition& lp : enumerate_labeled(f, maxWeight))
            out.push_back(render(lp, scheme));
    } else {
        for (const Partition& p : enumerate_plain(f, maxWeight))
            out.push_back(render(p));
    }
    return out;
}

} // namespace qrr
