#include "qrr/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "qrr/error.hpp"

namespace qrr {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1)
            fail("OutOfRange", "partition parts must be positive");
        if (i > 0 && parts[i - 1] > parts[i])
            fail("OutOfRange", "partition parts must be weakly increasing");
    }
}

int Partition::weight() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

bool Partition::is_distinct() const {
    return std::adjacent_find(parts.begin(), parts.end()) == parts.end();
}

PartStarVec::PartStarVec(std::vector<int> e) : entries(std::move(e)) {
    for (size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] < 0)
            fail("OutOfRange", "star-vector entries must be non-negative");
        if (i > 0 && entries[i - 1] > entries[i])
            fail("OutOfRange", "star-vector entries must be weakly increasing");
    }
}

int PartStarVec::weight() const {
    return std::accumulate(entries.begin(), entries.end(), 0);
}

std::pair<int, int> label_degrees(Label l) {
    switch (l) {
    case Label::None: return {0, 0};
    case Label::X:    return {1, 0};
    case Label::Y:    return {0, 1};
    case Label::XY:   return {1, 1};
    case Label::XY2:  return {1, 2};
    case Label::X2Y2: return {2, 2};
    case Label::X2Y:  return {2, 1};
    }
    return {0, 0};
}

LabeledPartition::LabeledPartition(Partition p, std::vector<Label> l)
    : parts(std::move(p)), labels(std::move(l)) {
    if (parts.parts.size() != labels.size())
        fail("OutOfRange", "one label per part required");
}

int LabeledPartition::count_label(Label l) const {
    return static_cast<int>(std::count(labels.begin(), labels.end(), l));
}

PolyXY LabeledPartition::monomial() const {
    int xd = 0, yd = 0;
    for (Label l : labels) {
        auto [dx, dy] = label_degrees(l);
        xd += dx;
        yd += dy;
    }
    return PolyXY::monomial(xd, yd);
}

std::vector<Run> runs_with_gap(const Partition& p, int gap) {
    std::vector<Run> runs;
    const int m = p.length();
    for (int k = 1; k <= m;) {
        int end = k;
        while (end < m && p.part(end + 1) - p.part(end) == gap)
            ++end;
        runs.push_back({k, end - k + 1});
        k = end + 1;
    }
    return runs;
}

int stat_sol2(const Partition& p) {
    if (!p.is_distinct())
        fail("RepeatedParts", "sol_2 requires distinct parts");
    int n = 0;
    for (const Run& r : runs_with_gap(p, 2))
        if (r.len % 2 == 1)
            ++n;
    return n;
}

int stat_sol(const Partition& p) {
    if (!p.is_distinct())
        fail("RepeatedParts", "sol requires distinct parts");
    int n = 0;
    for (const Run& r : runs_with_gap(p, 1))
        if (r.len % 2 == 1)
            ++n;
    return n;
}

std::vector<Run> stat_zero_sequences(const Partition& p) {
    return runs_with_gap(p, 0);
}

std::vector<Run> stat_zero_sequences(const PartStarVec& v) {
    std::vector<Run> runs;
    const int m = v.length();
    for (int k = 0; k < m;) {
        int end = k;
        while (end + 1 < m && v.entries[end + 1] == v.entries[end])
            ++end;
        runs.push_back({k + 1, end - k + 1});
        k = end + 1;
    }
    return runs;
}

int tl_shape_size(const Partition& p, int k, int t) {
    const int m = p.length();
    if (k < 1 || k > m)
        fail("OutOfRange", "tL-shape position outside the partition");
    if (t < 1 || t > p.part(k))
        fail("OutOfRange", "tL-shape thickness outside 1..lambda_k");
    return p.part(k) + t * (m - k);
}

std::pair<Partition, int> remove_tl_shape(const Partition& p, int k, int t) {
    const int size = tl_shape_size(p, k, t);
    std::vector<int> out;
    out.reserve(p.parts.size() - 1);
    for (int r = 1; r <= p.length(); ++r) {
        if (r == k)
            continue;
        const int v = r < k ? p.part(r) : p.part(r) - t;
        if (v <= 0)
            fail("NonPositiveResult", "tL-shape removal would empty a part");
        out.push_back(v);
    }
    return {Partition(std::move(out)), size};
}

Partition insert_tl_shape(const Partition& p, int size, int t) {
    const int m = p.length();
    // Bottom insertion covers sizes up to lambda_1 + t*m; otherwise place
    // after the largest b with s_{b,t} + t < size.
    if (m == 0 || p.part(1) + t * m >= size) {
        const int v = size - t * m;
        if (v < 1)
            fail("NoValidPosition", "inserted part would not be positive");
        std::vector<int> out;
        out.reserve(p.parts.size() + 1);
        out.push_back(v);
        for (int r = 1; r <= m; ++r)
            out.push_back(p.part(r) + t);
        return Partition(std::move(out));
    }
    int b = 0;
    for (int r = m; r >= 1; --r) {
        if (p.part(r) + t * (m - r) + t < size) {
            b = r;
            break;
        }
    }
    if (b == 0)
        fail("NoValidPosition", "no admissible tL-shape slot");
    const int v = size - t * (m - b);
    std::vector<int> out;
    out.reserve(p.parts.size() + 1);
    for (int r = 1; r <= b; ++r)
        out.push_back(p.part(r));
    out.push_back(v);
    for (int r = b + 1; r <= m; ++r)
        out.push_back(p.part(r) + t);
    return Partition(std::move(out));
}

std::pair<Partition, int> remove_i_shape(const Partition& p, int k, int times) {
    const int m = p.length();
    if (k < 1 || k > m)
        fail("OutOfRange", "I-shape position outside the partition");
    if (times < 1 || times > 2)
        fail("OutOfRange", "I-shape removal supports one or two passes");
    std::vector<int> out;
    for (int r = 1; r <= m; ++r) {
        const int v = r < k ? p.part(r) : p.part(r) - times;
        if (v < 0)
            fail("OutOfRange", "I-shape removal needs parts >= times");
        if (v > 0)
            out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return {Partition(std::move(out)), m - k + 1};
}

// --- text form --------------------------------------------------------------

namespace {

const char* label_suffix(Label l, LabelScheme scheme) {
    switch (scheme) {
    case LabelScheme::Plain:
        return "";
    case LabelScheme::XMeansXY:
        return l == Label::XY ? "_x" : "";
    case LabelScheme::XMeansX:
        return l == Label::X ? "_x" : "";
    case LabelScheme::Full:
        switch (l) {
        case Label::None: return "";
        case Label::X:    return "_x";
        case Label::Y:    return "_y";
        case Label::XY:   return "_xy";
        case Label::XY2:  return "_xy2";
        case Label::X2Y2: return "_x2y2";
        case Label::X2Y:  return "_x2y";
        }
    }
    return "";
}

Label label_of_suffix(const std::string& s, LabelScheme scheme) {
    if (s.empty()) {
        switch (scheme) {
        case LabelScheme::XMeansXY: return Label::Y;
        default: return Label::None;
        }
    }
    if (scheme == LabelScheme::XMeansXY && s == "x")
        return Label::XY;
    if (scheme == LabelScheme::XMeansX && s == "x")
        return Label::X;
    if (scheme == LabelScheme::Full) {
        if (s == "x") return Label::X;
        if (s == "y") return Label::Y;
        if (s == "xy") return Label::XY;
        if (s == "xy2") return Label::XY2;
        if (s == "x2y2") return Label::X2Y2;
        if (s == "x2y") return Label::X2Y;
    }
    fail("ParseError", "unknown label suffix '_" + s + "'");
}

} // namespace

std::string render(const Partition& p) {
    if (p.empty())
        return "ε";
    std::ostringstream os;
    for (int r = 1; r <= p.length(); ++r) {
        if (r > 1)
            os << "+";
        os << p.part(r);
    }
    return os.str();
}

std::string render(const LabeledPartition& p, LabelScheme scheme) {
    if (p.parts.empty())
        return "ε";
    std::ostringstream os;
    for (int r = 1; r <= p.length(); ++r) {
        if (r > 1)
            os << "+";
        os << p.parts.part(r) << label_suffix(p.labels[static_cast<size_t>(r) - 1], scheme);
    }
    return os.str();
}

LabeledPartition parse_labeled(const std::string& text, LabelScheme scheme) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    std::vector<int> parts;
    std::vector<Label> labels;
    if (s == "e" || s == "ε" || s == "\xce\xb5" || s.empty())
        return {};
    size_t pos = 0;
    while (pos < s.size()) {
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == start)
            fail("ParseError", "expected a part value in '" + text + "'");
        int value = std::stoi(s.substr(start, pos - start));
        std::string suffix;
        if (pos < s.size() && s[pos] == '_') {
            ++pos;
            start = pos;
            while (pos < s.size() && s[pos] != '+')
                ++pos;
            suffix = s.substr(start, pos - start);
        }
        parts.push_back(value);
        labels.push_back(label_of_suffix(suffix, scheme));
        if (pos < s.size()) {
            if (s[pos] != '+')
                fail("ParseError", "expected '+' in '" + text + "'");
            ++pos;
        }
    }
    return {Partition(std::move(parts)), std::move(labels)};
}

Partition parse_partition(const std::string& text) {
    return parse_labeled(text, LabelScheme::Plain).parts;
}

} // namespace qrr
