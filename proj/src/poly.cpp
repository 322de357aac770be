#include "qrr/poly.hpp"

#include <sstream>

namespace qrr {

PolyXY PolyXY::monomial(int xdeg, int ydeg, Int coeff) {
    PolyXY p;
    if (coeff != 0)
        p.terms_.emplace(Key{xdeg, ydeg}, std::move(coeff));
    return p;
}

bool PolyXY::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Key{0, 0} &&
           terms_.begin()->second == 1;
}

Int PolyXY::coeff(int xdeg, int ydeg) const {
    auto it = terms_.find({xdeg, ydeg});
    return it == terms_.end() ? Int(0) : it->second;
}

void PolyXY::add_term(int xdeg, int ydeg, const Int& coeff) {
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.emplace(Key{xdeg, ydeg}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

PolyXY& PolyXY::operator+=(const PolyXY& o) {
    for (const auto& [k, c] : o.terms_)
        add_term(k.first, k.second, c);
    return *this;
}

PolyXY PolyXY::operator+(const PolyXY& o) const {
    PolyXY r = *this;
    r += o;
    return r;
}

PolyXY PolyXY::operator-(const PolyXY& o) const {
    PolyXY r = *this;
    for (const auto& [k, c] : o.terms_)
        r.add_term(k.first, k.second, -c);
    return r;
}

PolyXY PolyXY::operator-() const {
    PolyXY r;
    for (const auto& [k, c] : terms_)
        r.terms_.emplace(k, -c);
    return r;
}

PolyXY PolyXY::operator*(const PolyXY& o) const {
    PolyXY r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

std::string PolyXY::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        first = false;
        const bool has_marker = k.first > 0 || k.second > 0;
        if (a != 1 || !has_marker)
            os << a.get_str() << (has_marker ? "*" : "");
        if (k.first > 0) {
            os << "x";
            if (k.first > 1)
                os << "^" << k.first;
        }
        if (k.second > 0) {
            if (k.first > 0)
                os << "*";
            os << "y";
            if (k.second > 1)
                os << "^" << k.second;
        }
    }
    return os.str();
}

} // namespace qrr
