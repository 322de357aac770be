#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

namespace qrr {

using Int = mpz_class;

/// Sparse integer polynomial in the two markers x and y.  This is the
/// coefficient ring of every truncated q-series in the library; all
/// arithmetic is exact.  Zero coefficients are never stored, so equality
/// of term maps is equality of polynomials.
class PolyXY {
public:
    using Key = std::pair<int, int>; // (x-degree, y-degree)
    using TermMap = std::map<Key, Int>;

    PolyXY() = default;

    static PolyXY constant(long c) { return monomial(0, 0, Int(c)); }
    static PolyXY constant(const Int& c) { return monomial(0, 0, c); }
    static PolyXY monomial(int xdeg, int ydeg, Int coeff = Int(1));

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    const TermMap& terms() const { return terms_; }

    /// Coefficient of x^xdeg y^ydeg (zero if absent).
    Int coeff(int xdeg, int ydeg) const;

    void add_term(int xdeg, int ydeg, const Int& coeff);

    PolyXY operator+(const PolyXY& o) const;
    PolyXY operator-(const PolyXY& o) const;
    PolyXY operator*(const PolyXY& o) const;
    PolyXY operator-() const;
    PolyXY& operator+=(const PolyXY& o);

    bool operator==(const PolyXY& o) const { return terms_ == o.terms_; }
    bool operator!=(const PolyXY& o) const { return terms_ != o.terms_; }

    /// Plain-text form such as "1 - 2*x*y + y^2"; "0" for the zero polynomial.
    std::string str() const;

private:
    TermMap terms_;
};

} // namespace qrr
