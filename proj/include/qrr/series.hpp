#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qrr/poly.hpp"

namespace qrr {

/// Truncated formal power series in q with PolyXY coefficients.
///
/// Exponents live on the quarter grid: slot e holds the coefficient of
/// q^{e/4}.  A series of order N certifies every exponent e <= 4N; series
/// on the ordinary integral grid simply occupy slots divisible by 4.
/// Every operation truncates to the tightest order it can certify.
class QSeries {
public:
    explicit QSeries(int order);

    static QSeries zero(int order) { return QSeries(order); }
    static QSeries one(int order);
    /// c * x^xdeg y^ydeg q^{quarter/4}.
    static QSeries monomial(int order, int quarter, const PolyXY& coeff);
    static QSeries from_poly(int order, const PolyXY& p) {
        return monomial(order, 0, p);
    }

    int order() const { return order_; }
    int slots() const { return 4 * order_ + 1; }

    const PolyXY& coeff_q(int quarter) const;
    /// Coefficient of an integral power q^n.
    const PolyXY& coeff(int n) const { return coeff_q(4 * n); }
    void set_coeff_q(int quarter, PolyXY c);

    bool is_integral_grid() const;

    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries& operator+=(const QSeries& o);
    QSeries operator*(const PolyXY& p) const;

    /// Multiply by q^{quarter/4}; coefficients pushed above the certified
    /// order are dropped.
    QSeries shifted(int quarter) const;

    /// Multiplicative inverse up to the truncation order.  The constant
    /// (q^0) coefficient must be the polynomial 1; otherwise throws
    /// NonUnitConstantTerm.
    QSeries inverted() const;

    /// First slot where the certified parts of two series differ, if any.
    struct Discrepancy {
        int quarter;
        int xdeg, ydeg;
        Int lhs, rhs;
    };
    static std::optional<Discrepancy> first_difference(const QSeries& a,
                                                       const QSeries& b);

    bool equal_up_to_order(const QSeries& o) const {
        return !first_difference(*this, o).has_value();
    }

    std::string str(int max_terms = 12) const;

private:
    int order_;
    std::vector<PolyXY> coeffs_; // index = quarter exponent
};

/// (A; q^{step})_n with A = mono * q^{shift/4}, i.e. the finite product
/// of the binomial factors (1 - mono * q^{(shift + k*step)/4}), k < n.
/// shift may be zero (the k = 0 factor is then a plain polynomial);
/// step must be positive unless n == 0.
QSeries pochhammer_finite(const PolyXY& mono, int shift, int step, int n,
                          int order);

/// (A; q^{step})_infty truncated at the given order: the product over all
/// k with shift + k*step <= 4*order.  Requires shift > 0, otherwise the
/// degree-zero factor repeats indefinitely (NonConvergentProduct).
QSeries pochhammer_infinite(const PolyXY& mono, int shift, int step, int order);

/// Like pochhammer_infinite but tolerates shift == 0 by splitting off the
/// leading (1 - mono) polynomial factor.  Used for products such as
/// (x; q)_infty whose first factor carries no power of q.
QSeries pochhammer_infinite_poly(const PolyXY& mono, int shift, int step,
                                 int order);

} // namespace qrr
