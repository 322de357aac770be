#include "qrr/series.hpp"

#include <algorithm>
#include <sstream>

#include "qrr/error.hpp"

namespace qrr {

QSeries::QSeries(int order) : order_(order), coeffs_(4 * order + 1) {
    if (order < 0)
        fail("OutOfRange", "series order must be non-negative");
}

QSeries QSeries::one(int order) {
    QSeries s(order);
    s.coeffs_[0] = PolyXY::constant(1);
    return s;
}

QSeries QSeries::monomial(int order, int quarter, const PolyXY& coeff) {
    QSeries s(order);
    if (quarter < 0)
        fail("OutOfRange", "negative q-exponent");
    if (quarter < s.slots())
        s.coeffs_[quarter] = coeff;
    return s;
}

const PolyXY& QSeries::coeff_q(int quarter) const {
    static const PolyXY zero;
    if (quarter < 0 || quarter >= slots())
        return zero;
    return coeffs_[quarter];
}

void QSeries::set_coeff_q(int quarter, PolyXY c) {
    if (quarter < 0 || quarter >= slots())
        fail("OutOfRange", "q-exponent outside certified range");
    coeffs_[quarter] = std::move(c);
}

bool QSeries::is_integral_grid() const {
    for (int e = 0; e < slots(); ++e)
        if (e % 4 != 0 && !coeffs_[e].is_zero())
            return false;
    return true;
}

QSeries QSeries::operator+(const QSeries& o) const {
    QSeries r(std::min(order_, o.order_));
    for (int e = 0; e < r.slots(); ++e)
        r.coeffs_[e] = coeffs_[e] + o.coeffs_[e];
    return r;
}

QSeries QSeries::operator-(const QSeries& o) const {
    QSeries r(std::min(order_, o.order_));
    for (int e = 0; e < r.slots(); ++e)
        r.coeffs_[e] = coeffs_[e] - o.coeffs_[e];
    return r;
}

QSeries& QSeries::operator+=(const QSeries& o) {
    if (o.order_ < order_) {
        order_ = o.order_;
        coeffs_.resize(slots());
    }
    for (int e = 0; e < slots(); ++e)
        coeffs_[e] += o.coeffs_[e];
    return *this;
}

QSeries QSeries::operator*(const QSeries& o) const {
    QSeries r(std::min(order_, o.order_));
    const int n = r.slots();
    for (int a = 0; a < n; ++a) {
        if (coeffs_[a].is_zero())
            continue;
        for (int b = 0; a + b < n; ++b) {
            if (o.coeffs_[b].is_zero())
                continue;
            r.coeffs_[a + b] += coeffs_[a] * o.coeffs_[b];
        }
    }
    return r;
}

QSeries QSeries::operator*(const PolyXY& p) const {
    QSeries r(order_);
    for (int e = 0; e < slots(); ++e)
        if (!coeffs_[e].is_zero())
            r.coeffs_[e] = coeffs_[e] * p;
    return r;
}

QSeries QSeries::shifted(int quarter) const {
    QSeries r(order_);
    for (int e = 0; e + quarter < slots(); ++e)
        r.coeffs_[e + quarter] = coeffs_[e];
    return r;
}

QSeries QSeries::inverted() const {
    if (!coeffs_[0].is_one())
        fail("NonUnitConstantTerm",
             "series inversion requires constant coefficient 1, got " +
                 coeffs_[0].str());
    // b_0 = 1, b_e = -sum_{0<f<=e} a_f b_{e-f}
    QSeries r(order_);
    r.coeffs_[0] = PolyXY::constant(1);
    for (int e = 1; e < slots(); ++e) {
        PolyXY acc;
        for (int f = 1; f <= e; ++f)
            if (!coeffs_[f].is_zero() && !r.coeffs_[e - f].is_zero())
                acc += coeffs_[f] * r.coeffs_[e - f];
        r.coeffs_[e] = -acc;
    }
    return r;
}

std::optional<QSeries::Discrepancy> QSeries::first_difference(const QSeries& a,
                                                              const QSeries& b) {
    const int n = std::min(a.slots(), b.slots());
    for (int e = 0; e < n; ++e) {
        const PolyXY& ca = a.coeffs_[e];
        const PolyXY& cb = b.coeffs_[e];
        if (ca == cb)
            continue;
        PolyXY diff = ca - cb;
        const auto& [key, unused] = *diff.terms().begin();
        return Discrepancy{e, key.first, key.second, ca.coeff(key.first, key.second),
                           cb.coeff(key.first, key.second)};
    }
    return std::nullopt;
}

std::string QSeries::str(int max_terms) const {
    std::ostringstream os;
    int shown = 0;
    bool first = true;
    for (int e = 0; e < slots() && shown < max_terms; ++e) {
        if (coeffs_[e].is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        ++shown;
        os << "(" << coeffs_[e].str() << ")";
        if (e > 0) {
            os << "*q^";
            if (e % 4 == 0)
                os << e / 4;
            else
                os << "(" << e << "/4)";
        }
    }
    if (first)
        os << "0";
    else if (shown == max_terms)
        os << " + ...";
    return os.str();
}

namespace {

// One binomial factor (1 - mono * q^{quarter/4}).
QSeries binomial_factor(const PolyXY& mono, int quarter, int order) {
    QSeries f = QSeries::one(order);
    if (quarter <= 4 * order)
        f.set_coeff_q(quarter, f.coeff_q(quarter) - mono);
    return f;
}

} // namespace

QSeries pochhammer_finite(const PolyXY& mono, int shift, int step, int n,
                          int order) {
    if (n < 0)
        fail("OutOfRange", "negative Pochhammer length");
    if (n > 0 && step <= 0 && n > 1)
        fail("OutOfRange", "Pochhammer step must be positive");
    QSeries r = QSeries::one(order);
    for (int k = 0; k < n; ++k) {
        const int e = shift + k * step;
        if (e == 0) {
            r = r * (PolyXY::constant(1) - mono);
        } else if (e <= 4 * order) {
            r = r * binomial_factor(mono, e, order);
        }
        // factors entirely above the truncation contribute nothing
    }
    return r;
}

QSeries pochhammer_infinite(const PolyXY& mono, int shift, int step, int order) {
    if (shift <= 0)
        fail("NonConvergentProduct",
             "infinite Pochhammer needs a positive leading q-exponent");
    if (step <= 0)
        fail("OutOfRange", "Pochhammer step must be positive");
    QSeries r = QSeries::one(order);
    for (int e = shift; e <= 4 * order; e += step)
        r = r * binomial_factor(mono, e, order);
    return r;
}

QSeries pochhammer_infinite_poly(const PolyXY& mono, int shift, int step,
                                 int order) {
    if (shift > 0)
        return pochhammer_infinite(mono, shift, step, order);
    if (shift < 0 || step <= 0)
        fail("OutOfRange", "bad Pochhammer parameters");
    QSeries tail = pochhammer_infinite(mono, step, step, order);
    return tail * (PolyXY::constant(1) - mono);
}

} // namespace qrr
