#include "qrr/catalog.hpp"

#include <algorithm>

#include "qrr/error.hpp"
#include "qrr/families.hpp"

namespace qrr {

namespace {

long binom2(long d) { return d * (d - 1) / 2; }

PolyXY X(int d = 1) { return PolyXY::monomial(d, 0); }
PolyXY Y(int d = 1) { return PolyXY::monomial(0, d); }
PolyXY XY(int xd, int yd) { return PolyXY::monomial(xd, yd); }
PolyXY C(long c) { return PolyXY::constant(c); }

/// (q^a; q^b)_n as a truncated series (integral exponents).
QSeries qpoch(int a, int b, int n, int N) {
    return pochhammer_finite(C(1), 4 * a, 4 * b, n, N);
}

/// 1/(q^a; q^b)_n.
QSeries inv_qpoch(int a, int b, int n, int N) {
    return qpoch(a, b, n, N).inverted();
}

/// (q^a; q^b)_infty.
QSeries qpoch_inf(int a, int b, int N) {
    return pochhammer_infinite(C(1), 4 * a, 4 * b, N);
}

/// (-q^a; q^b)_infty.
QSeries nqpoch_inf(int a, int b, int N) {
    return pochhammer_infinite(C(-1), 4 * a, 4 * b, N);
}

QSeries one_index_sum(int N, const std::function<long(int)>& minDeg4,
                      const std::function<QSeries(int)>& term) {
    QSeries r = QSeries::zero(N);
    for (int n = 0; minDeg4(n) <= 4L * N; ++n)
        r += term(n);
    return r;
}

// --- classical single-variable entries --------------------------------------

QSeries rr_sum(int N, int shiftPerN /* n^2 + shiftPerN*n */, int base, int step) {
    return one_index_sum(
        N, [&](int n) { return 4L * (1L * n * n + 1L * shiftPerN * n); },
        [&](int n) {
            const long e = 1L * n * n + 1L * shiftPerN * n;
            return inv_qpoch(base, step, n, N).shifted(static_cast<int>(4 * e));
        });
}

QSeries mod5_prod(int r1, int r2, int N) {
    return (qpoch_inf(r1, 5, N) * qpoch_inf(r2, 5, N)).inverted();
}

// --- shared double sums ------------------------------------------------------

/// Sum side of the two-marker strict-odd generating identity:
/// sum x^i y^{i+2j} q^{2i^2+4j^2+4ij-i} / ((q^2;q^2)_i (q^4;q^4)_j).
QSeries strict_odd_double_sum(int N) {
    QSeries r = QSeries::zero(N);
    for (int i = 0; 2L * i * i - i <= N; ++i) {
        const QSeries di = inv_qpoch(2, 2, i, N);
        for (int j = 0;; ++j) {
            const long e = 2L * i * i + 4L * j * j + 4L * i * j - i;
            if (e > N)
                break;
            QSeries t = di * inv_qpoch(4, 4, j, N);
            t = (t * XY(i, i + 2 * j)).shifted(static_cast<int>(4 * e));
            r += t;
        }
    }
    return r;
}

/// sum over i,j of (-1)^j (x;q^2)_j y^{i+j} q^{(i+j)^2} / ((q^2;q^2)_i (q^2;q^2)_j).
QSeries hkx1_sum(int N) {
    QSeries r = QSeries::zero(N);
    for (int s = 0; 1L * s * s <= N; ++s) {
        for (int j = 0; j <= s; ++j) {
            const int i = s - j;
            QSeries t = pochhammer_finite(X(), 0, 8, j, N) *
                        inv_qpoch(2, 2, i, N) * inv_qpoch(2, 2, j, N);
            t = (t * (Y(s) * C(j % 2 ? -1 : 1))).shifted(4 * s * s);
            r += t;
        }
    }
    return r;
}

/// Right side shared by the first mixed identity and its two-parameter
/// parent: (yq;q^2)_inf * sum_n (-x;q^2)_n y^n q^{n^2} / ((yq;q^2)_n (q^2;q^2)_n).
QSeries hkx1_prod(int N) {
    const QSeries pre = pochhammer_infinite(Y(), 4, 8, N);
    QSeries s = one_index_sum(
        N, [](int n) { return 4L * n * n; },
        [&](int n) {
            QSeries t = pochhammer_finite(X(1) * C(-1), 0, 8, n, N) *
                        pochhammer_finite(Y(), 4, 8, n, N).inverted() *
                        inv_qpoch(2, 2, n, N);
            return (t * Y(n)).shifted(4 * n * n);
        });
    return pre * s;
}

// --- quarter-grid double sums ------------------------------------------------

/// sum (-1)^{binom(i-j,2)} x^{i+j} q^{(3i^2+2ij+3j^2)/den + lin*(i+j)} with
/// the given denominators; quarter exponents are passed directly.
QSeries cy_style_sum(int N, bool signIJ2, int xmark, long qi2, long qij,
                     long lin, int dbase, int dstep) {
    // quarter exponent: qi2*(i^2+j^2) + qij*i*j + lin*(i+j)
    QSeries r = QSeries::zero(N);
    for (int i = 0; qi2 * i * i + lin * i <= 4L * N; ++i) {
        const QSeries di = inv_qpoch(dbase, dstep, i, N);
        for (int j = 0;; ++j) {
            const long e =
                qi2 * (1L * i * i + 1L * j * j) + qij * i * j + lin * (i + j);
            if (e > 4L * N)
                break;
            long sgn = signIJ2 ? binom2(i - j) : j;
            QSeries t = di * inv_qpoch(dbase, dstep, j, N);
            PolyXY mark = xmark ? X(i + j) : C(1);
            t = (t * (mark * C(sgn % 2 ? -1 : 1))).shifted(static_cast<int>(e));
            r += t;
        }
    }
    return r;
}

// --- three-index sums --------------------------------------------------------

QSeries hkx2_like_sum(int N, bool pc) {
    // q^{binom(k,2)+binom(i+j+k,2) [+2j+2k+i]} (-1)^{i+j or 0} x^{2i+2k+j} y^{2j+2k+i}
    QSeries r = QSeries::zero(N);
    for (int k = 0; binom2(k) <= N; ++k) {
        const QSeries dk = inv_qpoch(1, 1, k, N);
        for (int s = 0; binom2(k) + binom2(s + k) <= N; ++s) {
            for (int i = 0; i <= s; ++i) {
                const int j = s - i;
                const long e = binom2(k) + binom2(s + k) +
                               (pc ? 2L * j + 2L * k + i : 0L);
                if (e > N)
                    continue;
                const int sgn = pc ? 1 : ((i + j) % 2 ? -1 : 1);
                QSeries t = dk * inv_qpoch(1, 1, i, N) * inv_qpoch(1, 1, j, N);
                t = (t * (XY(2 * i + 2 * k + j, 2 * j + 2 * k + i) * C(sgn)))
                        .shifted(static_cast<int>(4 * e));
                r += t;
            }
        }
    }
    return r;
}

QSeries hkx2_like_prod(int N, bool pc) {
    // Cancelled form: sum_k (+-x;q)_k (+-1)^k q^{binom(k,2)[+2k]} (xy^2)^k
    //                 / (q;q)_k * [(x^2 y q^k;q)_inf or /(−x^2yq;q)_k style]
    if (!pc) {
        return one_index_sum(
            N, [](int k) { return 4L * binom2(k); },
            [&](int k) {
                QSeries t = pochhammer_finite(X(), 0, 4, k, N) *
                            inv_qpoch(1, 1, k, N) *
                            pochhammer_infinite_poly(XY(2, 1), 4 * k, 4, N);
                return (t * (XY(k, 2 * k) * C(k % 2 ? -1 : 1)))
                    .shifted(static_cast<int>(4 * binom2(k)));
            });
    }
    const QSeries pre = pochhammer_infinite(XY(2, 1) * C(-1), 4, 4, N);
    QSeries s = one_index_sum(
        N, [](int m) { return 4L * (binom2(m) + 2L * m); },
        [&](int m) {
            QSeries t = pochhammer_finite(X(1) * C(-1), 0, 4, m, N) *
                        inv_qpoch(1, 1, m, N) *
                        pochhammer_finite(XY(2, 1) * C(-1), 4, 4, m, N).inverted();
            return (t * XY(m, 2 * m))
                .shifted(static_cast<int>(4 * (binom2(m) + 2L * m)));
        });
    return pre * s;
}

// --- catalog ------------------------------------------------------------------

std::vector<IdentityEntry> build_catalog() {
    std::vector<IdentityEntry> cat;
    auto add = [&](std::string id, std::string summary, bool multi,
                   std::function<QSeries(int, int)> sum,
                   std::function<QSeries(int, int)> prod,
                   std::vector<int> params = {0}) {
        cat.push_back({std::move(id), std::move(summary), multi,
                       std::move(params), std::move(sum), std::move(prod)});
    };

    add("RR1", "gap-2 partitions vs parts = +-1 mod 5", false,
        [](int N, int) { return rr_sum(N, 0, 1, 1); },
        [](int N, int) { return mod5_prod(1, 4, N); });
    add("RR2", "gap-2 partitions, parts > 1, vs parts = +-2 mod 5", false,
        [](int N, int) { return rr_sum(N, 1, 1, 1); },
        [](int N, int) { return mod5_prod(2, 3, N); });
    add("ROG1", "mod-4 denominator variant of the first identity", false,
        [](int N, int) { return rr_sum(N, 0, 4, 4); },
        [](int N, int) {
            return (nqpoch_inf(2, 2, N) * qpoch_inf(1, 5, N) * qpoch_inf(4, 5, N))
                .inverted();
        });
    add("ROG2", "mod-4 denominator variant of the second identity", false,
        [](int N, int) { return rr_sum(N, 2, 4, 4); },
        [](int N, int) {
            return (nqpoch_inf(2, 2, N) * qpoch_inf(2, 5, N) * qpoch_inf(3, 5, N))
                .inverted();
        });

    add("HKX1", "two-marker double sum vs hybrid product-sum", true,
        [](int N, int) { return hkx1_sum(N); },
        [](int N, int) { return hkx1_prod(N); });
    add("HKX2", "three-index alternating sum vs hybrid product-sum", true,
        [](int N, int) { return hkx2_like_sum(N, false); },
        [](int N, int) { return hkx2_like_prod(N, false); });
    add("HKX3", "three-index alternating sum vs (x;q)oo/(q;q)oo", true,
        [](int N, int) {
            QSeries r = QSeries::zero(N);
            for (int k = 0; binom2(k) <= N; ++k) {
                for (int j = 0; binom2(k + j) + binom2(j) + j <= N; ++j) {
                    const long e = binom2(k + j) + binom2(j) + j;
                    QSeries t = inv_qpoch(1, 1, k, N) * inv_qpoch(1, 1, j, N) *
                                inv_qpoch(1, 1, k + j, N);
                    t = (t * (X(k) * C(k % 2 ? -1 : 1)))
                            .shifted(static_cast<int>(4 * e));
                    r += t;
                }
            }
            return r;
        },
        [](int N, int) {
            return pochhammer_infinite_poly(X(), 0, 4, N) *
                   qpoch_inf(1, 1, N).inverted();
        });
    add("LW", "x-marked double sum vs (-q^2;q^2)oo/(xq;q^4)oo", true,
        [](int N, int) {
            QSeries r = QSeries::zero(N);
            for (int j = 0; 1L * j * j + j <= N; ++j) {
                const QSeries dj = inv_qpoch(2, 2, j, N);
                for (int i = 0;; ++i) {
                    const long e = 1L * j * j + j + 2L * i * j + i;
                    if (e > N)
                        break;
                    QSeries t = dj * inv_qpoch(2, 2, i, N);
                    r += (t * X(i)).shifted(static_cast<int>(4 * e));
                }
            }
            return r;
        },
        [](int N, int) {
            return nqpoch_inf(2, 2, N) *
                   pochhammer_infinite(X(), 4, 16, N).inverted();
        });

    // quarter-grid family
    add("CY1", "quarter-exponent alternating double sum, mod 10 product", false,
        [](int N, int) { return cy_style_sum(N, true, 0, 3, 2, 0, 1, 1); },
        [](int N, int) {
            return (qpoch_inf(2, 10, N) * qpoch_inf(8, 10, N)).inverted();
        });
    add("CY2", "shifted quarter-exponent double sum, mod 10 product", false,
        [](int N, int) { return cy_style_sum(N, true, 0, 3, 2, 4, 1, 1); },
        [](int N, int) {
            return (qpoch_inf(4, 10, N) * qpoch_inf(6, 10, N)).inverted();
        });
    add("CY3", "quarter-exponent double sum, mod 5 product", false,
        [](int N, int) { return cy_style_sum(N, false, 0, 1, 2, 0, 2, 2); },
        [](int N, int) {
            return (nqpoch_inf(2, 2, N) * qpoch_inf(1, 5, N) * qpoch_inf(4, 5, N))
                .inverted();
        });
    add("CY4", "shifted quarter-exponent double sum, mod 5 product", false,
        [](int N, int) { return cy_style_sum(N, false, 0, 1, 2, 4, 2, 2); },
        [](int N, int) {
            return (nqpoch_inf(2, 2, N) * qpoch_inf(2, 5, N) * qpoch_inf(3, 5, N))
                .inverted();
        });

    add("PCY1", "x-marked alternating double sum vs single x^2n sum", true,
        [](int N, int) { return cy_style_sum(N, false, 1, 4, 8, 0, 8, 8); },
        [](int N, int) {
            return one_index_sum(
                N, [](int n) { return 16L * n * n; },
                [&](int n) {
                    return (inv_qpoch(16, 16, n, N) * X(2 * n))
                        .shifted(static_cast<int>(16L * n * n));
                });
        });
    add("PCY2", "x-marked quarter-sign double sum vs single x^2n sum", true,
        [](int N, int) { return cy_style_sum(N, true, 1, 12, 8, 0, 4, 4); },
        [](int N, int) {
            return one_index_sum(
                N, [](int n) { return 32L * n * n; },
                [&](int n) {
                    return (inv_qpoch(8, 8, n, N) * X(2 * n))
                        .shifted(static_cast<int>(32L * n * n));
                });
        });

    add("DOGF", "strict-odd partitions: sol_2/length generating function", true,
        [](int N, int) { return strict_odd_double_sum(N); },
        [](int N, int) {
            return weighted_gf({FamilyKind::Do, -1, -1}, WeightRule::Sol2Len, N);
        });
    add("WYR", "two-parameter parent of the mixed identity", true,
        [](int N, int) {
            QSeries r = QSeries::zero(N);
            for (int i = 0; 1L * i * i - i <= N; ++i) {
                const QSeries di = inv_qpoch(1, 1, i, N);
                for (int j = 0;; ++j) {
                    const long e =
                        1L * i * i + 2L * i * j + 2L * j * j - i - j;
                    if (e > N)
                        break;
                    QSeries t = di * inv_qpoch(2, 2, j, N);
                    r += (t * XY(i, 2 * j)).shifted(static_cast<int>(4 * e));
                }
            }
            return r;
        },
        [](int N, int) {
            // (y;q)oo sum_n (-x/y;q)_n q^{binom(n,2)} y^n / ((q;q)_n (y;q)_n)
            // with (-x/y;q)_n y^n merged into prod_{c<n} (y + x q^c) and
            // (y;q)oo/(y;q)_n = (y q^n;q)oo.
            return one_index_sum(
                N, [](int n) { return 4L * binom2(n); },
                [&](int n) {
                    QSeries t = inv_qpoch(1, 1, n, N) *
                                pochhammer_infinite_poly(Y(), 4 * n, 4, N);
                    for (int c = 0; c < n; ++c) {
                        QSeries f = QSeries::from_poly(N, Y());
                        if (4 * c <= 4 * N)
                            f.set_coeff_q(4 * c, f.coeff_q(4 * c) + X());
                        t = t * f;
                    }
                    return t.shifted(static_cast<int>(4 * binom2(n)));
                });
        });
    add("MAIN1", "strict-odd double sum vs hybrid product-sum", true,
        [](int N, int) { return strict_odd_double_sum(N); },
        [](int N, int) { return hkx1_prod(N); });
    add("MAIN2", "strict-odd double sum vs alternating double sum", true,
        [](int N, int) { return strict_odd_double_sum(N); },
        [](int N, int) { return hkx1_sum(N); });
    add("HKX2PC", "sign-cleared version of the three-index identity", true,
        [](int N, int) { return hkx2_like_sum(N, true); },
        [](int N, int) { return hkx2_like_prod(N, true); });
    add("HKX3PC", "tail-product version summing to (-xq;q)oo", true,
        [](int N, int) {
            QSeries r = QSeries::zero(N);
            for (int i = 0; binom2(i + 1) <= N; ++i) {
                for (int j = 0; binom2(i + 1) + 1L * i * j + 1L * j * j <= N;
                     ++j) {
                    const long e = binom2(i + 1) + 1L * i * j + 1L * j * j;
                    QSeries t = inv_qpoch(1, 1, i, N) * inv_qpoch(1, 1, j, N) *
                                qpoch_inf(i + j + 1, 1, N);
                    r += (t * X(i)).shifted(static_cast<int>(4 * e));
                }
            }
            return r;
        },
        [](int N, int) {
            return pochhammer_infinite(X(1) * C(-1), 4, 4, N);
        });
    add("LWGENY", "y-refined variant of the x-marked double sum", true,
        [](int N, int) {
            QSeries r = QSeries::zero(N);
            for (int j = 0; 1L * j * j + j <= N; ++j) {
                const QSeries dj = inv_qpoch(2, 2, j, N);
                for (int i = 0;; ++i) {
                    const long e = 1L * j * j + j + 2L * i * j + i;
                    if (e > N)
                        break;
                    QSeries t = dj * inv_qpoch(2, 2, i, N);
                    r += (t * XY(i, j)).shifted(static_cast<int>(4 * e));
                }
            }
            return r;
        },
        [](int N, int) {
            const QSeries pre = pochhammer_infinite(Y(1) * C(-1), 8, 8, N);
            QSeries s = one_index_sum(
                N, [](int i) { return 4L * i; },
                [&](int i) {
                    QSeries t =
                        pochhammer_finite(Y(1) * C(-1), 8, 8, i, N).inverted() *
                        inv_qpoch(2, 2, i, N);
                    return (t * X(i)).shifted(4 * i);
                });
            return pre * s;
        });
    add("LWGENK", "modulus-k family of the x-marked double sum", true,
        [](int N, int k) {
            QSeries r = QSeries::zero(N);
            for (int j = 0; 1L * k * j * (j + 1) / 2 <= N; ++j) {
                const QSeries dj = inv_qpoch(k, k, j, N);
                for (int i = 0;; ++i) {
                    const long e = 1L * k * j * (j + 1) / 2 + 1L * k * i * j + i;
                    if (e > N)
                        break;
                    QSeries t = dj * inv_qpoch(k, k, i, N);
                    r += (t * X(i)).shifted(static_cast<int>(4 * e));
                }
            }
            return r;
        },
        [](int N, int k) {
            return nqpoch_inf(k, k, N) *
                   pochhammer_infinite(X(), 4, 8 * k, N).inverted();
        },
        {1, 2, 3});
    add("WZ", "even-indexed denominator double sum vs two products", false,
        [](int N, int) {
            QSeries r = QSeries::zero(N);
            for (int i = 0; 4L * i * i - 2 * i <= N; ++i) {
                const QSeries di = inv_qpoch(1, 1, 2 * i, N);
                for (int j = 0;; ++j) {
                    const long e =
                        4L * i * i + 2L * i * j - 2 * i + 1L * j * (j + 1) / 2;
                    if (e > N)
                        break;
                    QSeries t = di * inv_qpoch(1, 1, j, N);
                    r += t.shifted(static_cast<int>(4 * e));
                }
            }
            return r;
        },
        [](int N, int) { return nqpoch_inf(1, 1, N) * nqpoch_inf(2, 2, N); });

    return cat;
}

} // namespace

const std::vector<IdentityEntry>& catalog() {
    static const std::vector<IdentityEntry> cat = build_catalog();
    return cat;
}

std::vector<std::string> catalog_list() {
    std::vector<std::string> ids;
    for (const IdentityEntry& e : catalog())
        ids.push_back(e.id);
    return ids;
}

const IdentityEntry& find_identity(const std::string& id) {
    for (const IdentityEntry& e : catalog())
        if (e.id == id)
            return e;
    fail("UnknownIdentity", "no identity named '" + id + "'");
}

QSeries eval_sum_side(const std::string& id, int order, int param) {
    return find_identity(id).sum_side(order, param);
}

QSeries eval_product_side(const std::string& id, int order, int param) {
    return find_identity(id).product_side(order, param);
}

VerificationReport verify_identity(const std::string& id, int order) {
    const IdentityEntry& e = find_identity(id);
    VerificationReport rep{id, order, true, 0, std::nullopt};
    for (int p : e.params) {
        const QSeries lhs = e.sum_side(order, p);
        const QSeries rhs = e.product_side(order, p);
        if (auto d = QSeries::first_difference(lhs, rhs)) {
            rep.equal = false;
            rep.failedParam = p;
            rep.firstDiscrepancy = d;
            return rep;
        }
    }
    return rep;
}

} // namespace qrr
