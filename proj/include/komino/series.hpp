#pragma once

// Truncated formal power series over exact rationals, plus the bivariate
// generating-function consistency check for width-2 towers.
//
// The check multiplies the closed-form count table
//   D(x, y) = sum_{n>=1} x^n sum_{b=1..n} C(2n-1, n-b) y^b
// by the cleared denominator (y - 2xy - xy^2 - x) and compares against
//   x y^2 + (y^2 - y) H(x),  H(x) = (x/2) (1/sqrt(1-4x) - 1),
// coefficient by coefficient. Everything is exact; a single wrong table entry
// shows up as a precise (n, b) mismatch.

#include <komino/count.hpp>
#include <komino/exact.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace komino {

// Coefficients c[0..order] of a series truncated after x^order.
struct PowerSeries {
    long long order = 0;
    std::vector<Rat> c;

    explicit PowerSeries(long long ord = 0) : order(ord) {
        if (ord < 0) throw std::domain_error("PowerSeries: negative order");
        c.assign(static_cast<size_t>(ord) + 1, Rat(0));
    }
    const Rat& coeff(long long i) const { return c.at(static_cast<size_t>(i)); }
    Rat& coeff(long long i) { return c.at(static_cast<size_t>(i)); }

    PowerSeries truncated(long long m) const {
        if (m > order) throw std::domain_error("PowerSeries: cannot extend truncation");
        PowerSeries r(m);
        for (long long i = 0; i <= m; ++i) r.c[static_cast<size_t>(i)] = c[static_cast<size_t>(i)];
        return r;
    }
    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;
};

namespace detail {
inline void require_same_order(const PowerSeries& a, const PowerSeries& b) {
    if (a.order != b.order) throw std::domain_error("PowerSeries: order mismatch");
}
} // namespace detail

inline PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    detail::require_same_order(a, b);
    PowerSeries r(a.order);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

inline PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    detail::require_same_order(a, b);
    PowerSeries r(a.order);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

inline PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    detail::require_same_order(a, b);
    PowerSeries r(a.order);
    for (size_t i = 0; i < r.c.size(); ++i)
        for (size_t j = 0; i + j < r.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
}

// Formal quotient; the divisor needs a unit constant term.
inline PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
    detail::require_same_order(a, b);
    if (b.c[0] == 0) throw std::domain_error("PowerSeries: division by series with zero constant");
    PowerSeries q(a.order);
    for (size_t n = 0; n < q.c.size(); ++n) {
        Rat acc = a.c[n];
        for (size_t i = 1; i <= n; ++i) acc -= b.c[i] * q.c[n - i];
        q.c[n] = acc / b.c[0];
    }
    return q;
}

// Square root by Newton iteration r <- (r + s/r)/2 with doubling truncation;
// requires constant term 1 so the root stays rational.
inline PowerSeries series_sqrt(const PowerSeries& s) {
    if (s.c[0] != 1) throw std::domain_error("series_sqrt: constant term must be 1");
    long long m = 0;
    PowerSeries r(0);
    r.c[0] = 1;
    while (m < s.order) {
        m = std::min(2 * m + 1, s.order);
        const PowerSeries sm = s.truncated(m);
        PowerSeries rm(m);
        for (long long i = 0; i <= std::min(m, r.order); ++i)
            rm.coeff(i) = r.coeff(i);
        PowerSeries next = rm + sm / rm;
        for (auto& v : next.c) v /= 2;
        r = std::move(next);
    }
    return r;
}

// H(x) = (x/2)(1/sqrt(1-4x) - 1); coefficient of x^n is C(2n-3, n-1) for
// n >= 2 and 0 for n <= 1.
inline PowerSeries helper_series(long long order) {
    if (order < 1) throw std::domain_error("helper_series: order must be >= 1");
    PowerSeries s(order);
    s.c[0] = 1;
    s.c[1] = -4;
    PowerSeries one(order);
    one.c[0] = 1;
    PowerSeries g = one / series_sqrt(s) - one;
    PowerSeries h(order);
    for (long long i = 1; i <= order; ++i) h.coeff(i) = g.coeff(i - 1) / 2;
    return h;
}

// Dense polynomial in y; index = power of y.
using YPoly = std::vector<Rat>;

namespace detail {
inline void ypoly_trim(YPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
inline YPoly ypoly_add(const YPoly& a, const YPoly& b, int sign) {
    YPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += sign * b[i];
    ypoly_trim(r);
    return r;
}
inline YPoly ypoly_mul(const YPoly& a, const YPoly& b) {
    if (a.empty() || b.empty()) return {};
    YPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ypoly_trim(r);
    return r;
}
} // namespace detail

// Series in x truncated after x^order whose coefficients are polynomials
// in y (exact in y, no truncation).
struct BiSeries {
    long long order = 0;
    std::vector<YPoly> c; // c[i] = coefficient of x^i

    explicit BiSeries(long long ord = 0) : order(ord) {
        if (ord < 0) throw std::domain_error("BiSeries: negative order");
        c.assign(static_cast<size_t>(ord) + 1, YPoly{});
    }
    // Value of the y^b term in the x^n coefficient (0 when absent).
    Rat at(long long n, long long b) const {
        if (n < 0 || n > order || b < 0) return Rat(0);
        const auto& p = c[static_cast<size_t>(n)];
        if (static_cast<size_t>(b) >= p.size()) return Rat(0);
        return p[static_cast<size_t>(b)];
    }
};

inline BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    if (a.order != b.order) throw std::domain_error("BiSeries: order mismatch");
    BiSeries r(a.order);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].empty()) continue;
        for (size_t j = 0; i + j < r.c.size(); ++j) {
            if (b.c[j].empty()) continue;
            r.c[i + j] = detail::ypoly_add(r.c[i + j], detail::ypoly_mul(a.c[i], b.c[j]), +1);
        }
    }
    return r;
}

inline BiSeries operator-(const BiSeries& a, const BiSeries& b) {
    if (a.order != b.order) throw std::domain_error("BiSeries: order mismatch");
    BiSeries r(a.order);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = detail::ypoly_add(a.c[i], b.c[i], -1);
    return r;
}

// Closed-form width-2 count table as a bivariate series:
// coefficient of x^n y^b is C(2n-1, n-b).
inline BiSeries d2_table_series(long long order) {
    BiSeries d(order);
    for (long long n = 1; n <= order; ++n) {
        YPoly p(static_cast<size_t>(n) + 1, Rat(0));
        for (long long b = 1; b <= n; ++b)
            p[static_cast<size_t>(b)] = Rat(binomial(2 * n - 1, n - b));
        d.c[static_cast<size_t>(n)] = std::move(p);
    }
    return d;
}

struct GfCheckResult {
    bool ok = false;
    long long n = -1; // first mismatching x-power (when !ok)
    long long b = -1; // first mismatching y-power (when !ok)
    Rat lhs, rhs;
};

// Verifies (y - 2xy - xy^2 - x) D(x,y) == x y^2 + (y^2 - y) H(x) through
// x^order.
inline GfCheckResult d2_closed_form_check(long long order) {
    if (order < 1) throw std::domain_error("d2_closed_form_check: order must be >= 1");
    BiSeries mult(order);
    mult.c[0] = YPoly{Rat(0), Rat(1)};                  // y
    mult.c[1] = YPoly{Rat(-1), Rat(-2), Rat(-1)};       // -1 - 2y - y^2
    const BiSeries lhs = mult * d2_table_series(order);

    const PowerSeries h = helper_series(order);
    BiSeries rhs(order);
    for (long long m = 0; m <= order; ++m)
        rhs.c[static_cast<size_t>(m)] = YPoly{Rat(0), -h.coeff(m), h.coeff(m)};
    rhs.c[1] = detail::ypoly_add(rhs.c[1], YPoly{Rat(0), Rat(0), Rat(1)}, +1);
    for (auto& p : rhs.c) detail::ypoly_trim(p);

    GfCheckResult res;
    res.ok = true;
    const long long max_b = order + 2;
    for (long long n = 0; n <= order && res.ok; ++n)
        for (long long b = 0; b <= max_b; ++b)
            if (lhs.at(n, b) != rhs.at(n, b)) {
                res.ok = false;
                res.n = n;
                res.b = b;
                res.lhs = lhs.at(n, b);
                res.rhs = rhs.at(n, b);
                break;
            }
    return res;
}

} // namespace komino
