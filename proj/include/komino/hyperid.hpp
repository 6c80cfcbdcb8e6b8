#pragma once

// Binomial/hypergeometric identity behind the column-decomposition count:
//
//   C(k a + k b + b, b) * 2F1(a, -b; k a + k b + 1; -1)
//     == sum_{i=0..b} C(k a + k b + b, b - i) * (a)_i / i!
//
// for integer k >= 1, real a > 0 and non-negative integer b. Two independent
// routes evaluate it: an exact rational route (integer a) and a floating
// route through a self-contained Lanczos log-gamma (real a). The routes
// share no code, so agreement is meaningful; the float route's oracle in the
// tests is the library log-gamma, not the other way around.
//
// At a = 1, b = n-1 and identity width k-1 the left side is exactly the
// all-bases tower total for width k, which ties this module to the counting
// routes.

#include <komino/count.hpp>
#include <komino/exact.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace komino {

// Lanczos approximation, g = 7, 9 coefficients; |rel err| < 1e-13 on x > 0.
inline double log_gamma(double x) {
    if (!(x > 0)) throw std::domain_error("log_gamma: requires x > 0");
    static const double coef[] = {
        0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
        771.32342877765313,       -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7,
    };
    const double z = x - 1.0;
    double a = coef[0];
    for (int i = 1; i < 9; ++i) a += coef[i] / (z + i);
    const double t = z + 7.5;
    return 0.9189385332046727418 + (z + 0.5) * std::log(t) - t + std::log(a);
}

// C(x, y) = Gamma(x+1) / (Gamma(y+1) Gamma(x-y+1)) for real arguments in the
// positive-Gamma domain.
inline double extended_binomial(double x, double y) {
    if (!(x + 1 > 0) || !(y + 1 > 0) || !(x - y + 1 > 0))
        throw std::domain_error("extended_binomial: arguments outside the Gamma domain");
    return std::exp(log_gamma(x + 1) - log_gamma(y + 1) - log_gamma(x - y + 1));
}

struct ExactIdentityCheck {
    Rat lhs, rhs;
    bool equal = false;
};

inline ExactIdentityCheck kummer_like_exact(int k, long long alpha, long long beta) {
    if (k < 1 || alpha < 1 || beta < 0)
        throw std::domain_error("kummer_like_exact: need k >= 1, alpha >= 1, beta >= 0");
    const long long top = k * alpha + k * beta + beta;
    const Rat f = hyp2f1_terminating(Rat(alpha), -beta, Rat(k * alpha + k * beta + 1), Rat(-1));
    ExactIdentityCheck r;
    r.lhs = Rat(binomial(top, beta)) * f;
    r.rhs = 0;
    Rat fact = 1; // i!
    for (long long i = 0; i <= beta; ++i) {
        if (i > 0) fact *= i;
        r.rhs += Rat(binomial(top, beta - i)) * pochhammer(Rat(alpha), static_cast<unsigned>(i)) / fact;
    }
    r.equal = r.lhs == r.rhs;
    return r;
}

struct FloatIdentityCheck {
    double lhs = 0, rhs = 0;
    double rel_err = 0; // |lhs-rhs| / max(|lhs|, |rhs|, 1)
};

// Float route for real alpha > 0. beta must still be a non-negative integer
// (the sum and the terminating series have beta + 1 terms; nothing else is
// meaningful), checked to a small tolerance.
inline FloatIdentityCheck kummer_like_float(int k, double alpha, double beta) {
    if (k < 1 || !(alpha > 0)) throw std::domain_error("kummer_like_float: need k >= 1, alpha > 0");
    const double beta_round = std::nearbyint(beta);
    if (beta < 0 || std::fabs(beta - beta_round) > 1e-9)
        throw std::domain_error("kummer_like_float: beta must be a non-negative integer");
    const long long b = static_cast<long long>(beta_round);
    const double top = k * alpha + k * beta_round + beta_round;
    const double c = k * alpha + k * beta_round + 1;
    double f = 0, term = 1; // 2F1(alpha, -b; c; -1), term m
    for (long long m = 0;; ++m) {
        f += term;
        if (m == b) break;
        term *= (alpha + static_cast<double>(m)) * static_cast<double>(-b + m) * (-1.0) /
                ((c + static_cast<double>(m)) * static_cast<double>(m + 1));
    }
    FloatIdentityCheck r;
    r.lhs = extended_binomial(top, beta_round) * f;
    r.rhs = 0;
    double poch = 1, fact = 1; // (alpha)_i, i!
    for (long long i = 0; i <= b; ++i) {
        if (i > 0) {
            poch *= alpha + static_cast<double>(i - 1);
            fact *= static_cast<double>(i);
        }
        r.rhs += extended_binomial(top, beta_round - static_cast<double>(i)) * poch / fact;
    }
    r.rel_err = std::fabs(r.lhs - r.rhs) /
                std::max({std::fabs(r.lhs), std::fabs(r.rhs), 1.0});
    return r;
}

struct IdentityGridPoint {
    int k = 1;
    double alpha = 1;
    double beta = 0;
};

// Fixed 50-point float grid: beta 1..10, five non-integer-heavy alpha values,
// widths cycling 1..4.
inline std::vector<IdentityGridPoint> default_float_grid() {
    static const double alphas[] = {0.5, 1.25, 2.0, 3.5, 5.0};
    std::vector<IdentityGridPoint> g;
    for (int i = 0; i < 50; ++i)
        g.push_back({(i % 4) + 1, alphas[i % 5], static_cast<double>(i / 5 + 1)});
    return g;
}

} // namespace komino
