#pragma once

// Closed-form, hypergeometric, and recurrence-based tower counting.
//
// All three routes compute the same numbers by structurally different
// derivations; tests cross-check them against each other and against brute
// enumeration. Counts are exact (Int), intermediate hypergeometric work is
// exact rational.

#include <komino/exact.hpp>

#include <stdexcept>
#include <vector>

namespace komino {

// C(m, j), exact. m may be any non-negative integer that fits a long long;
// out-of-range j gives 0. Negative m is a caller bug here (generalized upper
// arguments belong to hyperid.hpp), so it throws rather than extrapolating.
inline Int binomial(long long m, long long j) {
    if (m < 0) throw std::domain_error("binomial: negative upper argument");
    if (j < 0 || j > m) return 0;
    if (j > m - j) j = m - j;
    Int c = 1;
    // After the i-th step c == C(m-j+i, i), so the division is always exact.
    for (long long i = 1; i <= j; ++i) {
        c *= m - j + i;
        c /= i;
    }
    return c;
}

// Rising factorial (a)_m = a (a+1) ... (a+m-1); (a)_0 = 1.
inline Rat pochhammer(const Rat& a, unsigned m) {
    Rat r = 1;
    for (unsigned i = 0; i < m; ++i) r *= a + static_cast<int>(i);
    return r;
}

struct TowerClassParams {
    int k = 0;       // block width
    long long n = 0; // total number of blocks
    long long b = 0; // number of base blocks
    void check() const {
        if (k < 1) throw std::domain_error("params: k must be >= 1");
        if (n < 1) throw std::domain_error("params: n must be >= 1");
        if (b < 1 || b > n) throw std::domain_error("params: need 1 <= b <= n");
    }
};

// Number of towers with n blocks of width k on a b-block base:
//   C(k n - 1, n - b).
inline Int count_towers_closed(int k, long long n, long long b) {
    TowerClassParams{k, n, b}.check();
    return binomial(static_cast<long long>(k) * n - 1, n - b);
}

// Total over all base sizes b = 1..n.
inline Int count_all_closed(int k, long long n) {
    if (k < 1 || n < 1) throw std::domain_error("count_all_closed: bad params");
    Int s = 0;
    for (long long b = 1; b <= n; ++b) s += count_towers_closed(k, n, b);
    return s;
}

// Terminating 2F1(a, b; c; z) with b a non-positive integer: the sum has
// 1 - b terms and is evaluated in exact rational arithmetic.
inline Rat hyp2f1_terminating(const Rat& a, long long b, const Rat& c, const Rat& z) {
    if (b > 0) throw std::domain_error("hyp2f1_terminating: b must be <= 0");
    Rat sum = 0;
    Rat term = 1; // (a)_m (b)_m z^m / ((c)_m m!)
    for (long long m = 0;; ++m) {
        sum += term;
        if (m == -b) break;
        const Rat cm = c + static_cast<long long>(m);
        if (cm == 0) throw std::domain_error("hyp2f1_terminating: zero in denominator parameter");
        term *= (a + static_cast<long long>(m)) * Rat(b + m) * z;
        term /= cm * Rat(m + 1);
    }
    return sum;
}

// Total count via the hypergeometric form:
//   C(k n - 1, n - 1) * 2F1(1, 1 - n; (k-1) n + 1; -1).
inline Int count_all_hypergeometric(int k, long long n) {
    if (k < 1 || n < 1) throw std::domain_error("count_all_hypergeometric: bad params");
    const Rat f = hyp2f1_terminating(Rat(1), 1 - n,
                                     Rat(static_cast<long long>(k - 1) * n + 1), Rat(-1));
    const Rat total = Rat(binomial(static_cast<long long>(k) * n - 1, n - 1)) * f;
    return rat_to_int(total); // the product is always integral; throws if not
}

// Fixed-width count table: rows n = 1..n_max, row n holds counts for b = 1..n.
struct CountTable {
    int k = 0;
    std::vector<std::vector<Int>> rows; // rows[n-1][b-1]
    const Int& at(long long n, long long b) const {
        if (n < 1 || static_cast<size_t>(n) > rows.size() || b < 1 || b > n)
            throw std::out_of_range("CountTable::at");
        return rows[static_cast<size_t>(n - 1)][static_cast<size_t>(b - 1)];
    }
};

// Builds the table bottom-up from the one-level-removal recurrence
//   d_b(n) = sum_{i=0..k} C(k, i) * T_{b+i-1}(n-1),
// where T_beta(m) is the count for beta base blocks except that the formal
// beta = 0 term contributes C(k m - 1, m).
inline CountTable recurrence_table(int k, long long n_max) {
    if (k < 1 || n_max < 1) throw std::domain_error("recurrence_table: bad params");
    CountTable t;
    t.k = k;
    t.rows.resize(static_cast<size_t>(n_max));
    t.rows[0] = {Int(1)}; // single block, b = n = 1
    for (long long n = 2; n <= n_max; ++n) {
        auto& row = t.rows[static_cast<size_t>(n - 1)];
        row.resize(static_cast<size_t>(n));
        const auto& prev = t.rows[static_cast<size_t>(n - 2)];
        const long long m = n - 1;
        for (long long b = 1; b <= n; ++b) {
            Int s = 0;
            for (int i = 0; i <= k; ++i) {
                const long long beta = b + i - 1;
                Int term;
                if (beta == 0) {
                    term = binomial(k * m - 1, m); // formal T_0(m)
                } else if (beta <= m) {
                    term = prev[static_cast<size_t>(beta - 1)];
                } else {
                    continue; // no towers with more base blocks than blocks
                }
                s += binomial(k, i) * term;
            }
            row[static_cast<size_t>(b - 1)] = s;
        }
    }
    return t;
}

// Chu--Vandermonde consistency of the closed form with the recurrence:
//   C(k n - 1, n - b) == sum_{i=0..k} C(k, i) C(k (n-1) - 1, n - b - i).
inline bool vandermonde_check(int k, long long n, long long b) {
    if (k < 1 || n < 2 || b < 1 || b > n) throw std::domain_error("vandermonde_check: bad params");
    Int rhs = 0;
    for (int i = 0; i <= k; ++i)
        rhs += binomial(k, i) * binomial(k * (n - 1) - 1, n - b - i);
    return binomial(static_cast<long long>(k) * n - 1, n - b) == rhs;
}

// Single-base-block boundary identity used when the recurrence's formal
// T_0 term is eliminated:  C(k(n-1) - 1, n - 1) == (k-1) * C(k(n-1) - 1, n - 2).
// (Ratio proof: C(M, n-1)/C(M, n-2) = (M - n + 2)/(n - 1) = k - 1 for
// M = k(n-1) - 1.)
inline bool base_one_identity_check(int k, long long n) {
    if (k < 2 || n < 2) throw std::domain_error("base_one_identity_check: need k >= 2, n >= 2");
    const long long M = static_cast<long long>(k) * (n - 1) - 1;
    return binomial(M, n - 1) == Int(k - 1) * binomial(M, n - 2);
}

} // namespace komino
