#pragma once

// Exhaustive tower enumeration.
//
// Towers are generated level by level, left to right within a level, which
// visits each tower exactly once in lexicographic order of its sorted
// (level, x) block list. Counting can be partitioned across threads by the
// position of the leftmost level-1 block; the partition is exact, so the
// parallel count equals the serial count for every worker count.

#include <komino/count.hpp>
#include <komino/tower.hpp>

#include <future>
#include <limits>
#include <utility>
#include <vector>

namespace komino {

namespace detail {

// Anchor positions at which a width-k block overlaps some block of `prev`
// (ascending), as merged closed intervals.
inline std::vector<std::pair<int, int>> support_windows(int k, const std::vector<int>& prev) {
    std::vector<std::pair<int, int>> w;
    for (int p : prev) {
        const int lo = p - k + 1, hi = p + k - 1;
        if (!w.empty() && lo <= w.back().second + 1)
            w.back().second = std::max(w.back().second, hi);
        else
            w.emplace_back(lo, hi);
    }
    return w;
}

// F is called with the sorted block list of each complete tower.
template <class F>
class TowerEnumerator {
public:
    TowerEnumerator(const TowerClassParams& p, F& f) : p_(p), f_(f) {
        p_.check();
        for (long long i = 0; i < p_.b; ++i)
            base_.push_back(static_cast<int>(i) * p_.k);
    }

    void run() {
        init_stack();
        enter_level(base_, p_.n - p_.b, 1);
    }

    // Only towers whose leftmost level-1 block sits at first_x. Requires
    // n > b; the union over all supported first_x values is the whole class.
    void run_first(int first_x) {
        init_stack();
        stack_.push_back({1, first_x});
        std::vector<int> cur{first_x};
        extend(support_windows(p_.k, base_), cur, p_.n - p_.b - 1, 1);
        stack_.pop_back();
    }

private:
    void init_stack() {
        stack_.clear();
        for (int x : base_) stack_.push_back({0, x});
    }

    void enter_level(const std::vector<int>& prev, long long remaining, int level) {
        std::vector<int> cur;
        extend(support_windows(p_.k, prev), cur, remaining, level);
    }

    void extend(const std::vector<std::pair<int, int>>& windows, std::vector<int>& cur,
                long long remaining, int level) {
        if (remaining == 0) {
            f_(stack_);
            return;
        }
        const int floor_x =
            cur.empty() ? std::numeric_limits<int>::min() : cur.back() + p_.k;
        for (const auto& [lo, hi] : windows) {
            for (int x = std::max(lo, floor_x); x <= hi; ++x) {
                stack_.push_back({level, x});
                cur.push_back(x);
                extend(windows, cur, remaining - 1, level);
                cur.pop_back();
                stack_.pop_back();
            }
        }
        if (!cur.empty()) enter_level(cur, remaining, level + 1);
    }

    TowerClassParams p_;
    F& f_;
    std::vector<int> base_;
    std::vector<Block> stack_; // blocks placed so far, in sorted order
};

} // namespace detail

// Visits every tower of the class once, in lexicographic order of the sorted
// block list. f receives a valid, normalized Tower.
template <class F>
void for_each_tower(const TowerClassParams& p, F&& f) {
    auto sink = [&](const std::vector<Block>& blocks) { f(Tower{p.k, blocks}); };
    detail::TowerEnumerator en(p, sink);
    en.run();
}

inline std::vector<Tower> enumerate_towers(const TowerClassParams& p) {
    std::vector<Tower> ts;
    for_each_tower(p, [&](const Tower& t) { ts.push_back(t); });
    return ts;
}

inline Int count_by_enumeration(const TowerClassParams& p) {
    Int count = 0;
    auto sink = [&](const std::vector<Block>&) { ++count; };
    detail::TowerEnumerator en(p, sink);
    en.run();
    return count;
}

// Partitioned parallel count. Each task owns the leftmost level-1 positions
// assigned to it round-robin; exact integer sums make the result independent
// of scheduling and of `workers`.
inline Int count_by_enumeration(const TowerClassParams& p, unsigned workers) {
    p.check();
    if (workers <= 1 || p.n == p.b) return count_by_enumeration(p);
    std::vector<int> base;
    for (long long i = 0; i < p.b; ++i) base.push_back(static_cast<int>(i) * p.k);
    std::vector<int> candidates;
    for (const auto& [lo, hi] : detail::support_windows(p.k, base))
        for (int x = lo; x <= hi; ++x) candidates.push_back(x);
    std::vector<std::future<Int>> futures;
    for (unsigned w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&, w]() {
            Int sub = 0;
            auto sink = [&](const std::vector<Block>&) { ++sub; };
            detail::TowerEnumerator en(p, sink);
            for (size_t i = w; i < candidates.size(); i += workers) en.run_first(candidates[i]);
            return sub;
        }));
    }
    Int total = 0;
    for (auto& fu : futures) total += fu.get();
    return total;
}

template <class F>
void for_each_tower_all(int k, long long n, F&& f) {
    for (long long b = 1; b <= n; ++b) for_each_tower(TowerClassParams{k, n, b}, f);
}

inline Int count_all_by_enumeration(int k, long long n, unsigned workers = 1) {
    Int total = 0;
    for (long long b = 1; b <= n; ++b)
        total += count_by_enumeration(TowerClassParams{k, n, b}, workers);
    return total;
}

} // namespace komino
