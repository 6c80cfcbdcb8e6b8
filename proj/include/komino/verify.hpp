#pragma once

// Named verification suites with structured reports. Each suite bundles the
// cross-checks of one module contract: recurrence vs closed form, generating
// function, bijection fibers, identity routes, count-route agreement, and
// constructive tower operations. The CLI maps suites to `verify` subcommands;
// exit status is derived from pass().

#include <komino/bijection.hpp>
#include <komino/count.hpp>
#include <komino/enumerate.hpp>
#include <komino/hyperid.hpp>
#include <komino/serial.hpp>
#include <komino/series.hpp>
#include <komino/tower.hpp>

#include <chrono>
#include <sstream>
#include <string>
#include <vector>

namespace komino {

struct CheckRecord {
    std::string id;
    std::string expected, actual;
    bool pass = false;
};

struct VerificationReport {
    std::string suite;
    ojson parameters = ojson::object();
    std::vector<CheckRecord> checks;
    ojson details = ojson::object();
    double wall_ms = 0;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    long long failures() const {
        long long f = 0;
        for (const auto& c : checks)
            if (!c.pass) ++f;
        return f;
    }
    void check_true(const std::string& id, bool ok, const std::string& note = "") {
        checks.push_back({id, "true", ok ? "true" : (note.empty() ? "false" : note), ok});
    }
    template <class A, class B>
    void check_eq(const std::string& id, const A& expected, const B& actual) {
        std::ostringstream e, a;
        e << expected;
        a << actual;
        checks.push_back({id, e.str(), a.str(), e.str() == a.str()});
    }
    void merge(const VerificationReport& sub) {
        for (const auto& c : sub.checks)
            checks.push_back({sub.suite + "/" + c.id, c.expected, c.actual, c.pass});
        if (!sub.details.empty()) details[sub.suite] = sub.details;
        wall_ms += sub.wall_ms;
    }
    ojson to_json() const {
        ojson j;
        j["suite"] = suite;
        j["parameters"] = parameters;
        j["pass"] = pass();
        j["checks"] = ojson::array();
        for (const auto& c : checks) {
            ojson cj;
            cj["id"] = c.id;
            cj["pass"] = c.pass;
            if (!c.pass) {
                cj["expected"] = c.expected;
                cj["actual"] = c.actual;
            }
            j["checks"].push_back(std::move(cj));
        }
        if (!details.empty()) j["details"] = details;
        j["wall_ms"] = wall_ms;
        return j;
    }
    std::string to_text() const {
        std::ostringstream os;
        os << "suite: " << suite;
        if (!parameters.empty()) os << " " << parameters.dump();
        os << "\n";
        for (const auto& c : checks) {
            if (c.pass)
                os << "[pass] " << c.id << "\n";
            else
                os << "[FAIL] " << c.id << " expected=" << c.expected << " actual=" << c.actual
                   << "\n";
        }
        os << checks.size() << " checks, " << failures() << " failures\n";
        return os.str();
    }
};

namespace detail {
class WallTimer {
public:
    explicit WallTimer(VerificationReport& r) : r_(r), t0_(std::chrono::steady_clock::now()) {}
    ~WallTimer() {
        r_.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0_)
                         .count();
    }

private:
    VerificationReport& r_;
    std::chrono::steady_clock::time_point t0_;
};
} // namespace detail

// Recurrence table vs closed form, the Chu--Vandermonde rearrangement, and
// the single-base boundary identity.
inline VerificationReport verify_recurrence(int k, long long max_n) {
    VerificationReport r;
    r.suite = "recurrence";
    r.parameters["k"] = k;
    r.parameters["max_n"] = max_n;
    detail::WallTimer timer(r);
    const CountTable t = recurrence_table(k, max_n);
    for (long long n = 1; n <= max_n; ++n)
        for (long long b = 1; b <= n; ++b)
            r.check_eq("closed_vs_recurrence_n" + std::to_string(n) + "_b" + std::to_string(b),
                       count_towers_closed(k, n, b), t.at(n, b));
    for (long long n = 2; n <= max_n; ++n)
        for (long long b = 1; b <= n; ++b)
            r.check_true("vandermonde_n" + std::to_string(n) + "_b" + std::to_string(b),
                         vandermonde_check(k, n, b));
    if (k >= 2)
        for (long long n = 2; n <= max_n; ++n)
            r.check_true("base_one_identity_n" + std::to_string(n), base_one_identity_check(k, n));
    return r;
}

inline VerificationReport verify_gf(long long order) {
    VerificationReport r;
    r.suite = "gf";
    r.parameters["order"] = order;
    detail::WallTimer timer(r);
    const GfCheckResult g = d2_closed_form_check(order);
    if (g.ok) {
        r.check_true("bivariate_identity", true);
    } else {
        r.check_eq("bivariate_identity_x" + std::to_string(g.n) + "_y" + std::to_string(g.b),
                   to_string(g.rhs), to_string(g.lhs));
    }
    const PowerSeries h = helper_series(std::max<long long>(order, 2));
    for (long long n = 2; n <= h.order; ++n)
        r.check_eq("helper_coeff_x" + std::to_string(n), Rat(binomial(2 * n - 3, n - 1)),
                   h.coeff(n));
    return r;
}

inline VerificationReport verify_bijection(int k, long long max_n) {
    VerificationReport r;
    r.suite = "bijection";
    r.parameters["k"] = k;
    r.parameters["max_n"] = max_n;
    detail::WallTimer timer(r);
    for (long long n = 2; n <= max_n; ++n)
        for (long long b = 1; b <= n; ++b) {
            FiberReport fr = fiber_histogram(k, n, b);
            const std::string id =
                "fibers_n" + std::to_string(n) + "_b" + std::to_string(b);
            std::string note;
            if (!fr.ok()) note = fr.violations.front();
            r.check_true(id, fr.ok(), note);
            ojson hj;
            for (const auto& [beta, sizes] : fr.histogram)
                for (const auto& [size, count] : sizes)
                    hj["b" + std::to_string(beta) + "_fiber" + std::to_string(size)] = count;
            hj["towers"] = fr.towers;
            r.details[id] = std::move(hj);
        }
    return r;
}

inline VerificationReport verify_identity_point(int k, double alpha, double beta,
                                                bool use_float, double tol = 1e-8) {
    VerificationReport r;
    r.suite = "identity";
    r.parameters["k"] = k;
    r.parameters["alpha"] = alpha;
    r.parameters["beta"] = beta;
    r.parameters["route"] = use_float ? "float" : "exact";
    detail::WallTimer timer(r);
    if (use_float) {
        const FloatIdentityCheck c = kummer_like_float(k, alpha, beta);
        r.details["lhs"] = c.lhs;
        r.details["rhs"] = c.rhs;
        r.details["rel_err"] = c.rel_err;
        r.check_true("float_identity", c.rel_err <= tol,
                     "rel_err=" + std::to_string(c.rel_err));
    } else {
        if (alpha != static_cast<double>(static_cast<long long>(alpha)) ||
            beta != static_cast<double>(static_cast<long long>(beta)))
            throw std::domain_error("exact identity route needs integer alpha and beta");
        const ExactIdentityCheck c =
            kummer_like_exact(k, static_cast<long long>(alpha), static_cast<long long>(beta));
        r.details["lhs"] = to_string(c.lhs);
        r.details["rhs"] = to_string(c.rhs);
        r.check_true("exact_identity", c.equal, to_string(c.lhs) + " vs " + to_string(c.rhs));
    }
    return r;
}

inline VerificationReport verify_identity_sweep(int max_k, long long max_alpha,
                                                long long max_beta) {
    VerificationReport r;
    r.suite = "identity_sweep";
    r.parameters["max_k"] = max_k;
    r.parameters["max_alpha"] = max_alpha;
    r.parameters["max_beta"] = max_beta;
    detail::WallTimer timer(r);
    for (int k = 1; k <= max_k; ++k)
        for (long long a = 1; a <= max_alpha; ++a)
            for (long long b = 0; b <= max_beta; ++b) {
                const auto c = kummer_like_exact(k, a, b);
                r.check_true("exact_k" + std::to_string(k) + "_a" + std::to_string(a) + "_b" +
                                 std::to_string(b),
                             c.equal, to_string(c.lhs) + " vs " + to_string(c.rhs));
            }
    return r;
}

inline VerificationReport verify_identity_grid(const std::vector<IdentityGridPoint>& grid,
                                               double tol = 1e-8) {
    VerificationReport r;
    r.suite = "identity_grid";
    r.parameters["points"] = grid.size();
    r.parameters["tol"] = tol;
    detail::WallTimer timer(r);
    double worst = 0;
    for (size_t i = 0; i < grid.size(); ++i) {
        const auto& p = grid[i];
        const FloatIdentityCheck c = kummer_like_float(p.k, p.alpha, p.beta);
        worst = std::max(worst, c.rel_err);
        r.check_true("grid_" + std::to_string(i) + "_k" + std::to_string(p.k),
                     c.rel_err <= tol, "rel_err=" + std::to_string(c.rel_err));
    }
    r.details["worst_rel_err"] = worst;
    return r;
}

// All counting routes agree: closed form, recurrence, hypergeometric total,
// and (on small classes) brute enumeration; plus the identity-module tie.
inline VerificationReport verify_counts(int max_k, long long max_n) {
    VerificationReport r;
    r.suite = "counts";
    r.parameters["max_k"] = max_k;
    r.parameters["max_n"] = max_n;
    detail::WallTimer timer(r);
    for (int k = 1; k <= max_k; ++k) {
        const CountTable t = recurrence_table(k, max_n);
        for (long long n = 1; n <= max_n; ++n) {
            Int total_closed = 0;
            for (long long b = 1; b <= n; ++b) {
                total_closed += count_towers_closed(k, n, b);
                r.check_eq("recurrence_k" + std::to_string(k) + "_n" + std::to_string(n) + "_b" +
                               std::to_string(b),
                           count_towers_closed(k, n, b), t.at(n, b));
            }
            r.check_eq("hypergeometric_k" + std::to_string(k) + "_n" + std::to_string(n),
                       total_closed, count_all_hypergeometric(k, n));
            if (k >= 2 && n >= 1)
                r.check_eq("identity_tie_k" + std::to_string(k) + "_n" + std::to_string(n),
                           Rat(total_closed),
                           kummer_like_exact(k - 1, 1, n - 1).rhs);
            if (k * n <= 16)
                r.check_eq("enumeration_k" + std::to_string(k) + "_n" + std::to_string(n),
                           total_closed, count_all_by_enumeration(k, n));
        }
    }
    return r;
}

// Constructive operations on every enumerated tower of the small classes:
// validity, serialization round trip, and delete/grow inversion.
inline VerificationReport verify_constructions(int max_k, long long max_n) {
    VerificationReport r;
    r.suite = "constructions";
    r.parameters["max_k"] = max_k;
    r.parameters["max_n"] = max_n;
    detail::WallTimer timer(r);
    for (int k = 1; k <= max_k; ++k)
        for (long long n = 1; n <= max_n; ++n) {
            long long bad_valid = 0, bad_serial = 0, bad_regrow = 0, towers = 0;
            for_each_tower_all(k, n, [&](const Tower& t) {
                ++towers;
                if (!validate(t).ok()) ++bad_valid;
                if (!(tower_from_json_string(tower_to_json_string(t)) == t)) ++bad_serial;
                // removing the top-right block and growing it back is identity
                const Block top = t.blocks.back();
                auto del = delete_block(t, top);
                if (del.valid) {
                    auto grown = grow_at(del.tower, top.x, top.level);
                    if (!grown.valid || !(grown.tower == t)) ++bad_regrow;
                }
            });
            const std::string suffix = "_k" + std::to_string(k) + "_n" + std::to_string(n);
            r.check_eq("all_enumerated_valid" + suffix, 0, bad_valid);
            r.check_eq("serialization_round_trip" + suffix, 0, bad_serial);
            r.check_eq("delete_grow_inverse" + suffix, 0, bad_regrow);
            r.details["towers" + suffix] = towers;
        }
    return r;
}

inline VerificationReport verify_all(int max_k, long long max_n) {
    VerificationReport r;
    r.suite = "all";
    r.parameters["max_k"] = max_k;
    r.parameters["max_n"] = max_n;
    for (int k = 1; k <= max_k; ++k) r.merge(verify_recurrence(k, max_n));
    r.merge(verify_gf(std::max<long long>(max_n, 2)));
    for (int k = 1; k <= std::min(max_k, 3); ++k)
        r.merge(verify_bijection(k, std::min<long long>(max_n, 6)));
    r.merge(verify_identity_sweep(std::min(max_k, 4), 6, 6));
    r.merge(verify_identity_grid(default_float_grid()));
    r.merge(verify_counts(max_k, max_n));
    r.merge(verify_constructions(std::min(max_k, 3), std::min<long long>(max_n, 6)));
    return r;
}

} // namespace komino
