#pragma once

// Command-line front end. Kept in the library (the binary is a two-line
// main) so the full argument handling is testable in-process against
// injected streams.
//
// Exit codes: 0 success / verification passed, 1 verification failed,
// 2 usage or domain errors.

#include <komino/bijection.hpp>
#include <komino/count.hpp>
#include <komino/enumerate.hpp>
#include <komino/hyperid.hpp>
#include <komino/serial.hpp>
#include <komino/tower.hpp>
#include <komino/verify.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace komino::cli {

namespace detail {

// Brute enumeration grows like 4^n; anything past this takes real time and
// must be asked for explicitly.
inline constexpr long long enumerate_cap = 24;

inline bool enumeration_too_big(int k, long long n, bool force, std::ostream& err) {
    if (force || static_cast<long long>(k) * n <= enumerate_cap) return false;
    err << "error: k*n = " << static_cast<long long>(k) * n << " exceeds the enumeration cap ("
        << enumerate_cap << "); pass --force to run anyway\n";
    return true;
}

inline int emit_report(const VerificationReport& rep, bool as_json, std::ostream& out) {
    if (as_json)
        out << rep.to_json().dump(2) << "\n";
    else
        out << rep.to_text();
    return rep.pass() ? 0 : 1;
}

inline std::vector<IdentityGridPoint> load_grid(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open grid file: " + path);
    ojson j;
    try {
        f >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("grid file " + path + ": " + e.what());
    }
    if (!j.is_array()) throw std::invalid_argument("grid file must hold a JSON array");
    std::vector<IdentityGridPoint> grid;
    for (const auto& e : j) {
        if (!e.is_object() || !e.contains("k") || !e.contains("alpha") || !e.contains("beta"))
            throw std::invalid_argument("grid entries need k, alpha, beta");
        grid.push_back({e["k"].get<int>(), e["alpha"].get<double>(), e["beta"].get<double>()});
    }
    return grid;
}

} // namespace detail

inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"exact enumeration, counting, and verification of k-omino towers"};
    app.name("komino");
    app.require_subcommand(1);

    struct {
        int k = 2;
        long long n = 1, b = 0;
        std::string method = "closed";
        unsigned workers = 1;
        bool force = false;
    } co;
    auto* count_cmd = app.add_subcommand("count", "count the towers of a class");
    count_cmd->add_option("--k", co.k, "block width")->required();
    count_cmd->add_option("--n", co.n, "total number of blocks")->required();
    auto* count_b = count_cmd->add_option("--b", co.b, "base blocks (omit for the all-bases total)");
    count_cmd->add_option("--method", co.method, "counting route")
        ->check(CLI::IsMember({"closed", "recurrence", "hypergeometric", "enumerate"}));
    count_cmd->add_option("--workers", co.workers, "threads for --method enumerate");
    count_cmd->add_flag("--force", co.force, "lift the enumeration size cap");

    struct {
        int k = 2;
        long long n = 1, b = 0;
        std::string format = "jsonl";
        bool force = false;
    } eo;
    auto* enum_cmd = app.add_subcommand("enumerate", "list every tower of a class");
    enum_cmd->add_option("--k", eo.k, "block width")->required();
    enum_cmd->add_option("--n", eo.n, "total number of blocks")->required();
    auto* enum_b = enum_cmd->add_option("--b", eo.b, "base blocks (omit for all bases)");
    enum_cmd->add_option("--format", eo.format, "jsonl or ascii")
        ->check(CLI::IsMember({"jsonl", "ascii"}));
    enum_cmd->add_flag("--force", eo.force, "lift the enumeration size cap");

    auto* render_cmd =
        app.add_subcommand("render", "read tower JSON lines from stdin, print ASCII grids");

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->require_subcommand(1);

    struct {
        int k = 2;
        long long max_n = 5;
        bool json = false;
    } vb;
    auto* vb_cmd = verify_cmd->add_subcommand("bijection", "fiber structure and round trips");
    vb_cmd->add_option("--k", vb.k, "block width")->required();
    vb_cmd->add_option("--max-n", vb.max_n, "largest class size to sweep");
    vb_cmd->add_flag("--json", vb.json, "emit a JSON report");

    struct {
        int k = 1;
        double alpha = 0, beta = 0;
        double tol = 1e-8;
        std::string grid;
        bool use_float = false, json = false;
    } vi;
    auto* vi_cmd = verify_cmd->add_subcommand("identity", "binomial-sum identity routes");
    vi_cmd->add_option("--k", vi.k, "identity width parameter");
    auto* vi_alpha = vi_cmd->add_option("--alpha", vi.alpha, "left parameter (> 0)");
    auto* vi_beta = vi_cmd->add_option("--beta", vi.beta, "sum length (integer >= 0)");
    vi_cmd->add_flag("--float", vi.use_float, "use the floating route");
    vi_cmd->add_option("--tol", vi.tol, "relative error bound for the floating route");
    vi_cmd->add_option("--grid", vi.grid, "JSON file of {k, alpha, beta} points (floating route)");
    vi_cmd->add_flag("--json", vi.json, "emit a JSON report");

    struct {
        long long order = 10;
        bool json = false;
    } vg;
    auto* vg_cmd = verify_cmd->add_subcommand("gf", "bivariate generating-function identity");
    vg_cmd->add_option("--order", vg.order, "truncation order");
    vg_cmd->add_flag("--json", vg.json, "emit a JSON report");

    struct {
        int k = 2;
        long long max_n = 12;
        bool json = false;
    } vr;
    auto* vr_cmd = verify_cmd->add_subcommand("recurrence", "recurrence vs closed form");
    vr_cmd->add_option("--k", vr.k, "block width")->required();
    vr_cmd->add_option("--max-n", vr.max_n, "largest n to check");
    vr_cmd->add_flag("--json", vr.json, "emit a JSON report");

    struct {
        int max_k = 3;
        long long max_n = 8;
        bool json = false;
    } va;
    auto* va_cmd = verify_cmd->add_subcommand("all", "every suite at moderate sizes");
    va_cmd->add_option("--max-k", va.max_k, "largest block width");
    va_cmd->add_option("--max-n", va.max_n, "largest n");
    va_cmd->add_flag("--json", va.json, "emit a JSON report");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*count_cmd) {
            const bool has_b = count_b->count() > 0;
            Int result;
            if (co.method == "enumerate" &&
                detail::enumeration_too_big(co.k, co.n, co.force, err))
                return 2;
            if (has_b) {
                if (co.method == "closed") {
                    result = count_towers_closed(co.k, co.n, co.b);
                } else if (co.method == "recurrence") {
                    result = recurrence_table(co.k, co.n).at(co.n, co.b);
                } else if (co.method == "enumerate") {
                    result = count_by_enumeration(TowerClassParams{co.k, co.n, co.b}, co.workers);
                } else {
                    err << "error: the hypergeometric route computes all-bases totals; omit --b\n";
                    return 2;
                }
            } else {
                if (co.method == "closed") {
                    result = count_all_closed(co.k, co.n);
                } else if (co.method == "recurrence") {
                    const CountTable t = recurrence_table(co.k, co.n);
                    result = 0;
                    for (long long b = 1; b <= co.n; ++b) result += t.at(co.n, b);
                } else if (co.method == "enumerate") {
                    result = count_all_by_enumeration(co.k, co.n, co.workers);
                } else {
                    result = count_all_hypergeometric(co.k, co.n);
                }
            }
            out << result.str() << "\n";
            return 0;
        }
        if (*enum_cmd) {
            if (detail::enumeration_too_big(eo.k, eo.n, eo.force, err)) return 2;
            bool first = true;
            auto emit = [&](const Tower& t) {
                if (eo.format == "jsonl") {
                    out << tower_to_json_string(t) << "\n";
                } else {
                    if (!first) out << "\n";
                    out << render_ascii(t) << "\n";
                }
                first = false;
            };
            if (enum_b->count() > 0)
                for_each_tower(TowerClassParams{eo.k, eo.n, eo.b}, emit);
            else
                for_each_tower_all(eo.k, eo.n, emit);
            return 0;
        }
        if (*render_cmd) {
            std::string line;
            bool first = true;
            while (std::getline(in, line)) {
                while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
                    line.pop_back();
                if (line.empty()) continue;
                if (!first) out << "\n";
                out << render_ascii(tower_from_json_string(line)) << "\n";
                first = false;
            }
            return 0;
        }
        if (*vb_cmd) return detail::emit_report(verify_bijection(vb.k, vb.max_n), vb.json, out);
        if (*vi_cmd) {
            if (!vi.grid.empty())
                return detail::emit_report(verify_identity_grid(detail::load_grid(vi.grid), vi.tol),
                                           vi.json, out);
            if (vi_alpha->count() == 0 || vi_beta->count() == 0) {
                err << "error: verify identity needs --alpha and --beta (or --grid FILE)\n";
                return 2;
            }
            return detail::emit_report(
                verify_identity_point(vi.k, vi.alpha, vi.beta, vi.use_float, vi.tol), vi.json, out);
        }
        if (*vg_cmd) return detail::emit_report(verify_gf(vg.order), vg.json, out);
        if (*vr_cmd) return detail::emit_report(verify_recurrence(vr.k, vr.max_n), vr.json, out);
        if (*va_cmd) return detail::emit_report(verify_all(va.max_k, va.max_n), va.json, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace komino::cli
