// Acceptance gate: one line per criterion, exit status = number of failures.
// Each criterion re-derives its expectation from an independent route
// (enumeration vs closed forms, exact vs floating identities, frozen
// hand-checked instances); tolerances are pinned constants below.

#include <komino/cli.hpp>
#include <komino/komino.hpp>

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace komino;

namespace {

constexpr double kFloatIdentityTol = 1e-8;    // criterion 10: float identity grid
constexpr double kExtendedBinomialTol = 1e-10; // criterion 10: real-gamma binomials
constexpr unsigned kProbeSeed = 20240811;      // criterion 11: randomized probes
constexpr int kProbeCount = 1000;

int failures = 0;

void criterion(int idx, const char* what, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    if (ok) {
        std::printf("[pass] criterion %d: %s\n", idx, what);
    } else {
        ++failures;
        if (detail.empty())
            std::printf("[FAIL] criterion %d: %s\n", idx, what);
        else
            std::printf("[FAIL] criterion %d: %s (%s)\n", idx, what, detail.c_str());
    }
}

std::string run_cli(const std::vector<std::string>& args) {
    std::istringstream in;
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return std::to_string(code) + "|" + out.str() + "|" + err.str();
}

bool mismatch(std::string& detail, int k, long long n, long long b, const Int& got,
              const Int& want) {
    std::ostringstream os;
    os << "k=" << k << " n=" << n << " b=" << b << ": got " << got << ", want " << want;
    detail = os.str();
    return false;
}

} // namespace

int main() {
    criterion(1, "enumeration equals the per-base closed form on small classes",
              [](std::string& detail) {
                  for (int k = 1; k <= 4; ++k) {
                      const long long n_max = (k == 2) ? 8 : 7;
                      for (long long n = 1; n <= n_max; ++n)
                          for (long long b = 1; b <= n; ++b) {
                              const Int got = count_by_enumeration({k, n, b});
                              const Int want = count_towers_closed(k, n, b);
                              if (got != want) return mismatch(detail, k, n, b, got, want);
                          }
                  }
                  if (count_by_enumeration({2, 4, 2}) != 21) {
                      detail = "(2,4,2) != 21";
                      return false;
                  }
                  return true;
              });

    criterion(2, "width-2 all-bases total is 4^(n-1)", [](std::string& detail) {
        for (long long n = 1; n <= 30; ++n)
            if (count_all_closed(2, n) != int_pow(4, static_cast<unsigned long long>(n - 1))) {
                detail = "closed form n=" + std::to_string(n);
                return false;
            }
        for (long long n = 1; n <= 8; ++n)
            if (count_all_by_enumeration(2, n) !=
                int_pow(4, static_cast<unsigned long long>(n - 1))) {
                detail = "enumeration n=" + std::to_string(n);
                return false;
            }
        return count_all_by_enumeration(2, 8) == 16384;
    });

    criterion(3, "width-1 all-bases total is 2^(n-1)", [](std::string& detail) {
        for (long long n = 1; n <= 30; ++n)
            if (count_all_closed(1, n) != int_pow(2, static_cast<unsigned long long>(n - 1))) {
                detail = "closed form n=" + std::to_string(n);
                return false;
            }
        for (long long n = 1; n <= 12; ++n)
            if (count_all_by_enumeration(1, n) !=
                int_pow(2, static_cast<unsigned long long>(n - 1))) {
                detail = "enumeration n=" + std::to_string(n);
                return false;
            }
        return count_all_by_enumeration(1, 12) == 2048;
    });

    criterion(4, "hypergeometric total equals the closed-form total", [](std::string& detail) {
        for (int k = 1; k <= 6; ++k)
            for (long long n = 1; n <= 30; ++n) {
                const Int got = count_all_hypergeometric(k, n);
                const Int want = count_all_closed(k, n);
                if (got != want) return mismatch(detail, k, n, 0, got, want);
            }
        // spot value at (2,4): 35 * (64/35) = 64
        return binomial(7, 3) == 35 && hyp2f1_terminating(1, -3, 5, -1) == Rat(64, 35) &&
               count_all_hypergeometric(2, 4) == 64;
    });

    criterion(5, "recurrence, rearrangement check, and boundary identity", [](std::string& detail) {
        for (int k = 1; k <= 4; ++k) {
            const CountTable t = recurrence_table(k, 30);
            for (long long n = 1; n <= 30; ++n)
                for (long long b = 1; b <= n; ++b) {
                    if (t.at(n, b) != count_towers_closed(k, n, b))
                        return mismatch(detail, k, n, b, t.at(n, b),
                                        count_towers_closed(k, n, b));
                    if (n >= 2 && !vandermonde_check(k, n, b)) {
                        detail = "rearrangement k=" + std::to_string(k) + " n=" +
                                 std::to_string(n) + " b=" + std::to_string(b);
                        return false;
                    }
                }
        }
        for (int k = 2; k <= 6; ++k)
            for (long long n = 2; n <= 30; ++n)
                if (!base_one_identity_check(k, n)) {
                    detail = "boundary identity k=" + std::to_string(k) + " n=" +
                             std::to_string(n);
                    return false;
                }
        // the variant with lower index n on the right is false at k=3, n=3
        return binomial(5, 2) == 10 && Int(2) * binomial(5, 3) == 20 &&
               binomial(5, 2) != Int(2) * binomial(5, 3);
    });

    criterion(6, "domino towers split into four classes of the predicted sizes",
              [](std::string& detail) {
                  for (long long n = 2; n <= 8; ++n)
                      for (long long b = 2; b <= n; ++b) {
                          long long sizes[4] = {0, 0, 0, 0};
                          for_each_tower({2, n, b}, [&](const Tower& t) {
                              ++sizes[static_cast<int>(classify_domino(t))];
                          });
                          const Int want[4] = {binomial(2 * n - 3, n - b),
                                               binomial(2 * n - 3, n - b - 1),
                                               binomial(2 * n - 3, n - b - 1),
                                               binomial(2 * n - 3, n - b - 2)};
                          for (int c = 0; c < 4; ++c)
                              if (Int(sizes[c]) != want[c]) {
                                  detail = "n=" + std::to_string(n) + " b=" + std::to_string(b) +
                                           " class " + std::to_string(c);
                                  return false;
                              }
                          if (n == 4 && b == 2 &&
                              !(sizes[0] == 10 && sizes[1] == 5 && sizes[2] == 5 && sizes[3] == 1)) {
                              detail = "(4,2) instance";
                              return false;
                          }
                      }
                  return true;
              });

    criterion(7, "reduction/expansion bijection: round trips, fibers, worked instance",
              [](std::string& detail) {
                  for (int k = 1; k <= 3; ++k)
                      for (long long n = 2; n <= 6; ++n)
                          for (long long b = 1; b <= n; ++b) {
                              bool ok = true;
                              for_each_tower({k, n, b}, [&](const Tower& t) {
                                  const auto [img, label] = reduce(t);
                                  if (!(expand(img, label) == t)) ok = false;
                              });
                              if (!ok) {
                                  detail = "round trip k=" + std::to_string(k) + " n=" +
                                           std::to_string(n) + " b=" + std::to_string(b);
                                  return false;
                              }
                              const FiberReport fr = fiber_histogram(k, n, b);
                              if (!fr.ok()) {
                                  detail = "fibers k=" + std::to_string(k) + " n=" +
                                           std::to_string(n) + " b=" + std::to_string(b) + ": " +
                                           fr.violations.front();
                                  return false;
                              }
                          }
                  // worked wide instance: profile (2; 1, 2), slide 1, image base 3
                  const Tower wide = make_tower(
                      4, {{0, 0}, {0, 4}, {1, -2}, {1, 3}, {1, 7}, {2, -2}, {2, 9}});
                  const StaircaseProfile p = staircase_profile(wide);
                  if (p.k0 != 2 || p.steps != std::vector<int>{1, 2} || p.j_star != 1) {
                      detail = "worked instance profile";
                      return false;
                  }
                  const auto [img, label] = reduce(wide);
                  if (label_to_string(label) != "C[3,1]s1" ||
                      !(img == make_tower(4, {{0, 0}, {0, 4}, {0, 8}, {1, 0}, {1, 5}, {1, 11}})) ||
                      base_size(img) != 3 || !(expand(img, label) == wide)) {
                      detail = "worked instance reduction";
                      return false;
                  }
                  return true;
              });

    criterion(8, "first parts of compositions of k into j+1 parts sum to C(k, j+1)",
              [](std::string& detail) {
                  for (int k = 1; k <= 10; ++k)
                      for (int j = 0; j < k; ++j)
                          if (!composition_sum_check(k, j)) {
                              detail = "k=" + std::to_string(k) + " j=" + std::to_string(j);
                              return false;
                          }
                  return true;
              });

    criterion(9, "cleared generating-function identity holds through order 10",
              [](std::string& detail) {
                  const GfCheckResult g = d2_closed_form_check(10);
                  if (!g.ok) {
                      detail = "first mismatch at x^" + std::to_string(g.n) + " y^" +
                               std::to_string(g.b);
                      return false;
                  }
                  const PowerSeries h = helper_series(10);
                  if (!(h.coeff(0) == Rat(0)) || !(h.coeff(1) == Rat(0))) {
                      detail = "helper constant/linear coefficients";
                      return false;
                  }
                  for (long long n = 2; n <= 10; ++n)
                      if (h.coeff(n) != Rat(binomial(2 * n - 3, n - 1))) {
                          detail = "helper coefficient x^" + std::to_string(n);
                          return false;
                      }
                  return true;
              });

    criterion(10, "binomial-sum identity: exact sweep, float grid, real-gamma binomials",
              [](std::string& detail) {
                  for (int k = 1; k <= 4; ++k)
                      for (long long a = 1; a <= 8; ++a)
                          for (long long b = 0; b <= 8; ++b)
                              if (!kummer_like_exact(k, a, b).equal) {
                                  detail = "exact k=" + std::to_string(k) + " a=" +
                                           std::to_string(a) + " b=" + std::to_string(b);
                                  return false;
                              }
                  const auto grid = default_float_grid();
                  if (grid.size() != 50) {
                      detail = "grid size";
                      return false;
                  }
                  for (const auto& p : grid) {
                      const auto c = kummer_like_float(p.k, p.alpha, p.beta);
                      if (!(c.rel_err <= kFloatIdentityTol)) {
                          detail = "float k=" + std::to_string(p.k) + " alpha=" +
                                   std::to_string(p.alpha) + " beta=" + std::to_string(p.beta) +
                                   " rel_err=" + std::to_string(c.rel_err);
                          return false;
                      }
                  }
                  for (long long m = 0; m <= 40; ++m)
                      for (long long j = 0; j <= m; ++j) {
                          const double exact = static_cast<double>(binomial(m, j));
                          const double approx = extended_binomial(static_cast<double>(m),
                                                                  static_cast<double>(j));
                          if (!(std::fabs(approx - exact) <=
                                kExtendedBinomialTol * std::max(1.0, exact))) {
                              detail = "binomial (" + std::to_string(m) + "," +
                                       std::to_string(j) + ")";
                              return false;
                          }
                      }
                  return true;
              });

    criterion(11, "randomized grow/delete inversion and gravity fixpoint",
              [](std::string& detail) {
                  std::vector<Tower> pool;
                  for (int k = 1; k <= 3; ++k)
                      for (long long n = 1; n <= 6; ++n)
                          for_each_tower_all(k, n,
                                             [&](const Tower& t) { pool.push_back(t); });
                  for (const Tower& t : pool)
                      if (komino::detail::settle_levels(t.k, {}, t.blocks) != t.blocks) {
                          detail = "gravity fixpoint violated";
                          return false;
                      }
                  std::mt19937 rng(kProbeSeed);
                  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
                  for (int i = 0; i < kProbeCount; ++i) {
                      const Tower& t = pool[pick(rng)];
                      int max_x = 0, max_level = 0;
                      for (const Block& bl : t.blocks) {
                          max_x = std::max(max_x, bl.x);
                          max_level = std::max(max_level, bl.level);
                      }
                      std::uniform_int_distribution<int> dx(-t.k, max_x + t.k);
                      std::uniform_int_distribution<int> dl(0, max_level + 1);
                      const int x = dx(rng), level = dl(rng);
                      const GrowResult g = grow_at(t, x, level);
                      if (g.valid) {
                          const DeleteResult d = delete_block(g.tower, g.inserted);
                          if (!d.valid || !(d.tower == t)) {
                              detail = "grow-then-delete probe " + std::to_string(i);
                              return false;
                          }
                      } else if (g.validation.ok()) {
                          detail = "invalid growth reported no violation, probe " +
                                   std::to_string(i);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(12, "counting routes agree and output is deterministic", [](std::string& detail) {
        for (int k = 1; k <= 3; ++k) {
            const CountTable t = recurrence_table(k, 6);
            for (long long n = 1; n <= 6; ++n) {
                Int total = 0;
                for (long long b = 1; b <= n; ++b) {
                    const Int closed = count_towers_closed(k, n, b);
                    total += closed;
                    if (t.at(n, b) != closed || count_by_enumeration({k, n, b}) != closed)
                        return mismatch(detail, k, n, b, t.at(n, b), closed);
                }
                if (count_all_hypergeometric(k, n) != total) {
                    detail = "total k=" + std::to_string(k) + " n=" + std::to_string(n);
                    return false;
                }
            }
        }
        const std::vector<std::string> enum_args = {"enumerate", "--k", "3", "--n", "4"};
        if (run_cli(enum_args) != run_cli(enum_args)) {
            detail = "repeated enumerate runs differ";
            return false;
        }
        const std::string w1 = run_cli(
            {"count", "--k", "2", "--n", "7", "--method", "enumerate", "--workers", "1"});
        const std::string w4 = run_cli(
            {"count", "--k", "2", "--n", "7", "--method", "enumerate", "--workers", "4"});
        if (w1 != w4 || w1 != "0|4096\n|") {
            detail = "worker counts changed the output bytes";
            return false;
        }
        return true;
    });

    if (failures == 0)
        std::printf("all 12 acceptance criteria passed\n");
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures;
}
