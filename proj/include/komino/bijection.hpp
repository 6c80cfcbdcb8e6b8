#pragma once

// Size-reducing bijection on towers.
//
// Every tower with n >= 2 blocks reduces to a tower with n-1 blocks plus a
// label, and (tower, label) determines the original uniquely. Three cases:
//
//   A     the leftmost base block is deleted (applies when the tower is
//         base-only, or has >= 2 base blocks and no block overhanging or
//         flush-left over the base's left edge);
//   hang  single base block with the leftmost level-1 block strictly right
//         of it: drop the base, shift every level down one (offset h);
//   composition  the leftmost level-1 block starts at or left of the base:
//         slide the base and the right staircase left until the overlap
//         amounts sum to exactly k, then replace base + leftmost level-1
//         block + staircase by a wider base. The label is the composition of
//         k read off the overlaps plus the slide distance.
//
// The expansion (inverse) of each case is implemented directly and every
// expand() call re-reduces its result and compares, so a wrong reconstruction
// can never escape silently. fiber_histogram() checks, class by class, that
// the fibers have exactly the predicted label sets — which is precisely the
// one-level counting recurrence, made bijective.

#include <komino/count.hpp>
#include <komino/enumerate.hpp>
#include <komino/tower.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace komino {

inline long long base_size(const Tower& t) {
    long long b = 0;
    for (const auto& bl : t.blocks)
        if (bl.level == 0) ++b;
    return b;
}

inline std::optional<Block> leftmost_at_level(const Tower& t, int level) {
    std::optional<Block> r;
    for (const auto& b : t.blocks)
        if (b.level == level && (!r || b.x < r->x)) r = b;
    return r;
}

inline std::optional<Block> rightmost_at_level(const Tower& t, int level) {
    std::optional<Block> r;
    for (const auto& b : t.blocks)
        if (b.level == level && (!r || b.x > r->x)) r = b;
    return r;
}

// Right-edge overlap data. With R_j the rightmost block at level j (R_0 on
// the base), step k_j = R_{j-1}.x + k - R_j.x measures how far R_j overlaps
// R_{j-1}, recorded while R_j exists and steps strictly right; k_0 is the
// column overlap of the leftmost level-1 block with the base row. The greedy
// walk takes steps while k_0 + k_1 + ... stays <= k.
struct StaircaseProfile {
    int k0 = 0;
    std::vector<int> steps; // k_1, k_2, ... while positive (may exceed j_star)
    int j_star = 0;         // steps taken by the greedy walk
    int take_sum = 0;       // k0 + steps[0] + ... + steps[j_star - 1]
};

inline StaircaseProfile staircase_profile(const Tower& t) {
    const auto l1 = leftmost_at_level(t, 1);
    if (!l1) throw std::domain_error("staircase_profile: no level-1 block");
    if (l1->x >= 1)
        throw std::domain_error("staircase_profile: leftmost level-1 block must start at x <= 0");
    StaircaseProfile p;
    p.k0 = t.k + l1->x; // >= 1 because the block overlaps the base row
    auto prev = rightmost_at_level(t, 0);
    for (int lvl = 1;; ++lvl) {
        const auto r = rightmost_at_level(t, lvl);
        if (!r || r->x <= prev->x) break;
        p.steps.push_back(prev->x + t.k - r->x); // >= 1: r is supported from the left
        prev = r;
    }
    int sum = p.k0;
    for (int s : p.steps) {
        if (sum + s > t.k) break;
        sum += s;
        ++p.j_star;
    }
    p.take_sum = sum;
    return p;
}

struct SlideResult {
    Tower tower;
    bool valid = false;
    ValidationResult validation;
};

// Slides the base together with R_1..R_{j_star} left by s (right for
// negative s), keeping the sliders' levels pinned and letting every other
// block resettle under gravity, then reanchors. Blocks above a slid step can
// rise; this is the only way the slid arrangement stays a tower.
inline SlideResult slide_group(const Tower& t, int s) {
    const StaircaseProfile prof = staircase_profile(t);
    if (s == 0) return {t, true, validate(t)};
    std::vector<Block> sliders, free_blocks;
    for (const auto& b : t.blocks)
        if (b.level == 0) sliders.push_back(b);
    for (int lvl = 1; lvl <= prof.j_star; ++lvl) sliders.push_back(*rightmost_at_level(t, lvl));
    for (const auto& b : t.blocks)
        if (std::find(sliders.begin(), sliders.end(), b) == sliders.end())
            free_blocks.push_back(b);
    for (auto& b : sliders) b.x -= s;
    auto settled = detail::settle_levels(t.k, std::move(sliders), std::move(free_blocks));
    detail::reanchor(settled);
    SlideResult r;
    r.tower = Tower{t.k, std::move(settled)};
    r.validation = validate(r.tower);
    r.valid = r.validation.ok();
    return r;
}

// Removes base + leftmost level-1 block + R_1..R_{j_star} and pins a fresh
// base of b + j_star blocks starting at the removed block's left edge;
// survivors resettle on it. Requires the greedy staircase sum to be exactly
// k (slide first if it is short).
inline Tower composition_remove(const Tower& t) {
    const StaircaseProfile prof = staircase_profile(t);
    if (prof.take_sum != t.k)
        throw std::domain_error("composition_remove: staircase sum < k; slide first");
    const Block l1 = *leftmost_at_level(t, 1);
    std::vector<Block> removed;
    for (const auto& b : t.blocks)
        if (b.level == 0) removed.push_back(b);
    removed.push_back(l1);
    for (int lvl = 1; lvl <= prof.j_star; ++lvl) removed.push_back(*rightmost_at_level(t, lvl));
    const long long b_new = base_size(t) + prof.j_star;
    std::vector<Block> pinned, survivors;
    for (long long m = 0; m < b_new; ++m)
        pinned.push_back({0, l1.x + static_cast<int>(m) * t.k});
    for (const auto& b : t.blocks)
        if (std::find(removed.begin(), removed.end(), b) == removed.end())
            survivors.push_back(b);
    auto settled = detail::settle_levels(t.k, std::move(pinned), std::move(survivors));
    detail::reanchor(settled);
    Tower img{t.k, std::move(settled)};
    if (auto v = validate(img); !v.ok())
        throw std::logic_error("composition_remove: invalid image: " + v.to_string());
    return img;
}

struct CaseA {
    friend bool operator==(const CaseA&, const CaseA&) = default;
};
struct CaseHang {
    int offset = 0; // 1..k-1
    friend bool operator==(const CaseHang&, const CaseHang&) = default;
};
struct CaseComposition {
    int j = 0;              // staircase height; parts.size() == j + 1
    std::vector<int> parts; // composition of k; parts[0] includes the slide
    int slide = 0;          // 0..parts[0]-1
    friend bool operator==(const CaseComposition&, const CaseComposition&) = default;
};

using ReductionLabel = std::variant<CaseA, CaseHang, CaseComposition>;

inline std::string label_to_string(const ReductionLabel& label) {
    if (std::holds_alternative<CaseA>(label)) return "A";
    if (const auto* h = std::get_if<CaseHang>(&label)) return "H" + std::to_string(h->offset);
    const auto& c = std::get<CaseComposition>(label);
    std::string s = "C[";
    for (size_t i = 0; i < c.parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c.parts[i]);
    }
    s += "]s" + std::to_string(c.slide);
    return s;
}

// One reduction step: n blocks -> n-1 blocks plus the label that inverts it.
inline std::pair<Tower, ReductionLabel> reduce(const Tower& t) {
    const long long n = static_cast<long long>(t.blocks.size());
    if (n < 2) throw std::domain_error("reduce: tower needs at least 2 blocks");
    const long long b = base_size(t);
    const auto l1 = leftmost_at_level(t, 1);
    if (!l1 || (b >= 2 && l1->x >= 1)) {
        auto dr = delete_block(t, Block{0, 0});
        if (!dr.valid)
            throw std::logic_error("reduce: base deletion broke the tower: " +
                                   dr.validation.to_string());
        return {dr.tower, CaseA{}};
    }
    if (l1->x >= 1) { // b == 1: the whole tower hangs on one base block
        std::vector<Block> rest;
        for (const auto& bl : t.blocks)
            if (bl.level > 0) rest.push_back({bl.level - 1, bl.x});
        return {normalize(t.k, std::move(rest)), CaseHang{l1->x}};
    }
    const StaircaseProfile prof = staircase_profile(t);
    const int s = t.k - prof.take_sum;
    Tower slid = t;
    if (s > 0) {
        auto sr = slide_group(t, s);
        if (!sr.valid)
            throw std::logic_error("reduce: slide broke the tower: " + sr.validation.to_string());
        slid = std::move(sr.tower);
        const StaircaseProfile check = staircase_profile(slid);
        if (check.j_star != prof.j_star || check.take_sum != slid.k ||
            check.k0 != prof.k0 + s)
            throw std::logic_error("reduce: slide changed the staircase shape");
    }
    CaseComposition label;
    label.j = prof.j_star;
    label.slide = s;
    label.parts.push_back(prof.k0 + s);
    for (int i = 0; i < prof.j_star; ++i) label.parts.push_back(prof.steps[static_cast<size_t>(i)]);
    return {composition_remove(slid), std::move(label)};
}

namespace detail {

inline Tower expand_unchecked(const Tower& t, const ReductionLabel& label) {
    if (std::holds_alternative<CaseA>(label)) {
        auto gr = grow_at(t, -t.k, 0);
        if (!gr.valid)
            throw std::domain_error("expand: base prepend failed: " + gr.validation.to_string());
        return gr.tower;
    }
    if (const auto* h = std::get_if<CaseHang>(&label)) {
        if (h->offset < 1 || h->offset >= t.k)
            throw std::domain_error("expand: hang offset must be in 1..k-1");
        if (base_size(t) != 1)
            throw std::domain_error("expand: hang label needs a single-base tower");
        std::vector<Block> bs{{0, 0}};
        for (const auto& bl : t.blocks) bs.push_back({bl.level + 1, bl.x + h->offset});
        return normalize(t.k, std::move(bs));
    }
    const auto& c = std::get<CaseComposition>(label);
    if (c.j < 0 || c.parts.size() != static_cast<size_t>(c.j) + 1)
        throw std::domain_error("expand: composition needs j+1 parts");
    int sum = 0;
    for (int p : c.parts) {
        if (p < 1) throw std::domain_error("expand: composition parts must be positive");
        sum += p;
    }
    if (sum != t.k) throw std::domain_error("expand: composition parts must sum to k");
    if (c.slide < 0 || c.slide >= c.parts[0])
        throw std::domain_error("expand: slide must be in 0..parts[0]-1");
    const long long b = base_size(t) - c.j;
    if (b < 1) throw std::domain_error("expand: composition taller than the base allows");
    // Rebuild the slid tower: pinned skeleton = old base, leftmost level-1
    // block, and the right staircase, at the positions the removal determined;
    // the image's upper blocks resettle on it.
    const int p0 = c.parts[0];
    std::vector<Block> pinned;
    for (long long m = 0; m < b; ++m)
        pinned.push_back({0, (t.k - p0) + static_cast<int>(m) * t.k});
    pinned.push_back({1, 0}); // the removed leftmost level-1 block
    int rx = (t.k - p0) + static_cast<int>(b - 1) * t.k;
    for (int i = 1; i <= c.j; ++i) {
        rx += t.k - c.parts[static_cast<size_t>(i)];
        pinned.push_back({i, rx});
    }
    std::vector<Block> free_blocks;
    for (const auto& bl : t.blocks)
        if (bl.level > 0) free_blocks.push_back(bl);
    auto settled = settle_levels(t.k, std::move(pinned), std::move(free_blocks));
    detail::reanchor(settled);
    Tower slid{t.k, std::move(settled)};
    if (auto v = validate(slid); !v.ok())
        throw std::domain_error("expand: label does not fit this tower: " + v.to_string());
    if (c.slide == 0) return slid;
    auto sr = slide_group(slid, -c.slide);
    if (!sr.valid)
        throw std::domain_error("expand: inverse slide failed: " + sr.validation.to_string());
    return sr.tower;
}

} // namespace detail

// Inverse of reduce(). Always re-reduces the result and checks it returns
// (t, label); a label that does not belong to t throws.
inline Tower expand(const Tower& t, const ReductionLabel& label) {
    Tower out = detail::expand_unchecked(t, label);
    auto [back, label2] = reduce(out);
    if (!(back == t) || !(label2 == label))
        throw std::logic_error("expand: round trip mismatch for label " + label_to_string(label));
    return out;
}

// All compositions of total into `count` positive parts, lexicographic.
inline std::vector<std::vector<int>> compositions(int total, int count) {
    std::vector<std::vector<int>> out;
    if (count < 1 || total < count) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int slots) -> void {
        if (slots == 1) {
            cur.push_back(rest);
            out.push_back(cur);
            cur.pop_back();
            return;
        }
        for (int v = 1; v <= rest - (slots - 1); ++v) {
            cur.push_back(v);
            self(self, rest - v, slots - 1);
            cur.pop_back();
        }
    };
    rec(rec, total, count);
    return out;
}

// The number of (composition, slide) labels of height j equals C(k, j+1):
// summing the first part over all compositions of k into j+1 parts.
inline bool composition_sum_check(int k, int j) {
    Int total = 0;
    for (const auto& comp : compositions(k, j + 1)) total += comp[0];
    return total == binomial(k, j + 1);
}

// Width-2 towers with >= 2 base blocks (or base-only) split into four classes
// by the leftmost level-1 block and the right edge.
enum class DominoClass { A, B, C, D };

inline DominoClass classify_domino(const Tower& t) {
    if (t.k != 2) throw std::domain_error("classify_domino: width must be 2");
    const long long n = static_cast<long long>(t.blocks.size());
    const long long b = base_size(t);
    if (n == b) return DominoClass::A;
    if (b < 2)
        throw std::domain_error("classify_domino: single-base towers are not classified");
    const auto l1 = leftmost_at_level(t, 1);
    if (l1->x >= 1) return DominoClass::A;
    if (l1->x == 0) return DominoClass::B;
    const auto r1 = rightmost_at_level(t, 1);
    return r1->x <= static_cast<int>(b - 1) * 2 ? DominoClass::C : DominoClass::D;
}

namespace detail {
inline std::string tower_key(const Tower& t) {
    std::string s = std::to_string(t.k) + "|";
    for (const auto& b : t.blocks)
        s += std::to_string(b.level) + "," + std::to_string(b.x) + ";";
    return s;
}
} // namespace detail

// Labels every tower with base count beta in the image class must carry,
// given the source class (n blocks, b base blocks).
inline std::vector<std::string> expected_fiber_labels(int k, long long n, long long b,
                                                      long long beta) {
    std::vector<std::string> out;
    if (b >= 2 && beta == b - 1) out.push_back(label_to_string(CaseA{}));
    if (n > b) {
        if (b == 1 && beta == 1)
            for (int h = 1; h <= k - 1; ++h) out.push_back(label_to_string(CaseHang{h}));
        const long long j = beta - b;
        if (j >= 0 && j <= k - 1 && beta <= n - 1)
            for (const auto& comp : compositions(k, static_cast<int>(j) + 1))
                for (int s = 0; s < comp[0]; ++s)
                    out.push_back(label_to_string(
                        CaseComposition{static_cast<int>(j), comp, s}));
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct FiberReport {
    int k = 0;
    long long n = 0, b = 0;
    long long towers = 0; // size of the source class
    // image base count -> (fiber size -> number of images with that size)
    std::map<long long, std::map<long long, long long>> histogram;
    std::map<std::string, long long> case_counts; // "A", "hang", "comp_j<j>"
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Exhaustively reduces one class and verifies the bijection on it: round
// trips, per-image label sets, and image counts against the closed form.
inline FiberReport fiber_histogram(int k, long long n, long long b) {
    if (n < 2) throw std::domain_error("fiber_histogram: need n >= 2");
    FiberReport rep;
    rep.k = k;
    rep.n = n;
    rep.b = b;
    struct Fiber {
        Tower image;
        std::vector<std::string> labels;
    };
    std::map<std::string, Fiber> fibers;
    for_each_tower(TowerClassParams{k, n, b}, [&](const Tower& t) {
        ++rep.towers;
        std::pair<Tower, ReductionLabel> red;
        try {
            red = reduce(t);
            const Tower back = expand(red.first, red.second); // throws on a failed round trip
            if (!(back == t))
                rep.violations.push_back("round trip changed tower " + detail::tower_key(t));
        } catch (const std::exception& e) {
            rep.violations.push_back("tower " + detail::tower_key(t) + ": " + e.what());
            return;
        }
        const auto& [img, label] = red;
        if (std::holds_alternative<CaseA>(label)) {
            ++rep.case_counts["A"];
        } else if (std::holds_alternative<CaseHang>(label)) {
            ++rep.case_counts["hang"];
        } else {
            ++rep.case_counts["comp_j" + std::to_string(std::get<CaseComposition>(label).j)];
        }
        auto& f = fibers[detail::tower_key(img)];
        if (f.labels.empty()) f.image = img;
        f.labels.push_back(label_to_string(label));
    });
    std::map<long long, long long> images_per_beta;
    for (auto& [key, f] : fibers) {
        const long long beta = base_size(f.image);
        ++images_per_beta[beta];
        ++rep.histogram[beta][static_cast<long long>(f.labels.size())];
        std::sort(f.labels.begin(), f.labels.end());
        const auto want = expected_fiber_labels(k, n, b, beta);
        if (f.labels != want) {
            std::string msg = "image " + key + " carries {";
            for (const auto& l : f.labels) msg += l + " ";
            msg += "} expected {";
            for (const auto& l : want) msg += l + " ";
            msg += "}";
            rep.violations.push_back(msg);
        }
    }
    // Surjectivity: every class that should be hit is hit in full.
    for (long long beta = 1; beta <= n - 1; ++beta) {
        const bool expected = !expected_fiber_labels(k, n, b, beta).empty();
        const long long seen = images_per_beta.count(beta) ? images_per_beta[beta] : 0;
        const Int want = expected ? count_towers_closed(k, n - 1, beta) : Int(0);
        if (Int(seen) != want)
            rep.violations.push_back("image class with " + std::to_string(beta) + " base blocks: " +
                                     std::to_string(seen) + " images, expected " + want.str());
    }
    return rep;
}

} // namespace komino
