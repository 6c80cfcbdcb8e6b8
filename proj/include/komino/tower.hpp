#pragma once

// Core tower geometry: blocks, validity, normalization, gravity.
//
// A tower of width-k blocks is a finite set of (level, x) pairs. A block at
// (l, x) occupies columns x .. x+k-1 of row l. Validity:
//   - the level-0 blocks form a contiguous base: x = 0, k, 2k, ...
//   - no two blocks at the same level overlap in columns
//   - every block at level l >= 1 shares at least one column with some block
//     at level l-1 (it is supported).
// A supported block cannot fall, so validity already implies the arrangement
// is a gravity fixpoint.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace komino {

struct Block {
    int level = 0;
    int x = 0;
    friend auto operator<=>(const Block&, const Block&) = default;
};

struct Cell {
    int x = 0;
    int level = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct Tower {
    int k = 1;
    std::vector<Block> blocks; // sorted by (level, x)
    friend bool operator==(const Tower&, const Tower&) = default;
};

// Width-k blocks anchored at ax and bx share a column iff |ax - bx| < k.
inline bool columns_overlap(int k, int ax, int bx) {
    const int d = ax >= bx ? ax - bx : bx - ax;
    return d < k;
}

enum class ViolationKind {
    bad_width,          // k < 1
    no_blocks,          // empty arrangement
    duplicate_block,    // same (level, x) listed twice
    negative_level,     // block below the ground row
    same_level_overlap, // two blocks on one level share a column
    missing_base,       // no level-0 blocks at all
    base_not_anchored,  // leftmost base block not at x = 0
    base_gap,           // base blocks not at consecutive multiples of k
    unsupported_block,  // block at level >= 1 with nothing under it
};

inline const char* violation_name(ViolationKind v) {
    switch (v) {
        case ViolationKind::bad_width: return "bad_width";
        case ViolationKind::no_blocks: return "no_blocks";
        case ViolationKind::duplicate_block: return "duplicate_block";
        case ViolationKind::negative_level: return "negative_level";
        case ViolationKind::same_level_overlap: return "same_level_overlap";
        case ViolationKind::missing_base: return "missing_base";
        case ViolationKind::base_not_anchored: return "base_not_anchored";
        case ViolationKind::base_gap: return "base_gap";
        case ViolationKind::unsupported_block: return "unsupported_block";
    }
    return "unknown";
}

struct Violation {
    ViolationKind kind;
    std::string detail;
};

struct ValidationResult {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const {
        std::string s;
        for (const auto& v : violations) {
            if (!s.empty()) s += "; ";
            s += violation_name(v.kind);
            if (!v.detail.empty()) s += " (" + v.detail + ")";
        }
        return s;
    }
};

inline std::string block_str(const Block& b) {
    return "(" + std::to_string(b.level) + "," + std::to_string(b.x) + ")";
}

// Reports every violation, not just the first. Block order in the input is
// irrelevant; a sorted working copy is used.
inline ValidationResult validate(const Tower& t) {
    ValidationResult r;
    if (t.k < 1) {
        r.violations.push_back({ViolationKind::bad_width, "k=" + std::to_string(t.k)});
        return r;
    }
    if (t.blocks.empty()) {
        r.violations.push_back({ViolationKind::no_blocks, ""});
        return r;
    }
    std::vector<Block> bs = t.blocks;
    std::sort(bs.begin(), bs.end());
    for (size_t i = 1; i < bs.size(); ++i)
        if (bs[i] == bs[i - 1])
            r.violations.push_back({ViolationKind::duplicate_block, block_str(bs[i])});
    for (const auto& b : bs)
        if (b.level < 0)
            r.violations.push_back({ViolationKind::negative_level, block_str(b)});
    // Same-level overlap: consecutive blocks on a level closer than k apart.
    for (size_t i = 1; i < bs.size(); ++i)
        if (bs[i].level == bs[i - 1].level && bs[i] != bs[i - 1] &&
            columns_overlap(t.k, bs[i].x, bs[i - 1].x))
            r.violations.push_back({ViolationKind::same_level_overlap,
                                    block_str(bs[i - 1]) + " " + block_str(bs[i])});
    std::vector<int> base_xs;
    for (const auto& b : bs)
        if (b.level == 0) base_xs.push_back(b.x);
    if (base_xs.empty()) {
        r.violations.push_back({ViolationKind::missing_base, ""});
    } else {
        if (base_xs.front() != 0)
            r.violations.push_back({ViolationKind::base_not_anchored,
                                    "leftmost base x=" + std::to_string(base_xs.front())});
        for (size_t i = 1; i < base_xs.size(); ++i)
            if (base_xs[i] != base_xs[i - 1] + t.k) {
                r.violations.push_back({ViolationKind::base_gap,
                                        "base x=" + std::to_string(base_xs[i]) + " after x=" +
                                            std::to_string(base_xs[i - 1])});
            }
    }
    for (const auto& b : bs) {
        if (b.level < 1) continue;
        bool supported = false;
        for (const auto& under : bs)
            if (under.level == b.level - 1 && columns_overlap(t.k, under.x, b.x)) {
                supported = true;
                break;
            }
        if (!supported)
            r.violations.push_back({ViolationKind::unsupported_block, block_str(b)});
    }
    return r;
}

// Canonical form: levels shifted so the lowest row is 0, x shifted so the
// leftmost lowest-row block sits at 0, blocks sorted. Throws on an invalid
// result, so every Tower produced here satisfies the validity contract.
inline Tower normalize(int k, std::vector<Block> blocks) {
    if (blocks.empty()) throw std::invalid_argument("normalize: no blocks");
    int min_level = blocks.front().level;
    for (const auto& b : blocks) min_level = std::min(min_level, b.level);
    int min_x = 0;
    bool found = false;
    for (const auto& b : blocks)
        if (b.level == min_level && (!found || b.x < min_x)) {
            min_x = b.x;
            found = true;
        }
    for (auto& b : blocks) {
        b.level -= min_level;
        b.x -= min_x;
    }
    std::sort(blocks.begin(), blocks.end());
    Tower t{k, std::move(blocks)};
    if (auto v = validate(t); !v.ok())
        throw std::invalid_argument("normalize: invalid tower: " + v.to_string());
    return t;
}

inline Tower make_tower(int k, std::vector<Block> blocks) {
    return normalize(k, std::move(blocks));
}

// Unit cells covered by the blocks, sorted by (x, level).
inline std::vector<Cell> cells(const Tower& t) {
    std::vector<Cell> cs;
    cs.reserve(t.blocks.size() * static_cast<size_t>(t.k));
    for (const auto& b : t.blocks)
        for (int c = b.x; c < b.x + t.k; ++c) cs.push_back({c, b.level});
    std::sort(cs.begin(), cs.end());
    return cs;
}

// Top row first, '#' = occupied, '.' = empty; no trailing newline.
inline std::string render_ascii(const Tower& t) {
    if (t.blocks.empty()) return "";
    int max_level = 0, min_x = t.blocks.front().x, max_x = t.blocks.front().x;
    for (const auto& b : t.blocks) {
        max_level = std::max(max_level, b.level);
        min_x = std::min(min_x, b.x);
        max_x = std::max(max_x, b.x + t.k - 1);
    }
    std::string out;
    for (int lvl = max_level; lvl >= 0; --lvl) {
        if (lvl != max_level) out += '\n';
        for (int col = min_x; col <= max_x; ++col) {
            bool hit = false;
            for (const auto& b : t.blocks)
                if (b.level == lvl && b.x <= col && col < b.x + t.k) {
                    hit = true;
                    break;
                }
            out += hit ? '#' : '.';
        }
    }
    return out;
}

namespace detail {

// Gravity kernel shared by deletion, sliding, and the bijection moves.
// `pinned` blocks keep exactly the coordinates given. `free_blocks` drop one
// at a time in ascending (pre-settle level, x) order; a dropping block lands
// at level 0, or one above the highest already-placed block sharing a column
// (a block cannot pass through a column-sharing block). Callers must ensure
// the processing order is consistent with the intended final support order;
// every use in this library satisfies that.
inline std::vector<Block> settle_levels(int k, std::vector<Block> pinned,
                                        std::vector<Block> free_blocks) {
    std::vector<Block> placed = std::move(pinned);
    std::sort(free_blocks.begin(), free_blocks.end());
    for (const auto& f : free_blocks) {
        int level = 0;
        for (const auto& p : placed)
            if (columns_overlap(k, p.x, f.x)) level = std::max(level, p.level + 1);
        placed.push_back({level, f.x});
    }
    std::sort(placed.begin(), placed.end());
    return placed;
}

// Horizontal shift putting the leftmost ground-row block at x = 0.
// Returns the shift applied (new_x = old_x + shift).
inline int reanchor(std::vector<Block>& blocks) {
    int shift = 0;
    bool found = false;
    for (const auto& b : blocks)
        if (b.level == 0 && (!found || -b.x > shift)) {
            shift = -b.x;
            found = true;
        }
    if (found && shift != 0)
        for (auto& b : blocks) b.x += shift;
    std::sort(blocks.begin(), blocks.end());
    return shift;
}

} // namespace detail

struct DeleteResult {
    Tower tower;          // settled and reanchored, even when invalid
    bool valid = false;
    ValidationResult validation;
};

// Removes one block, lets everything above resettle under gravity, reanchors,
// and reports whether the result is still a valid tower.
inline DeleteResult delete_block(const Tower& t, const Block& target) {
    auto it = std::find(t.blocks.begin(), t.blocks.end(), target);
    if (it == t.blocks.end())
        throw std::invalid_argument("delete_block: no block " + block_str(target));
    std::vector<Block> rest;
    rest.reserve(t.blocks.size() - 1);
    for (const auto& b : t.blocks)
        if (!(b == target)) rest.push_back(b);
    auto settled = detail::settle_levels(t.k, {}, std::move(rest));
    detail::reanchor(settled);
    DeleteResult r;
    r.tower = Tower{t.k, std::move(settled)};
    r.validation = validate(r.tower);
    r.valid = r.validation.ok();
    return r;
}

struct GrowResult {
    Tower tower;
    bool valid = false;
    ValidationResult validation;
    Block inserted; // coordinates after reanchoring
};

// Inserts a block at (level, x0), pushing up the upward closure of blocks it
// would collide with: the level-`level` blocks sharing its columns, plus,
// repeatedly, blocks one level higher sharing columns with anything already
// pushed. Pushed blocks rise exactly one level, which preserves both
// non-overlap and support of everything outside the closure.
inline GrowResult grow_at(const Tower& t, int x0, int level) {
    if (level < 0) throw std::invalid_argument("grow_at: negative level");
    std::vector<Block> bs = t.blocks;
    std::vector<size_t> frontier; // indices of pushed blocks at the previous level
    std::vector<bool> pushed(bs.size(), false);
    for (size_t i = 0; i < bs.size(); ++i)
        if (bs[i].level == level && columns_overlap(t.k, bs[i].x, x0)) {
            pushed[i] = true;
            frontier.push_back(i);
        }
    int lvl = level;
    while (!frontier.empty()) {
        std::vector<size_t> next;
        for (size_t i = 0; i < bs.size(); ++i) {
            if (pushed[i] || bs[i].level != lvl + 1) continue;
            for (size_t j : frontier)
                if (columns_overlap(t.k, bs[i].x, bs[j].x)) {
                    pushed[i] = true;
                    next.push_back(i);
                    break;
                }
        }
        frontier = std::move(next);
        ++lvl;
    }
    for (size_t i = 0; i < bs.size(); ++i)
        if (pushed[i]) ++bs[i].level;
    Block ins{level, x0};
    bs.push_back(ins);
    const int shift = detail::reanchor(bs);
    ins.x += shift;
    GrowResult r;
    r.tower = Tower{t.k, std::move(bs)};
    r.validation = validate(r.tower);
    r.valid = r.validation.ok();
    r.inserted = ins;
    return r;
}

} // namespace komino
