#pragma once

// JSON serialization for towers and count tables.
//
// Wire form of a tower: {"k": 2, "blocks": [[level, x], ...]} with blocks in
// sorted (level, x) order. Counts serialize as decimal strings because they
// outgrow 64-bit integers quickly. Field order is fixed, so serialized output
// is byte-deterministic.

#include <komino/count.hpp>
#include <komino/tower.hpp>

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace komino {

using ojson = nlohmann::ordered_json;

inline ojson tower_to_json(const Tower& t) {
    ojson j;
    j["k"] = t.k;
    auto arr = ojson::array();
    for (const auto& b : t.blocks) arr.push_back(ojson::array({b.level, b.x}));
    j["blocks"] = std::move(arr);
    return j;
}

inline std::string tower_to_json_string(const Tower& t) { return tower_to_json(t).dump(); }

// Accepts blocks in any order / offset; the result is normalized and
// validated, so a parse that returns is always a legal tower.
inline Tower tower_from_json(const ojson& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("blocks"))
        throw std::invalid_argument("tower json: need object with \"k\" and \"blocks\"");
    if (!j["k"].is_number_integer())
        throw std::invalid_argument("tower json: \"k\" must be an integer");
    const int k = j["k"].get<int>();
    if (!j["blocks"].is_array())
        throw std::invalid_argument("tower json: \"blocks\" must be an array");
    std::vector<Block> bs;
    for (const auto& e : j["blocks"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw std::invalid_argument("tower json: each block must be [level, x]");
        bs.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return normalize(k, std::move(bs));
}

inline Tower tower_from_json_string(const std::string& s) {
    ojson j;
    try {
        j = ojson::parse(s);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("tower json: ") + e.what());
    }
    return tower_from_json(j);
}

inline ojson table_to_json(const CountTable& t) {
    ojson j;
    j["k"] = t.k;
    auto rows = ojson::array();
    for (size_t i = 0; i < t.rows.size(); ++i) {
        ojson row;
        row["n"] = i + 1;
        auto d = ojson::array();
        for (const auto& v : t.rows[i]) d.push_back(to_string(v));
        row["d"] = std::move(d);
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

} // namespace komino
