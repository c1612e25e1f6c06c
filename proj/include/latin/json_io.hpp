#pragma once

#include <json.hpp>

#include "latin/autotopy.hpp"
#include "latin/census.hpp"
#include "latin/parity.hpp"
#include "latin/square.hpp"

namespace latin {

inline nlohmann::json to_json(const LatinSquare& sq) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 1; r <= sq.order(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 1; c <= sq.order(); ++c) row.push_back(sq.at(r, c));
        rows.push_back(std::move(row));
    }
    return {{"n", sq.order()}, {"grid", std::move(rows)}};
}

inline LatinSquare square_from_json(const nlohmann::json& j) {
    if (!j.contains("n") || !j.contains("grid")) throw validation_error("square JSON needs 'n' and 'grid'");
    const int n = j.at("n").get<int>();
    std::vector<int> grid;
    for (const auto& row : j.at("grid"))
        for (const auto& cell : row) grid.push_back(cell.get<int>());
    return LatinSquare::from_grid(n, std::move(grid));
}

inline nlohmann::json parity_json(const LatinSquare& sq) {
    const ParityType pt = parity_type(sq);
    const ParitySet ps = parity_set(sq);
    return {{"n", pt.n},         {"k", pt.k},         {"m", pt.m},
            {"parity", square_parity(sq)}, {"I", ps.rows}, {"J", ps.cols}};
}

inline nlohmann::json to_json(const Isotopism& t) {
    return {{"alpha", format_cycles(t.alpha)},
            {"beta", format_cycles(t.beta)},
            {"gamma", format_cycles(t.gamma)}};
}

inline nlohmann::json to_json(const AutotopyGroup& g) {
    nlohmann::json elems = nlohmann::json::array();
    for (const auto& t : g.elements) elems.push_back(to_json(t));
    return {{"n", g.n},
            {"order", g.order()},
            {"algorithm", g.source},
            {"elements", std::move(elems)},
            {"candidates_considered", g.diag.candidates_considered},
            {"checks_performed", g.diag.checks_performed}};
}

inline nlohmann::json to_json(const ParityCensus& census, bool merge_symmetric,
                              RoundMode mode = RoundMode::half_up) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table_report(census, merge_symmetric, mode))
        rows.push_back({{"class", row.label},
                        {"k", row.k},
                        {"m", row.m},
                        {"observed", row.observed},
                        {"expected", row.expected},
                        {"ratio", row.ratio}});
    nlohmann::json out = {{"n", census.n},
                          {"total", census.total},
                          {"mode", census.mode == ParityCensus::Mode::exact ? "exact" : "sampled"},
                          {"rows", std::move(rows)}};
    if (census.mode == ParityCensus::Mode::sampled) {
        out["seed"] = census.seed;
        out["steps"] = census.steps;
    }
    return out;
}

}  // namespace latin
