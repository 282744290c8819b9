#include "ew/tables.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

namespace ew {

std::string to_string(const WeylWord& w)
{
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += " ";
        out += "s" + std::to_string(w[i]);
    }
    return out;
}

WeylWord WeightTable::word(std::size_t row) const
{
    WeylWord w;
    while (!rows.at(row).definitions.empty()) {
        const auto& step = rows[row].definitions.front();
        w.push_back(step.letter);
        row = step.parent;
    }
    return w;
}

WeylWord WeightTable::alternate_word(std::size_t row, std::size_t alt) const
{
    const auto& step = rows.at(row).definitions.at(alt);
    WeylWord w{step.letter};
    WeylWord rest = word(step.parent);
    w.insert(w.end(), rest.begin(), rest.end());
    return w;
}

namespace {

struct RawRow {
    const char* label;
    const char* coords;
    int length;
    std::vector<std::pair<int, const char*>> defs;
};

WeightTable build(std::string name, int rank, const std::vector<RawRow>& raw)
{
    WeightTable t;
    t.name = std::move(name);
    t.rank = rank;
    std::map<std::string, std::size_t> index;
    for (const auto& r : raw) {
        TableRow row;
        row.label = r.label;
        row.length = r.length;
        std::istringstream in(r.coords);
        std::string tok;
        while (in >> tok) row.weight.push_back(Scalar::parse(tok));
        for (const auto& [letter, parent] : r.defs) row.definitions.push_back({letter, index.at(parent)});
        index[row.label] = t.rows.size();
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace

const WeightTable& e6_table()
{
    // Last coordinate: 2/sqrt3 = 2/3*sqrt3, 1/(2 sqrt3) = 1/6*sqrt3, 1/sqrt3 = 1/3*sqrt3.
    static const WeightTable t = build("E6 table 1", 6, {
        {"1", "0 0 0 0 0 2/3*sqrt3", 0, {}},
        {"w1", "1/2 1/2 1/2 1/2 1/2 1/6*sqrt3", 1, {{6, "1"}}},
        {"w2", "1/2 1/2 1/2 -1/2 -1/2 1/6*sqrt3", 2, {{5, "w1"}}},
        {"w3", "1/2 1/2 -1/2 1/2 -1/2 1/6*sqrt3", 3, {{3, "w2"}}},
        {"w4_I", "1/2 -1/2 1/2 1/2 -1/2 1/6*sqrt3", 4, {{2, "w3"}}},
        {"w4_II", "1/2 1/2 -1/2 -1/2 1/2 1/6*sqrt3", 4, {{4, "w3"}}},
        {"w5_I", "-1/2 1/2 1/2 1/2 -1/2 1/6*sqrt3", 5, {{1, "w4_I"}}},
        {"w5_II", "1/2 -1/2 1/2 -1/2 1/2 1/6*sqrt3", 5, {{2, "w4_II"}}},
        {"w6_I", "-1/2 1/2 1/2 -1/2 1/2 1/6*sqrt3", 6, {{4, "w5_I"}, {1, "w5_II"}}},
        {"w6_II", "1/2 -1/2 -1/2 1/2 1/2 1/6*sqrt3", 6, {{3, "w5_II"}}},
        {"w7_I", "-1/2 1/2 -1/2 1/2 1/2 1/6*sqrt3", 7, {{3, "w6_I"}, {1, "w6_II"}}},
        {"w7_II", "1/2 -1/2 -1/2 -1/2 -1/2 1/6*sqrt3", 7, {{5, "w6_II"}}},
        {"w8_I", "-1/2 -1/2 1/2 1/2 1/2 1/6*sqrt3", 8, {{2, "w7_I"}}},
        {"w8_II", "-1/2 1/2 -1/2 -1/2 -1/2 1/6*sqrt3", 8, {{5, "w7_I"}, {1, "w7_II"}}},
        {"w8_III", "1 0 0 0 0 -1/3*sqrt3", 8, {{6, "w7_II"}}},
        {"w9_I", "-1/2 -1/2 1/2 -1/2 -1/2 1/6*sqrt3", 9, {{5, "w8_I"}, {2, "w8_II"}}},
        {"w9_II", "0 1 0 0 0 -1/3*sqrt3", 9, {{6, "w8_II"}, {1, "w8_III"}}},
        {"w10_I", "-1/2 -1/2 -1/2 1/2 -1/2 1/6*sqrt3", 10, {{3, "w9_I"}}},
        {"w10_II", "0 0 1 0 0 -1/3*sqrt3", 10, {{6, "w9_I"}, {2, "w9_II"}}},
        {"w11_I", "-1/2 -1/2 -1/2 -1/2 1/2 1/6*sqrt3", 11, {{4, "w10_I"}}},
        {"w11_II", "0 0 0 1 0 -1/3*sqrt3", 11, {{6, "w10_I"}, {3, "w10_II"}}},
        {"w12_I", "0 0 0 0 1 -1/3*sqrt3", 12, {{6, "w11_I"}}},
        {"w12_II", "0 0 0 0 -1 -1/3*sqrt3", 12, {{5, "w11_II"}}},
        {"w13", "0 0 0 -1 0 -1/3*sqrt3", 13, {{5, "w12_I"}, {4, "w12_II"}}},
        {"w14", "0 0 -1 0 0 -1/3*sqrt3", 14, {{3, "w13"}}},
        {"w15", "0 -1 0 0 0 -1/3*sqrt3", 15, {{2, "w14"}}},
        {"w16", "-1 0 0 0 0 -1/3*sqrt3", 16, {{1, "w15"}}},
    });
    return t;
}

const WeightTable& e7_inner_table()
{
    // 1/sqrt2 = 1/2*sqrt2.
    static const WeightTable t = build("E7 table 2", 7, {
        {"1", "0 0 0 0 0 0 sqrt2", 0, {}},
        {"w1", "1/2 1/2 1/2 1/2 1/2 1/2 1/2*sqrt2", 1, {{7, "1"}}},
        {"w2", "1/2 1/2 1/2 1/2 -1/2 -1/2 1/2*sqrt2", 2, {{6, "w1"}}},
        {"w3", "1/2 1/2 1/2 -1/2 1/2 -1/2 1/2*sqrt2", 3, {{4, "w2"}}},
        {"w4_I", "1/2 1/2 -1/2 1/2 1/2 -1/2 1/2*sqrt2", 4, {{3, "w3"}}},
        {"w4_II", "1/2 1/2 1/2 -1/2 -1/2 1/2 1/2*sqrt2", 4, {{5, "w3"}}},
        {"w5_I", "1/2 -1/2 1/2 1/2 1/2 -1/2 1/2*sqrt2", 5, {{2, "w4_I"}}},
        {"w5_II", "1/2 1/2 -1/2 1/2 -1/2 1/2 1/2*sqrt2", 5, {{3, "w4_II"}}},
        {"w6_I", "1/2 -1/2 1/2 1/2 -1/2 1/2 1/2*sqrt2", 6, {{5, "w5_I"}, {2, "w5_II"}}},
        {"w6_II", "1/2 1/2 -1/2 -1/2 1/2 1/2 1/2*sqrt2", 6, {{4, "w5_II"}}},
        {"w7_I", "1/2 -1/2 1/2 -1/2 1/2 1/2 1/2*sqrt2", 7, {{4, "w6_I"}, {2, "w6_II"}}},
        {"w7_II", "1/2 1/2 -1/2 -1/2 -1/2 -1/2 1/2*sqrt2", 7, {{6, "w6_II"}}},
        {"w8_I", "1/2 -1/2 -1/2 1/2 1/2 1/2 1/2*sqrt2", 8, {{3, "w7_I"}}},
        {"w8_II", "1/2 -1/2 1/2 -1/2 -1/2 -1/2 1/2*sqrt2", 8, {{6, "w7_I"}, {2, "w7_II"}}},
        {"w8_III", "1 1 0 0 0 0 0", 8, {{7, "w7_II"}}},
        {"w9_I", "1/2 -1/2 -1/2 1/2 -1/2 -1/2 1/2*sqrt2", 9, {{6, "w8_I"}, {3, "w8_II"}}},
        {"w9_II", "1 0 1 0 0 0 0", 9, {{7, "w8_II"}, {2, "w8_III"}}},
        {"w10_I", "1/2 -1/2 -1/2 -1/2 1/2 -1/2 1/2*sqrt2", 10, {{4, "w9_I"}}},
        {"w10_II", "1 0 0 1 0 0 0", 10, {{7, "w9_I"}, {3, "w9_II"}}},
        {"w11_I", "1/2 -1/2 -1/2 -1/2 -1/2 1/2 1/2*sqrt2", 11, {{5, "w10_I"}}},
        {"w11_II", "1 0 0 0 1 0 0", 11, {{7, "w10_I"}, {4, "w10_II"}}},
        {"w12_I", "1 0 0 0 0 1 0", 12, {{7, "w11_I"}}},
        {"w12_II", "1 0 0 0 0 -1 0", 12, {{6, "w11_II"}}},
        {"w13", "1 0 0 0 -1 0 0", 13, {{6, "w12_I"}, {5, "w12_II"}}},
        {"w14", "1 0 0 -1 0 0 0", 14, {{4, "w13"}}},
        {"w15", "1 0 -1 0 0 0 0", 15, {{3, "w14"}}},
        {"w16", "1 -1 0 0 0 0 0", 16, {{2, "w15"}}},
    });
    return t;
}

const WeightTable& e7_outer_table()
{
    static const WeightTable t = build("E7 table 3", 7, {
        {"1", "1 0 0 0 0 0 1/2*sqrt2", 0, {}},
        {"w1", "0 1 0 0 0 0 1/2*sqrt2", 1, {{1, "1"}}},
        {"w2", "0 0 1 0 0 0 1/2*sqrt2", 2, {{2, "w1"}}},
        {"w3", "0 0 0 1 0 0 1/2*sqrt2", 3, {{3, "w2"}}},
        {"w4", "0 0 0 0 1 0 1/2*sqrt2", 4, {{4, "w3"}}},
        {"w5_I", "0 0 0 0 0 1 1/2*sqrt2", 5, {{5, "w4"}}},
        {"w5_II", "0 0 0 0 0 -1 1/2*sqrt2", 5, {{6, "w4"}}},
        {"w6_I", "0 0 0 0 -1 0 1/2*sqrt2", 6, {{6, "w5_I"}}},
        {"w6_II", "1/2 1/2 1/2 1/2 1/2 -1/2 0", 6, {{7, "w5_II"}}},
        {"w7_I", "0 0 0 -1 0 0 1/2*sqrt2", 7, {{4, "w6_I"}}},
        {"w7_II", "1/2 1/2 1/2 1/2 -1/2 1/2 0", 7, {{5, "w6_II"}}},
        {"w8_I", "0 0 -1 0 0 0 1/2*sqrt2", 8, {{3, "w7_I"}}},
        {"w8_II", "1/2 1/2 1/2 -1/2 1/2 1/2 0", 8, {{4, "w7_II"}}},
        {"w9_I", "0 -1 0 0 0 0 1/2*sqrt2", 9, {{2, "w8_I"}}},
        {"w9_II", "1/2 1/2 -1/2 1/2 1/2 1/2 0", 9, {{3, "w8_II"}}},
        {"w9_III", "1/2 1/2 1/2 -1/2 -1/2 -1/2 0", 9, {{6, "w8_II"}}},
        {"w10_I", "-1 0 0 0 0 0 1/2*sqrt2", 10, {{1, "w9_I"}}},
        {"w10_II", "1/2 -1/2 1/2 1/2 1/2 1/2 0", 10, {{7, "w9_I"}, {2, "w9_II"}}},
        {"w10_III", "1/2 1/2 -1/2 1/2 -1/2 -1/2 0", 10, {{3, "w9_III"}}},
        {"w11_I", "-1/2 1/2 1/2 1/2 1/2 1/2 0", 11, {{7, "w10_I"}, {1, "w10_II"}}},
        {"w11_II", "1/2 -1/2 1/2 1/2 -1/2 -1/2 0", 11, {{6, "w10_II"}, {2, "w10_III"}}},
        {"w11_III", "1/2 1/2 -1/2 -1/2 1/2 -1/2 0", 11, {{4, "w10_III"}}},
        {"w12_I", "-1/2 1/2 1/2 1/2 -1/2 -1/2 0", 12, {{6, "w11_I"}, {1, "w11_II"}}},
        {"w12_II", "1/2 -1/2 1/2 -1/2 1/2 -1/2 0", 12, {{4, "w11_II"}, {2, "w11_III"}}},
        {"w12_III", "1/2 1/2 -1/2 -1/2 -1/2 1/2 0", 12, {{5, "w11_III"}}},
        {"w13_I", "-1/2 1/2 1/2 -1/2 1/2 -1/2 0", 13, {{4, "w12_I"}, {1, "w12_II"}}},
        {"w13_II", "1/2 -1/2 -1/2 1/2 1/2 -1/2 0", 13, {{3, "w12_II"}}},
        {"w13_III", "1/2 -1/2 1/2 -1/2 -1/2 1/2 0", 13, {{5, "w12_II"}, {2, "w12_III"}}},
        {"w14_I", "-1/2 1/2 -1/2 1/2 1/2 -1/2 0", 14, {{3, "w13_I"}, {1, "w13_II"}}},
        {"w14_II", "1/2 -1/2 -1/2 1/2 -1/2 1/2 0", 14, {{5, "w13_II"}, {3, "w13_III"}}},
        {"w14_III", "-1/2 1/2 1/2 -1/2 -1/2 1/2 0", 14, {{1, "w13_III"}}},
        {"w15_I", "-1/2 -1/2 1/2 1/2 1/2 -1/2 0", 15, {{2, "w14_I"}}},
        {"w15_II", "1/2 -1/2 -1/2 -1/2 1/2 1/2 0", 15, {{4, "w14_II"}}},
        {"w15_III", "-1/2 1/2 -1/2 1/2 -1/2 1/2 0", 15, {{1, "w14_II"}, {3, "w14_III"}}},
        {"w16_I", "-1/2 -1/2 1/2 1/2 -1/2 1/2 0", 16, {{5, "w15_I"}, {2, "w15_III"}}},
        {"w16_II", "-1/2 1/2 -1/2 -1/2 1/2 1/2 0", 16, {{1, "w15_II"}}},
        {"w16_III", "1/2 -1/2 -1/2 -1/2 -1/2 -1/2 0", 16, {{6, "w15_II"}}},
        {"w17_I", "-1/2 -1/2 1/2 -1/2 1/2 1/2 0", 17, {{4, "w16_I"}}},
        {"w17_II", "-1/2 1/2 -1/2 -1/2 -1/2 -1/2 0", 17, {{6, "w16_II"}}},
        {"w17_III", "1 0 0 0 0 0 -1/2*sqrt2", 17, {{7, "w16_III"}}},
        {"w18_I", "-1/2 -1/2 -1/2 1/2 1/2 1/2 0", 18, {{3, "w17_I"}}},
        {"w18_II", "-1/2 -1/2 1/2 -1/2 -1/2 -1/2 0", 18, {{2, "w17_II"}}},
        {"w18_III", "0 1 0 0 0 0 -1/2*sqrt2", 18, {{1, "w17_III"}}},
        {"w19_I", "-1/2 -1/2 -1/2 1/2 -1/2 -1/2 0", 19, {{6, "w18_I"}, {3, "w18_II"}}},
        {"w19_II", "0 0 1 0 0 0 -1/2*sqrt2", 19, {{7, "w18_II"}, {2, "w18_III"}}},
        {"w20_I", "0 0 0 1 0 0 -1/2*sqrt2", 20, {{7, "w19_I"}, {3, "w19_II"}}},
        {"w20_II", "-1/2 -1/2 -1/2 -1/2 1/2 -1/2 0", 20, {{4, "w19_I"}}},
        {"w21_I", "0 0 0 0 1 0 -1/2*sqrt2", 21, {{4, "w20_I"}}},
        {"w21_II", "-1/2 -1/2 -1/2 -1/2 -1/2 1/2 0", 21, {{5, "w20_II"}}},
        {"w22_I", "0 0 0 0 0 -1 -1/2*sqrt2", 22, {{6, "w21_I"}}},
        {"w22_II", "0 0 0 0 0 1 -1/2*sqrt2", 22, {{7, "w21_II"}}},
        {"w23_I", "0 0 0 0 -1 0 -1/2*sqrt2", 23, {{5, "w22_I"}, {6, "w22_II"}}},
        {"w24_I", "0 0 0 -1 0 0 -1/2*sqrt2", 24, {{4, "w23_I"}}},
        {"w25_I", "0 0 -1 0 0 0 -1/2*sqrt2", 25, {{3, "w24_I"}}},
        {"w26_I", "0 -1 0 0 0 0 -1/2*sqrt2", 26, {{2, "w25_I"}}},
        {"w27_I", "-1 0 0 0 0 0 -1/2*sqrt2", 27, {{1, "w26_I"}}},
    });
    return t;
}

std::vector<Vec> reconstruct_simple_roots(const std::vector<const WeightTable*>& tables, int rank)
{
    std::vector<std::optional<Vec>> found(static_cast<std::size_t>(rank));
    for (const WeightTable* t : tables) {
        for (const auto& row : t->rows) {
            for (const auto& step : row.definitions) {
                if (step.letter < 1 || step.letter > rank)
                    throw InconsistentTable(t->name + ": letter s" + std::to_string(step.letter) + " out of range");
                Vec alpha = t->rows[step.parent].weight - row.weight;
                auto& slot = found[static_cast<std::size_t>(step.letter - 1)];
                if (!slot) {
                    slot = std::move(alpha);
                } else if (*slot != alpha) {
                    throw InconsistentTable(t->name + ": edge " + row.label + " gives s" + std::to_string(step.letter) +
                                            " root " + to_string(alpha) + " but earlier edges gave " + to_string(*slot));
                }
            }
        }
    }
    std::vector<Vec> out;
    for (int i = 0; i < rank; ++i) {
        if (!found[static_cast<std::size_t>(i)]) throw InconsistentTable("no table edge labeled s" + std::to_string(i + 1));
        out.push_back(*found[static_cast<std::size_t>(i)]);
    }
    return out;
}

}  // namespace ew
