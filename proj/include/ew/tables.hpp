#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ew/scalar.hpp"

namespace ew {

/// Simple-reflection indices, 1-based. The leftmost letter is applied last:
/// {5, 6} stands for s5 s6.
using WeylWord = std::vector<int>;

std::string to_string(const WeylWord& w);

struct InconsistentTable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One row of a minuscule-orbit table: the weight w(base), the length l(w),
/// and every recorded way of writing w as s_letter * (an earlier row).
struct TableRow {
    std::string label;
    Vec weight;
    int length = 0;
    struct Step {
        int letter;
        std::size_t parent;
    };
    std::vector<Step> definitions;  // empty for the identity row
};

struct WeightTable {
    std::string name;
    int rank = 0;
    std::vector<TableRow> rows;

    const Vec& base() const { return rows.front().weight; }
    /// The word obtained by following first definitions back to the identity.
    WeylWord word(std::size_t row) const;
    /// Word using definition `alt` of `row` and first definitions thereafter.
    WeylWord alternate_word(std::size_t row, std::size_t alt) const;
};

/// {w varpi6 : w in W^{E6/D5}} for E6.
const WeightTable& e6_table();
/// {w varpi7 : w in W^{E6/D5}} for E7 (letters shifted by one).
const WeightTable& e7_inner_table();
/// {w varpi1 : w in W^{E7/E6}} for E7.
const WeightTable& e7_outer_table();

/// Recover the simple roots from the edges of minuscule-orbit tables. An edge
/// child = s_i(parent) has parent - child = (parent, alpha_i^vee) alpha_i with
/// pairing 1, so alpha_i = parent - child. Every edge for the same letter must
/// agree, across all given tables; throws InconsistentTable otherwise or if a
/// letter in 1..rank never occurs.
std::vector<Vec> reconstruct_simple_roots(const std::vector<const WeightTable*>& tables, int rank);

}  // namespace ew
