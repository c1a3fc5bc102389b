#pragma once

#include <string>
#include <vector>

#include "eip/delta.hpp"

namespace eip {

// One named construction believed to realize a classification row.
struct RowConstruction {
    std::string label;  // display name, e.g. "K10-3M"
    std::string expr;   // construction expression buildable by build_graph
};

// Golden row of the published length-9/10/11 classification study.
struct TableRow {
    std::vector<int> delta;
    std::vector<RowConstruction> constructions;  // empty: no known realization
};

// which in {1,2,3} selects sequence length 9, 10, 11.
const std::vector<TableRow>& classification_table(int which);

DeltaSequence delta_of_named_table_row(int table, std::size_t row);

} // namespace eip
