#include "eip/tables.hpp"

#include "eip/errors.hpp"

namespace eip {

namespace {

// Length-9 study: 10 appropriate symmetric sequences, 5 isoperimetric.
const std::vector<TableRow> kTable1 = {
    {{0, 1, 1, 2, 2, 2, 3, 3, 4}, {}},
    {{0, 1, 2, 1, 2, 3, 2, 3, 4}, {{"K3xK3", "prod(K(3),K(3))"}, {"K9-2C9", "Km2C(9)"}}},
    {{0, 1, 2, 2, 3, 4, 4, 5, 6}, {{"K{3,3,3}", "Kmulti(3,3)"}}},
    {{0, 1, 2, 3, 3, 3, 4, 5, 6}, {{"K9-C9", "KmC(9)"}}},
    {{0, 1, 2, 3, 4, 5, 6, 7, 8}, {{"K9", "K(9)"}}},
};

// Length-10 study: 36 sequences, 11 isoperimetric.
const std::vector<TableRow> kTable2 = {
    {{0, 1, 1, 1, 2, 1, 2, 2, 2, 3}, {{"Petersen", "petersen"}}},
    {{0, 1, 1, 2, 1, 2, 1, 2, 2, 3}, {{"C5xK2", "prod(C(5),K(2))"}}},
    {{0, 1, 1, 2, 2, 2, 2, 3, 3, 4}, {{"K{5,5}-M", "KppmM(5,1)"}}},
    {{0, 1, 1, 2, 2, 3, 3, 4, 4, 5}, {{"K{5,5}", "Kpp(5)"}}},
    {{0, 1, 2, 2, 2, 3, 3, 3, 4, 5}, {{"K10-4M", "KmM(10,4)"}}},
    {{0, 1, 2, 2, 3, 3, 4, 4, 5, 6}, {{"K10-3M", "KmM(10,3)"}}},
    {{0, 1, 2, 3, 3, 4, 4, 5, 6, 7}, {{"K10-2C5", "complement(union(C(5),C(5)))"}}},
    {{0, 1, 2, 3, 4, 1, 2, 3, 4, 5}, {{"K5xK2", "prod(K(5),K(2))"}}},
    {{0, 1, 2, 3, 4, 3, 4, 5, 6, 7}, {{"K10-2M", "KmM(10,2)"}}},
    {{0, 1, 2, 3, 4, 4, 5, 6, 7, 8}, {{"K10-M", "KmM(10,1)"}}},
    {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, {{"K10", "K(10)"}}},
};

// Length-11 study: 28 sequences, 5 isoperimetric.  The first row is recorded
// in the source data as K11-2C11; exact search shows no removal of two
// disjoint Hamiltonian cycles yields this sequence (it is realized by
// join(sKi(5,1),sKi(3,2)) instead), while Km2C(11) realizes the second row.
// The rows are kept verbatim; the reproduction report surfaces the mismatch.
const std::vector<TableRow> kTable3 = {
    {{0, 1, 2, 2, 2, 3, 4, 4, 4, 5, 6}, {{"K11-2C11", "Km2C(11)"}}},
    {{0, 1, 2, 2, 3, 3, 3, 4, 4, 5, 6}, {}},
    {{0, 1, 2, 3, 3, 4, 5, 5, 6, 7, 8}, {}},
    {{0, 1, 2, 3, 4, 4, 4, 5, 6, 7, 8}, {{"K11-C11", "KmC(11)"}}},
    {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, {{"K11", "K(11)"}}},
};

} // namespace

const std::vector<TableRow>& classification_table(int which) {
    switch (which) {
    case 1: return kTable1;
    case 2: return kTable2;
    case 3: return kTable3;
    }
    throw input_error("classification table must be 1, 2 or 3");
}

DeltaSequence delta_of_named_table_row(int table, std::size_t row) {
    const auto& rows = classification_table(table);
    if (row >= rows.size())
        throw input_error("table " + std::to_string(table) + " has no row " +
                          std::to_string(row));
    return DeltaSequence(rows[row].delta);
}

} // namespace eip
