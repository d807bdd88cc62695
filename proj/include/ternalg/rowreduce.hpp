#pragma once

#include <vector>

#include "ternalg/cyclo.hpp"

namespace ternalg {

/// Sparse row over Q(zeta12): (column, coefficient) pairs with strictly
/// ascending columns and nonzero coefficients.
struct SparseRow {
    std::vector<std::pair<int, Cyclo>> entries;

    bool empty() const { return entries.empty(); }
    int lead() const { return entries.front().first; }
    void scale(const Cyclo& c);
    /// this += c * other, merging by column.
    void axpy(const Cyclo& c, const SparseRow& other);
    bool operator==(const SparseRow&) const = default;
};

/// Incremental exact row echelon form with deterministic pivoting: the pivot
/// of a row is its first nonzero column, and rows are inserted in the order
/// given, so the result is reproducible. Pivot rows are normalized to leading
/// coefficient 1.
class RowEchelon {
public:
    explicit RowEchelon(int ncols);

    int ncols() const { return ncols_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    /// Eliminates every pivot column from the row (full reduction).
    void reduce(SparseRow& row) const;

    /// Reduces and, if nonzero, installs the row as a new pivot.
    /// Returns true when the rank grew.
    bool insert(SparseRow row);

    /// Inserts a batch of rows; the parallel path pre-reduces rows in OpenMP
    /// waves against the frozen pivot set before the serial insertions, and
    /// produces exactly the same echelon as the serial path.
    void insert_rows_serial(std::vector<SparseRow> rows);
    void insert_rows_parallel(std::vector<SparseRow> rows);

    /// -1 when the column is pivot-free, otherwise the index of its pivot row.
    const std::vector<int>& pivot_row_of_col() const { return pivot_of_col_; }
    const std::vector<SparseRow>& rows() const { return rows_; }

private:
    int ncols_;
    std::vector<SparseRow> rows_;
    std::vector<int> pivot_of_col_;
};

}  // namespace ternalg
