#include "ternalg/rowreduce.hpp"

#include <algorithm>
#include <stdexcept>

namespace ternalg {

void SparseRow::scale(const Cyclo& c) {
    for (auto& [col, v] : entries) v *= c;
}

void SparseRow::axpy(const Cyclo& c, const SparseRow& other) {
    std::vector<std::pair<int, Cyclo>> merged;
    merged.reserve(entries.size() + other.entries.size());
    size_t a = 0, b = 0;
    while (a < entries.size() || b < other.entries.size()) {
        if (b == other.entries.size() ||
            (a < entries.size() && entries[a].first < other.entries[b].first)) {
            merged.push_back(std::move(entries[a++]));
        } else if (a == entries.size() || other.entries[b].first < entries[a].first) {
            merged.emplace_back(other.entries[b].first, c * other.entries[b].second);
            ++b;
        } else {
            Cyclo v = entries[a].second + c * other.entries[b].second;
            if (!v.is_zero()) merged.emplace_back(entries[a].first, std::move(v));
            ++a;
            ++b;
        }
    }
    entries = std::move(merged);
}

RowEchelon::RowEchelon(int ncols) : ncols_(ncols), pivot_of_col_(ncols, -1) {
    if (ncols < 0) throw std::invalid_argument("RowEchelon: negative column count");
}

void RowEchelon::reduce(SparseRow& row) const {
    // The lead can only move right, so one left-to-right sweep with restarts
    // at the lead eliminates every pivot column.
    size_t k = 0;
    while (k < row.entries.size()) {
        int pivot = pivot_of_col_[static_cast<size_t>(row.entries[k].first)];
        if (pivot < 0) {
            ++k;
            continue;
        }
        Cyclo factor = -row.entries[k].second;
        row.axpy(factor, rows_[static_cast<size_t>(pivot)]);
        // Entries before position k are pivot-free and unchanged by the pivot
        // row, whose lead is the eliminated column.
    }
}

bool RowEchelon::insert(SparseRow row) {
    reduce(row);
    if (row.empty()) return false;
    row.scale(row.entries.front().second.inv());
    pivot_of_col_[static_cast<size_t>(row.lead())] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(row));
    return true;
}

void RowEchelon::insert_rows_serial(std::vector<SparseRow> rows) {
    for (auto& r : rows) insert(std::move(r));
}

void RowEchelon::insert_rows_parallel(std::vector<SparseRow> rows) {
    const long total = static_cast<long>(rows.size());
    const long wave = 512;
    for (long base = 0; base < total; base += wave) {
        const long end = std::min(total, base + wave);
        // Pre-reduction against the frozen pivot set; pure speedup, the serial
        // insertion below re-reduces against pivots added within the wave.
#pragma omp parallel for schedule(dynamic, 16)
        for (long k = base; k < end; ++k) reduce(rows[static_cast<size_t>(k)]);
        for (long k = base; k < end; ++k) insert(std::move(rows[static_cast<size_t>(k)]));
    }
}

}  // namespace ternalg
