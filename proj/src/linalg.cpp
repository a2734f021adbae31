#include "plie/linalg.hpp"

#include <stdexcept>

namespace plie {

void RowReducer::reduce(SparseRow& row, Rational& rhs) const {
    // Pivot rows carry no other pivot columns (reduced echelon invariant),
    // so one ascending pass suffices: subtracting a pivot row only touches
    // free columns, which never trigger further elimination.
    auto it = row.begin();
    while (it != row.end()) {
        auto pivot = rows_.find(it->first);
        if (pivot == rows_.end()) {
            ++it;
            continue;
        }
        const Rational factor = it->second;
        const int cur_col = it->first;
        for (const auto& [col, v] : pivot->second.first) {
            if (col == cur_col) continue;   // cancels exactly; erased below
            auto [slot, fresh] = row.try_emplace(col, Rational(0));
            slot->second -= factor * v;
            if (slot->second.is_zero()) row.erase(slot);
        }
        rhs -= factor * pivot->second.second;
        it = row.erase(it);
    }
}

RowReducer::RowFate RowReducer::add_row(SparseRow row, Rational rhs) {
    for (auto it = row.begin(); it != row.end();) {
        if (it->second.is_zero())
            it = row.erase(it);
        else
            ++it;
    }
    reduce(row, rhs);
    if (row.empty()) {
        if (rhs.is_zero()) return RowFate::Dependent;
        inconsistent_ = true;
        return RowFate::Inconsistent;
    }
    // normalize on the leading column
    auto lead = row.begin();
    int pivot_col = lead->first;
    Rational inv = lead->second.inv();
    for (auto& [col, v] : row) v *= inv;
    rhs *= inv;
    // eliminate the new pivot from existing rows
    for (auto& [pc, rr] : rows_) {
        auto hit = rr.first.find(pivot_col);
        if (hit == rr.first.end()) continue;
        Rational f = hit->second;
        for (const auto& [col, v] : row) {
            auto [slot, fresh] = rr.first.try_emplace(col, Rational(0));
            slot->second -= f * v;
            if (slot->second.is_zero()) rr.first.erase(slot);
        }
        rr.second -= f * rhs;
    }
    rows_.emplace(pivot_col, std::make_pair(std::move(row), std::move(rhs)));
    return RowFate::NewPivot;
}

std::vector<Rational> RowReducer::particular_solution() const {
    if (inconsistent_) throw std::domain_error("RowReducer: inconsistent system");
    std::vector<Rational> x(cols_, Rational(0));
    for (const auto& [pc, rr] : rows_) x[pc] = rr.second;
    return x;
}

std::vector<std::vector<Rational>> RowReducer::kernel_basis() const {
    std::vector<std::vector<Rational>> basis;
    for (int free_col = 0; free_col < cols_; ++free_col) {
        if (rows_.count(free_col)) continue;
        std::vector<Rational> v(cols_, Rational(0));
        v[free_col] = Rational(1);
        for (const auto& [pc, rr] : rows_) {
            auto hit = rr.first.find(free_col);
            if (hit != rr.first.end()) v[pc] = -hit->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

int dense_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    std::size_t rr = 0;
    for (std::size_t c = 0; c < cols && rr < rows; ++c) {
        std::size_t p = rr;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rr]);
        Rational inv = m[rr][c].inv();
        for (std::size_t j = c; j < cols; ++j) m[rr][j] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rr || m[r][c].is_zero()) continue;
            Rational f = m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rr][j];
        }
        ++rank, ++rr;
    }
    return rank;
}

} // namespace plie
