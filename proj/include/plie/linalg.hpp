#pragma once

#include "plie/rational.hpp"

#include <map>
#include <vector>

namespace plie {

// Sparse row over the rationals: column index -> coefficient.
using SparseRow = std::map<int, Rational>;

// Incremental exact row reduction of an augmented system A x = b.
// Rows are fed one at a time; the reducer keeps a pivoted basis of the row
// space. Feeding a row that reduces to (0 ... 0 | c) with c != 0 is reported
// as an inconsistency and the row is discarded.
class RowReducer {
public:
    explicit RowReducer(int cols) : cols_(cols) {}

    enum class RowFate { Dependent, NewPivot, Inconsistent };

    // `row` holds the coefficients; `rhs` the augmented entry.
    RowFate add_row(SparseRow row, Rational rhs);

    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    int kernel_dim() const { return cols_ - rank(); }
    bool saw_inconsistency() const { return inconsistent_; }

    // A particular solution with free variables set to zero; valid only for
    // consistent systems.
    std::vector<Rational> particular_solution() const;

    // Basis of the homogeneous kernel (one vector per free column).
    std::vector<std::vector<Rational>> kernel_basis() const;

private:
    int cols_;
    bool inconsistent_ = false;
    // pivot column -> (reduced row, rhs); each stored row is normalized so
    // its pivot coefficient is 1 and is reduced against all other pivots
    std::map<int, std::pair<SparseRow, Rational>> rows_;

    void reduce(SparseRow& row, Rational& rhs) const;
};

// Dense rank of a small matrix, used by tests as an independent oracle.
int dense_rank(std::vector<std::vector<Rational>> m);

} // namespace plie
