#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plie/linalg.hpp"
#include "plie/random.hpp"

using namespace plie;

namespace {

SparseRow sparse(const std::vector<Rational>& dense) {
    SparseRow r;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (!dense[i].is_zero()) r[static_cast<int>(i)] = dense[i];
    return r;
}

} // namespace

TEST_CASE("rank matches the dense oracle on random matrices") {
    Rng rng(103);
    for (int t = 0; t < 20; ++t) {
        int rows = static_cast<int>(rng.int_in(1, 8));
        int cols = static_cast<int>(rng.int_in(1, 6));
        std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
        for (auto& r : m)
            for (auto& v : r) v = rng.int_in(0, 2) == 0 ? Rational(0) : rng.rational(4, 2);
        RowReducer red(cols);
        for (const auto& r : m) red.add_row(sparse(r), Rational(0));
        CHECK(red.rank() == dense_rank(m));
        CHECK(red.kernel_dim() == cols - dense_rank(m));
    }
}

TEST_CASE("kernel basis vectors annihilate the rows") {
    Rng rng(107);
    for (int t = 0; t < 10; ++t) {
        int rows = 5, cols = 7;
        std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
        for (auto& r : m)
            for (auto& v : r) v = rng.int_in(0, 1) == 0 ? Rational(0) : rng.rational(4, 2);
        RowReducer red(cols);
        for (const auto& r : m) red.add_row(sparse(r), Rational(0));
        auto basis = red.kernel_basis();
        CHECK(static_cast<int>(basis.size()) == red.kernel_dim());
        for (const auto& k : basis)
            for (const auto& row : m) {
                Rational dot;
                for (int c = 0; c < cols; ++c) dot += row[c] * k[c];
                CHECK(dot.is_zero());
            }
    }
}

TEST_CASE("consistent solve and inconsistency detection") {
    // x + y = 3, x - y = 1  ->  x = 2, y = 1
    RowReducer red(2);
    red.add_row(sparse({Rational(1), Rational(1)}), Rational(3));
    red.add_row(sparse({Rational(1), Rational(-1)}), Rational(1));
    CHECK_FALSE(red.saw_inconsistency());
    auto x = red.particular_solution();
    CHECK(x[0] == Rational(2));
    CHECK(x[1] == Rational(1));
    // a dependent consistent row is absorbed
    CHECK(red.add_row(sparse({Rational(2), Rational(0)}), Rational(4)) ==
          RowReducer::RowFate::Dependent);
    // contradiction is flagged
    CHECK(red.add_row(sparse({Rational(1), Rational(1)}), Rational(5)) ==
          RowReducer::RowFate::Inconsistent);
    CHECK(red.saw_inconsistency());
}

TEST_CASE("random consistent systems round-trip") {
    Rng rng(109);
    for (int t = 0; t < 10; ++t) {
        int cols = 5, rows = 8;
        std::vector<Rational> truth(cols);
        for (auto& v : truth) v = rng.rational(5, 3);
        RowReducer red(cols);
        std::vector<std::vector<Rational>> m;
        for (int r = 0; r < rows; ++r) {
            std::vector<Rational> row(cols);
            Rational rhs;
            for (int c = 0; c < cols; ++c) {
                row[c] = rng.rational(3, 2);
                rhs += row[c] * truth[c];
            }
            m.push_back(row);
            red.add_row(sparse(row), rhs);
        }
        CHECK_FALSE(red.saw_inconsistency());
        if (red.kernel_dim() == 0) {
            auto sol = red.particular_solution();
            for (int c = 0; c < cols; ++c) CHECK(sol[c] == truth[c]);
        }
    }
}
