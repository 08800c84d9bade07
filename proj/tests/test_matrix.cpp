#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "symdet/det.hpp"
#include "symdet/matrix.hpp"

using namespace symdet;

namespace {

SymMatrix matrix3x3() {
    std::vector<Polynomial> entries;
    for (int k = 1; k <= 9; ++k)
        entries.push_back(Polynomial::constant(k));
    return SymMatrix(3, 1, std::move(entries));
}

}  // namespace

TEST_SUITE("matrix") {

TEST_CASE("construction validates shape and variables") {
    CHECK_THROWS_AS(SymMatrix(2, 2, std::vector<Polynomial>(3)), DimensionMismatch);
    CHECK_THROWS_AS(SymMatrix(1, 1, {Polynomial::variable(2)}), VariableOutOfRange);
    CHECK_THROWS_AS(SymMatrix(2, 0), InvalidRange);
    const SymMatrix zero(3, 2);
    CHECK(zero.at(2, 3).is_zero());
    CHECK_THROWS_AS(zero.at(0, 1), IndexOutOfRange);
    CHECK_THROWS_AS(zero.at(1, 4), IndexOutOfRange);
}

TEST_CASE("submatrix selection") {
    const SymMatrix m = matrix3x3();
    CHECK(m.submatrix({1, 2, 3}, {1, 2, 3}) == m);

    const SymMatrix empty = m.submatrix({}, {});
    CHECK(empty.dim() == 0);

    // rows {1,3}, cols {2,3} selects [[a12,a13],[a32,a33]].
    const SymMatrix sub = m.submatrix({1, 3}, {2, 3});
    CHECK(sub.at(1, 1) == Polynomial::constant(2));
    CHECK(sub.at(1, 2) == Polynomial::constant(3));
    CHECK(sub.at(2, 1) == Polynomial::constant(8));
    CHECK(sub.at(2, 2) == Polynomial::constant(9));

    CHECK_THROWS_AS(m.submatrix({1}, {1, 2}), DimensionMismatch);
    CHECK_THROWS_AS(m.submatrix({0}, {1}), IndexOutOfRange);
    CHECK_THROWS_AS(m.submatrix({1, 4}, {1, 2}), IndexOutOfRange);
    CHECK_THROWS_AS(m.submatrix({2, 1}, {1, 2}), InvalidRange);
}

TEST_CASE("one-homogeneous generator structure") {
    const SymMatrix m = gen_one_homogeneous(4, 3, -999, 999, 11);
    for (int i = 1; i <= 4; ++i) {
        for (int j = 1; j <= 4; ++j) {
            REQUIRE(m.at(i, j).is_homogeneous(1));
            REQUIRE(m.at(i, j).nterms() == 3);
        }
    }
    // n=2, s=1: structure forced to c*x1.
    const SymMatrix tiny = gen_one_homogeneous(2, 1, -9, 9, 3);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            REQUIRE(tiny.at(i, j).nterms() == 1);
            REQUIRE(tiny.at(i, j).is_homogeneous(1));
        }
}

TEST_CASE("one-homogeneous generator determinism") {
    const SymMatrix a = gen_one_homogeneous(5, 4, -999, 999, 77);
    const SymMatrix b = gen_one_homogeneous(5, 4, -999, 999, 77);
    const SymMatrix c = gen_one_homogeneous(5, 4, -999, 999, 78);
    CHECK(a == b);
    CHECK(a != c);
}

TEST_CASE("one-homogeneous minors are homogeneous of their order") {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const SymMatrix m = gen_one_homogeneous(4, 2, -99, 99, seed);
        // All i x i minors taken from the leading i rows, any i columns.
        for (unsigned mask = 1; mask < 16; ++mask) {
            std::vector<int> cols;
            for (int c = 0; c < 4; ++c)
                if (mask & (1u << c)) cols.push_back(c + 1);
            const int i = static_cast<int>(cols.size());
            std::vector<int> rows;
            for (int r = 1; r <= i; ++r) rows.push_back(r);
            const Polynomial minor = naive_laplace(m.submatrix(rows, cols));
            REQUIRE(minor.is_homogeneous(i));
        }
    }
}

TEST_CASE("generator range validation") {
    CHECK_THROWS_AS(gen_one_homogeneous(2, 2, 5, 4, 0), InvalidRange);
    CHECK_THROWS_AS(gen_one_homogeneous(2, 2, 0, 0, 0), InvalidRange);
    ExperimentConfig config;
    config.n = 3;
    config.s = 2;
    config.max_terms = 4;  // > s + 1
    CHECK_THROWS_AS(gen_sparse_linear(config), InvalidRange);
    config.max_terms = 2;
    config.zero_prob = 1.5;
    CHECK_THROWS_AS(gen_sparse_linear(config), InvalidRange);
}

TEST_CASE("sparse-linear generator structure") {
    ExperimentConfig config;
    config.n = 6;
    config.s = 5;
    config.max_terms = 4;
    config.seed = 5;

    config.zero_prob = 1.0;
    const SymMatrix zeros = gen_sparse_linear(config);
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j) REQUIRE(zeros.at(i, j).is_zero());

    config.zero_prob = 0.0;
    const SymMatrix dense = gen_sparse_linear(config);
    for (int i = 1; i <= 6; ++i) {
        for (int j = 1; j <= 6; ++j) {
            const Polynomial& p = dense.at(i, j);
            REQUIRE(!p.is_zero());
            REQUIRE(p.nterms() >= 1);
            REQUIRE(p.nterms() <= 4);
            REQUIRE(p.total_degree() <= 1);
        }
    }
}

TEST_CASE("sparse-linear zero fraction matches the probability") {
    ExperimentConfig config;
    config.n = 100;  // 10^4 entries
    config.s = 5;
    config.max_terms = 4;
    config.zero_prob = 0.5;
    config.seed = 123;
    const SymMatrix m = gen_sparse_linear(config);
    int zeros = 0;
    for (int i = 1; i <= 100; ++i)
        for (int j = 1; j <= 100; ++j)
            if (m.at(i, j).is_zero()) ++zeros;
    const double fraction = zeros / 10000.0;
    CHECK(fraction > 0.48);
    CHECK(fraction < 0.52);
}

TEST_CASE("sparse-linear determinism") {
    ExperimentConfig config;
    config.n = 5;
    config.s = 4;
    config.max_terms = 3;
    config.zero_prob = 0.4;
    config.seed = 99;
    CHECK(gen_sparse_linear(config) == gen_sparse_linear(config));
}

TEST_CASE("matrix text round trip") {
    const SymMatrix m = gen_one_homogeneous(3, 2, -99, 99, 21);
    std::ostringstream out;
    write_matrix(out, m);
    std::istringstream in(out.str());
    CHECK(read_matrix(in) == m);
}

TEST_CASE("matrix reader ignores comments and blank lines") {
    std::istringstream in(
        "# a comment\n"
        "\n"
        "2 4\n"
        "  # another\n"
        "x1; x2\n"
        "\n"
        "x3; x4\n");
    const SymMatrix m = read_matrix(in);
    CHECK(m.dim() == 2);
    CHECK(m.nvars() == 4);
    CHECK(m.at(2, 1) == Polynomial::variable(3));
}

TEST_CASE("matrix reader rejects malformed input") {
    std::istringstream missing("");
    CHECK_THROWS_AS(read_matrix(missing), SyntaxError);
    std::istringstream bad_header("2\nx1; x2\nx3; x4\n");
    CHECK_THROWS_AS(read_matrix(bad_header), SyntaxError);
    std::istringstream wrong_cells("2 4\nx1\nx3; x4\n");
    CHECK_THROWS_AS(read_matrix(wrong_cells), SyntaxError);
    std::istringstream short_rows("2 4\nx1; x2\n");
    CHECK_THROWS_AS(read_matrix(short_rows), SyntaxError);
    std::istringstream out_of_range("1 1\nx2\n");
    CHECK_THROWS_AS(read_matrix(out_of_range), VariableOutOfRange);
}

TEST_CASE("row reorder validates the permutation") {
    const SymMatrix m = matrix3x3();
    CHECK_THROWS_AS(m.with_row_order({1, 2}), DimensionMismatch);
    CHECK_THROWS_AS(m.with_row_order({1, 2, 2}), IndexOutOfRange);
    CHECK_THROWS_AS(m.with_row_order({0, 1, 2}), IndexOutOfRange);
    const SymMatrix swapped = m.with_row_order({2, 1, 3});
    CHECK(swapped.at(1, 1) == Polynomial::constant(4));
    CHECK(swapped.at(2, 1) == Polynomial::constant(1));
}

}  // TEST_SUITE
