#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "symdet/poly.hpp"

namespace symdet {

// Square matrix of polynomials in variables x1..xs, 1-based indexing.
// Immutable after construction.
class SymMatrix {
public:
    // n >= 0 (the 0x0 matrix arises from empty submatrix selections),
    // s >= 1. Entries default to zero polynomials.
    SymMatrix(int n, int s);
    // Row-major entries; each entry may use only variables x1..xs.
    SymMatrix(int n, int s, std::vector<Polynomial> entries);

    int dim() const noexcept { return n_; }
    int nvars() const noexcept { return s_; }

    const Polynomial& at(int row, int col) const;

    // Selected rows x cols, both 1-based, strictly ascending, same size.
    // Empty selections yield the 0x0 matrix.
    SymMatrix submatrix(const std::vector<int>& rows,
                        const std::vector<int>& cols) const;

    // Rows rearranged so that new row k is old row `order[k-1]`; `order`
    // must be a permutation of 1..n.
    SymMatrix with_row_order(const std::vector<int>& order) const;

    bool operator==(const SymMatrix& other) const = default;

private:
    int n_;
    int s_;
    std::vector<Polynomial> entries_;  // row-major
};

// Parameters of a random-matrix distribution and its trial plan.
struct ExperimentConfig {
    int n = 1;
    int s = 1;
    double zero_prob = 0.0;
    int max_terms = 1;
    long coeff_lo = -999;
    long coeff_hi = 999;
    std::uint64_t seed = 0;
    int trials = 1;
};

// Dense matrix of 1-homogeneous entries: a_ij = sum_k c_ijk * x_k with every
// c_ijk a uniform nonzero integer in [coeff_lo, coeff_hi]. Deterministic for
// a fixed seed.
SymMatrix gen_one_homogeneous(int n, int s, long coeff_lo, long coeff_hi,
                              std::uint64_t seed);

// Sparse matrix of total-degree-<=1 entries: each entry is zero with
// probability zero_prob, otherwise has a uniform term count in
// {1..max_terms}, monomials drawn without replacement from {1, x1..xs}, and
// uniform nonzero coefficients. Requires max_terms <= s + 1.
SymMatrix gen_sparse_linear(const ExperimentConfig& config);

// Text format: first line "n s", then n lines of n polynomial expressions
// separated by ';'. Blank lines and lines starting with '#' are ignored.
SymMatrix read_matrix(std::istream& in);
SymMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const SymMatrix& m);

}  // namespace symdet
