#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "symdet/matrix.hpp"
#include "symdet/poly.hpp"

namespace symdet {

// Accumulates the modeled cost of a determinant computation: each polynomial
// multiplication or division of p by q is charged nterms(p) * nterms(q)
// integer operations; additions are free.
struct CostMeter {
    Integer modeled_int_ops = 0;
    std::uint64_t poly_mults = 0;
    std::uint64_t poly_divs = 0;

    void record_mul(const Polynomial& p, const Polynomial& q) {
        modeled_int_ops += Integer(p.nterms()) * Integer(q.nterms());
        ++poly_mults;
    }
    void record_div(const Polynomial& p, const Polynomial& q) {
        modeled_int_ops += Integer(p.nterms()) * Integer(q.nterms());
        ++poly_divs;
    }
};

// Rolling dynamic-programming table of minors. After advance() to level i,
// entry(mask) with popcount(mask) == i holds det of the submatrix taking
// rows 1..i and the columns named by mask (bit j-1 <-> column j). Only the
// current level is retained; level 0 is the empty minor, 1.
class MinorTable {
public:
    explicit MinorTable(const SymMatrix& matrix, CostMeter* meter = nullptr);

    int level() const noexcept { return level_; }

    // Computes level i+1 from level i using row i+1. Every multiplication,
    // including level 1's multiplications by the empty minor 1, is performed
    // and metered.
    void advance();

    // Minors of the current level, keyed by ascending column-subset mask.
    const std::vector<std::pair<std::uint64_t, Polynomial>>& current() const noexcept {
        return values_;
    }

    const Polynomial& value(std::uint64_t mask) const;

private:
    const SymMatrix& matrix_;
    CostMeter* meter_;
    int level_ = 0;
    std::vector<std::pair<std::uint64_t, Polynomial>> values_;
};

// Cofactor expansion along the first row, the textbook recursive definition.
// Exponential in n; intended as a small-n test oracle.
Polynomial naive_laplace(const SymMatrix& matrix);

// Determinant via the minor-expansion DP: level-i minors are linear
// combinations of level-(i-1) minors, shared across column subsets.
Polynomial minor_expansion(const SymMatrix& matrix, CostMeter* meter = nullptr);

// Determinant via one-step fraction-free Gaussian elimination. Every
// interior division is exact; zero pivots are handled by row search + swap
// (sign tracked), with an immediate zero result when no pivot exists.
Polynomial bareiss(const SymMatrix& matrix, CostMeter* meter = nullptr);

enum class DetAlgorithm { Naive, MinorExpansion, Bareiss };

std::optional<DetAlgorithm> parse_algorithm(std::string_view name);
std::string_view algorithm_name(DetAlgorithm algorithm);

// Delegates to one of the three algorithms. The naive oracle is not
// instrumented; a supplied meter is populated only by the other two.
Polynomial det_dispatch(const SymMatrix& matrix, DetAlgorithm algorithm,
                        CostMeter* meter = nullptr);

}  // namespace symdet
