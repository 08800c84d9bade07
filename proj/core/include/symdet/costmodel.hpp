#pragma once

#include <optional>
#include <vector>

#include "symdet/det.hpp"
#include "symdet/matrix.hpp"
#include "symdet/poly.hpp"

namespace symdet {

struct CostParams {
    int n = 1;  // matrix dimension
    int s = 1;  // variable count
};

// Modeled integer-operation cost of minor expansion on a dense matrix of
// 1-homogeneous entries in s variables, counting levels i >= 2:
//   s * sum_{i=2..n} i * C(n,i) * C(i+s-2, s-1).
Integer minor_cost_model(CostParams params);

// The equivalent rewritten form n*s * sum_{i=1..n-1} C(n-1,i) * C(i+s-1, s-1);
// kept separate so tests can verify the rewriting.
Integer minor_cost_model_alt(CostParams params);

// Modeled cost of one-step fraction-free Gaussian elimination on the same
// matrix class:
//   sum_{i=1..n-1} (n-i)^2 * (2*C(i+s-1,s-1)^2 + C(2i+s-1,s-1)*C(i+s-2,s-1)).
Integer gauss_cost_model(CostParams params);

// Exact modeled cost of minor expansion on a concrete matrix: for every
// column subset J and j in J, nterms(a_{|J|,j}) * nterms of the level-(|J|-1)
// minor, with the empty minor counted as 1 term. Runs the MinorTable DP, so
// it reflects actual term consolidation. Guarded: 2^n minors are stored.
Integer minor_cost_exact(const SymMatrix& matrix, int size_guard = 16);

struct RatioPoint {
    int n;
    int s;
    double log_ratio;  // ln(C_M / C_G), ratio formed exactly first
};

// Dense grid over 2 <= n <= n_max, 1 <= s <= s_max in row-major (n, then s)
// order.
std::vector<RatioPoint> cost_ratio_grid(int n_max, int s_max);

// Smallest n <= n_cap with C_M(n, s) > C_G(n, s), by linear scan.
std::optional<int> crossover_n(int s, int n_cap);

}  // namespace symdet
