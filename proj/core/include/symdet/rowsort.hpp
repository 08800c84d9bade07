#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "symdet/det.hpp"
#include "symdet/matrix.hpp"

namespace symdet {

// Per-row statistics used as sorting keys; heuristic estimates of how much a
// row inflates the total multiplication cost of minor expansion.
enum class RowKeyKind {
    SumTerms,          // sum of nterms over the row
    SumSquaredTerms,   // sum of nterms^2
    NonzeroCount,      // number of nonzero entries
    DistinctMonomials  // distinct monomials appearing across the row
};

enum class SortDirection { Ascending, Descending };

struct SortStrategy {
    RowKeyKind key = RowKeyKind::SumTerms;
    SortDirection direction = SortDirection::Ascending;
};

// CLI-visible names: "sum", "sumsq", "nonzero", "distinct" / "asc", "desc".
std::optional<RowKeyKind> parse_key_kind(std::string_view name);
std::optional<SortDirection> parse_direction(std::string_view name);
std::string_view key_kind_name(RowKeyKind kind);
std::string_view direction_name(SortDirection direction);

// A row reordering together with its parity: applying `order` to the rows
// of A and multiplying the determinant by `sign` preserves det(A).
// order[k-1] is the original (1-based) index of the row placed at position k.
struct RowPermutation {
    std::vector<int> order;
    int sign = 1;
};

int permutation_sign(const std::vector<int>& order);

std::int64_t row_key(const SymMatrix& matrix, int row, RowKeyKind kind);

// Stable sort of rows by key; ties keep original order, so the result is
// deterministic.
std::pair<SymMatrix, RowPermutation> sort_rows(const SymMatrix& matrix,
                                               SortStrategy strategy);

// Minor expansion after row sorting, with the permutation sign applied:
// identical (as a canonical polynomial) to minor_expansion(matrix). The
// supplied meter sees only the expansion, not the sorting-key work.
Polynomial sorted_minor_expansion(const SymMatrix& matrix, SortStrategy strategy,
                                  CostMeter* meter = nullptr);

struct OptimalOrder {
    RowPermutation perm;
    Integer cost;
};

// Brute-force oracle: the row permutation minimizing the exact modeled cost,
// ties broken by lexicographically smallest permutation. Guarded to n <= 6.
OptimalOrder optimal_row_order(const SymMatrix& matrix);

}  // namespace symdet
