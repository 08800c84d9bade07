#include "symdet/rowsort.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "symdet/costmodel.hpp"

namespace symdet {

std::optional<RowKeyKind> parse_key_kind(std::string_view name) {
    if (name == "sum") return RowKeyKind::SumTerms;
    if (name == "sumsq") return RowKeyKind::SumSquaredTerms;
    if (name == "nonzero") return RowKeyKind::NonzeroCount;
    if (name == "distinct") return RowKeyKind::DistinctMonomials;
    return std::nullopt;
}

std::optional<SortDirection> parse_direction(std::string_view name) {
    if (name == "asc") return SortDirection::Ascending;
    if (name == "desc") return SortDirection::Descending;
    return std::nullopt;
}

std::string_view key_kind_name(RowKeyKind kind) {
    switch (kind) {
        case RowKeyKind::SumTerms: return "sum";
        case RowKeyKind::SumSquaredTerms: return "sumsq";
        case RowKeyKind::NonzeroCount: return "nonzero";
        case RowKeyKind::DistinctMonomials: return "distinct";
    }
    return "?";
}

std::string_view direction_name(SortDirection direction) {
    return direction == SortDirection::Ascending ? "asc" : "desc";
}

int permutation_sign(const std::vector<int>& order) {
    // Parity via cycle decomposition.
    const std::size_t n = order.size();
    std::vector<bool> seen(n, false);
    int transpositions = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::size_t j = i;
        int len = 0;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<std::size_t>(order[j] - 1);
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0 ? 1 : -1;
}

std::int64_t row_key(const SymMatrix& matrix, int row, RowKeyKind kind) {
    if (row < 1 || row > matrix.dim())
        throw IndexOutOfRange("row index out of range");
    std::int64_t key = 0;
    switch (kind) {
        case RowKeyKind::SumTerms:
            for (int j = 1; j <= matrix.dim(); ++j)
                key += static_cast<std::int64_t>(matrix.at(row, j).nterms());
            break;
        case RowKeyKind::SumSquaredTerms:
            for (int j = 1; j <= matrix.dim(); ++j) {
                const auto t = static_cast<std::int64_t>(matrix.at(row, j).nterms());
                key += t * t;
            }
            break;
        case RowKeyKind::NonzeroCount:
            for (int j = 1; j <= matrix.dim(); ++j)
                if (!matrix.at(row, j).is_zero()) ++key;
            break;
        case RowKeyKind::DistinctMonomials: {
            std::set<Monomial> monos;
            for (int j = 1; j <= matrix.dim(); ++j)
                for (const Term& t : matrix.at(row, j).terms()) monos.insert(t.mono);
            key = static_cast<std::int64_t>(monos.size());
            break;
        }
    }
    return key;
}

std::pair<SymMatrix, RowPermutation> sort_rows(const SymMatrix& matrix,
                                               SortStrategy strategy) {
    const int n = matrix.dim();
    std::vector<std::int64_t> keys(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        keys[static_cast<std::size_t>(i - 1)] = row_key(matrix, i, strategy.key);

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        const auto ka = keys[static_cast<std::size_t>(a - 1)];
        const auto kb = keys[static_cast<std::size_t>(b - 1)];
        return strategy.direction == SortDirection::Ascending ? ka < kb : ka > kb;
    });

    RowPermutation perm{order, permutation_sign(order)};
    return {matrix.with_row_order(order), std::move(perm)};
}

Polynomial sorted_minor_expansion(const SymMatrix& matrix, SortStrategy strategy,
                                  CostMeter* meter) {
    auto [sorted, perm] = sort_rows(matrix, strategy);
    Polynomial det = minor_expansion(sorted, meter);
    return perm.sign < 0 ? -det : det;
}

OptimalOrder optimal_row_order(const SymMatrix& matrix) {
    const int n = matrix.dim();
    if (n < 1) throw InvalidRange("determinant requires n >= 1");
    if (n > 6)
        throw SizeGuardExceeded("optimal_row_order enumerates n! permutations; n = " +
                                std::to_string(n) + " exceeds guard 6");

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);

    OptimalOrder best;
    bool have_best = false;
    // next_permutation walks lexicographically from the identity, so with a
    // strict improvement test the first minimum seen is the lexicographically
    // smallest one.
    do {
        Integer cost = minor_cost_exact(matrix.with_row_order(order));
        if (!have_best || cost < best.cost) {
            best.perm.order = order;
            best.cost = std::move(cost);
            have_best = true;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    best.perm.sign = permutation_sign(best.perm.order);
    return best;
}

}  // namespace symdet
