#include "symdet/det.hpp"

#include <algorithm>
#include <bit>
#include <utility>

namespace symdet {

MinorTable::MinorTable(const SymMatrix& matrix, CostMeter* meter)
    : matrix_(matrix), meter_(meter) {
    values_.emplace_back(0, Polynomial::constant(1));  // the empty minor
}

const Polynomial& MinorTable::value(std::uint64_t mask) const {
    const auto it = std::lower_bound(
        values_.begin(), values_.end(), mask,
        [](const auto& entry, std::uint64_t m) { return entry.first < m; });
    if (it == values_.end() || it->first != mask)
        throw IndexOutOfRange("no minor stored for this column subset");
    return it->second;
}

void MinorTable::advance() {
    const int n = matrix_.dim();
    if (n > 62) throw SizeGuardExceeded("minor table limited to n <= 62");
    if (level_ >= n) throw IndexOutOfRange("minor table is already at level n");
    const int i = level_ + 1;  // row used and subset size produced

    std::vector<std::pair<std::uint64_t, Polynomial>> next;
    std::size_t count = 1;  // binomial(n, i)
    for (int k = 0; k < i; ++k) count = count * (n - k) / (k + 1);
    next.reserve(count);

    // Gosper's hack enumerates size-i subsets in ascending mask order, so
    // both levels stay sorted and lookups are binary searches.
    const std::uint64_t limit = 1ull << n;
    std::uint64_t mask = (1ull << i) - 1;
    while (mask < limit) {
        Polynomial acc;
        int k = 0;  // 1-based position of column j within the sorted subset
        for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
            ++k;
            const int col = std::countr_zero(rest) + 1;
            const Polynomial& sub = value(mask & ~(1ull << (col - 1)));
            const Polynomial& entry = matrix_.at(i, col);
            if (meter_) meter_->record_mul(entry, sub);
            Polynomial prod = entry * sub;
            const bool negate = (i + k) % 2 != 0;
            acc = negate ? acc - prod : acc + prod;
        }
        next.emplace_back(mask, std::move(acc));

        const std::uint64_t c = mask & (~mask + 1);
        const std::uint64_t r = mask + c;
        if (r >= limit) break;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    values_ = std::move(next);
    level_ = i;
}

Polynomial minor_expansion(const SymMatrix& matrix, CostMeter* meter) {
    const int n = matrix.dim();
    if (n < 1) throw InvalidRange("determinant requires n >= 1");
    MinorTable table(matrix, meter);
    for (int i = 0; i < n; ++i) table.advance();
    return table.current().front().second;
}

namespace {

Polynomial laplace_rec(const SymMatrix& matrix, const std::vector<int>& rows,
                       const std::vector<int>& cols) {
    if (rows.size() == 1) return matrix.at(rows[0], cols[0]);
    Polynomial acc;
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const Polynomial& entry = matrix.at(rows[0], cols[j]);
        if (entry.is_zero()) continue;
        std::vector<int> sub_cols;
        sub_cols.reserve(cols.size() - 1);
        for (std::size_t k = 0; k < cols.size(); ++k)
            if (k != j) sub_cols.push_back(cols[k]);
        Polynomial prod = entry * laplace_rec(matrix, sub_rows, sub_cols);
        acc = (j % 2 == 0) ? acc + prod : acc - prod;
    }
    return acc;
}

}  // namespace

Polynomial naive_laplace(const SymMatrix& matrix) {
    const int n = matrix.dim();
    if (n < 1) throw InvalidRange("determinant requires n >= 1");
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
    return laplace_rec(matrix, all, all);
}

Polynomial bareiss(const SymMatrix& matrix, CostMeter* meter) {
    const int n = matrix.dim();
    if (n < 1) throw InvalidRange("determinant requires n >= 1");

    std::vector<std::vector<Polynomial>> a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        a[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
            a[static_cast<std::size_t>(i)].push_back(matrix.at(i + 1, j + 1));
    }

    Polynomial prev_pivot = Polynomial::constant(1);
    bool negate = false;

    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k].is_zero()) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r) {
                if (!a[r][k].is_zero()) {
                    swap_row = r;
                    break;
                }
            }
            if (swap_row < 0) return Polynomial();  // column is zero below: singular
            std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(swap_row)]);
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                if (meter) {
                    meter->record_mul(a[k][k], a[i][j]);
                    meter->record_mul(a[i][k], a[k][j]);
                }
                Polynomial num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                if (meter) meter->record_div(num, prev_pivot);
                a[i][j] = div_exact(num, prev_pivot);
            }
            a[i][k] = Polynomial();  // eliminated; known zero
        }
        prev_pivot = a[k][k];
    }
    Polynomial det = std::move(a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)]);
    return negate ? -det : det;
}

std::optional<DetAlgorithm> parse_algorithm(std::string_view name) {
    if (name == "naive") return DetAlgorithm::Naive;
    if (name == "minor") return DetAlgorithm::MinorExpansion;
    if (name == "bareiss") return DetAlgorithm::Bareiss;
    return std::nullopt;
}

std::string_view algorithm_name(DetAlgorithm algorithm) {
    switch (algorithm) {
        case DetAlgorithm::Naive: return "naive";
        case DetAlgorithm::MinorExpansion: return "minor";
        case DetAlgorithm::Bareiss: return "bareiss";
    }
    return "?";
}

Polynomial det_dispatch(const SymMatrix& matrix, DetAlgorithm algorithm,
                        CostMeter* meter) {
    switch (algorithm) {
        case DetAlgorithm::Naive: return naive_laplace(matrix);
        case DetAlgorithm::MinorExpansion: return minor_expansion(matrix, meter);
        case DetAlgorithm::Bareiss: return bareiss(matrix, meter);
    }
    throw Error("unknown determinant algorithm");
}

}  // namespace symdet
