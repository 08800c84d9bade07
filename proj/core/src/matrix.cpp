#include "symdet/matrix.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "symdet/rng.hpp"

namespace symdet {

SymMatrix::SymMatrix(int n, int s) : n_(n), s_(s) {
    if (n < 0) throw InvalidRange("matrix dimension must be non-negative");
    if (s < 1) throw InvalidRange("variable count must be positive");
    entries_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
}

SymMatrix::SymMatrix(int n, int s, std::vector<Polynomial> entries)
    : n_(n), s_(s), entries_(std::move(entries)) {
    if (n < 0) throw InvalidRange("matrix dimension must be non-negative");
    if (s < 1) throw InvalidRange("variable count must be positive");
    if (entries_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw DimensionMismatch("entry count does not match dimension");
    for (const Polynomial& p : entries_)
        if (p.max_var_index() > s_)
            throw VariableOutOfRange(p.max_var_index(), s_);
}

const Polynomial& SymMatrix::at(int row, int col) const {
    if (row < 1 || row > n_ || col < 1 || col > n_)
        throw IndexOutOfRange("matrix index (" + std::to_string(row) + ", " +
                              std::to_string(col) + ") out of range for n = " +
                              std::to_string(n_));
    return entries_[static_cast<std::size_t>(row - 1) * n_ + (col - 1)];
}

SymMatrix SymMatrix::submatrix(const std::vector<int>& rows,
                               const std::vector<int>& cols) const {
    if (rows.size() != cols.size())
        throw DimensionMismatch("row and column selections differ in size");
    auto check = [this](const std::vector<int>& sel, const char* what) {
        for (std::size_t i = 0; i < sel.size(); ++i) {
            if (sel[i] < 1 || sel[i] > n_)
                throw IndexOutOfRange(std::string(what) + " index " +
                                      std::to_string(sel[i]) + " out of range");
            if (i > 0 && sel[i - 1] >= sel[i])
                throw InvalidRange(std::string(what) + " indices must be strictly ascending");
        }
    };
    check(rows, "row");
    check(cols, "column");
    const int k = static_cast<int>(rows.size());
    std::vector<Polynomial> sub;
    sub.reserve(static_cast<std::size_t>(k) * k);
    for (int i : rows)
        for (int j : cols) sub.push_back(at(i, j));
    return SymMatrix(k, s_, std::move(sub));
}

SymMatrix SymMatrix::with_row_order(const std::vector<int>& order) const {
    if (static_cast<int>(order.size()) != n_)
        throw DimensionMismatch("row order size does not match dimension");
    std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
    std::vector<Polynomial> out;
    out.reserve(entries_.size());
    for (int r : order) {
        if (r < 1 || r > n_ || seen[static_cast<std::size_t>(r)])
            throw IndexOutOfRange("row order is not a permutation of 1..n");
        seen[static_cast<std::size_t>(r)] = true;
        for (int j = 1; j <= n_; ++j) out.push_back(at(r, j));
    }
    return SymMatrix(n_, s_, std::move(out));
}

SymMatrix gen_one_homogeneous(int n, int s, long coeff_lo, long coeff_hi,
                              std::uint64_t seed) {
    if (n < 1) throw InvalidRange("matrix dimension must be positive");
    if (s < 1) throw InvalidRange("variable count must be positive");
    if (coeff_lo > coeff_hi || (coeff_lo == 0 && coeff_hi == 0))
        throw InvalidRange("coefficient range contains no nonzero integer");
    Rng rng(seed);
    std::vector<Polynomial> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n * n; ++i) {
        // x1..xs in ascending index is already graded-lex descending.
        std::vector<Term> terms;
        terms.reserve(static_cast<std::size_t>(s));
        for (int k = 1; k <= s; ++k)
            terms.push_back({Monomial::variable(k),
                             Integer(rng.nonzero_integer(coeff_lo, coeff_hi))});
        entries.push_back(Polynomial::from_terms(std::move(terms)));
    }
    return SymMatrix(n, s, std::move(entries));
}

SymMatrix gen_sparse_linear(const ExperimentConfig& config) {
    const int n = config.n;
    const int s = config.s;
    if (n < 1) throw InvalidRange("matrix dimension must be positive");
    if (s < 1) throw InvalidRange("variable count must be positive");
    if (config.zero_prob < 0.0 || config.zero_prob > 1.0)
        throw InvalidRange("zero probability must lie in [0, 1]");
    if (config.max_terms < 1 || config.max_terms > s + 1)
        throw InvalidRange("max_terms must lie in [1, s + 1]");
    if (config.coeff_lo > config.coeff_hi ||
        (config.coeff_lo == 0 && config.coeff_hi == 0))
        throw InvalidRange("coefficient range contains no nonzero integer");

    Rng rng(config.seed);
    std::vector<Polynomial> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    // Candidate monomials: slot 0 is the constant 1, slot k is x_k.
    for (int i = 0; i < n * n; ++i) {
        if (rng.unit() < config.zero_prob) {
            entries.emplace_back();
            continue;
        }
        const int count = 1 + static_cast<int>(rng.below(
                                  static_cast<std::uint64_t>(config.max_terms)));
        // Partial Fisher-Yates over the s+1 candidate slots.
        std::vector<int> slots(static_cast<std::size_t>(s) + 1);
        for (int k = 0; k <= s; ++k) slots[static_cast<std::size_t>(k)] = k;
        std::vector<Term> terms;
        terms.reserve(static_cast<std::size_t>(count));
        for (int t = 0; t < count; ++t) {
            const auto pick = t + static_cast<int>(rng.below(
                                      static_cast<std::uint64_t>(s + 1 - t)));
            std::swap(slots[static_cast<std::size_t>(t)],
                      slots[static_cast<std::size_t>(pick)]);
            const int slot = slots[static_cast<std::size_t>(t)];
            Monomial mono = slot == 0 ? Monomial() : Monomial::variable(slot);
            terms.push_back({std::move(mono),
                             Integer(rng.nonzero_integer(config.coeff_lo,
                                                         config.coeff_hi))});
        }
        entries.push_back(Polynomial::from_terms(std::move(terms)));
    }
    return SymMatrix(n, s, std::move(entries));
}

SymMatrix read_matrix(std::istream& in) {
    std::string line;
    auto next_content_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            std::size_t b = line.find_first_not_of(" \t\r");
            if (b == std::string::npos) continue;
            if (line[b] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_content_line(header))
        throw SyntaxError("missing matrix header line", 0);
    std::istringstream hs(header);
    int n = 0, s = 0;
    if (!(hs >> n >> s) || n < 1 || s < 1)
        throw SyntaxError("matrix header must be 'n s' with n, s >= 1", 0);
    std::string trailing;
    if (hs >> trailing)
        throw SyntaxError("unexpected text after matrix header", 0);

    std::vector<Polynomial> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r) {
        std::string row;
        if (!next_content_line(row))
            throw SyntaxError("expected " + std::to_string(n) + " matrix rows", 0);
        std::vector<std::string> cells;
        std::size_t start = 0;
        for (;;) {
            const std::size_t semi = row.find(';', start);
            cells.push_back(row.substr(start, semi - start));
            if (semi == std::string::npos) break;
            start = semi + 1;
        }
        if (static_cast<int>(cells.size()) != n)
            throw SyntaxError("row " + std::to_string(r + 1) + " has " +
                                  std::to_string(cells.size()) + " entries, expected " +
                                  std::to_string(n),
                              0);
        for (const std::string& cell : cells)
            entries.push_back(parse_polynomial(cell, s));
    }
    return SymMatrix(n, s, std::move(entries));
}

SymMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open matrix file: " + path);
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const SymMatrix& m) {
    out << m.dim() << ' ' << m.nvars() << '\n';
    for (int i = 1; i <= m.dim(); ++i) {
        for (int j = 1; j <= m.dim(); ++j) {
            if (j > 1) out << "; ";
            out << m.at(i, j).str();
        }
        out << '\n';
    }
}

}  // namespace symdet
