#pragma once

// Shared test utilities: independent oracles (Pascal-triangle binomials and
// direct cost summations, deliberately not using the library's formulas) and
// random-input generators for property tests.

#include <cstdint>
#include <vector>

#include "symdet/matrix.hpp"
#include "symdet/poly.hpp"
#include "symdet/rng.hpp"

namespace testutil {

inline unsigned long long pascal_binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::vector<std::vector<unsigned long long>> row(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        row[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j)
            row[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                row[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    }
    return row[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

// Direct evaluation of the minor-expansion cost summation
// s * sum_{i=2..n} i*C(n,i)*C(i+s-2, s-1).
inline unsigned long long expected_minor_cost(int n, int s) {
    unsigned long long sum = 0;
    for (int i = 2; i <= n; ++i)
        sum += static_cast<unsigned long long>(i) * pascal_binom(n, i) *
               pascal_binom(i + s - 2, s - 1);
    return static_cast<unsigned long long>(s) * sum;
}

// Direct evaluation of the elimination cost summation
// sum_{i=1..n-1} (n-i)^2 * (2*C(i+s-1,s-1)^2 + C(2i+s-1,s-1)*C(i+s-2,s-1)).
inline unsigned long long expected_gauss_cost(int n, int s) {
    unsigned long long sum = 0;
    for (int i = 1; i <= n - 1; ++i) {
        const unsigned long long a = pascal_binom(i + s - 1, s - 1);
        const unsigned long long b =
            pascal_binom(2 * i + s - 1, s - 1) * pascal_binom(i + s - 2, s - 1);
        sum += static_cast<unsigned long long>(n - i) *
               static_cast<unsigned long long>(n - i) * (2 * a * a + b);
    }
    return sum;
}

// Counts degree-d monomials in v variables by recursive enumeration.
inline unsigned long long count_monomials(int degree, int vars) {
    if (vars == 1) return 1;
    unsigned long long total = 0;
    for (int e = 0; e <= degree; ++e) total += count_monomials(degree - e, vars - 1);
    return total;
}

inline symdet::Polynomial random_polynomial(symdet::Rng& rng, int s, int max_degree,
                                            int max_terms, long coeff_abs = 9) {
    const int count = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms) + 1));
    std::vector<symdet::Term> terms;
    for (int t = 0; t < count; ++t) {
        std::vector<std::uint32_t> exps(static_cast<std::size_t>(s), 0);
        int budget = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_degree) + 1));
        while (budget > 0) {
            const auto var = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(s)));
            ++exps[var];
            --budget;
        }
        terms.push_back({symdet::Monomial(std::move(exps)),
                         symdet::Integer(rng.nonzero_integer(-coeff_abs, coeff_abs))});
    }
    return symdet::Polynomial::from_terms(std::move(terms));
}

inline symdet::Polynomial random_nonzero_polynomial(symdet::Rng& rng, int s,
                                                    int max_degree, int max_terms,
                                                    long coeff_abs = 9) {
    for (;;) {
        symdet::Polynomial p = random_polynomial(rng, s, max_degree, max_terms, coeff_abs);
        if (!p.is_zero()) return p;
    }
}

inline symdet::Polynomial random_homogeneous(symdet::Rng& rng, int s, int degree,
                                             int max_terms, long coeff_abs = 9) {
    const int count = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms)));
    std::vector<symdet::Term> terms;
    for (int t = 0; t < count; ++t) {
        std::vector<std::uint32_t> exps(static_cast<std::size_t>(s), 0);
        for (int d = 0; d < degree; ++d)
            ++exps[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(s)))];
        terms.push_back({symdet::Monomial(std::move(exps)),
                         symdet::Integer(rng.nonzero_integer(-coeff_abs, coeff_abs))});
    }
    return symdet::Polynomial::from_terms(std::move(terms));
}

// Random matrix with arbitrary small entries (may include zero entries).
inline symdet::SymMatrix random_matrix(symdet::Rng& rng, int n, int s, int max_degree = 2,
                                       int max_terms = 3) {
    std::vector<symdet::Polynomial> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n * n; ++i)
        entries.push_back(random_polynomial(rng, s, max_degree, max_terms));
    return symdet::SymMatrix(n, s, std::move(entries));
}

}  // namespace testutil
