#include "symdet/costmodel.hpp"

#include <cmath>

namespace symdet {

namespace {

Integer binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

void check_params(CostParams params) {
    if (params.n < 1) throw InvalidRange("matrix dimension must be positive");
    if (params.s < 1) throw InvalidRange("variable count must be positive");
}

}  // namespace

Integer minor_cost_model(CostParams params) {
    check_params(params);
    const long n = params.n, s = params.s;
    Integer sum = 0;
    for (long i = 2; i <= n; ++i)
        sum += Integer(i) * binom(n, i) * binom(i + s - 2, s - 1);
    return Integer(s) * sum;
}

Integer minor_cost_model_alt(CostParams params) {
    check_params(params);
    const long n = params.n, s = params.s;
    Integer sum = 0;
    for (long i = 1; i <= n - 1; ++i)
        sum += binom(n - 1, i) * binom(i + s - 1, s - 1);
    return Integer(n) * Integer(s) * sum;
}

Integer gauss_cost_model(CostParams params) {
    check_params(params);
    const long n = params.n, s = params.s;
    Integer sum = 0;
    for (long i = 1; i <= n - 1; ++i) {
        const Integer a = binom(i + s - 1, s - 1);
        const Integer b = binom(2 * i + s - 1, s - 1) * binom(i + s - 2, s - 1);
        sum += Integer((n - i) * (n - i)) * (2 * a * a + b);
    }
    return sum;
}

Integer minor_cost_exact(const SymMatrix& matrix, int size_guard) {
    if (matrix.dim() < 1) throw InvalidRange("determinant requires n >= 1");
    if (matrix.dim() > size_guard)
        throw SizeGuardExceeded("minor_cost_exact enumerates all 2^n minors; n = " +
                                std::to_string(matrix.dim()) + " exceeds guard " +
                                std::to_string(size_guard));
    CostMeter meter;
    minor_expansion(matrix, &meter);
    return meter.modeled_int_ops;
}

namespace {

// ln of an exact positive rational, via mantissa/exponent decompositions of
// numerator and denominator (safe far beyond double range).
double log_of_ratio(const Integer& num, const Integer& den) {
    long en = 0, ed = 0;
    const double mn = mpz_get_d_2exp(&en, num.get_mpz_t());
    const double md = mpz_get_d_2exp(&ed, den.get_mpz_t());
    return std::log(mn) - std::log(md) +
           (static_cast<double>(en) - static_cast<double>(ed)) * std::log(2.0);
}

}  // namespace

std::vector<RatioPoint> cost_ratio_grid(int n_max, int s_max) {
    if (n_max < 2) throw InvalidRange("n_max must be at least 2");
    if (s_max < 1) throw InvalidRange("s_max must be at least 1");
    std::vector<RatioPoint> grid;
    grid.reserve(static_cast<std::size_t>(n_max - 1) * static_cast<std::size_t>(s_max));
    for (int n = 2; n <= n_max; ++n) {
        for (int s = 1; s <= s_max; ++s) {
            const Integer cm = minor_cost_model({n, s});
            const Integer cg = gauss_cost_model({n, s});
            mpq_class ratio(cm, cg);  // exact
            ratio.canonicalize();
            grid.push_back({n, s, log_of_ratio(ratio.get_num(), ratio.get_den())});
        }
    }
    return grid;
}

std::optional<int> crossover_n(int s, int n_cap) {
    if (s < 1) throw InvalidRange("variable count must be positive");
    for (int n = 1; n <= n_cap; ++n)
        if (minor_cost_model({n, s}) > gauss_cost_model({n, s})) return n;
    return std::nullopt;
}

}  // namespace symdet
