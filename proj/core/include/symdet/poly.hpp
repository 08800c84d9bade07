#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "symdet/errors.hpp"

namespace symdet {

// Coefficients are arbitrary-precision: fraction-free elimination produces
// entries that are minors of the input and overflow 64 bits quickly.
using Integer = mpz_class;

// Power product of variables x1..xs. Exponents are stored with trailing
// zeros stripped, so equal monomials have equal exponent vectors.
class Monomial {
public:
    Monomial() = default;  // the constant monomial 1
    explicit Monomial(std::vector<std::uint32_t> exponents);

    // The monomial x_index (1-based).
    static Monomial variable(int index);

    int total_degree() const noexcept { return degree_; }
    bool is_constant() const noexcept { return exps_.empty(); }

    // Exponent of x_index; 0 beyond the stored length.
    std::uint32_t exponent(int index) const;

    // Largest variable index with nonzero exponent; 0 for the constant.
    int max_var_index() const noexcept { return static_cast<int>(exps_.size()); }

    const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }

    Monomial operator*(const Monomial& other) const;
    bool divides(const Monomial& other) const noexcept;
    // Quotient this / other; requires other.divides(*this).
    Monomial divided_by(const Monomial& other) const;

    bool operator==(const Monomial& other) const = default;

    // Graded lexicographic order: total degree first, then exponent-wise
    // lexicographic with x1 most significant.
    std::strong_ordering operator<=>(const Monomial& other) const noexcept;

private:
    std::vector<std::uint32_t> exps_;
    int degree_ = 0;
};

struct Term {
    Monomial mono;
    Integer coeff;

    bool operator==(const Term& other) const {
        return mono == other.mono && coeff == other.coeff;
    }
};

// Sparse multivariate polynomial over Integer. Terms are kept in graded-lex
// descending order with no zero coefficients; the zero polynomial has no
// terms. Values are immutable in practice: all operations return new
// polynomials.
class Polynomial {
public:
    Polynomial() = default;  // zero

    static Polynomial constant(Integer value);
    static Polynomial variable(int index);
    static Polynomial term(Integer coeff, Monomial mono);
    // Canonicalizes arbitrary (monomial, coefficient) pairs: sorts,
    // consolidates like monomials, drops zeros.
    static Polynomial from_terms(std::vector<Term> terms);

    std::size_t nterms() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    // Terms in canonical (graded-lex descending) order.
    const std::vector<Term>& terms() const noexcept { return terms_; }
    const Term& leading_term() const;

    // Max total degree over terms; -1 for the zero polynomial.
    int total_degree() const noexcept;
    int max_var_index() const noexcept;

    // True iff every term has total degree exactly `degree`. The zero
    // polynomial is homogeneous of every degree.
    bool is_homogeneous(int degree) const noexcept;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& other) const;

    bool operator==(const Polynomial& other) const = default;

    // Canonical text form; see parse_polynomial for the grammar.
    std::string str() const;

private:
    std::vector<Term> terms_;
};

// Exact quotient p / q: requires q != 0 and q | p. Computed by iterated
// leading-term elimination under the graded-lex order; throws
// DivisionNotExact (carrying both operands) otherwise.
Polynomial div_exact(const Polynomial& p, const Polynomial& q);

// Number of degree-`degree` monomials in `nvars` variables,
// binomial(degree + nvars - 1, nvars - 1): the maximum term count of a
// homogeneous polynomial.
Integer homogeneous_term_bound(int degree, int nvars);

// Parses the polynomial grammar
//   poly    := ['-'] term (('+'|'-') term)*
//   term    := integer | integer '*' monomial | monomial
//   monomial:= varpow ('*' varpow)*
//   varpow  := 'x' index ['^' positive-integer]
// with whitespace insignificant between tokens. Variable indices are
// 1-based and must not exceed nvars. Throws SyntaxError or
// VariableOutOfRange.
Polynomial parse_polynomial(std::string_view text, int nvars);

// Canonical text: terms in graded-lex descending order, " + "/" - "
// separators, unit coefficients and unit exponents elided, zero printed "0".
// parse_polynomial(format_polynomial(p), s) == p.
std::string format_polynomial(const Polynomial& p);

inline std::size_t nterms(const Polynomial& p) noexcept { return p.nterms(); }

}  // namespace symdet
