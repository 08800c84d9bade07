#include "symdet/poly.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace symdet {

namespace {

void strip_trailing_zeros(std::vector<std::uint32_t>& exps) {
    while (!exps.empty() && exps.back() == 0) exps.pop_back();
}

}  // namespace

Monomial::Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) {
    strip_trailing_zeros(exps_);
    for (std::uint32_t e : exps_) degree_ += static_cast<int>(e);
}

Monomial Monomial::variable(int index) {
    if (index < 1) throw IndexOutOfRange("variable index must be >= 1");
    std::vector<std::uint32_t> exps(static_cast<std::size_t>(index), 0);
    exps.back() = 1;
    return Monomial(std::move(exps));
}

std::uint32_t Monomial::exponent(int index) const {
    if (index < 1) throw IndexOutOfRange("variable index must be >= 1");
    const auto i = static_cast<std::size_t>(index - 1);
    return i < exps_.size() ? exps_[i] : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
    const auto& a = exps_;
    const auto& b = other.exps_;
    std::vector<std::uint32_t> out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return Monomial(std::move(out));
}

bool Monomial::divides(const Monomial& other) const noexcept {
    if (exps_.size() > other.exps_.size()) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& other) const {
    if (!other.divides(*this))
        throw Error("monomial quotient does not exist");
    std::vector<std::uint32_t> out = exps_;
    for (std::size_t i = 0; i < other.exps_.size(); ++i) out[i] -= other.exps_[i];
    return Monomial(std::move(out));
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const noexcept {
    if (auto c = degree_ <=> other.degree_; c != 0) return c;
    const std::size_t n = std::max(exps_.size(), other.exps_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t a = i < exps_.size() ? exps_[i] : 0;
        const std::uint32_t b = i < other.exps_.size() ? other.exps_[i] : 0;
        if (auto c = a <=> b; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

Polynomial Polynomial::constant(Integer value) {
    return term(std::move(value), Monomial());
}

Polynomial Polynomial::variable(int index) {
    return term(1, Monomial::variable(index));
}

Polynomial Polynomial::term(Integer coeff, Monomial mono) {
    Polynomial p;
    if (coeff != 0) p.terms_.push_back({std::move(mono), std::move(coeff)});
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    bool canonical = true;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].coeff == 0 ||
            (i > 0 && (terms[i - 1].mono <=> terms[i].mono) <= 0)) {
            canonical = false;
            break;
        }
    }
    Polynomial p;
    if (canonical) {
        p.terms_ = std::move(terms);
        return p;
    }
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.mono > b.mono; });
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
            p.terms_.back().coeff += t.coeff;
        else
            p.terms_.push_back(std::move(t));
    }
    std::erase_if(p.terms_, [](const Term& t) { return t.coeff == 0; });
    return p;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw Error("zero polynomial has no leading term");
    return terms_.front();
}

int Polynomial::total_degree() const noexcept {
    return terms_.empty() ? -1 : terms_.front().mono.total_degree();
}

int Polynomial::max_var_index() const noexcept {
    int m = 0;
    for (const Term& t : terms_) m = std::max(m, t.mono.max_var_index());
    return m;
}

bool Polynomial::is_homogeneous(int degree) const noexcept {
    for (const Term& t : terms_)
        if (t.mono.total_degree() != degree) return false;
    return true;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial out;
    out.terms_.reserve(terms_.size() + other.terms_.size());
    auto i = terms_.begin();
    auto j = other.terms_.begin();
    while (i != terms_.end() && j != other.terms_.end()) {
        const auto c = i->mono <=> j->mono;
        if (c > 0) {
            out.terms_.push_back(*i++);
        } else if (c < 0) {
            out.terms_.push_back(*j++);
        } else {
            Integer sum = i->coeff + j->coeff;
            if (sum != 0) out.terms_.push_back({i->mono, std::move(sum)});
            ++i;
            ++j;
        }
    }
    out.terms_.insert(out.terms_.end(), i, terms_.end());
    out.terms_.insert(out.terms_.end(), j, other.terms_.end());
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) out.terms_.push_back({t.mono, -t.coeff});
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial out;
    out.terms_.reserve(terms_.size() + other.terms_.size());
    auto i = terms_.begin();
    auto j = other.terms_.begin();
    while (i != terms_.end() && j != other.terms_.end()) {
        const auto c = i->mono <=> j->mono;
        if (c > 0) {
            out.terms_.push_back(*i++);
        } else if (c < 0) {
            out.terms_.push_back({j->mono, -j->coeff});
            ++j;
        } else {
            Integer diff = i->coeff - j->coeff;
            if (diff != 0) out.terms_.push_back({i->mono, std::move(diff)});
            ++i;
            ++j;
        }
    }
    out.terms_.insert(out.terms_.end(), i, terms_.end());
    for (; j != other.terms_.end(); ++j) out.terms_.push_back({j->mono, -j->coeff});
    return out;
}

namespace {

// t * p with the order preserved: the graded-lex order is invariant under
// multiplication by a fixed monomial.
Polynomial scaled_shift(const Term& t, const Polynomial& p) {
    std::vector<Term> out;
    out.reserve(p.nterms());
    for (const Term& u : p.terms())
        out.push_back({t.mono * u.mono, t.coeff * u.coeff});
    return Polynomial::from_terms(std::move(out));
}

}  // namespace

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (is_zero() || other.is_zero()) return Polynomial();
    const Polynomial& a = nterms() <= other.nterms() ? *this : other;
    const Polynomial& b = nterms() <= other.nterms() ? other : *this;
    // Few-term multiplier: accumulate shifted copies by merging.
    if (a.nterms() <= 8) {
        Polynomial acc = scaled_shift(a.terms_.front(), b);
        for (std::size_t k = 1; k < a.terms_.size(); ++k)
            acc = acc + scaled_shift(a.terms_[k], b);
        return acc;
    }
    // General case: all pairwise products, then one sort-and-consolidate.
    std::vector<Term> prods;
    prods.reserve(a.nterms() * b.nterms());
    for (const Term& ta : a.terms_)
        for (const Term& tb : b.terms_)
            prods.push_back({ta.mono * tb.mono, ta.coeff * tb.coeff});
    return from_terms(std::move(prods));
}

Polynomial div_exact(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero())
        throw DivisionNotExact("division by zero polynomial", p.str(), q.str());
    if (p.is_zero()) return Polynomial();
    const Term& qlead = q.leading_term();
    std::vector<Term> quotient;
    Polynomial rem = p;
    while (!rem.is_zero()) {
        const Term& rlead = rem.leading_term();
        if (!qlead.mono.divides(rlead.mono))
            throw DivisionNotExact("leading monomial not divisible", p.str(), q.str());
        if (!mpz_divisible_p(rlead.coeff.get_mpz_t(), qlead.coeff.get_mpz_t()))
            throw DivisionNotExact("leading coefficient not divisible", p.str(), q.str());
        Integer c;
        mpz_divexact(c.get_mpz_t(), rlead.coeff.get_mpz_t(), qlead.coeff.get_mpz_t());
        Term t{rlead.mono.divided_by(qlead.mono), std::move(c)};
        rem = rem - scaled_shift(t, q);
        quotient.push_back(std::move(t));
    }
    // Successive leading terms strictly decrease, so `quotient` is already
    // canonical; from_terms takes its fast path.
    return Polynomial::from_terms(std::move(quotient));
}

Integer homogeneous_term_bound(int degree, int nvars) {
    if (degree < 0) throw InvalidRange("degree must be non-negative");
    if (nvars < 1) throw InvalidRange("variable count must be positive");
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(),
                 static_cast<unsigned long>(degree) + static_cast<unsigned long>(nvars) - 1,
                 static_cast<unsigned long>(nvars) - 1);
    return out;
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, int nvars) : text_(text), nvars_(nvars) {}

    Polynomial run() {
        std::vector<Term> acc;
        skip_ws();
        bool negate = false;
        if (!at_end() && peek() == '-') {
            negate = true;
            ++pos_;
        }
        parse_term(acc, negate);
        for (;;) {
            skip_ws();
            if (at_end()) break;
            const char c = peek();
            if (c != '+' && c != '-')
                throw SyntaxError("expected '+' or '-'", pos_);
            ++pos_;
            parse_term(acc, c == '-');
        }
        return Polynomial::from_terms(std::move(acc));
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    void parse_term(std::vector<Term>& acc, bool negate) {
        skip_ws();
        if (at_end()) throw SyntaxError("expected term", pos_);
        const char c = peek();
        Integer coeff = 1;
        Monomial mono;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff = parse_integer();
            const std::size_t save = pos_;
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                mono = parse_monomial();
            } else {
                pos_ = save;
            }
        } else if (c == 'x') {
            mono = parse_monomial();
        } else {
            throw SyntaxError("expected integer or variable", pos_);
        }
        if (negate) coeff = -coeff;
        acc.push_back({std::move(mono), std::move(coeff)});
    }

    Monomial parse_monomial() {
        std::vector<std::uint32_t> exps;
        parse_varpow(exps);
        for (;;) {
            const std::size_t save = pos_;
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                parse_varpow(exps);
            } else {
                pos_ = save;
                break;
            }
        }
        return Monomial(std::move(exps));
    }

    void parse_varpow(std::vector<std::uint32_t>& exps) {
        skip_ws();
        if (at_end() || peek() != 'x')
            throw SyntaxError("expected variable", pos_);
        ++pos_;
        const std::size_t ipos = pos_;
        const std::uint64_t index = parse_small_uint("variable index");
        if (index == 0) throw SyntaxError("variable index must be positive", ipos);
        if (index > static_cast<std::uint64_t>(nvars_))
            throw VariableOutOfRange(static_cast<int>(index), nvars_);
        std::uint64_t exp = 1;
        const std::size_t save = pos_;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            const std::size_t epos = pos_;
            exp = parse_small_uint("exponent");
            if (exp == 0) throw SyntaxError("exponent must be positive", epos);
        } else {
            pos_ = save;
        }
        if (exps.size() < index) exps.resize(index, 0);
        exps[index - 1] += static_cast<std::uint32_t>(exp);
    }

    // Unsigned decimal run, bounded; used for variable indices and exponents.
    std::uint64_t parse_small_uint(const char* what) {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw SyntaxError(std::string("expected ") + what, pos_);
        std::uint64_t value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (value > (1ull << 31))
                throw SyntaxError(std::string(what) + " too large", pos_);
            ++pos_;
        }
        return value;
    }

    // Arbitrary-precision unsigned decimal coefficient.
    Integer parse_integer() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return Integer(std::string(text_.substr(start, pos_ - start)), 10);
    }

    std::string_view text_;
    int nvars_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int nvars) {
    if (nvars < 1) throw InvalidRange("variable count must be positive");
    return PolyParser(text, nvars).run();
}

std::string format_polynomial(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : p.terms()) {
        const bool negative = t.coeff < 0;
        if (first) {
            if (negative) out += '-';
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        const Integer mag = abs(t.coeff);
        if (t.mono.is_constant()) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) {
            out += mag.get_str();
            out += '*';
        }
        bool first_var = true;
        const auto& exps = t.mono.exponents();
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (!first_var) out += '*';
            first_var = false;
            out += 'x';
            out += std::to_string(i + 1);
            if (exps[i] != 1) {
                out += '^';
                out += std::to_string(exps[i]);
            }
        }
    }
    return out;
}

std::string Polynomial::str() const { return format_polynomial(*this); }

}  // namespace symdet
