#ifndef MTRACE_GROTHENDIECK_HPP
#define MTRACE_GROTHENDIECK_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace mtrace
{

// Dense polynomial with integer coefficients, constant term first.
class IntPolynomial
{
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coefficients);
    static IntPolynomial constant(const mpz_class &c);
    // c * T^k
    static IntPolynomial monomial(const mpz_class &c, unsigned k);

    long degree() const noexcept
    {
        return static_cast<long>(coeffs_.size()) - 1;
    }
    bool is_zero() const noexcept
    {
        return coeffs_.empty();
    }
    mpz_class coeff(std::size_t i) const;
    mpz_class leading() const;
    const std::vector<mpz_class> &coefficients() const noexcept
    {
        return coeffs_;
    }
    mpz_class evaluate(const mpz_class &x) const;

    IntPolynomial &operator+=(const IntPolynomial &other);
    IntPolynomial &operator-=(const IntPolynomial &other);
    IntPolynomial &operator*=(const IntPolynomial &other);
    IntPolynomial &operator*=(const mpz_class &c);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial &b)
    {
        return a += b;
    }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial &b)
    {
        return a -= b;
    }
    friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial &b)
    {
        return a *= b;
    }

    friend bool operator==(const IntPolynomial &a, const IntPolynomial &b)
    {
        return a.coeffs_ == b.coeffs_;
    }

    std::string to_string(const std::string &var = "T") const;

private:
    void trim();

    std::vector<mpz_class> coeffs_;
};

// Generators of the symbolic Grothendieck ring. The class of a point is the
// ring unit and has no symbol of its own.
struct Generator {
    enum class Kind { Lefschetz, ProjSpace, Gm, Curve };

    Kind kind;
    // n for ProjSpace(n), n >= 1; g for Curve(g), g >= 0; 0 otherwise.
    int index = 0;

    static Generator lefschetz()
    {
        return {Kind::Lefschetz, 0};
    }
    static Generator proj_space(int n);
    static Generator gm()
    {
        return {Kind::Gm, 0};
    }
    static Generator curve(int genus);

    friend auto operator<=>(const Generator &, const Generator &) = default;
    friend bool operator==(const Generator &, const Generator &) = default;

    std::string to_string() const;
};

// Sorted generator powers; the empty monomial is [point].
using Monomial = std::vector<std::pair<Generator, unsigned>>;

// Finite Z-combination of monomials in the generators. The ring is kept free
// on the generators: scissor relations such as [P^1] = L + 1 are not applied
// to canonical forms and only hold after realization.
class GrothElement
{
public:
    GrothElement() = default;
    // n * [point]
    explicit GrothElement(long n);
    static GrothElement point()
    {
        return GrothElement(1);
    }
    static GrothElement of(const Generator &g);
    static GrothElement from_integer(const mpz_class &n);
    // Expression over pt, L, Pn(n), Gm, C(g), integers, + - * ^ and
    // parentheses.
    static GrothElement parse(std::string_view expression);

    bool is_zero() const noexcept
    {
        return terms_.empty();
    }
    const std::map<Monomial, mpz_class> &terms() const noexcept
    {
        return terms_;
    }

    GrothElement &operator+=(const GrothElement &other);
    GrothElement &operator-=(const GrothElement &other);
    GrothElement &operator*=(const GrothElement &other);
    GrothElement operator-() const;

    friend GrothElement operator+(GrothElement a, const GrothElement &b)
    {
        return a += b;
    }
    friend GrothElement operator-(GrothElement a, const GrothElement &b)
    {
        return a -= b;
    }
    friend GrothElement operator*(GrothElement a, const GrothElement &b)
    {
        return a *= b;
    }

    friend bool operator==(const GrothElement &, const GrothElement &) = default;

    std::string to_string() const;

private:
    void add_term(const Monomial &m, const mpz_class &c);

    std::map<Monomial, mpz_class> terms_;
};

inline GrothElement add(const GrothElement &a, const GrothElement &b)
{
    return a + b;
}
inline GrothElement mul(const GrothElement &a, const GrothElement &b)
{
    return a * b;
}
inline GrothElement neg(const GrothElement &a)
{
    return -a;
}

// Poincare polynomial realization, sum (-1)^i b_i T^i on smooth proper
// varieties and L -> T^2.
IntPolynomial poincare(const GrothElement &a);
IntPolynomial poincare(const Generator &g);

// chi_top, i.e. the Poincare polynomial at T = 1.
mpz_class euler(const GrothElement &a);

// Point count over F_q as a polynomial in q; empty when some monomial
// involves a curve, whose count is not determined by its genus.
std::optional<IntPolynomial> point_count(const GrothElement &a);

enum class QuotientVerdict { Distinct, Indistinguishable };

struct QuotientComparison {
    QuotientVerdict verdict;
    // P(a - b) mod (T^2 - 1) = constant + linear * T.
    mpz_class constant;
    mpz_class linear;
};

// Sound but incomplete test in K_0(Var_k)/(L - 1): Distinct certifies that the
// classes differ; Indistinguishable carries no information.
QuotientComparison eq_mod_L_minus_1(const GrothElement &a, const GrothElement &b);

std::string to_string(QuotientVerdict v);

} // namespace mtrace

#endif
