#ifndef MTRACE_POLYNOMIAL_HPP
#define MTRACE_POLYNOMIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include <mtrace/residue.hpp>

namespace mtrace
{

// Dense univariate polynomial over a residue field. Coefficients are stored
// from the constant term upwards with no trailing zeros; the zero polynomial
// has an empty coefficient list and degree -1.
class Polynomial
{
public:
    explicit Polynomial(const ResidueField &field = {}) : field_(field) {}
    Polynomial(const ResidueField &field, std::vector<Residue> coefficients);

    static Polynomial constant(const Residue &c);
    // c * x^k
    static Polynomial monomial(const Residue &c, unsigned k);

    const ResidueField &field() const noexcept
    {
        return field_;
    }
    long degree() const noexcept
    {
        return static_cast<long>(coeffs_.size()) - 1;
    }
    bool is_zero() const noexcept
    {
        return coeffs_.empty();
    }
    bool is_one() const;
    Residue coeff(std::size_t i) const;
    Residue leading() const;
    const std::vector<Residue> &coefficients() const noexcept
    {
        return coeffs_;
    }

    // Exponent of the largest power of x dividing *this. Undefined on zero.
    long low_degree() const;
    // *this / x^k; requires k <= low_degree().
    Polynomial shift_down(unsigned k) const;
    Polynomial shift_up(unsigned k) const;
    // x -> x^d
    Polynomial substitute_power(unsigned d) const;

    Polynomial derivative() const;
    Residue evaluate(const Residue &x) const;
    Polynomial monic() const;

    Polynomial &operator+=(const Polynomial &other);
    Polynomial &operator-=(const Polynomial &other);
    Polynomial &operator*=(const Polynomial &other);
    Polynomial &operator*=(const Residue &c);

    friend Polynomial operator+(Polynomial a, const Polynomial &b)
    {
        return a += b;
    }
    friend Polynomial operator-(Polynomial a, const Polynomial &b)
    {
        return a -= b;
    }
    friend Polynomial operator*(Polynomial a, const Polynomial &b)
    {
        return a *= b;
    }
    friend Polynomial operator*(Polynomial a, const Residue &c)
    {
        return a *= c;
    }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial &a, const Polynomial &b)
    {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }

    std::string to_string(const std::string &var = "x") const;

private:
    void trim();

    ResidueField field_;
    std::vector<Residue> coeffs_;
};

// Euclidean division: returns (q, r) with a = q*b + r and deg r < deg b.
std::pair<Polynomial, Polynomial> divmod(const Polynomial &a, const Polynomial &b);
// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial &a, const Polynomial &b);

// Discriminant of a monic cubic x^3 + b x^2 + c x + d as the universal integer
// polynomial in its coefficients, so it detects separability in every
// characteristic.
Residue cubic_discriminant(const Residue &b, const Residue &c, const Residue &d);

// The root of multiplicity >= 2 of f, when f has exactly one such root and it
// is determined by the coefficients (true for all polynomials of degree <= 3
// over Q and F_p). Returns false if f is separable. Throws ResidueRootNeeded
// if the repeated root cannot be named inside k.
bool repeated_root(const Polynomial &f, Residue &root);

} // namespace mtrace

#endif
