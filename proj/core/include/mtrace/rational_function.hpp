#ifndef MTRACE_RATIONAL_FUNCTION_HPP
#define MTRACE_RATIONAL_FUNCTION_HPP

#include <string>

#include <mtrace/polynomial.hpp>

namespace mtrace
{

// Element of k(t), kept reduced: gcd(num, den) = 1 and den monic.
class RationalFunction
{
public:
    explicit RationalFunction(const ResidueField &field = {});
    explicit RationalFunction(Polynomial num);
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction variable(const ResidueField &field);

    const Polynomial &numerator() const noexcept
    {
        return num_;
    }
    const Polynomial &denominator() const noexcept
    {
        return den_;
    }
    const ResidueField &field() const noexcept
    {
        return num_.field();
    }
    bool is_zero() const noexcept
    {
        return num_.is_zero();
    }

    // t-adic valuation; requires a nonzero element.
    long valuation() const;
    // Multiplies by t^k (k may be negative).
    RationalFunction shift(long k) const;
    // t -> t^d
    RationalFunction substitute_power(unsigned d) const;
    // Value at t = 0; requires valuation() >= 0.
    Residue value_at_zero() const;

    RationalFunction &operator+=(const RationalFunction &other);
    RationalFunction &operator-=(const RationalFunction &other);
    RationalFunction &operator*=(const RationalFunction &other);
    RationalFunction &operator/=(const RationalFunction &other);
    RationalFunction operator-() const;

    friend RationalFunction operator+(RationalFunction a, const RationalFunction &b)
    {
        return a += b;
    }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction &b)
    {
        return a -= b;
    }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction &b)
    {
        return a *= b;
    }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction &b)
    {
        return a /= b;
    }

    friend bool operator==(const RationalFunction &a, const RationalFunction &b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string(const std::string &var = "t") const;

private:
    void reduce();

    Polynomial num_;
    Polynomial den_;
};

} // namespace mtrace

#endif
