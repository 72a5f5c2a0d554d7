#ifndef MTRACE_LOCALFIELD_HPP
#define MTRACE_LOCALFIELD_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include <mtrace/rational_function.hpp>
#include <mtrace/residue.hpp>

namespace mtrace
{

// A discretely valued field K, given by a global subfield that is dense in it:
// Q inside Q_p (uniformizer p), or k(t) inside k((t)) (uniformizer t).
class LocalFieldSpec
{
public:
    enum class Kind { Padic, Laurent };

    static LocalFieldSpec padic(std::uint64_t p);
    static LocalFieldSpec laurent(const ResidueField &residue_field);
    // "padic:<p>", "laurent:Q", "laurent:F<p>"
    static LocalFieldSpec parse(std::string_view spec);

    Kind kind() const noexcept
    {
        return kind_;
    }
    bool is_padic() const noexcept
    {
        return kind_ == Kind::Padic;
    }
    bool is_laurent() const noexcept
    {
        return kind_ == Kind::Laurent;
    }
    const ResidueField &residue_field() const noexcept
    {
        return residue_field_;
    }
    std::uint64_t residue_characteristic() const noexcept
    {
        return residue_field_.characteristic();
    }

    friend bool operator==(const LocalFieldSpec &, const LocalFieldSpec &) = default;

    std::string to_string() const;

private:
    LocalFieldSpec(Kind kind, const ResidueField &k) : kind_(kind), residue_field_(k) {}

    Kind kind_;
    ResidueField residue_field_;
};

std::ostream &operator<<(std::ostream &os, const LocalFieldSpec &f);

// Value of the normalized discrete valuation, with +infinity for zero.
class Valuation
{
public:
    constexpr explicit Valuation(long v) : v_(v) {}
    static constexpr Valuation infinity()
    {
        return Valuation(std::numeric_limits<long>::max());
    }

    constexpr bool is_infinite() const noexcept
    {
        return v_ == std::numeric_limits<long>::max();
    }
    // Requires a finite valuation.
    long value() const;

    friend constexpr auto operator<=>(const Valuation &, const Valuation &) = default;
    friend constexpr bool operator==(const Valuation &, const Valuation &) = default;
    friend constexpr bool operator<(const Valuation &a, long b)
    {
        return !a.is_infinite() && a.v_ < b;
    }
    friend constexpr bool operator>=(const Valuation &a, long b)
    {
        return !(a < b);
    }
    friend Valuation operator+(const Valuation &a, const Valuation &b)
    {
        if (a.is_infinite() || b.is_infinite()) {
            return infinity();
        }
        return Valuation(a.v_ + b.v_);
    }

    std::string to_string() const;

private:
    long v_;
};

std::ostream &operator<<(std::ostream &os, const Valuation &v);

// Exact element of K, stored as its global representative.
class ValuedElement
{
public:
    explicit ValuedElement(const LocalFieldSpec &field);
    ValuedElement(const LocalFieldSpec &field, long value);
    ValuedElement(const LocalFieldSpec &field, const mpq_class &value);
    // Laurent backends only.
    ValuedElement(const LocalFieldSpec &field, RationalFunction value);

    static ValuedElement zero(const LocalFieldSpec &field)
    {
        return ValuedElement(field);
    }
    static ValuedElement one(const LocalFieldSpec &field)
    {
        return ValuedElement(field, 1L);
    }
    // p for Q_p, t for k((t)).
    static ValuedElement uniformizer(const LocalFieldSpec &field);
    // Teichmuller-free lift of a residue into R: the integer in [0, p) for
    // Q_p, the constant for k((t)).
    static ValuedElement lift(const LocalFieldSpec &field, const Residue &r);
    // Parses an element literal: rationals, and rational functions in t for
    // Laurent fields, with + - * / ^ and parentheses.
    static ValuedElement parse(const LocalFieldSpec &field, std::string_view literal);

    const LocalFieldSpec &field() const noexcept
    {
        return field_;
    }
    bool is_zero() const;

    Valuation valuation() const;
    // Image in the residue field. Throws NegativeValuation when v(x) < 0.
    Residue reduce() const;
    // x * pi^k for any integer k.
    ValuedElement shift(long k) const;
    // t -> t^d on a Laurent field. Throws UnsupportedBackend on Q_p.
    ValuedElement base_change_substitute(unsigned d) const;
    ValuedElement pow(unsigned e) const;

    // Present only for the matching backend.
    const mpq_class *as_rational() const noexcept
    {
        return std::get_if<mpq_class>(&rep_);
    }
    const RationalFunction *as_function() const noexcept
    {
        return std::get_if<RationalFunction>(&rep_);
    }

    ValuedElement &operator+=(const ValuedElement &other);
    ValuedElement &operator-=(const ValuedElement &other);
    ValuedElement &operator*=(const ValuedElement &other);
    ValuedElement &operator/=(const ValuedElement &other);
    ValuedElement operator-() const;

    friend ValuedElement operator+(ValuedElement a, const ValuedElement &b)
    {
        return a += b;
    }
    friend ValuedElement operator-(ValuedElement a, const ValuedElement &b)
    {
        return a -= b;
    }
    friend ValuedElement operator*(ValuedElement a, const ValuedElement &b)
    {
        return a *= b;
    }
    friend ValuedElement operator/(ValuedElement a, const ValuedElement &b)
    {
        return a /= b;
    }
    friend ValuedElement operator*(long c, ValuedElement a)
    {
        return a *= ValuedElement(a.field_, c);
    }

    friend bool operator==(const ValuedElement &a, const ValuedElement &b)
    {
        return a.field_ == b.field_ && a.rep_ == b.rep_;
    }

    std::string to_string() const;

private:
    void check_same_field(const ValuedElement &other) const;

    LocalFieldSpec field_;
    std::variant<mpq_class, RationalFunction> rep_;
};

std::ostream &operator<<(std::ostream &os, const ValuedElement &x);

// Free-function spellings of the module operations.
inline Valuation valuation(const ValuedElement &x)
{
    return x.valuation();
}
inline Residue reduce(const ValuedElement &x)
{
    return x.reduce();
}
inline ValuedElement base_change_substitute(const ValuedElement &x, unsigned d)
{
    return x.base_change_substitute(d);
}

} // namespace mtrace

#endif
