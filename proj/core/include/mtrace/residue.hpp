#ifndef MTRACE_RESIDUE_HPP
#define MTRACE_RESIDUE_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace mtrace
{

// A residue field k: either Q (characteristic 0) or the prime field F_p.
class ResidueField
{
public:
    ResidueField() = default;
    static ResidueField rationals()
    {
        return ResidueField{};
    }
    // Throws InvalidArgument unless p is prime.
    static ResidueField prime_field(std::uint64_t p);

    std::uint64_t characteristic() const noexcept
    {
        return p_;
    }
    bool is_rationals() const noexcept
    {
        return p_ == 0;
    }

    friend bool operator==(const ResidueField &, const ResidueField &) = default;

    std::string to_string() const;

private:
    std::uint64_t p_ = 0;
};

// An element of a ResidueField. In characteristic p the value is kept as the
// canonical integer representative in [0, p).
class Residue
{
public:
    Residue() = default;
    Residue(const ResidueField &field, long value);
    // Maps a rational into k. Throws DivisionByZero if the denominator is
    // divisible by the characteristic.
    Residue(const ResidueField &field, const mpq_class &value);

    const ResidueField &field() const noexcept
    {
        return field_;
    }
    const mpq_class &value() const noexcept
    {
        return value_;
    }
    bool is_zero() const
    {
        return sgn(value_) == 0;
    }
    bool is_one() const
    {
        return value_ == 1;
    }

    Residue &operator+=(const Residue &other);
    Residue &operator-=(const Residue &other);
    Residue &operator*=(const Residue &other);
    Residue &operator/=(const Residue &other);

    friend Residue operator+(Residue a, const Residue &b)
    {
        return a += b;
    }
    friend Residue operator-(Residue a, const Residue &b)
    {
        return a -= b;
    }
    friend Residue operator*(Residue a, const Residue &b)
    {
        return a *= b;
    }
    friend Residue operator/(Residue a, const Residue &b)
    {
        return a /= b;
    }
    Residue operator-() const;

    Residue inverse() const;
    Residue pow(unsigned long e) const;

    friend bool operator==(const Residue &a, const Residue &b)
    {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }

    std::string to_string() const;

private:
    void normalize();
    // mpq arithmetic already yields canonical fractions.
    void reduce_after_op()
    {
        if (!field_.is_rationals()) {
            normalize();
        }
    }
    void check_same_field(const Residue &other) const;

    ResidueField field_;
    mpq_class value_;
};

std::ostream &operator<<(std::ostream &os, const Residue &r);

// Deterministic primality check for the field specs we accept.
bool is_prime(std::uint64_t n);

} // namespace mtrace

#endif
