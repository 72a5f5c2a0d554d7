#ifndef MTRACE_WEIERSTRASS_HPP
#define MTRACE_WEIERSTRASS_HPP

#include <array>
#include <map>
#include <string>
#include <string_view>

#include <mtrace/localfield.hpp>

namespace mtrace
{

struct StandardInvariants {
    ValuedElement b2, b4, b6, b8;
    ValuedElement c4, c6;
    ValuedElement discriminant;
    ValuedElement j;
};

// Long Weierstrass equation y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
// with coefficients in the valuation ring R of K and nonzero discriminant.
class WeierstrassModel
{
public:
    // Throws NonIntegralModel if some a_i has negative valuation,
    // SingularCurve if the discriminant vanishes.
    WeierstrassModel(const ValuedElement &a1, const ValuedElement &a2, const ValuedElement &a3, const ValuedElement &a4,
                     const ValuedElement &a6);

    // Parses coefficient literals over the given field; missing ones are 0.
    static WeierstrassModel from_literals(const LocalFieldSpec &field, std::string_view a1, std::string_view a2,
                                          std::string_view a3, std::string_view a4, std::string_view a6);
    // Curve record: "key: value" lines with keys field, a1, a2, a3, a4, a6.
    // Other keys are ignored, so a saved report is also a valid record.
    static WeierstrassModel parse_record(std::string_view text);

    const LocalFieldSpec &field() const noexcept
    {
        return a1_.field();
    }
    const ValuedElement &a1() const noexcept
    {
        return a1_;
    }
    const ValuedElement &a2() const noexcept
    {
        return a2_;
    }
    const ValuedElement &a3() const noexcept
    {
        return a3_;
    }
    const ValuedElement &a4() const noexcept
    {
        return a4_;
    }
    const ValuedElement &a6() const noexcept
    {
        return a6_;
    }
    const StandardInvariants &invariants() const noexcept
    {
        return inv_;
    }
    const ValuedElement &discriminant() const noexcept
    {
        return inv_.discriminant;
    }

    // Coordinate change x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
    // Throws ZeroScale if u = 0, NonIntegralModel if the result leaves R.
    WeierstrassModel transform(const ValuedElement &u, const ValuedElement &r, const ValuedElement &s,
                               const ValuedElement &t) const;

    // t -> t^d on every coefficient (Laurent fields only).
    WeierstrassModel base_change(unsigned d) const;

    // "key: value" lines for field and a1..a6.
    std::string to_record() const;

    friend bool operator==(const WeierstrassModel &a, const WeierstrassModel &b)
    {
        return a.a1_ == b.a1_ && a.a2_ == b.a2_ && a.a3_ == b.a3_ && a.a4_ == b.a4_ && a.a6_ == b.a6_;
    }

private:
    ValuedElement a1_, a2_, a3_, a4_, a6_;
    StandardInvariants inv_;
};

// b2..b8, c4, c6, the discriminant and j. Throws SingularCurve if the
// discriminant is zero.
StandardInvariants compute_invariants(const ValuedElement &a1, const ValuedElement &a2, const ValuedElement &a3,
                                      const ValuedElement &a4, const ValuedElement &a6);

inline StandardInvariants invariants(const WeierstrassModel &w)
{
    return w.invariants();
}

inline WeierstrassModel transform(const WeierstrassModel &w, const ValuedElement &u, const ValuedElement &r,
                                  const ValuedElement &s, const ValuedElement &t)
{
    return w.transform(u, r, s, t);
}

// Splits "key: value" lines; '#' starts a comment line.
std::map<std::string, std::string, std::less<>> parse_key_values(std::string_view text);

} // namespace mtrace

#endif
