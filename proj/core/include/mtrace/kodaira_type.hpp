#ifndef MTRACE_KODAIRA_TYPE_HPP
#define MTRACE_KODAIRA_TYPE_HPP

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace mtrace
{

// Kodaira-Neron symbol of the special fiber of a minimal regular model.
class KodairaType
{
public:
    enum class Family { I0, I, II, III, IV, I0star, Istar, IVstar, IIIstar, IIstar };

    static KodairaType good()
    {
        return KodairaType(Family::I0, 0);
    }
    // I_nu with nu >= 1.
    static KodairaType multiplicative(int nu);
    // I*_nu with nu >= 1; use I0star() for nu = 0.
    static KodairaType istar(int nu);
    static KodairaType of(Family f);

    // "I0", "I5", "II", "III", "IV", "I0*", "I3*", "IV*", "III*", "II*"
    static KodairaType parse(std::string_view symbol);

    Family family() const noexcept
    {
        return family_;
    }
    // nu for I_nu and I*_nu, 0 otherwise.
    int nu() const noexcept
    {
        return nu_;
    }

    bool is_good() const noexcept
    {
        return family_ == Family::I0;
    }
    bool is_multiplicative() const noexcept
    {
        return family_ == Family::I;
    }
    bool is_additive() const noexcept
    {
        return !is_good() && !is_multiplicative();
    }

    std::string to_string() const;

    friend bool operator==(const KodairaType &, const KodairaType &) = default;

private:
    KodairaType(Family f, int nu) : family_(f), nu_(nu) {}

    Family family_;
    int nu_;
};

std::ostream &operator<<(std::ostream &os, const KodairaType &t);

// One representative of each family, with the given nu for I and I*.
std::vector<KodairaType> representative_types(int nu_multiplicative = 3, int nu_star = 2);

} // namespace mtrace

#endif
