#include <charconv>

#include <mtrace/error.hpp>
#include <mtrace/kodaira_type.hpp>

namespace mtrace
{

KodairaType KodairaType::multiplicative(int nu)
{
    if (nu < 1) {
        throw Error(ErrorCode::InvalidArgument, "I_nu needs nu >= 1");
    }
    return KodairaType(Family::I, nu);
}

KodairaType KodairaType::istar(int nu)
{
    if (nu < 1) {
        throw Error(ErrorCode::InvalidArgument, "I*_nu needs nu >= 1");
    }
    return KodairaType(Family::Istar, nu);
}

KodairaType KodairaType::of(Family f)
{
    if (f == Family::I || f == Family::Istar) {
        throw Error(ErrorCode::InvalidArgument, "I_nu and I*_nu need an explicit nu");
    }
    return KodairaType(f, 0);
}

KodairaType KodairaType::parse(std::string_view s)
{
    if (s == "I0") {
        return good();
    }
    if (s == "II") {
        return of(Family::II);
    }
    if (s == "III") {
        return of(Family::III);
    }
    if (s == "IV") {
        return of(Family::IV);
    }
    if (s == "I0*") {
        return of(Family::I0star);
    }
    if (s == "IV*") {
        return of(Family::IVstar);
    }
    if (s == "III*") {
        return of(Family::IIIstar);
    }
    if (s == "II*") {
        return of(Family::IIstar);
    }
    if (s.size() >= 2 && s.front() == 'I') {
        const bool star = s.back() == '*';
        const std::string_view digits = s.substr(1, s.size() - 1 - (star ? 1 : 0));
        int nu = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), nu);
        if (!digits.empty() && ec == std::errc{} && ptr == digits.data() + digits.size() && nu >= 1) {
            return star ? istar(nu) : multiplicative(nu);
        }
    }
    throw ParseError(0, "unknown Kodaira symbol '" + std::string(s) + "'");
}

std::string KodairaType::to_string() const
{
    switch (family_) {
        case Family::I0:
            return "I0";
        case Family::I:
            return "I" + std::to_string(nu_);
        case Family::II:
            return "II";
        case Family::III:
            return "III";
        case Family::IV:
            return "IV";
        case Family::I0star:
            return "I0*";
        case Family::Istar:
            return "I" + std::to_string(nu_) + "*";
        case Family::IVstar:
            return "IV*";
        case Family::IIIstar:
            return "III*";
        case Family::IIstar:
            return "II*";
    }
    return "?";
}

std::ostream &operator<<(std::ostream &os, const KodairaType &t)
{
    return os << t.to_string();
}

std::vector<KodairaType> representative_types(int nu_multiplicative, int nu_star)
{
    using F = KodairaType::Family;
    return {KodairaType::good(),
            KodairaType::multiplicative(nu_multiplicative),
            KodairaType::of(F::II),
            KodairaType::of(F::III),
            KodairaType::of(F::IV),
            KodairaType::of(F::I0star),
            KodairaType::istar(nu_star),
            KodairaType::of(F::IVstar),
            KodairaType::of(F::IIIstar),
            KodairaType::of(F::IIstar)};
}

} // namespace mtrace
