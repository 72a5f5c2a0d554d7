#ifndef MTRACE_TEST_SUPPORT_HPP
#define MTRACE_TEST_SUPPORT_HPP

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <mtrace/error.hpp>
#include <mtrace/grothendieck.hpp>
#include <mtrace/kodaira_type.hpp>
#include <mtrace/localfield.hpp>
#include <mtrace/weierstrass.hpp>

namespace testing
{

using namespace mtrace;

inline std::string data_path(const std::string &name)
{
    return std::string(MTRACE_TEST_DATA_DIR) + "/" + name;
}

inline LocalFieldSpec field(const char *spec)
{
    return LocalFieldSpec::parse(spec);
}

inline ValuedElement el(const LocalFieldSpec &f, const char *literal)
{
    return ValuedElement::parse(f, literal);
}

inline WeierstrassModel curve(const char *spec, const char *a1, const char *a2, const char *a3, const char *a4,
                              const char *a6)
{
    return WeierstrassModel::from_literals(field(spec), a1, a2, a3, a4, a6);
}

// y^2 = x^3 + a4 x + a6
inline WeierstrassModel short_curve(const char *spec, const char *a4, const char *a6)
{
    return curve(spec, "0", "0", "0", a4, a6);
}

inline long v(const ValuedElement &x)
{
    const Valuation val = x.valuation();
    return val.is_infinite() ? 1000000 : val.value();
}

struct Expected {
    const char *line;
    const char *type;
    long v_delta_min;
    int n_components;
};

// Hand-verified answers for tests/data/curves.txt, in file order.
inline const std::vector<Expected> &corpus_expectations()
{
    static const std::vector<Expected> table = {
        {"laurent:Q;0;0;0;0;t", "II", 2, 1},
        {"laurent:Q;0;0;0;0;t^2", "IV", 4, 3},
        {"laurent:Q;0;0;0;0;t^3", "I0*", 6, 4},
        {"laurent:Q;0;0;0;0;t^4", "IV*", 8, 3},
        {"laurent:Q;0;0;0;0;t^5", "II*", 10, 1},
        {"laurent:Q;0;0;0;t;0", "III", 3, 2},
        {"laurent:Q;0;0;0;t^3;0", "III*", 9, 2},
        {"laurent:Q;0;0;0;0;1", "I0", 0, 1},
        {"laurent:Q;1;0;0;0;t", "I1", 1, 1},
        {"laurent:Q;0;1;0;0;t^2", "I2", 2, 2},
        {"laurent:Q;0;t;0;0;t^5", "I2*", 8, 4},
        {"laurent:Q;0;0;0;0;t^7", "II", 2, 1},
        {"laurent:F2;0;0;t;0;t", "II", 4, 1},
        {"laurent:F2;0;0;t;t;0", "III", 4, 2},
        {"laurent:F2;0;t;t^2;0;t^3", "I0*", 8, 4},
        {"laurent:F2;0;t;t^2;0;t^4", "I1*", 8, 4},
        {"laurent:F2;0;0;t^3;0;t^5", "II*", 12, 1},
        {"laurent:F2;0;0;t^2;0;t^4", "IV*", 8, 3},
        {"laurent:F2;0;t;t^3;0;t^4", "I3*", 12, 4},
        {"laurent:F3;0;0;0;t^2;t", "II", 6, 1},
        {"laurent:F3;0;0;0;t^3;t^2", "IV", 9, 3},
        {"laurent:F3;0;0;0;t^3;t^4", "IV*", 9, 3},
        {"laurent:F3;0;0;0;t^4;t^5", "II*", 12, 1},
        {"laurent:F3;0;t;0;0;t^4", "I1*", 7, 4},
        {"padic:11;0;-1;1;-10;-20", "I5", 5, 5},
        {"padic:2;0;0;0;-1;0", "III", 6, 2},
        {"padic:3;0;0;1;0;-7", "IV*", 9, 3},
        {"padic:2;1;0;1;4;-6", "I6", 6, 6},
        {"padic:2;0;1;0;4;4", "IV*", 8, 3},
        {"padic:3;0;0;0;0;1", "III", 3, 2},
    };
    return table;
}

inline WeierstrassModel parse_corpus_line(const std::string &line)
{
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t at; (at = line.find(';', start)) != std::string::npos; start = at + 1) {
        parts.push_back(line.substr(start, at - start));
    }
    parts.push_back(line.substr(start));
    return WeierstrassModel::from_literals(LocalFieldSpec::parse(parts.at(0)), parts.at(1), parts.at(2), parts.at(3),
                                           parts.at(4), parts.at(5));
}

// Random elements of the valuation ring.
class Sampler
{
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi)
    {
        return std::uniform_int_distribution<long>(lo, hi)(rng_);
    }

    bool coin(double p = 0.5)
    {
        return std::bernoulli_distribution(p)(rng_);
    }

    // pi^k times a random (possibly non-unit) integral element, k in [0, max_shift].
    ValuedElement integral(const LocalFieldSpec &f, int max_shift = 4)
    {
        const long k = integer(0, max_shift);
        ValuedElement x = ValuedElement::zero(f);
        if (f.is_laurent()) {
            const ValuedElement t = ValuedElement::uniformizer(f);
            ValuedElement power = ValuedElement::one(f);
            for (int i = 0; i < 4; ++i) {
                x += ValuedElement(f, integer(-3, 3)) * power;
                power *= t;
            }
        } else {
            x = ValuedElement(f, integer(-30, 30));
        }
        return x.shift(k);
    }

    // Constant units over Laurent fields keep the coefficients polynomial.
    ValuedElement unit(const LocalFieldSpec &f)
    {
        for (;;) {
            ValuedElement u = f.is_laurent() ? ValuedElement(f, integer(-3, 3)) : integral(f, 0);
            if (!u.is_zero() && u.valuation() == Valuation(0)) {
                return u;
            }
        }
    }

    // Nonsingular integral model; the zero coefficient is favoured so that the
    // additive types come up often.
    WeierstrassModel model(const LocalFieldSpec &f, int max_shift = 6)
    {
        for (;;) {
            auto coeff = [&]() { return coin(0.3) ? ValuedElement::zero(f) : integral(f, max_shift); };
            ValuedElement a1 = coeff(), a2 = coeff(), a3 = coeff(), a4 = coeff(), a6 = coeff();
            try {
                return WeierstrassModel(a1, a2, a3, a4, a6);
            } catch (const Error &e) {
                if (e.code() != ErrorCode::SingularCurve) {
                    throw;
                }
            }
        }
    }

    // Change of coordinates with u a unit, so the model stays integral and
    // the discriminant valuation is unchanged.
    WeierstrassModel unimodular(const WeierstrassModel &w)
    {
        const LocalFieldSpec &f = w.field();
        return w.transform(unit(f), integral(f, 2), integral(f, 2), integral(f, 2));
    }

    std::mt19937_64 &engine()
    {
        return rng_;
    }

private:
    std::mt19937_64 rng_;
};

// Small random integer combination of monomials in a few generators.
inline GrothElement random_element(Sampler &s)
{
    const Generator gens[] = {Generator::lefschetz(), Generator::gm(), Generator::proj_space(1),
                              Generator::proj_space(3), Generator::curve(0), Generator::curve(1),
                              Generator::curve(2)};
    GrothElement out;
    const long terms = s.integer(0, 4);
    for (long i = 0; i < terms; ++i) {
        GrothElement mono = GrothElement::point();
        const long factors = s.integer(0, 3);
        for (long j = 0; j < factors; ++j) {
            mono = mul(mono, GrothElement::of(gens[s.integer(0, 6)]));
        }
        out = add(out, mul(GrothElement(s.integer(-5, 5)), mono));
    }
    return out;
}

// Type of a minimal model from (v(c4), v(c6), v(Delta)); valid when the
// residue characteristic is 0 or at least 5.
inline KodairaType type_from_valuations(const WeierstrassModel &minimal)
{
    const auto &inv = minimal.invariants();
    const long vd = v(inv.discriminant);
    const long vc4 = v(inv.c4);
    const long vc6 = v(inv.c6);
    if (vd == 0) {
        return KodairaType::good();
    }
    if (vc4 == 0) {
        return KodairaType::multiplicative(static_cast<int>(vd));
    }
    if (vc4 == 2 && vc6 == 3 && vd > 6) {
        return KodairaType::istar(static_cast<int>(vd - 6));
    }
    switch (vd) {
        case 2:
            return KodairaType::of(KodairaType::Family::II);
        case 3:
            return KodairaType::of(KodairaType::Family::III);
        case 4:
            return KodairaType::of(KodairaType::Family::IV);
        case 6:
            return KodairaType::of(KodairaType::Family::I0star);
        case 8:
            return KodairaType::of(KodairaType::Family::IVstar);
        case 9:
            return KodairaType::of(KodairaType::Family::IIIstar);
        case 10:
            return KodairaType::of(KodairaType::Family::IIstar);
        default:
            break;
    }
    throw std::logic_error("valuations (" + std::to_string(vc4) + ", " + std::to_string(vc6) + ", " +
                           std::to_string(vd) + ") fit no type");
}

// Monodromy trace from 2 cos(2 pi d / e), rounded.
inline long trace_from_angle(int order, int d)
{
    const double pi = std::acos(-1.0);
    return 2 - std::lround(2.0 * std::cos(2.0 * pi * d / order));
}

} // namespace testing

#endif
