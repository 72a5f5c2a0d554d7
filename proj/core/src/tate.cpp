#include <limits>
#include <optional>
#include <stdexcept>

#include <mtrace/error.hpp>
#include <mtrace/polynomial.hpp>
#include <mtrace/tate.hpp>

namespace mtrace
{

std::string to_string(ReductionClass c)
{
    switch (c) {
        case ReductionClass::Good:
            return "good";
        case ReductionClass::Multiplicative:
            return "multiplicative";
        case ReductionClass::Additive:
            return "additive";
    }
    return "?";
}

namespace
{

// p-th roots in F_p are trivial: Frobenius is the identity on the prime field.
Residue pth_root(const Residue &a)
{
    return a;
}

// Residue of x / pi^k.
Residue red(const ValuedElement &x, long k)
{
    return x.shift(-k).reduce();
}

class TateRun
{
public:
    explicit TateRun(const WeierstrassModel &w)
        : model_(w), field_(w.field()), k_(field_.residue_field()), p_(field_.residue_characteristic())
    {
    }

    LocalInvariants run()
    {
        for (;;) {
            if (auto done = classify_once()) {
                return *done;
            }
            // Step 11: the model was not minimal; scale by u = pi and restart.
            model_ = model_.transform(ValuedElement::uniformizer(field_), zero(), zero(), zero());
        }
    }

private:
    ValuedElement zero() const
    {
        return ValuedElement::zero(field_);
    }
    ValuedElement lift(const Residue &r) const
    {
        return ValuedElement::lift(field_, r);
    }
    ValuedElement pi_times(const Residue &r, long k) const
    {
        return lift(r).shift(k);
    }
    long v(const ValuedElement &x) const
    {
        const Valuation val = x.valuation();
        return val.is_infinite() ? std::numeric_limits<long>::max() : val.value();
    }
    Residue res(long n) const
    {
        return Residue(k_, n);
    }

    void translate(const ValuedElement &r, const ValuedElement &s, const ValuedElement &t)
    {
        model_ = model_.transform(ValuedElement::one(field_), r, s, t);
    }

    LocalInvariants finish(KodairaType type, int n, ReductionClass cls) const
    {
        const long vd = v(model_.discriminant());
        return LocalInvariants{type, vd, model_, n, cls, p_};
    }

    // Moves the singular point of the reduction to (0, 0).
    void move_singular_point()
    {
        Residue x0(k_, 0L), y0(k_, 0L);
        if (p_ == 2) {
            const Residue a1 = red(model_.a1(), 0), a2 = red(model_.a2(), 0), a3 = red(model_.a3(), 0),
                          a4 = red(model_.a4(), 0), a6 = red(model_.a6(), 0);
            if (!a1.is_zero()) {
                x0 = a3 / a1;
                y0 = (x0 * x0 + a4) / a1;
            } else {
                x0 = pth_root(a4);
                y0 = pth_root(x0 * x0 * x0 + a2 * x0 * x0 + a4 * x0 + a6);
            }
        } else {
            // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6; the singular
            // point sits over the repeated root of the right-hand side.
            const auto &inv = model_.invariants();
            const Residue four(k_, 4L), two(k_, 2L);
            const Polynomial f(k_, {red(inv.b6, 0) / four, red(inv.b4, 0) / two, red(inv.b2, 0) / four, res(1)});
            if (!repeated_root(f, x0)) {
                throw std::logic_error("reduction with vanishing discriminant has no singular point");
            }
            y0 = -(red(model_.a1(), 0) * x0 + red(model_.a3(), 0)) / two;
        }
        translate(lift(x0), zero(), lift(y0));
        if (v(model_.a3()) < 1 || v(model_.a4()) < 1 || v(model_.a6()) < 1) {
            throw std::logic_error("singular point was not moved to the origin");
        }
    }

    // Arranges pi | a1, a2; pi^2 | a3, a4; pi^3 | a6.
    void normalize_for_star()
    {
        if (p_ == 2) {
            const ValuedElement s = lift(pth_root(red(model_.a2(), 0)));
            translate(zero(), s, zero());
            const ValuedElement t = pi_times(pth_root(red(model_.a6(), 2)), 1);
            translate(zero(), zero(), t);
        } else {
            const ValuedElement half = ValuedElement::one(field_) / ValuedElement(field_, 2L);
            translate(zero(), -(model_.a1() * half), zero());
            translate(zero(), zero(), -(model_.a3() * half));
        }
        if (v(model_.a1()) < 1 || v(model_.a2()) < 1 || v(model_.a3()) < 2 || v(model_.a4()) < 2 ||
            v(model_.a6()) < 3) {
            throw std::logic_error("step 6 normalization failed");
        }
    }

    // Monic residue polynomial c0 + c1 Y + Y^2.
    Polynomial quadratic(const Residue &c2, const Residue &c1, const Residue &c0) const
    {
        return Polynomial(k_, {c0, c1, c2}).monic();
    }

    // Root of a residue quadratic known to have a double root.
    Residue double_root(const Polynomial &q) const
    {
        Residue r(k_, 0L);
        if (!repeated_root(q, r)) {
            throw std::logic_error("expected a double root");
        }
        return r;
    }

    std::optional<LocalInvariants> classify_once()
    {
        using F = KodairaType::Family;
        if (v(model_.discriminant()) == 0) {
            return finish(KodairaType::good(), 1, ReductionClass::Good);
        }
        move_singular_point();
        if (v(model_.invariants().b2) == 0) {
            const long nu = v(model_.discriminant());
            return finish(KodairaType::multiplicative(static_cast<int>(nu)), static_cast<int>(nu),
                          ReductionClass::Multiplicative);
        }
        if (v(model_.a6()) < 2) {
            return finish(KodairaType::of(F::II), 1, ReductionClass::Additive);
        }
        if (v(model_.invariants().b8) < 3) {
            return finish(KodairaType::of(F::III), 2, ReductionClass::Additive);
        }
        if (v(model_.invariants().b6) < 3) {
            return finish(KodairaType::of(F::IV), 3, ReductionClass::Additive);
        }

        normalize_for_star();
        const Residue b = red(model_.a2(), 1), c = red(model_.a4(), 2), d = red(model_.a6(), 3);
        if (!cubic_discriminant(b, c, d).is_zero()) {
            return finish(KodairaType::of(F::I0star), 4, ReductionClass::Additive);
        }
        const Polynomial cubic(k_, {d, c, b, res(1)});
        Residue root(k_, 0L);
        repeated_root(cubic, root);
        // gcd(f, f') overcounts when p divides the multiplicity, so compare
        // against (T - r)^3 directly.
        const bool triple = b == res(-3) * root && c == res(3) * root * root && d == -(root * root * root);
        translate(pi_times(root, 1), zero(), zero());

        if (!triple) {
            return istar_chain();
        }

        // Triple root now at 0: pi^2 | a2, pi^3 | a4, pi^4 | a6.
        const Polynomial qy = quadratic(res(1), red(model_.a3(), 2), -red(model_.a6(), 4));
        if (gcd(qy, qy.derivative()).degree() == 0) {
            return finish(KodairaType::of(F::IVstar), 3, ReductionClass::Additive);
        }
        translate(zero(), zero(), pi_times(double_root(qy), 2));
        if (v(model_.a4()) < 4) {
            return finish(KodairaType::of(F::IIIstar), 2, ReductionClass::Additive);
        }
        if (v(model_.a6()) < 6) {
            return finish(KodairaType::of(F::IIstar), 1, ReductionClass::Additive);
        }
        return std::nullopt;
    }

    // Double root of the step-6 cubic translated to 0. Alternately examine
    // quadratics in y and x until one is separable; the number of rounds is nu.
    LocalInvariants istar_chain()
    {
        const long bound = v(model_.discriminant());
        for (int nu = 1; nu <= bound; ++nu) {
            if (nu % 2 == 1) {
                const long e = (nu + 3) / 2;
                const Polynomial q = quadratic(res(1), red(model_.a3(), e), -red(model_.a6(), 2 * e));
                if (gcd(q, q.derivative()).degree() == 0) {
                    return finish(KodairaType::istar(nu), 4, ReductionClass::Additive);
                }
                translate(zero(), zero(), pi_times(double_root(q), e));
            } else {
                const long e = (nu + 2) / 2;
                const Polynomial q = quadratic(red(model_.a2(), 1), red(model_.a4(), e + 1), red(model_.a6(), 2 * e + 1));
                if (gcd(q, q.derivative()).degree() == 0) {
                    return finish(KodairaType::istar(nu), 4, ReductionClass::Additive);
                }
                translate(pi_times(double_root(q), e), zero(), zero());
            }
        }
        throw std::logic_error("I*_nu subprocedure did not terminate");
    }

    WeierstrassModel model_;
    LocalFieldSpec field_;
    ResidueField k_;
    std::uint64_t p_;
};

} // namespace

LocalInvariants tate_algorithm(const WeierstrassModel &model)
{
    return TateRun(model).run();
}

bool is_cohomologically_tame(const KodairaType &type, std::uint64_t p)
{
    using F = KodairaType::Family;
    const F f = type.family();
    if (p == 2) {
        return !(f == F::II || f == F::IIstar || f == F::III || f == F::IIIstar || f == F::I0star || f == F::Istar);
    }
    if (p == 3) {
        return !(f == F::II || f == F::IIstar || f == F::IV || f == F::IVstar);
    }
    return true;
}

int error_term(const KodairaType &type, std::uint64_t p)
{
    using F = KodairaType::Family;
    const F f = type.family();
    if (p == 2) {
        if (f == F::II || f == F::IIstar) {
            return 1;
        }
        if (f == F::I0star || f == F::Istar) {
            return -2;
        }
        return 0;
    }
    if (p == 3) {
        if (f == F::II || f == F::IIstar) {
            return 1;
        }
        if (f == F::IV || f == F::IVstar) {
            return -1;
        }
    }
    return 0;
}

int component_group_order(const KodairaType &type)
{
    using F = KodairaType::Family;
    switch (type.family()) {
        case F::I0:
        case F::II:
        case F::IIstar:
            return 1;
        case F::I:
            return type.nu();
        case F::III:
        case F::IIIstar:
            return 2;
        case F::IV:
        case F::IVstar:
            return 3;
        case F::I0star:
        case F::Istar:
            return 4;
    }
    return 1;
}

} // namespace mtrace
