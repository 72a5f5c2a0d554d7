#include <mtrace/error.hpp>
#include <mtrace/rational_function.hpp>

namespace mtrace
{

RationalFunction::RationalFunction(const ResidueField &field)
    : num_(field), den_(Polynomial::constant(Residue(field, 1L)))
{
}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(Residue(num_.field(), 1L)))
{
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) {
        throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
    }
    if (!(num_.field() == den_.field())) {
        throw Error(ErrorCode::FieldMismatch, "numerator and denominator over different fields");
    }
    reduce();
}

RationalFunction RationalFunction::variable(const ResidueField &field)
{
    return RationalFunction(Polynomial::monomial(Residue(field, 1L), 1));
}

void RationalFunction::reduce()
{
    if (num_.is_zero()) {
        den_ = Polynomial::constant(Residue(num_.field(), 1L));
        return;
    }
    if (den_.degree() > 0) {
        const Polynomial g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
    }
    if (!den_.leading().is_one()) {
        const Residue inv = den_.leading().inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

long RationalFunction::valuation() const
{
    if (is_zero()) {
        throw Error(ErrorCode::InvalidArgument, "valuation of zero");
    }
    return num_.low_degree() - den_.low_degree();
}

RationalFunction RationalFunction::shift(long k) const
{
    if (k == 0 || is_zero()) {
        return *this;
    }
    RationalFunction r(*this);
    if (k > 0) {
        const long from_den = std::min(k, den_.low_degree());
        r.den_ = den_.shift_down(static_cast<unsigned>(from_den));
        r.num_ = num_.shift_up(static_cast<unsigned>(k - from_den));
    } else {
        const long want = -k;
        const long from_num = std::min(want, num_.low_degree());
        r.num_ = num_.shift_down(static_cast<unsigned>(from_num));
        r.den_ = den_.shift_up(static_cast<unsigned>(want - from_num));
    }
    return r;
}

RationalFunction RationalFunction::substitute_power(unsigned d) const
{
    // gcd(f(t^d), g(t^d)) = 1 when gcd(f, g) = 1, and leading coefficients are
    // preserved, so the result is already reduced.
    RationalFunction r(*this);
    r.num_ = num_.substitute_power(d);
    r.den_ = den_.substitute_power(d);
    return r;
}

Residue RationalFunction::value_at_zero() const
{
    if (is_zero()) {
        return Residue(field(), 0L);
    }
    if (valuation() < 0) {
        throw Error(ErrorCode::NegativeValuation, "pole at t = 0");
    }
    return num_.coeff(0) / den_.coeff(0);
}

RationalFunction &RationalFunction::operator+=(const RationalFunction &other)
{
    if (den_ == other.den_) {
        num_ += other.num_;
    } else {
        num_ = num_ * other.den_ + other.num_ * den_;
        den_ *= other.den_;
    }
    reduce();
    return *this;
}

RationalFunction &RationalFunction::operator-=(const RationalFunction &other)
{
    return *this += -other;
}

RationalFunction &RationalFunction::operator*=(const RationalFunction &other)
{
    num_ *= other.num_;
    den_ *= other.den_;
    reduce();
    return *this;
}

RationalFunction &RationalFunction::operator/=(const RationalFunction &other)
{
    if (other.is_zero()) {
        throw Error(ErrorCode::DivisionByZero, "division by zero rational function");
    }
    num_ *= other.den_;
    den_ *= other.num_;
    reduce();
    return *this;
}

RationalFunction RationalFunction::operator-() const
{
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

std::string RationalFunction::to_string(const std::string &var) const
{
    if (den_.is_one()) {
        return num_.to_string(var);
    }
    auto wrap = [&var](const Polynomial &p) {
        const std::string s = p.to_string(var);
        const bool single_term =
            s.find(" + ") == std::string::npos && s.find(" - ") == std::string::npos && s.find('*') == std::string::npos;
        return single_term ? s : "(" + s + ")";
    };
    return wrap(num_) + "/" + wrap(den_);
}

} // namespace mtrace
