#include <charconv>

#include <mtrace/error.hpp>
#include <mtrace/expression.hpp>
#include <mtrace/localfield.hpp>

namespace mtrace
{

namespace
{

std::uint64_t parse_prime(std::string_view digits, std::string_view spec)
{
    std::uint64_t p = 0;
    const auto *end = digits.data() + digits.size();
    const auto [ptr, ec] = std::from_chars(digits.data(), end, p);
    if (digits.empty() || ec != std::errc{} || ptr != end) {
        throw ParseError(0, "bad field spec '" + std::string(spec) + "'");
    }
    if (!is_prime(p)) {
        throw ParseError(0, "field spec '" + std::string(spec) + "': " + std::to_string(p) + " is not prime");
    }
    return p;
}

// Largest e with p^e | n, n != 0.
long remove_factor(const mpz_class &n, const mpz_class &p)
{
    mpz_class rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

mpz_class prime_of(const LocalFieldSpec &f)
{
    return mpz_class(static_cast<unsigned long>(f.residue_characteristic()));
}

} // namespace

LocalFieldSpec LocalFieldSpec::padic(std::uint64_t p)
{
    return LocalFieldSpec(Kind::Padic, ResidueField::prime_field(p));
}

LocalFieldSpec LocalFieldSpec::laurent(const ResidueField &residue_field)
{
    return LocalFieldSpec(Kind::Laurent, residue_field);
}

LocalFieldSpec LocalFieldSpec::parse(std::string_view spec)
{
    constexpr std::string_view padic_prefix = "padic:";
    constexpr std::string_view laurent_prefix = "laurent:";
    if (spec.starts_with(padic_prefix)) {
        return padic(parse_prime(spec.substr(padic_prefix.size()), spec));
    }
    if (spec.starts_with(laurent_prefix)) {
        const std::string_view k = spec.substr(laurent_prefix.size());
        if (k == "Q") {
            return laurent(ResidueField::rationals());
        }
        if (k.starts_with("F")) {
            return laurent(ResidueField::prime_field(parse_prime(k.substr(1), spec)));
        }
    }
    throw ParseError(0, "bad field spec '" + std::string(spec) + "' (expected padic:<p>, laurent:Q or laurent:F<p>)");
}

std::string LocalFieldSpec::to_string() const
{
    if (is_padic()) {
        return "padic:" + std::to_string(residue_characteristic());
    }
    return "laurent:" + residue_field_.to_string();
}

std::ostream &operator<<(std::ostream &os, const LocalFieldSpec &f)
{
    return os << f.to_string();
}

long Valuation::value() const
{
    if (is_infinite()) {
        throw Error(ErrorCode::InvalidArgument, "valuation of zero is infinite");
    }
    return v_;
}

std::string Valuation::to_string() const
{
    return is_infinite() ? std::string("inf") : std::to_string(v_);
}

std::ostream &operator<<(std::ostream &os, const Valuation &v)
{
    return os << v.to_string();
}

ValuedElement::ValuedElement(const LocalFieldSpec &field) : field_(field)
{
    if (field_.is_padic()) {
        rep_ = mpq_class(0);
    } else {
        rep_ = RationalFunction(field_.residue_field());
    }
}

ValuedElement::ValuedElement(const LocalFieldSpec &field, long value) : ValuedElement(field, mpq_class(value)) {}

ValuedElement::ValuedElement(const LocalFieldSpec &field, const mpq_class &value) : field_(field)
{
    if (field_.is_padic()) {
        mpq_class q(value);
        q.canonicalize();
        rep_ = q;
    } else {
        const Residue c(field_.residue_field(), value);
        rep_ = RationalFunction(Polynomial::constant(c));
    }
}

ValuedElement::ValuedElement(const LocalFieldSpec &field, RationalFunction value) : field_(field)
{
    if (!field_.is_laurent()) {
        throw Error(ErrorCode::UnsupportedBackend, "rational functions in t need a Laurent field");
    }
    if (!(value.field() == field_.residue_field())) {
        throw Error(ErrorCode::FieldMismatch, "rational function over the wrong residue field");
    }
    rep_ = std::move(value);
}

ValuedElement ValuedElement::uniformizer(const LocalFieldSpec &field)
{
    if (field.is_padic()) {
        return ValuedElement(field, mpq_class(prime_of(field)));
    }
    return ValuedElement(field, RationalFunction::variable(field.residue_field()));
}

ValuedElement ValuedElement::lift(const LocalFieldSpec &field, const Residue &r)
{
    if (!(r.field() == field.residue_field())) {
        throw Error(ErrorCode::FieldMismatch, "residue from " + r.field().to_string());
    }
    return ValuedElement(field, r.value());
}

ValuedElement ValuedElement::parse(const LocalFieldSpec &field, std::string_view literal)
{
    InfixSemantics<ValuedElement> sem;
    sem.integer = [&field](const mpz_class &n) { return ValuedElement(field, mpq_class(n)); };
    sem.identifier = [&field](std::string_view name, std::optional<long> arg) {
        if (name != "t" || arg) {
            throw ParseError(0, "unknown symbol '" + std::string(name) + "' in element literal");
        }
        if (!field.is_laurent()) {
            throw ParseError(0, "the variable t is only available over Laurent fields");
        }
        return uniformizer(field);
    };
    sem.divide = [](const ValuedElement &a, const ValuedElement &b) { return a / b; };
    try {
        return parse_infix<ValuedElement>(literal, sem);
    } catch (const ParseError &) {
        throw;
    } catch (const Error &e) {
        throw ParseError(0, "'" + std::string(literal) + "': " + e.what());
    }
}

bool ValuedElement::is_zero() const
{
    if (const auto *q = as_rational()) {
        return sgn(*q) == 0;
    }
    return std::get<RationalFunction>(rep_).is_zero();
}

Valuation ValuedElement::valuation() const
{
    if (is_zero()) {
        return Valuation::infinity();
    }
    if (const auto *q = as_rational()) {
        const mpz_class p = prime_of(field_);
        return Valuation(remove_factor(q->get_num(), p) - remove_factor(q->get_den(), p));
    }
    return Valuation(std::get<RationalFunction>(rep_).valuation());
}

Residue ValuedElement::reduce() const
{
    if (valuation() < 0) {
        throw Error(ErrorCode::NegativeValuation, to_string() + " is not in the valuation ring");
    }
    if (const auto *q = as_rational()) {
        return Residue(field_.residue_field(), *q);
    }
    return std::get<RationalFunction>(rep_).value_at_zero();
}

ValuedElement ValuedElement::shift(long k) const
{
    if (k == 0 || is_zero()) {
        return *this;
    }
    ValuedElement r(*this);
    if (auto *q = std::get_if<mpq_class>(&r.rep_)) {
        mpz_class pk;
        mpz_pow_ui(pk.get_mpz_t(), prime_of(field_).get_mpz_t(), static_cast<unsigned long>(k > 0 ? k : -k));
        if (k > 0) {
            *q *= pk;
        } else {
            *q /= pk;
        }
        q->canonicalize();
    } else {
        r.rep_ = std::get<RationalFunction>(rep_).shift(k);
    }
    return r;
}

ValuedElement ValuedElement::base_change_substitute(unsigned d) const
{
    if (!field_.is_laurent()) {
        throw Error(ErrorCode::UnsupportedBackend, "ramified base change needs a Laurent field");
    }
    if (d == 0) {
        throw Error(ErrorCode::InvalidArgument, "base change degree must be >= 1");
    }
    return ValuedElement(field_, std::get<RationalFunction>(rep_).substitute_power(d));
}

ValuedElement ValuedElement::pow(unsigned e) const
{
    ValuedElement result = one(field_);
    ValuedElement base(*this);
    while (e != 0) {
        if (e & 1U) {
            result *= base;
        }
        base *= base;
        e >>= 1;
    }
    return result;
}

void ValuedElement::check_same_field(const ValuedElement &other) const
{
    if (!(field_ == other.field_)) {
        throw Error(ErrorCode::FieldMismatch, "elements of " + field_.to_string() + " and " + other.field_.to_string());
    }
}

ValuedElement &ValuedElement::operator+=(const ValuedElement &other)
{
    check_same_field(other);
    if (auto *q = std::get_if<mpq_class>(&rep_)) {
        *q += std::get<mpq_class>(other.rep_);
    } else {
        std::get<RationalFunction>(rep_) += std::get<RationalFunction>(other.rep_);
    }
    return *this;
}

ValuedElement &ValuedElement::operator-=(const ValuedElement &other)
{
    check_same_field(other);
    if (auto *q = std::get_if<mpq_class>(&rep_)) {
        *q -= std::get<mpq_class>(other.rep_);
    } else {
        std::get<RationalFunction>(rep_) -= std::get<RationalFunction>(other.rep_);
    }
    return *this;
}

ValuedElement &ValuedElement::operator*=(const ValuedElement &other)
{
    check_same_field(other);
    if (auto *q = std::get_if<mpq_class>(&rep_)) {
        *q *= std::get<mpq_class>(other.rep_);
    } else {
        std::get<RationalFunction>(rep_) *= std::get<RationalFunction>(other.rep_);
    }
    return *this;
}

ValuedElement &ValuedElement::operator/=(const ValuedElement &other)
{
    check_same_field(other);
    if (other.is_zero()) {
        throw Error(ErrorCode::DivisionByZero, "division by zero in " + field_.to_string());
    }
    if (auto *q = std::get_if<mpq_class>(&rep_)) {
        *q /= std::get<mpq_class>(other.rep_);
    } else {
        std::get<RationalFunction>(rep_) /= std::get<RationalFunction>(other.rep_);
    }
    return *this;
}

ValuedElement ValuedElement::operator-() const
{
    ValuedElement r(*this);
    if (auto *q = std::get_if<mpq_class>(&r.rep_)) {
        *q = -*q;
    } else {
        r.rep_ = -std::get<RationalFunction>(rep_);
    }
    return r;
}

std::string ValuedElement::to_string() const
{
    if (const auto *q = as_rational()) {
        return q->get_str();
    }
    return std::get<RationalFunction>(rep_).to_string("t");
}

std::ostream &operator<<(std::ostream &os, const ValuedElement &x)
{
    return os << x.to_string();
}

} // namespace mtrace
