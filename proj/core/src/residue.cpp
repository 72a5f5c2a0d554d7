#include <mtrace/error.hpp>
#include <mtrace/residue.hpp>

namespace mtrace
{

bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    const mpz_class z(static_cast<unsigned long>(n));
    return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

ResidueField ResidueField::prime_field(std::uint64_t p)
{
    if (!is_prime(p)) {
        throw Error(ErrorCode::InvalidArgument, "residue characteristic " + std::to_string(p) + " is not prime");
    }
    ResidueField f;
    f.p_ = p;
    return f;
}

std::string ResidueField::to_string() const
{
    return p_ == 0 ? std::string("Q") : "F" + std::to_string(p_);
}

Residue::Residue(const ResidueField &field, long value) : field_(field), value_(value)
{
    normalize();
}

Residue::Residue(const ResidueField &field, const mpq_class &value) : field_(field), value_(value)
{
    normalize();
}

void Residue::normalize()
{
    if (field_.is_rationals()) {
        value_.canonicalize();
        return;
    }
    const auto q = static_cast<unsigned long>(field_.characteristic());
    if (mpz_cmp_ui(value_.get_den_mpz_t(), 1) == 0) {
        mpz_ptr num = value_.get_num_mpz_t();
        if (mpz_sgn(num) < 0 || mpz_cmp_ui(num, q) >= 0) {
            mpz_fdiv_r_ui(num, num, q);
        }
        return;
    }
    const mpz_class p(q);
    mpz_class den = value_.get_den();
    mpz_class num = value_.get_num();
    if (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) {
        throw Error(ErrorCode::DivisionByZero, "denominator vanishes in " + field_.to_string());
    }
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    mpz_class r = num * inv;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
    value_ = mpq_class(r);
}

void Residue::check_same_field(const Residue &other) const
{
    if (!(field_ == other.field_)) {
        throw Error(ErrorCode::FieldMismatch, "residues over " + field_.to_string() + " and " + other.field_.to_string());
    }
}

Residue &Residue::operator+=(const Residue &other)
{
    check_same_field(other);
    value_ += other.value_;
    reduce_after_op();
    return *this;
}

Residue &Residue::operator-=(const Residue &other)
{
    check_same_field(other);
    value_ -= other.value_;
    reduce_after_op();
    return *this;
}

Residue &Residue::operator*=(const Residue &other)
{
    check_same_field(other);
    value_ *= other.value_;
    reduce_after_op();
    return *this;
}

Residue &Residue::operator/=(const Residue &other)
{
    check_same_field(other);
    return *this *= other.inverse();
}

Residue Residue::operator-() const
{
    Residue r(*this);
    r.value_ = -r.value_;
    r.reduce_after_op();
    return r;
}

Residue Residue::inverse() const
{
    if (is_zero()) {
        throw Error(ErrorCode::DivisionByZero, "inverse of zero residue");
    }
    Residue r(*this);
    r.value_ = 1 / r.value_;
    r.normalize();
    return r;
}

Residue Residue::pow(unsigned long e) const
{
    Residue result(field_, 1L);
    Residue base(*this);
    while (e != 0) {
        if (e & 1UL) {
            result *= base;
        }
        base *= base;
        e >>= 1;
    }
    return result;
}

std::string Residue::to_string() const
{
    return value_.get_str();
}

std::ostream &operator<<(std::ostream &os, const Residue &r)
{
    return os << r.to_string();
}

} // namespace mtrace
