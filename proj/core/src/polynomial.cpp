#include <algorithm>
#include <cstdint>
#include <optional>

#include <mtrace/error.hpp>
#include <mtrace/polynomial.hpp>

namespace mtrace
{

Polynomial::Polynomial(const ResidueField &field, std::vector<Residue> coefficients)
    : field_(field), coeffs_(std::move(coefficients))
{
    for (const auto &c : coeffs_) {
        if (!(c.field() == field_)) {
            throw Error(ErrorCode::FieldMismatch, "coefficient outside " + field_.to_string());
        }
    }
    trim();
}

Polynomial Polynomial::constant(const Residue &c)
{
    return Polynomial(c.field(), {c});
}

Polynomial Polynomial::monomial(const Residue &c, unsigned k)
{
    if (c.is_zero()) {
        return Polynomial(c.field());
    }
    std::vector<Residue> coeffs(k + 1, Residue(c.field(), 0L));
    coeffs[k] = c;
    return Polynomial(c.field(), std::move(coeffs));
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

bool Polynomial::is_one() const
{
    return coeffs_.size() == 1 && coeffs_[0].is_one();
}

Residue Polynomial::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : Residue(field_, 0L);
}

Residue Polynomial::leading() const
{
    return coeffs_.empty() ? Residue(field_, 0L) : coeffs_.back();
}

long Polynomial::low_degree() const
{
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) {
            return static_cast<long>(i);
        }
    }
    return -1;
}

Polynomial Polynomial::shift_down(unsigned k) const
{
    if (k == 0) {
        return *this;
    }
    if (!is_zero() && static_cast<long>(k) > low_degree()) {
        throw Error(ErrorCode::InvalidArgument, "shift_down past the lowest term");
    }
    if (k >= coeffs_.size()) {
        return Polynomial(field_);
    }
    return Polynomial(field_, std::vector<Residue>(coeffs_.begin() + k, coeffs_.end()));
}

Polynomial Polynomial::shift_up(unsigned k) const
{
    if (k == 0 || is_zero()) {
        return *this;
    }
    std::vector<Residue> coeffs(k, Residue(field_, 0L));
    coeffs.insert(coeffs.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(field_, std::move(coeffs));
}

Polynomial Polynomial::substitute_power(unsigned d) const
{
    if (d == 0) {
        throw Error(ErrorCode::InvalidArgument, "substitution exponent must be positive");
    }
    if (d == 1 || is_zero()) {
        return *this;
    }
    std::vector<Residue> coeffs((coeffs_.size() - 1) * d + 1, Residue(field_, 0L));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs[i * d] = coeffs_[i];
    }
    return Polynomial(field_, std::move(coeffs));
}

Polynomial Polynomial::derivative() const
{
    if (coeffs_.size() <= 1) {
        return Polynomial(field_);
    }
    std::vector<Residue> coeffs;
    coeffs.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        coeffs.push_back(coeffs_[i] * Residue(field_, static_cast<long>(i)));
    }
    return Polynomial(field_, std::move(coeffs));
}

Residue Polynomial::evaluate(const Residue &x) const
{
    Residue acc(field_, 0L);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial Polynomial::monic() const
{
    if (is_zero() || leading().is_one()) {
        return *this;
    }
    return *this * leading().inverse();
}

Polynomial &Polynomial::operator+=(const Polynomial &other)
{
    if (!(field_ == other.field_)) {
        throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
    }
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size(), Residue(field_, 0L));
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &other)
{
    return *this += -other;
}

Polynomial &Polynomial::operator*=(const Polynomial &other)
{
    if (!(field_ == other.field_)) {
        throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
    }
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Residue> out(coeffs_.size() + other.coeffs_.size() - 1, Residue(field_, 0L));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial &Polynomial::operator*=(const Residue &c)
{
    for (auto &x : coeffs_) {
        x *= c;
    }
    trim();
    return *this;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r(*this);
    for (auto &x : r.coeffs_) {
        x = -x;
    }
    return r;
}

std::string Polynomial::to_string(const std::string &var) const
{
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (long i = degree(); i >= 0; --i) {
        const Residue &c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) {
            continue;
        }
        mpq_class v = c.value();
        const bool negative = field_.is_rationals() && sgn(v) < 0;
        if (negative) {
            v = -v;
        }
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mono;
        if (i >= 1) {
            mono = var;
            if (i > 1) {
                mono += "^" + std::to_string(i);
            }
        }
        if (mono.empty()) {
            out += v.get_str();
        } else if (v == 1) {
            out += mono;
        } else {
            out += v.get_str() + "*" + mono;
        }
    }
    return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial &a, const Polynomial &b)
{
    if (b.is_zero()) {
        throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    }
    const ResidueField &k = a.field();
    Polynomial q(k);
    Polynomial r(a);
    const Residue inv_lead = b.leading().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const auto shift = static_cast<unsigned>(r.degree() - b.degree());
        Polynomial term = Polynomial::monomial(r.leading() * inv_lead, shift);
        q += term;
        r -= term * b;
    }
    return {std::move(q), std::move(r)};
}

namespace
{

using Limbs = std::vector<std::uint64_t>;

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t q)
{
    std::uint64_t r = 1;
    for (b %= q; e > 0; e >>= 1, b = b * b % q) {
        if (e & 1) {
            r = r * b % q;
        }
    }
    return r;
}

// Image of a polynomial over Q in F_q[x]; empty if q divides a denominator or
// the leading coefficient.
std::optional<Limbs> reduce_mod(const Polynomial &f, std::uint64_t q)
{
    Limbs out;
    out.reserve(f.coefficients().size());
    for (const auto &c : f.coefficients()) {
        const std::uint64_t den = mpz_fdiv_ui(c.value().get_den_mpz_t(), q);
        if (den == 0) {
            return std::nullopt;
        }
        const std::uint64_t num = mpz_fdiv_ui(c.value().get_num_mpz_t(), q);
        out.push_back(num * pow_mod(den, q - 2, q) % q);
    }
    if (out.empty() || out.back() == 0) {
        return std::nullopt;
    }
    return out;
}

void trim_limbs(Limbs &f)
{
    while (!f.empty() && f.back() == 0) {
        f.pop_back();
    }
}

long gcd_degree_mod(Limbs x, Limbs y, std::uint64_t q)
{
    while (!y.empty()) {
        const std::uint64_t inv = pow_mod(y.back(), q - 2, q);
        while (x.size() >= y.size()) {
            const std::uint64_t c = x.back() * inv % q;
            const std::size_t shift = x.size() - y.size();
            for (std::size_t i = 0; i < y.size(); ++i) {
                x[shift + i] = (x[shift + i] + (q - c) * y[i]) % q;
            }
            trim_limbs(x);
        }
        std::swap(x, y);
    }
    return static_cast<long>(x.size()) - 1;
}

// True if some good prime certifies gcd(a, b) = 1 over Q.
bool coprime_mod_primes(const Polynomial &a, const Polynomial &b)
{
    for (std::uint64_t q : {2147483647ULL, 2147483629ULL, 2147483587ULL}) {
        const auto x = reduce_mod(a, q);
        const auto y = reduce_mod(b, q);
        if (x && y) {
            return gcd_degree_mod(*x, *y, q) == 0;
        }
    }
    return false;
}

} // namespace

Polynomial gcd(const Polynomial &a, const Polynomial &b)
{
    if (a.is_zero() || b.is_zero()) {
        return (a.is_zero() ? b : a).monic();
    }
    // Pull out the common power of x first; what remains has a unit constant
    // term on at least one side.
    const long k = std::min(a.low_degree(), b.low_degree());
    Polynomial x = a.shift_down(static_cast<unsigned>(k));
    Polynomial y = b.shift_down(static_cast<unsigned>(k));
    const Polynomial xk = Polynomial::monomial(Residue(a.field(), 1L), static_cast<unsigned>(k));
    if (x.degree() == 0 || y.degree() == 0) {
        return xk;
    }
    if (a.field().is_rationals() && coprime_mod_primes(x, y)) {
        return xk;
    }
    y = y.monic();
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).second.monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic() * xk;
}

Residue cubic_discriminant(const Residue &b, const Residue &c, const Residue &d)
{
    const ResidueField &k = b.field();
    const Residue four(k, 4L), eighteen(k, 18L), twentyseven(k, 27L);
    return b * b * c * c - four * c * c * c - four * b * b * b * d - twentyseven * d * d + eighteen * b * c * d;
}

bool repeated_root(const Polynomial &f, Residue &root)
{
    if (f.degree() < 2) {
        return false;
    }
    const Polynomial g = gcd(f, f.derivative());
    const long m = g.degree();
    if (m <= 0) {
        return false;
    }
    const ResidueField &k = f.field();
    const auto p = k.characteristic();
    Residue candidate(k, 0L);
    if (p == 0 || static_cast<std::uint64_t>(m) % p != 0) {
        candidate = -g.coeff(static_cast<std::size_t>(m - 1)) / Residue(k, m);
    } else if (static_cast<std::uint64_t>(m) == p) {
        // g = (x - r)^p = x^p - r^p, and Frobenius is the identity on F_p.
        candidate = -g.coeff(0);
    } else {
        throw Error(ErrorCode::ResidueRootNeeded, "repeated root of " + f.to_string() + " not determined");
    }
    Polynomial expected = Polynomial::constant(Residue(k, 1L));
    const Polynomial linear(k, {-candidate, Residue(k, 1L)});
    for (long i = 0; i < m; ++i) {
        expected *= linear;
    }
    if (!(expected == g)) {
        throw Error(ErrorCode::ResidueRootNeeded, "repeated roots of " + f.to_string() + " are not rational over " +
                                                      k.to_string());
    }
    root = candidate;
    return true;
}

} // namespace mtrace
