#include <algorithm>

#include <mtrace/error.hpp>
#include <mtrace/expression.hpp>
#include <mtrace/grothendieck.hpp>

namespace mtrace
{

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients) : coeffs_(std::move(coefficients))
{
    trim();
}

IntPolynomial IntPolynomial::constant(const mpz_class &c)
{
    return IntPolynomial({c});
}

IntPolynomial IntPolynomial::monomial(const mpz_class &c, unsigned k)
{
    std::vector<mpz_class> coeffs(k + 1, mpz_class(0));
    coeffs[k] = c;
    return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim()
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
        coeffs_.pop_back();
    }
}

mpz_class IntPolynomial::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : mpz_class(0);
}

mpz_class IntPolynomial::leading() const
{
    return coeffs_.empty() ? mpz_class(0) : coeffs_.back();
}

mpz_class IntPolynomial::evaluate(const mpz_class &x) const
{
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

IntPolynomial &IntPolynomial::operator+=(const IntPolynomial &other)
{
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size(), mpz_class(0));
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    trim();
    return *this;
}

IntPolynomial &IntPolynomial::operator-=(const IntPolynomial &other)
{
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size(), mpz_class(0));
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    trim();
    return *this;
}

IntPolynomial &IntPolynomial::operator*=(const IntPolynomial &other)
{
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<mpz_class> out(coeffs_.size() + other.coeffs_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

IntPolynomial &IntPolynomial::operator*=(const mpz_class &c)
{
    for (auto &x : coeffs_) {
        x *= c;
    }
    trim();
    return *this;
}

std::string IntPolynomial::to_string(const std::string &var) const
{
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (long i = degree(); i >= 0; --i) {
        mpz_class c = coeffs_[static_cast<std::size_t>(i)];
        if (sgn(c) == 0) {
            continue;
        }
        const bool negative = sgn(c) < 0;
        if (negative) {
            c = -c;
        }
        out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
        std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        if (mono.empty()) {
            out += c.get_str();
        } else if (c == 1) {
            out += mono;
        } else {
            out += c.get_str() + "*" + mono;
        }
    }
    return out;
}

Generator Generator::proj_space(int n)
{
    if (n < 1) {
        throw Error(ErrorCode::InvalidArgument, "projective space P^n needs n >= 1");
    }
    return {Kind::ProjSpace, n};
}

Generator Generator::curve(int genus)
{
    if (genus < 0) {
        throw Error(ErrorCode::InvalidArgument, "curve genus must be >= 0");
    }
    return {Kind::Curve, genus};
}

std::string Generator::to_string() const
{
    switch (kind) {
        case Kind::Lefschetz:
            return "L";
        case Kind::ProjSpace:
            return "Pn(" + std::to_string(index) + ")";
        case Kind::Gm:
            return "Gm";
        case Kind::Curve:
            return "C(" + std::to_string(index) + ")";
    }
    return "?";
}

GrothElement::GrothElement(long n)
{
    if (n != 0) {
        terms_[Monomial{}] = n;
    }
}

GrothElement GrothElement::of(const Generator &g)
{
    GrothElement e;
    e.terms_[Monomial{{g, 1U}}] = 1;
    return e;
}

GrothElement GrothElement::from_integer(const mpz_class &n)
{
    GrothElement e;
    e.add_term(Monomial{}, n);
    return e;
}

void GrothElement::add_term(const Monomial &m, const mpz_class &c)
{
    if (sgn(c) == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) {
            terms_.erase(it);
        }
    }
}

GrothElement &GrothElement::operator+=(const GrothElement &other)
{
    for (const auto &[m, c] : other.terms_) {
        add_term(m, c);
    }
    return *this;
}

GrothElement &GrothElement::operator-=(const GrothElement &other)
{
    for (const auto &[m, c] : other.terms_) {
        add_term(m, -c);
    }
    return *this;
}

namespace
{

Monomial multiply(const Monomial &a, const Monomial &b)
{
    Monomial out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first < j->first)) {
            out.push_back(*i++);
        } else if (i == a.end() || j->first < i->first) {
            out.push_back(*j++);
        } else {
            out.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

GrothElement &GrothElement::operator*=(const GrothElement &other)
{
    GrothElement out;
    for (const auto &[ma, ca] : terms_) {
        for (const auto &[mb, cb] : other.terms_) {
            out.add_term(multiply(ma, mb), ca * cb);
        }
    }
    *this = std::move(out);
    return *this;
}

GrothElement GrothElement::operator-() const
{
    GrothElement out(*this);
    for (auto &[m, c] : out.terms_) {
        c = -c;
    }
    return out;
}

std::string GrothElement::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    // Highest monomials first, constant last.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto &[m, c0] = *it;
        mpz_class c = c0;
        const bool negative = sgn(c) < 0;
        if (negative) {
            c = -c;
        }
        out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
        std::string mono;
        for (const auto &[g, e] : m) {
            if (!mono.empty()) {
                mono += "*";
            }
            mono += g.to_string();
            if (e > 1) {
                mono += "^" + std::to_string(e);
            }
        }
        if (mono.empty()) {
            out += c.get_str();
        } else if (c == 1) {
            out += mono;
        } else {
            out += c.get_str() + "*" + mono;
        }
    }
    return out;
}

GrothElement GrothElement::parse(std::string_view expression)
{
    InfixSemantics<GrothElement> sem;
    sem.integer = [](const mpz_class &n) { return from_integer(n); };
    sem.identifier = [](std::string_view name, std::optional<long> arg) {
        auto no_arg = [&] {
            if (arg) {
                throw ParseError(0, "'" + std::string(name) + "' takes no argument");
            }
        };
        auto need_arg = [&]() -> int {
            if (!arg) {
                throw ParseError(0, "'" + std::string(name) + "' needs an argument, e.g. " + std::string(name) + "(1)");
            }
            return static_cast<int>(*arg);
        };
        if (name == "pt") {
            no_arg();
            return point();
        }
        if (name == "L") {
            no_arg();
            return of(Generator::lefschetz());
        }
        if (name == "Gm") {
            no_arg();
            return of(Generator::gm());
        }
        if (name == "Pn") {
            return of(Generator::proj_space(need_arg()));
        }
        if (name == "C") {
            return of(Generator::curve(need_arg()));
        }
        throw ParseError(0, "unknown generator '" + std::string(name) + "' (expected pt, L, Pn(n), Gm, C(g))");
    };
    try {
        return parse_infix<GrothElement>(expression, sem);
    } catch (const ParseError &) {
        throw;
    } catch (const Error &e) {
        throw ParseError(0, e.what());
    }
}

IntPolynomial poincare(const Generator &g)
{
    switch (g.kind) {
        case Generator::Kind::Lefschetz:
            return IntPolynomial::monomial(1, 2);
        case Generator::Kind::ProjSpace: {
            std::vector<mpz_class> c(2 * static_cast<std::size_t>(g.index) + 1, mpz_class(0));
            for (std::size_t i = 0; i < c.size(); i += 2) {
                c[i] = 1;
            }
            return IntPolynomial(std::move(c));
        }
        case Generator::Kind::Gm:
            return IntPolynomial({-1, 0, 1});
        case Generator::Kind::Curve:
            return IntPolynomial({1, -2 * g.index, 1});
    }
    return {};
}

namespace
{

template <typename Realize>
IntPolynomial realize(const GrothElement &a, Realize on_generator)
{
    IntPolynomial total;
    for (const auto &[m, c] : a.terms()) {
        IntPolynomial term = IntPolynomial::constant(c);
        for (const auto &[g, e] : m) {
            const IntPolynomial pg = on_generator(g);
            for (unsigned i = 0; i < e; ++i) {
                term *= pg;
            }
        }
        total += term;
    }
    return total;
}

} // namespace

IntPolynomial poincare(const GrothElement &a)
{
    return realize(a, [](const Generator &g) { return poincare(g); });
}

mpz_class euler(const GrothElement &a)
{
    return poincare(a).evaluate(1);
}

std::optional<IntPolynomial> point_count(const GrothElement &a)
{
    for (const auto &[m, c] : a.terms()) {
        for (const auto &[g, e] : m) {
            if (g.kind == Generator::Kind::Curve) {
                return std::nullopt;
            }
        }
    }
    return realize(a, [](const Generator &g) {
        switch (g.kind) {
            case Generator::Kind::Lefschetz:
                return IntPolynomial::monomial(1, 1);
            case Generator::Kind::ProjSpace:
                return IntPolynomial(std::vector<mpz_class>(static_cast<std::size_t>(g.index) + 1, mpz_class(1)));
            case Generator::Kind::Gm:
                return IntPolynomial({-1, 1});
            case Generator::Kind::Curve:
                break;
        }
        return IntPolynomial{};
    });
}

QuotientComparison eq_mod_L_minus_1(const GrothElement &a, const GrothElement &b)
{
    // T^2 = 1 modulo T^2 - 1: even coefficients collapse onto 1, odd onto T.
    const IntPolynomial diff = poincare(a - b);
    QuotientComparison out{QuotientVerdict::Indistinguishable, 0, 0};
    for (std::size_t i = 0; i < diff.coefficients().size(); ++i) {
        (i % 2 == 0 ? out.constant : out.linear) += diff.coefficients()[i];
    }
    if (sgn(out.constant) != 0 || sgn(out.linear) != 0) {
        out.verdict = QuotientVerdict::Distinct;
    }
    return out;
}

std::string to_string(QuotientVerdict v)
{
    return v == QuotientVerdict::Distinct ? "Distinct" : "Indistinguishable";
}

} // namespace mtrace
