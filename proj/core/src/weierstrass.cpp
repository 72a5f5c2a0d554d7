#include <sstream>
#include <stdexcept>

#include <mtrace/error.hpp>
#include <mtrace/weierstrass.hpp>

namespace mtrace
{

StandardInvariants compute_invariants(const ValuedElement &a1, const ValuedElement &a2, const ValuedElement &a3,
                                      const ValuedElement &a4, const ValuedElement &a6)
{
    const LocalFieldSpec &k = a1.field();
    auto c = [&k](long n) { return ValuedElement(k, n); };

    ValuedElement b2 = a1 * a1 + c(4) * a2;
    ValuedElement b4 = c(2) * a4 + a1 * a3;
    ValuedElement b6 = a3 * a3 + c(4) * a6;
    ValuedElement b8 = a1 * a1 * a6 + c(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    ValuedElement c4 = b2 * b2 - c(24) * b4;
    ValuedElement c6 = -b2 * b2 * b2 + c(36) * b2 * b4 - c(216) * b6;
    ValuedElement disc = -b2 * b2 * b8 - c(8) * b4 * b4 * b4 - c(27) * b6 * b6 + c(9) * b2 * b4 * b6;

    if (disc.is_zero()) {
        throw Error(ErrorCode::SingularCurve, "discriminant vanishes");
    }
    // Sign-convention self test; both identities hold over Z[a1..a6].
    if (!(c(4) * b8 == b2 * b6 - b4 * b4) || !(c(1728) * disc == c4 * c4 * c4 - c6 * c6)) {
        throw std::logic_error("Weierstrass invariant identities failed");
    }
    ValuedElement j = c4 * c4 * c4 / disc;
    return StandardInvariants{std::move(b2), std::move(b4), std::move(b6), std::move(b8),
                              std::move(c4), std::move(c6), std::move(disc), std::move(j)};
}

WeierstrassModel::WeierstrassModel(const ValuedElement &a1, const ValuedElement &a2, const ValuedElement &a3,
                                   const ValuedElement &a4, const ValuedElement &a6)
    : a1_(a1), a2_(a2), a3_(a3), a4_(a4), a6_(a6), inv_(compute_invariants(a1, a2, a3, a4, a6))
{
    const std::array<std::pair<const char *, const ValuedElement *>, 5> coeffs{
        {{"a1", &a1_}, {"a2", &a2_}, {"a3", &a3_}, {"a4", &a4_}, {"a6", &a6_}}};
    for (const auto &[name, a] : coeffs) {
        if (!(a->field() == a1_.field())) {
            throw Error(ErrorCode::FieldMismatch, std::string(name) + " lives in another field");
        }
        if (a->valuation() < 0) {
            throw Error(ErrorCode::NonIntegralModel, std::string(name) + " = " + a->to_string() + " is not integral");
        }
    }
}

WeierstrassModel WeierstrassModel::from_literals(const LocalFieldSpec &field, std::string_view a1, std::string_view a2,
                                                 std::string_view a3, std::string_view a4, std::string_view a6)
{
    auto parse = [&field](std::string_view s) {
        return s.empty() ? ValuedElement::zero(field) : ValuedElement::parse(field, s);
    };
    return WeierstrassModel(parse(a1), parse(a2), parse(a3), parse(a4), parse(a6));
}

std::map<std::string, std::string, std::less<>> parse_key_values(std::string_view text)
{
    std::map<std::string, std::string, std::less<>> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        pos = end + 1;
        auto trim = [](std::string_view s) {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string_view::npos) {
                return std::string_view{};
            }
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        };
        line = trim(line);
        if (line.empty() || line.front() == '#') {
            if (end == text.size()) {
                break;
            }
            continue;
        }
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) {
            throw ParseError(line_no, "expected 'key: value'");
        }
        // Field specs contain ':' themselves, so split on the first one only.
        out.insert_or_assign(std::string(trim(line.substr(0, colon))), std::string(trim(line.substr(colon + 1))));
        if (end == text.size()) {
            break;
        }
    }
    return out;
}

WeierstrassModel WeierstrassModel::parse_record(std::string_view text)
{
    const auto kv = parse_key_values(text);
    const auto field_it = kv.find("field");
    if (field_it == kv.end()) {
        throw ParseError(0, "curve record has no 'field' key");
    }
    const LocalFieldSpec field = LocalFieldSpec::parse(field_it->second);
    auto get = [&kv](const char *key) -> std::string_view {
        const auto it = kv.find(key);
        return it == kv.end() ? std::string_view{} : std::string_view(it->second);
    };
    return from_literals(field, get("a1"), get("a2"), get("a3"), get("a4"), get("a6"));
}

WeierstrassModel WeierstrassModel::transform(const ValuedElement &u, const ValuedElement &r, const ValuedElement &s,
                                             const ValuedElement &t) const
{
    if (u.is_zero()) {
        throw Error(ErrorCode::ZeroScale, "u = 0 in coordinate change");
    }
    const LocalFieldSpec &k = field();
    auto c = [&k](long n) { return ValuedElement(k, n); };

    const ValuedElement ui = ValuedElement::one(k) / u;
    const ValuedElement ui2 = ui * ui;
    const ValuedElement ui3 = ui2 * ui;
    const ValuedElement ui4 = ui2 * ui2;
    const ValuedElement ui6 = ui3 * ui3;

    ValuedElement b1 = (a1_ + c(2) * s) * ui;
    ValuedElement b2 = (a2_ - s * a1_ + c(3) * r - s * s) * ui2;
    ValuedElement b3 = (a3_ + r * a1_ + c(2) * t) * ui3;
    ValuedElement b4 = (a4_ - s * a3_ + c(2) * r * a2_ - (t + r * s) * a1_ + c(3) * r * r - c(2) * s * t) * ui4;
    ValuedElement b6 = (a6_ + r * a4_ + r * r * a2_ + r * r * r - t * a3_ - t * t - r * t * a1_) * ui6;
    return WeierstrassModel(b1, b2, b3, b4, b6);
}

WeierstrassModel WeierstrassModel::base_change(unsigned d) const
{
    return WeierstrassModel(a1_.base_change_substitute(d), a2_.base_change_substitute(d),
                            a3_.base_change_substitute(d), a4_.base_change_substitute(d),
                            a6_.base_change_substitute(d));
}

std::string WeierstrassModel::to_record() const
{
    std::ostringstream os;
    os << "field: " << field() << '\n'
       << "a1: " << a1_ << '\n'
       << "a2: " << a2_ << '\n'
       << "a3: " << a3_ << '\n'
       << "a4: " << a4_ << '\n'
       << "a6: " << a6_ << '\n';
    return os.str();
}

} // namespace mtrace
