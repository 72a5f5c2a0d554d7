#include <sstream>

#include <mtrace/error.hpp>
#include <mtrace/kodaira_db.hpp>

namespace mtrace
{

namespace
{

using F = KodairaType::Family;

// Center of multiplicity `center` joined once to each tail.
SncConfiguration star(long center, std::initializer_list<long> tails)
{
    SncConfiguration c;
    c.components.push_back({0, center, 0});
    int id = 1;
    for (long n : tails) {
        c.components.push_back({id, n, 0});
        c.edges.emplace_back(0, id);
        ++id;
    }
    return c;
}

// Chain 0 - 1 - ... with the given multiplicities.
SncConfiguration chain(std::initializer_list<long> mults)
{
    SncConfiguration c;
    int id = 0;
    for (long n : mults) {
        c.components.push_back({id, n, 0});
        if (id > 0) {
            c.edges.emplace_back(id - 1, id);
        }
        ++id;
    }
    return c;
}

// 2 cos(2 pi d / e) for e in {1, 2, 3, 4, 6}.
int root_of_unity_trace(int e, int d)
{
    const int r = ((d % e) + e) % e;
    switch (e) {
        case 1:
            return 2;
        case 2:
            return r == 0 ? 2 : -2;
        case 3:
            return r == 0 ? 2 : -1;
        case 4:
            return r == 0 ? 2 : (r == 2 ? -2 : 0);
        case 6: {
            constexpr int table[6] = {2, 1, -1, -2, -1, 1};
            return table[r];
        }
        default:
            break;
    }
    throw Error(ErrorCode::InvalidArgument, "monodromy order " + std::to_string(e) + " is not 1, 2, 3, 4 or 6");
}

} // namespace

std::string Monodromy::to_string() const
{
    switch (kind) {
        case Kind::PotentiallyGood:
            return "potentially-good(order " + std::to_string(order) + ")";
        case Kind::Multiplicative:
            return "multiplicative";
        case Kind::TwistedMultiplicative:
            return "twisted-multiplicative";
    }
    return "?";
}

SncConfiguration snc_configuration(const KodairaType &type)
{
    switch (type.family()) {
        case F::I0: {
            SncConfiguration c;
            c.components.push_back({0, 1, 1});
            return c;
        }
        case F::I: {
            if (type.nu() == 1) {
                // Nodal cubic blown up at the node: the exceptional curve has
                // multiplicity 2 and meets the strict transform twice.
                SncConfiguration c;
                c.components = {{0, 1, 0}, {1, 2, 0}};
                c.edges = {{0, 1}, {0, 1}};
                return c;
            }
            SncConfiguration c;
            const int nu = type.nu();
            for (int i = 0; i < nu; ++i) {
                c.components.push_back({i, 1, 0});
                c.edges.emplace_back(i, (i + 1) % nu);
            }
            return c;
        }
        case F::II:
            return star(6, {1, 2, 3});
        case F::III:
            return star(4, {1, 1, 2});
        case F::IV:
            return star(3, {1, 1, 1});
        case F::I0star:
            return star(2, {1, 1, 1, 1});
        case F::Istar: {
            const int nu = type.nu();
            SncConfiguration c;
            for (int i = 0; i <= nu; ++i) {
                c.components.push_back({i, 2, 0});
                if (i > 0) {
                    c.edges.emplace_back(i - 1, i);
                }
            }
            for (int k = 1; k <= 4; ++k) {
                const int id = nu + k;
                c.components.push_back({id, 1, 0});
                c.edges.emplace_back(k <= 2 ? 0 : nu, id);
            }
            return c;
        }
        case F::IVstar: {
            SncConfiguration c = star(3, {2, 2, 2});
            for (int k = 1; k <= 3; ++k) {
                c.components.push_back({3 + k, 1, 0});
                c.edges.emplace_back(k, 3 + k);
            }
            return c;
        }
        case F::IIIstar: {
            SncConfiguration c = chain({1, 2, 3, 4, 3, 2, 1});
            c.components.push_back({7, 2, 0});
            c.edges.emplace_back(3, 7);
            return c;
        }
        case F::IIstar: {
            SncConfiguration c = chain({1, 2, 3, 4, 5, 6, 4, 2});
            c.components.push_back({8, 3, 0});
            c.edges.emplace_back(5, 8);
            return c;
        }
    }
    throw Error(ErrorCode::InvalidArgument, "unknown Kodaira type");
}

Monodromy monodromy(const KodairaType &type)
{
    using K = Monodromy::Kind;
    switch (type.family()) {
        case F::I0:
            return {K::PotentiallyGood, 1};
        case F::I:
            return {K::Multiplicative, 1};
        case F::II:
        case F::IIstar:
            return {K::PotentiallyGood, 6};
        case F::III:
        case F::IIIstar:
            return {K::PotentiallyGood, 4};
        case F::IV:
        case F::IVstar:
            return {K::PotentiallyGood, 3};
        case F::I0star:
            return {K::PotentiallyGood, 2};
        case F::Istar:
            return {K::TwistedMultiplicative, 2};
    }
    throw Error(ErrorCode::InvalidArgument, "unknown Kodaira type");
}

int monodromy_trace(const KodairaType &type, int d)
{
    if (d < 1) {
        throw Error(ErrorCode::InvalidArgument, "monodromy power must be >= 1");
    }
    const Monodromy m = monodromy(type);
    int h1 = 0;
    switch (m.kind) {
        case Monodromy::Kind::PotentiallyGood:
            h1 = root_of_unity_trace(m.order, d);
            break;
        case Monodromy::Kind::Multiplicative:
            h1 = 2;
            break;
        case Monodromy::Kind::TwistedMultiplicative:
            h1 = d % 2 == 0 ? 2 : -2;
            break;
    }
    return 1 - h1 + 1;
}

SerreClassKind serre_class_kind(const KodairaType &type)
{
    if (type.is_multiplicative()) {
        return SerreClassKind::Zero;
    }
    return type.is_good() ? SerreClassKind::GoodCurveClass : SerreClassKind::Constant;
}

GrothElement serre_class(const KodairaType &type)
{
    switch (serre_class_kind(type)) {
        case SerreClassKind::Zero:
            return GrothElement{};
        case SerreClassKind::Constant:
            return GrothElement(component_group_order(type));
        case SerreClassKind::GoodCurveClass:
            return GrothElement::of(Generator::curve(1));
    }
    return GrothElement{};
}

std::string describe_serre_class(const KodairaType &type)
{
    return serre_class_kind(type) == SerreClassKind::GoodCurveClass ? "[C(1)]" : serre_class(type).to_string();
}

long serre_euler(const KodairaType &type)
{
    return euler(serre_class(type)).get_si();
}

TypeRecord type_record(const KodairaType &type)
{
    return TypeRecord{type, snc_configuration(type), monodromy(type), serre_class_kind(type),
                      component_group_order(type)};
}

std::string format_atlas(const std::vector<KodairaType> &types)
{
    std::ostringstream os;
    bool first = true;
    for (const auto &t : types) {
        const TypeRecord r = type_record(t);
        if (!first) {
            os << '\n';
        }
        first = false;
        os << "type: " << t << '\n';
        os << "monodromy: " << r.monodromy.to_string() << '\n';
        os << "serre_class: " << describe_serre_class(t) << '\n';
        os << "serre_euler: " << serre_euler(t) << '\n';
        os << "phi_order: " << r.phi_order << '\n';
        os << "chi_fiber: " << chi_fiber(r.snc) << '\n';
        os << "smooth_locus_chi: " << smooth_locus_chi(r.snc) << '\n';
        for (std::uint64_t p : {0U, 2U, 3U}) {
            os << "error_term_p" << p << ": " << error_term(t, p) << '\n';
        }
        os << "monodromy_trace_d1: " << monodromy_trace(t, 1) << '\n';
        std::istringstream snc(format_snc(r.snc));
        for (std::string line; std::getline(snc, line);) {
            os << "snc: " << line << '\n';
        }
    }
    return os.str();
}

} // namespace mtrace
