#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include <mtrace/error.hpp>
#include <mtrace/snc.hpp>

namespace mtrace
{

const SncComponent &SncConfiguration::component(int id) const
{
    for (const auto &c : components) {
        if (c.id == id) {
            return c;
        }
    }
    throw Error(ErrorCode::UnknownComponent, "no component with id " + std::to_string(id));
}

bool SncConfiguration::has_component(int id) const
{
    return std::any_of(components.begin(), components.end(), [id](const SncComponent &c) { return c.id == id; });
}

int SncConfiguration::degree(int id) const
{
    int d = 0;
    for (const auto &[a, b] : edges) {
        d += (a == id) + (b == id);
    }
    return d;
}

long chi_open(const SncConfiguration &config, int id)
{
    const SncComponent &c = config.component(id);
    return 2 - 2L * c.genus - config.degree(id);
}

long chi_fiber(const SncConfiguration &config)
{
    long chi = static_cast<long>(config.edges.size());
    for (const auto &c : config.components) {
        chi += chi_open(config, c.id);
    }
    return chi;
}

bool is_positive_power_of(long n, std::uint64_t p)
{
    if (p < 2 || n < 2) {
        return false;
    }
    const auto q = static_cast<long>(p);
    while (n % q == 0) {
        n /= q;
    }
    return n == 1;
}

long smooth_locus_chi(const SncConfiguration &config)
{
    long chi = 0;
    for (const auto &c : config.components) {
        if (c.multiplicity == 1) {
            chi += chi_open(config, c.id);
        }
    }
    return chi;
}

long wild_locus_chi(const SncConfiguration &config, std::uint64_t p)
{
    if (p == 0) {
        return 0;
    }
    long chi = 0;
    for (const auto &c : config.components) {
        if (is_positive_power_of(c.multiplicity, p)) {
            chi += chi_open(config, c.id);
        }
    }
    return chi;
}

long tame_trace(const SncConfiguration &config, std::uint64_t p)
{
    return smooth_locus_chi(config) + wild_locus_chi(config, p);
}

SncConfiguration scale_multiplicities(const SncConfiguration &config, long m)
{
    if (m < 1) {
        throw Error(ErrorCode::InvalidArgument, "multiplicity scale must be >= 1");
    }
    SncConfiguration out = config;
    for (auto &c : out.components) {
        c.multiplicity *= m;
    }
    return out;
}

LocalTrace local_trace(const SncConfiguration &config, const LocalMarking &marking, std::uint64_t p)
{
    if (marking.external_degree.empty()) {
        throw Error(ErrorCode::InconsistentMarking, "empty marking");
    }
    for (const auto &[id, ext] : marking.external_degree) {
        if (!config.has_component(id)) {
            throw Error(ErrorCode::InconsistentMarking, "marked id " + std::to_string(id) + " is not a component");
        }
        if (ext < 0) {
            throw Error(ErrorCode::InconsistentMarking, "negative external degree at " + std::to_string(id));
        }
    }
    auto marked = [&marking](int id) { return marking.external_degree.count(id) != 0; };

    LocalTrace out{0, 0};
    for (const auto &[id, ext] : marking.external_degree) {
        int internal = 0;
        int crossing = 0;
        for (const auto &[a, b] : config.edges) {
            if (a != id && b != id) {
                continue;
            }
            const int other = a == id ? b : a;
            (marked(other) ? internal : crossing) += 1;
        }
        if (ext < crossing) {
            throw Error(ErrorCode::InconsistentMarking,
                        "component " + std::to_string(id) + " meets " + std::to_string(crossing) +
                            " unmarked points but declares external degree " + std::to_string(ext));
        }
        const SncComponent &c = config.component(id);
        const long chi_local = 2 - 2L * c.genus - internal - ext;
        if (c.multiplicity == 1) {
            out.chi_serre += chi_local;
            out.trace += chi_local;
        } else if (is_positive_power_of(c.multiplicity, p)) {
            out.trace += chi_local;
        }
    }
    return out;
}

std::string to_string(SncFailure f)
{
    switch (f) {
        case SncFailure::NoComponents:
            return "NoComponents";
        case SncFailure::NotConnected:
            return "NotConnected";
        case SncFailure::SelfEdge:
            return "SelfEdge";
        case SncFailure::UnknownEndpoint:
            return "UnknownEndpoint";
        case SncFailure::DuplicateId:
            return "DuplicateId";
        case SncFailure::BadMultiplicity:
            return "BadMultiplicity";
        case SncFailure::BadGenus:
            return "BadGenus";
    }
    return "?";
}

SncDiagnostics validate(const SncConfiguration &config)
{
    SncDiagnostics d;
    auto fail = [&d](SncFailure f, std::string what) { d.failures.emplace_back(f, std::move(what)); };

    if (config.components.empty()) {
        fail(SncFailure::NoComponents, "configuration has no components");
        return d;
    }
    std::set<int> ids;
    for (const auto &c : config.components) {
        if (!ids.insert(c.id).second) {
            fail(SncFailure::DuplicateId, "component id " + std::to_string(c.id) + " appears twice");
        }
        if (c.multiplicity < 1) {
            fail(SncFailure::BadMultiplicity, "component " + std::to_string(c.id) + " has multiplicity " +
                                                  std::to_string(c.multiplicity));
        }
        if (c.genus < 0) {
            fail(SncFailure::BadGenus, "component " + std::to_string(c.id) + " has negative genus");
        }
        d.multiplicity_gcd = std::gcd(d.multiplicity_gcd, c.multiplicity);
    }
    bool endpoints_ok = true;
    for (const auto &[a, b] : config.edges) {
        if (a == b) {
            fail(SncFailure::SelfEdge, "self-edge at component " + std::to_string(a));
        }
        if (!ids.count(a) || !ids.count(b)) {
            fail(SncFailure::UnknownEndpoint, "edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
            endpoints_ok = false;
        }
    }
    if (endpoints_ok) {
        // Union-find over component ids.
        std::map<int, int> parent;
        for (int id : ids) {
            parent[id] = id;
        }
        auto find = [&parent](int x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        for (const auto &[a, b] : config.edges) {
            parent[find(a)] = find(b);
        }
        std::set<int> roots;
        for (int id : ids) {
            roots.insert(find(id));
        }
        if (roots.size() > 1) {
            fail(SncFailure::NotConnected, "dual graph has " + std::to_string(roots.size()) + " connected components");
        }
        d.chi_fiber = chi_fiber(config);
    }
    return d;
}

namespace
{

long parse_long(const std::string &tok, std::size_t line)
{
    try {
        std::size_t used = 0;
        const long v = std::stol(tok, &used);
        if (used != tok.size()) {
            throw std::invalid_argument(tok);
        }
        return v;
    } catch (const std::exception &) {
        throw ParseError(line, "expected an integer, got '" + tok + "'");
    }
}

} // namespace

SncDocument parse_snc(std::string_view text)
{
    SncDocument doc;
    std::vector<std::pair<int, std::optional<int>>> marks;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) {
            tok.push_back(t);
        }
        if (tok.empty()) {
            continue;
        }
        if (tok[0] == "component" && tok.size() == 4) {
            doc.config.components.push_back(SncComponent{static_cast<int>(parse_long(tok[1], line_no)),
                                                         parse_long(tok[2], line_no),
                                                         static_cast<int>(parse_long(tok[3], line_no))});
        } else if (tok[0] == "edge" && tok.size() == 3) {
            doc.config.edges.emplace_back(static_cast<int>(parse_long(tok[1], line_no)),
                                          static_cast<int>(parse_long(tok[2], line_no)));
        } else if (tok[0] == "mark" && (tok.size() == 2 || tok.size() == 3)) {
            std::optional<int> ext;
            if (tok.size() == 3) {
                ext = static_cast<int>(parse_long(tok[2], line_no));
            }
            marks.emplace_back(static_cast<int>(parse_long(tok[1], line_no)), ext);
        } else {
            throw ParseError(line_no, "expected 'component <id> <N> <g>', 'edge <id> <id>' or 'mark <id> [<ext>]'");
        }
    }
    std::set<int> marked;
    for (const auto &m : marks) {
        marked.insert(m.first);
    }
    for (const auto &[id, ext] : marks) {
        int crossing = 0;
        for (const auto &[a, b] : doc.config.edges) {
            if (a == id && !marked.count(b)) {
                ++crossing;
            } else if (b == id && !marked.count(a)) {
                ++crossing;
            }
        }
        doc.marking.external_degree[id] = ext.value_or(crossing);
    }
    return doc;
}

std::string format_snc(const SncConfiguration &config)
{
    std::ostringstream os;
    for (const auto &c : config.components) {
        os << "component " << c.id << ' ' << c.multiplicity << ' ' << c.genus << '\n';
    }
    for (const auto &[a, b] : config.edges) {
        os << "edge " << a << ' ' << b << '\n';
    }
    return os.str();
}

} // namespace mtrace
