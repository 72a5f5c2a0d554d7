#ifndef MTRACE_SNC_HPP
#define MTRACE_SNC_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mtrace
{

struct SncComponent {
    int id;
    long multiplicity; // N_i
    int genus;         // g_i

    friend bool operator==(const SncComponent &, const SncComponent &) = default;
};

// Weighted dual graph of a strict normal crossings special fiber sum N_i E_i.
// Each edge is one intersection point of two distinct components; parallel
// edges are allowed. The struct is plain data so that malformed input can be
// held and diagnosed by validate().
struct SncConfiguration {
    std::vector<SncComponent> components;
    std::vector<std::pair<int, int>> edges;

    // Throws UnknownComponent.
    const SncComponent &component(int id) const;
    bool has_component(int id) const;
    // Number of edge endpoints at id.
    int degree(int id) const;

    friend bool operator==(const SncConfiguration &, const SncConfiguration &) = default;
};

// The open stratum E_i^o = E_i minus the other components: 2 - 2g - deg(i).
long chi_open(const SncConfiguration &config, int id);
// chi_top of the whole special fiber.
long chi_fiber(const SncConfiguration &config);
// chi_top(Sm(Y_s)): open strata of multiplicity one.
long smooth_locus_chi(const SncConfiguration &config);
// chi_top(W_Y): open strata whose multiplicity is a positive power of p;
// 0 when p = 0.
long wild_locus_chi(const SncConfiguration &config, std::uint64_t p);
// Trace of the tame monodromy on the cohomology of the generic fiber:
// chi_top(Sm(Y_s)) + chi_top(W_Y).
long tame_trace(const SncConfiguration &config, std::uint64_t p);
// Same graph with every multiplicity multiplied by m >= 1.
SncConfiguration scale_multiplicities(const SncConfiguration &config, long m);

// True iff n = p^e for some e >= 1.
bool is_positive_power_of(long n, std::uint64_t p);

// The components lying over a marked point x of a model, each with the
// number of its intersection points with unmarked parts of the fiber. Those
// parts need not appear in the configuration (e.g. non-proper germs).
struct LocalMarking {
    std::map<int, int> external_degree;
};

struct LocalTrace {
    long chi_serre;
    long trace;
};

// chi_top(S(F_x)) and Trace(phi | R psi_x) for the analytic Milnor fiber at
// the marked point. A marked component's local open stratum removes its
// intersections with other marked components and its external points.
// Throws InconsistentMarking if the marking references unknown components,
// is empty, or declares fewer external points than the config's edges to
// unmarked components.
LocalTrace local_trace(const SncConfiguration &config, const LocalMarking &marking, std::uint64_t p);

enum class SncFailure { NoComponents, NotConnected, SelfEdge, UnknownEndpoint, DuplicateId, BadMultiplicity, BadGenus };

std::string to_string(SncFailure f);

struct SncDiagnostics {
    std::vector<std::pair<SncFailure, std::string>> failures;
    long multiplicity_gcd = 0;
    long chi_fiber = 0;

    bool ok() const noexcept
    {
        return failures.empty();
    }
};

SncDiagnostics validate(const SncConfiguration &config);

// Text format, one item per line, '#' comments:
//   component <id> <multiplicity> <genus>
//   edge <id> <id>
//   mark <id> [<external degree>]
// Mark lines are collected into the optional marking; an omitted external
// degree defaults to the number of edges to unmarked components.
struct SncDocument {
    SncConfiguration config;
    LocalMarking marking;
};

SncDocument parse_snc(std::string_view text);
std::string format_snc(const SncConfiguration &config);

} // namespace mtrace

#endif
