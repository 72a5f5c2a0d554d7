#ifndef MTRACE_KODAIRA_DB_HPP
#define MTRACE_KODAIRA_DB_HPP

#include <string>

#include <mtrace/grothendieck.hpp>
#include <mtrace/kodaira_type.hpp>
#include <mtrace/snc.hpp>
#include <mtrace/tate.hpp>

namespace mtrace
{

// How the tame monodromy acts on H^1 of an elliptic curve of a given type.
struct Monodromy {
    enum class Kind {
        // phi acts through a cyclic group of order e (e in {1, 2, 3, 4, 6}).
        PotentiallyGood,
        // Unipotent.
        Multiplicative,
        // Unipotent times the quadratic character (I*_nu, nu >= 1).
        TwistedMultiplicative,
    };

    Kind kind;
    int order = 1;

    std::string to_string() const;
};

enum class SerreClassKind { Zero, Constant, GoodCurveClass };

struct TypeRecord {
    KodairaType type;
    SncConfiguration snc;
    Monodromy monodromy;
    SerreClassKind serre_kind;
    int phi_order;
};

// The strict normal crossings fiber of the minimal regular model, with the
// non-SNC fibers (I1, II, III, IV) replaced by their embedded resolutions.
// Every component is rational except the genus-1 fiber of I0.
SncConfiguration snc_configuration(const KodairaType &type);

Monodromy monodromy(const KodairaType &type);

// Trace(phi^d | H) = 1 - Trace(phi^d | H^1) + 1.
int monodromy_trace(const KodairaType &type, int d);

// S(X): 0 for I_nu, n * [point] for additive types, [genus-1 curve] for I0.
GrothElement serre_class(const KodairaType &type);
SerreClassKind serre_class_kind(const KodairaType &type);
std::string describe_serre_class(const KodairaType &type);

// chi_top(S(X)).
long serre_euler(const KodairaType &type);
inline long serre_euler(const LocalInvariants &inv)
{
    return serre_euler(inv.type);
}

TypeRecord type_record(const KodairaType &type);

// Human-readable dump of the tables for the given types, including the
// error term at p in {0, 2, 3}.
std::string format_atlas(const std::vector<KodairaType> &types);

} // namespace mtrace

#endif
