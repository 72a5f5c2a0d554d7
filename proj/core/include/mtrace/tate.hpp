#ifndef MTRACE_TATE_HPP
#define MTRACE_TATE_HPP

#include <cstdint>
#include <string>

#include <mtrace/kodaira_type.hpp>
#include <mtrace/weierstrass.hpp>

namespace mtrace
{

enum class ReductionClass { Good, Multiplicative, Additive };

std::string to_string(ReductionClass c);

struct LocalInvariants {
    KodairaType type;
    long v_delta_min;
    WeierstrassModel minimal_model;
    // Order of the geometric component group of the Neron special fiber.
    int n_components;
    ReductionClass reduction_class;
    // Residue characteristic, 0 or prime.
    std::uint64_t p;
};

// Tate's algorithm in its characteristic-free form, valid at p = 2 and 3.
// The residue field is treated as algebraically closed: every branch is
// decided by root multiplicities, and only repeated roots are ever named.
LocalInvariants tate_algorithm(const WeierstrassModel &model);

// Saito's criterion on elliptic curves: wild exactly for (p = 2, II, II*,
// III, III*, I*_nu) and (p = 3, II, II*, IV, IV*).
bool is_cohomologically_tame(const KodairaType &type, std::uint64_t p);
inline bool is_cohomologically_tame(const LocalInvariants &inv)
{
    return is_cohomologically_tame(inv.type, inv.p);
}

// e(X) = Trace(phi | H) - chi_top(S(X)) for an elliptic curve of the given
// type over a field with residue characteristic p.
int error_term(const KodairaType &type, std::uint64_t p);
inline int error_term(const LocalInvariants &inv)
{
    return error_term(inv.type, inv.p);
}

// Order of the geometric component group for additive and good types; nu
// for I_nu.
int component_group_order(const KodairaType &type);

} // namespace mtrace

#endif
