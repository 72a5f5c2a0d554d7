#ifndef MTRACE_PIPELINE_HPP
#define MTRACE_PIPELINE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <mtrace/kodaira_db.hpp>
#include <mtrace/tate.hpp>
#include <mtrace/weierstrass.hpp>

namespace mtrace
{

// Three independent evaluations of Trace(phi | H(X x K^t)).
struct TraceTriple {
    // chi_top(S(X)) + e(X) from the error-term table.
    long via_table = 0;
    // chi_top(Sm(Y_s)) + chi_top(W_Y) on the SNC fiber.
    long via_snc = 0;
    // 2 - Trace(phi | H^1) from the monodromy model; only meaningful when the
    // curve is cohomologically tame.
    long via_monodromy = 0;
};

struct TorsorData {
    long order = 1;
    // chi_top(Sm(Y_s)) on the model with multiplicities scaled by the order.
    long scaled_smooth_chi = 0;
    // Trace predicted by the SNC formula on the scaled model.
    long scaled_trace_snc = 0;
};

struct Report {
    LocalFieldSpec field = LocalFieldSpec::laurent(ResidueField::rationals());
    // Input echo; absent for reports rebuilt from a type alone.
    std::optional<WeierstrassModel> input;
    std::optional<WeierstrassModel> minimal_model;

    KodairaType type = KodairaType::good();
    std::optional<long> v_delta_min;
    int n_components = 1;
    ReductionClass reduction = ReductionClass::Good;
    std::uint64_t p = 0;

    std::string serre_class;
    long serre_euler = 0;
    bool tame = true;
    long error_term = 0;
    TraceTriple traces;
    bool trace_formula_holds = true;
    bool three_way_consistent = true;

    std::optional<TorsorData> torsor;
    std::vector<std::string> warnings;
};

// Fills every table-derived field of a report for an elliptic curve of the
// given type over the given field.
Report report_for_type(const LocalFieldSpec &field, const KodairaType &type);

// Runs Tate's algorithm and evaluates the trace three ways. Throws
// std::logic_error if the table and SNC traces disagree.
Report analyze(const WeierstrassModel &curve);

struct BaseChangeResult {
    int degree;
    Report original;
    Report substituted;
    // chi_top(S(X x K(d))) computed by Tate on the substituted equation.
    long serre_euler_after;
    // Trace(phi^d | H) from the monodromy of the original type.
    long monodromy_trace;
    bool agree;

    // Agreement is required only for cohomologically tame curves.
    bool ok() const noexcept
    {
        return agree || !original.tame;
    }
};

// Throws UnsupportedBackend on p-adic fields and NotCoprime if p | d.
BaseChangeResult base_change_check(const WeierstrassModel &curve, int d);

// Genus-1 curve without rational point, of order m in H^1(K, Jac).
Report torsor_analyze(const Report &jacobian, long m);

// Stable "key: value" serialization.
std::string format_report(const Report &r);
std::string format_base_change(const BaseChangeResult &r);
// Rebuilds a report from the field and type keys of a serialized report;
// derived keys are recomputed, not trusted.
Report parse_report(std::string_view text);

struct CorpusEntry {
    std::size_t line = 0;
    std::string source;
    std::optional<Report> report;
    std::string error;
};

struct CorpusSummary {
    std::vector<CorpusEntry> entries;
    std::map<std::string, std::size_t> type_counts;
    std::size_t holds = 0;
    std::size_t fails = 0;
    std::size_t consistency_failures = 0;
    std::size_t errors = 0;
};

// One curve per line: <fieldspec>;a1;a2;a3;a4;a6. Blank lines and lines
// starting with '#' are skipped. Throws ParseError with the line number on
// malformed lines; curves that fail to analyze are recorded as errors.
// Output order is input order regardless of thread count.
CorpusSummary corpus_run(std::string_view text, unsigned threads = 0);
CorpusSummary corpus_run_file(const std::string &path, unsigned threads = 0);
std::string format_corpus(const CorpusSummary &summary);

} // namespace mtrace

#endif
