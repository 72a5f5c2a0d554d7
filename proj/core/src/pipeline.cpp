#include <algorithm>
#include <atomic>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <mtrace/error.hpp>
#include <mtrace/pipeline.hpp>

namespace mtrace
{

namespace
{

void check_consistency(Report &r)
{
    r.three_way_consistent =
        r.traces.via_table == r.traces.via_snc && (!r.tame || r.traces.via_monodromy == r.traces.via_table);
}

const char *yes_no(bool b)
{
    return b ? "true" : "false";
}

bool is_power_of(long m, std::uint64_t p)
{
    return m == 1 || is_positive_power_of(m, p);
}

} // namespace

Report report_for_type(const LocalFieldSpec &field, const KodairaType &type)
{
    Report r;
    r.field = field;
    r.type = type;
    r.p = field.residue_characteristic();
    r.n_components = component_group_order(type);
    r.reduction = type.is_good() ? ReductionClass::Good
                                 : (type.is_multiplicative() ? ReductionClass::Multiplicative : ReductionClass::Additive);
    r.serre_class = describe_serre_class(type);
    r.serre_euler = serre_euler(type);
    r.tame = is_cohomologically_tame(type, r.p);
    r.error_term = error_term(type, r.p);

    const SncConfiguration snc = snc_configuration(type);
    r.traces.via_table = r.serre_euler + r.error_term;
    r.traces.via_snc = tame_trace(snc, r.p);
    r.traces.via_monodromy = monodromy_trace(type, 1);
    r.trace_formula_holds = r.error_term == 0;
    check_consistency(r);
    return r;
}

Report analyze(const WeierstrassModel &curve)
{
    const LocalInvariants inv = tate_algorithm(curve);
    Report r = report_for_type(curve.field(), inv.type);
    r.input = curve;
    r.minimal_model = inv.minimal_model;
    r.v_delta_min = inv.v_delta_min;
    r.n_components = inv.n_components;
    r.reduction = inv.reduction_class;
    if (r.traces.via_table != r.traces.via_snc) {
        throw std::logic_error("trace identity violated for type " + inv.type.to_string() + " at p = " +
                               std::to_string(r.p));
    }
    return r;
}

BaseChangeResult base_change_check(const WeierstrassModel &curve, int d)
{
    if (!curve.field().is_laurent()) {
        throw Error(ErrorCode::UnsupportedBackend, "tame base change is only implemented for Laurent fields");
    }
    if (d < 1) {
        throw Error(ErrorCode::InvalidArgument, "base change degree must be >= 1");
    }
    const std::uint64_t p = curve.field().residue_characteristic();
    if (p != 0 && d % static_cast<long>(p) == 0) {
        throw Error(ErrorCode::NotCoprime, "degree " + std::to_string(d) + " is not prime to p = " + std::to_string(p));
    }
    BaseChangeResult out{d, analyze(curve), analyze(curve.base_change(static_cast<unsigned>(d))), 0, 0, false};
    out.serre_euler_after = out.substituted.serre_euler;
    out.monodromy_trace = monodromy_trace(out.original.type, d);
    out.agree = out.serre_euler_after == out.monodromy_trace;
    return out;
}

Report torsor_analyze(const Report &jacobian, long m)
{
    if (m < 1) {
        throw Error(ErrorCode::InvalidArgument, "torsor order must be >= 1");
    }
    if (m == 1) {
        return jacobian;
    }
    Report r = jacobian;
    r.input.reset();
    r.minimal_model.reset();
    // No rational point: the empty scheme is a weak Neron model.
    r.serre_class = "0";
    r.serre_euler = 0;
    r.error_term = jacobian.serre_euler + jacobian.error_term;
    // X and Jac(X) have isomorphic cohomology as Galois modules.
    r.traces.via_table = r.serre_euler + r.error_term;
    r.traces.via_snc = jacobian.traces.via_snc;
    r.traces.via_monodromy = jacobian.traces.via_monodromy;
    r.trace_formula_holds = r.error_term == 0;

    const SncConfiguration scaled = scale_multiplicities(snc_configuration(jacobian.type), m);
    r.torsor = TorsorData{m, smooth_locus_chi(scaled), tame_trace(scaled, jacobian.p)};
    check_consistency(r);
    if (r.torsor->scaled_smooth_chi != 0) {
        r.three_way_consistent = false;
    }

    if (jacobian.type.is_additive() && !(jacobian.p > 0 && is_power_of(m, jacobian.p))) {
        if (jacobian.p == 0) {
            r.warnings.push_back("no such torsor exists: H^1(K, E) = 0 for additive E in residue characteristic 0");
        } else {
            r.warnings.push_back("no such torsor exists: H^1(K, E) is a " + std::to_string(jacobian.p) +
                                 "-group for additive E, and " + std::to_string(m) + " is not a power of " +
                                 std::to_string(jacobian.p));
        }
    }
    return r;
}

std::string format_report(const Report &r)
{
    std::ostringstream os;
    if (r.input) {
        os << r.input->to_record();
    } else {
        os << "field: " << r.field << '\n';
    }
    os << "type: " << r.type << '\n';
    if (r.v_delta_min) {
        os << "v_delta_min: " << *r.v_delta_min << '\n';
    }
    os << "n_components: " << r.n_components << '\n';
    os << "reduction: " << to_string(r.reduction) << '\n';
    if (r.minimal_model) {
        os << "min_a1: " << r.minimal_model->a1() << '\n'
           << "min_a2: " << r.minimal_model->a2() << '\n'
           << "min_a3: " << r.minimal_model->a3() << '\n'
           << "min_a4: " << r.minimal_model->a4() << '\n'
           << "min_a6: " << r.minimal_model->a6() << '\n';
    }
    if (r.torsor) {
        os << "torsor_order: " << r.torsor->order << '\n';
    }
    os << "serre_class: " << r.serre_class << '\n';
    os << "serre_euler: " << r.serre_euler << '\n';
    os << "tame: " << yes_no(r.tame) << '\n';
    os << "error_term: " << r.error_term << '\n';
    os << "trace_table: " << r.traces.via_table << '\n';
    os << "trace_snc: " << r.traces.via_snc << '\n';
    os << "trace_monodromy: " << r.traces.via_monodromy << '\n';
    if (r.torsor) {
        os << "scaled_smooth_chi: " << r.torsor->scaled_smooth_chi << '\n';
        os << "scaled_trace_snc: " << r.torsor->scaled_trace_snc << '\n';
    }
    os << "holds: " << yes_no(r.trace_formula_holds) << '\n';
    os << "consistent: " << yes_no(r.three_way_consistent) << '\n';
    for (const auto &w : r.warnings) {
        os << "warning: " << w << '\n';
    }
    return os.str();
}

std::string format_base_change(const BaseChangeResult &r)
{
    std::ostringstream os;
    os << "# original\n" << format_report(r.original);
    os << "\n# base change t -> t^" << r.degree << '\n' << format_report(r.substituted);
    os << "\n# verdict\n";
    os << "degree: " << r.degree << '\n';
    os << "serre_euler_after: " << r.serre_euler_after << '\n';
    os << "monodromy_trace: " << r.monodromy_trace << '\n';
    os << "agree: " << yes_no(r.agree) << '\n';
    os << "required: " << yes_no(r.original.tame) << '\n';
    os << "ok: " << yes_no(r.ok()) << '\n';
    return os.str();
}

Report parse_report(std::string_view text)
{
    const auto kv = parse_key_values(text);
    const auto field = kv.find("field");
    const auto type = kv.find("type");
    if (field == kv.end() || type == kv.end()) {
        throw ParseError(0, "report needs 'field' and 'type' keys");
    }
    return report_for_type(LocalFieldSpec::parse(field->second), KodairaType::parse(type->second));
}

namespace
{

std::vector<std::string> split(const std::string &s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t at = s.find(sep, start);
        out.push_back(s.substr(start, at - start));
        if (at == std::string::npos) {
            return out;
        }
        start = at + 1;
    }
}

std::string trim(const std::string &s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

struct PendingCurve {
    std::size_t line;
    std::string source;
    LocalFieldSpec field;
    std::vector<ValuedElement> coeffs;
};

} // namespace

CorpusSummary corpus_run(std::string_view text, unsigned threads)
{
    std::vector<PendingCurve> pending;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto parts = split(line, ';');
        if (parts.size() != 6) {
            throw ParseError(line_no, "expected <fieldspec>;a1;a2;a3;a4;a6");
        }
        try {
            const LocalFieldSpec field = LocalFieldSpec::parse(trim(parts[0]));
            std::vector<ValuedElement> coeffs;
            for (std::size_t i = 1; i < parts.size(); ++i) {
                const std::string lit = trim(parts[i]);
                coeffs.push_back(lit.empty() ? ValuedElement::zero(field) : ValuedElement::parse(field, lit));
            }
            pending.push_back(PendingCurve{line_no, line, field, std::move(coeffs)});
        } catch (const Error &e) {
            throw ParseError(line_no, e.what());
        }
    }

    CorpusSummary summary;
    summary.entries.resize(pending.size());
    if (threads == 0) {
        threads = std::max(1U, std::thread::hardware_concurrency());
    }
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, pending.size())));

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < pending.size(); i = next++) {
            const PendingCurve &c = pending[i];
            CorpusEntry &e = summary.entries[i];
            e.line = c.line;
            e.source = c.source;
            try {
                const WeierstrassModel w(c.coeffs[0], c.coeffs[1], c.coeffs[2], c.coeffs[3], c.coeffs[4]);
                e.report = analyze(w);
            } catch (const std::exception &ex) {
                e.error = ex.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }

    for (const auto &e : summary.entries) {
        if (!e.report) {
            ++summary.errors;
            continue;
        }
        ++summary.type_counts[e.report->type.to_string()];
        ++(e.report->trace_formula_holds ? summary.holds : summary.fails);
        if (!e.report->three_way_consistent) {
            ++summary.consistency_failures;
        }
    }
    return summary;
}

CorpusSummary corpus_run_file(const std::string &path, unsigned threads)
{
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::InvalidArgument, "cannot read corpus file '" + path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return corpus_run(text.str(), threads);
}

std::string format_corpus(const CorpusSummary &s)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
        const CorpusEntry &e = s.entries[i];
        os << "index: " << i << '\n' << "line: " << e.line << '\n';
        if (e.report) {
            os << format_report(*e.report);
        } else {
            os << "source: " << e.source << '\n' << "error: " << e.error << '\n';
        }
        os << '\n';
    }
    os << "curves: " << s.entries.size() << '\n';
    os << "holds: " << s.holds << '\n';
    os << "fails: " << s.fails << '\n';
    os << "consistency_failures: " << s.consistency_failures << '\n';
    os << "errors: " << s.errors << '\n';
    for (const auto &[type, n] : s.type_counts) {
        os << "count_" << type << ": " << n << '\n';
    }
    return os.str();
}

} // namespace mtrace
