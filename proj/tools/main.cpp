#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include <mtrace/error.hpp>
#include <mtrace/grothendieck.hpp>
#include <mtrace/kodaira_db.hpp>
#include <mtrace/pipeline.hpp>
#include <mtrace/snc.hpp>

namespace
{

using namespace mtrace;

constexpr int exit_ok = 0;
constexpr int exit_inconsistent = 1;
constexpr int exit_error = 2;

std::string read_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct CurveOptions {
    std::string field;
    std::string curve_file;
    std::string a[5] = {"0", "0", "0", "0", "0"};

    void attach(CLI::App *cmd)
    {
        cmd->add_option("--field", field, "padic:<p>, laurent:Q or laurent:F<p>");
        cmd->add_option("--curve", curve_file, "record file with field and a1..a6 keys")->check(CLI::ExistingFile);
        const char *names[5] = {"--a1", "--a2", "--a3", "--a4", "--a6"};
        for (int i = 0; i < 5; ++i) {
            cmd->add_option(names[i], a[i], "coefficient literal");
        }
    }

    WeierstrassModel model() const
    {
        if (!curve_file.empty()) {
            return WeierstrassModel::parse_record(read_file(curve_file));
        }
        if (field.empty()) {
            throw Error(ErrorCode::InvalidArgument, "give --field or --curve");
        }
        return WeierstrassModel::from_literals(LocalFieldSpec::parse(field), a[0], a[1], a[2], a[3], a[4]);
    }
};

int run_analyze(const CurveOptions &opts)
{
    const Report r = analyze(opts.model());
    std::cout << format_report(r);
    return r.three_way_consistent ? exit_ok : exit_inconsistent;
}

int run_basechange(const CurveOptions &opts, int d)
{
    const BaseChangeResult r = base_change_check(opts.model(), d);
    std::cout << format_base_change(r);
    const bool good = r.ok() && r.original.three_way_consistent && r.substituted.three_way_consistent;
    return good ? exit_ok : exit_inconsistent;
}

int run_torsor(const std::string &jac_file, long m)
{
    const Report r = torsor_analyze(parse_report(read_file(jac_file)), m);
    std::cout << format_report(r);
    return r.three_way_consistent ? exit_ok : exit_inconsistent;
}

int run_snc(const std::string &file, std::uint64_t p)
{
    const SncDocument doc = parse_snc(read_file(file));
    const SncDiagnostics diag = validate(doc.config);
    std::cout << "components: " << doc.config.components.size() << '\n';
    std::cout << "edges: " << doc.config.edges.size() << '\n';
    std::cout << "valid: " << (diag.ok() ? "true" : "false") << '\n';
    for (const auto &[f, msg] : diag.failures) {
        std::cout << "failure: " << to_string(f) << ": " << msg << '\n';
    }
    if (!diag.ok()) {
        return exit_inconsistent;
    }
    std::cout << "p: " << p << '\n';
    std::cout << "multiplicity_gcd: " << diag.multiplicity_gcd << '\n';
    std::cout << "chi_fiber: " << chi_fiber(doc.config) << '\n';
    std::cout << "smooth_locus_chi: " << smooth_locus_chi(doc.config) << '\n';
    std::cout << "wild_locus_chi: " << wild_locus_chi(doc.config, p) << '\n';
    std::cout << "tame_trace: " << tame_trace(doc.config, p) << '\n';
    for (const auto &c : doc.config.components) {
        std::cout << "chi_open_" << c.id << ": " << chi_open(doc.config, c.id) << '\n';
    }
    if (!doc.marking.external_degree.empty()) {
        const LocalTrace lt = local_trace(doc.config, doc.marking, p);
        std::cout << "local_chi_serre: " << lt.chi_serre << '\n';
        std::cout << "local_trace: " << lt.trace << '\n';
        std::cout << "local_consistent: " << (lt.chi_serre == lt.trace ? "true" : "false") << '\n';
    }
    return exit_ok;
}

int run_groth(const std::string &expr, const std::vector<std::string> &against)
{
    const GrothElement a = GrothElement::parse(expr);
    std::cout << "element: " << a.to_string() << '\n';
    std::cout << "poincare: " << poincare(a).to_string("T") << '\n';
    std::cout << "euler: " << euler(a) << '\n';
    if (const auto count = point_count(a)) {
        std::cout << "point_count: " << count->to_string("q") << '\n';
    }
    auto compare = [&](const std::string &label, const GrothElement &b) {
        const QuotientComparison c = eq_mod_L_minus_1(a, b);
        std::cout << "mod_L_minus_1 vs " << label << ": " << to_string(c.verdict) << " (residue " << c.constant;
        std::cout << (sgn(c.linear) < 0 ? " - " : " + ") << abs(c.linear) << "*T)\n";
    };
    if (against.empty()) {
        for (long n = 0; n <= 4; ++n) {
            compare(std::to_string(n), GrothElement(n));
        }
    }
    for (const auto &b : against) {
        compare(b, GrothElement::parse(b));
    }
    return exit_ok;
}

int run_corpus(const std::string &file, unsigned threads)
{
    const CorpusSummary s = corpus_run_file(file, threads);
    std::cout << format_corpus(s);
    return s.consistency_failures == 0 && s.errors == 0 ? exit_ok : exit_inconsistent;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Trace formula checks for elliptic curves over discretely valued fields"};
    app.require_subcommand(1);

    CurveOptions analyze_opts;
    auto *analyze_cmd = app.add_subcommand("analyze", "Tate's algorithm and the three trace evaluations");
    analyze_opts.attach(analyze_cmd);

    CurveOptions bc_opts;
    int degree = 1;
    auto *bc_cmd = app.add_subcommand("basechange", "compare chi(S) after t -> t^d with the monodromy trace");
    bc_opts.attach(bc_cmd);
    bc_cmd->add_option("--d", degree, "ramification degree, prime to p")->required()->check(CLI::PositiveNumber);

    std::string jac_file;
    long order = 1;
    auto *torsor_cmd = app.add_subcommand("torsor", "genus-1 curve without rational point");
    torsor_cmd->add_option("--jac", jac_file, "report file of the Jacobian (field and type keys)")
        ->required()
        ->check(CLI::ExistingFile);
    torsor_cmd->add_option("--m", order, "order in H^1(K, Jac)")->required()->check(CLI::PositiveNumber);

    std::string snc_file;
    std::uint64_t snc_p = 0;
    auto *snc_cmd = app.add_subcommand("snc", "Euler characteristics of an SNC fiber configuration");
    snc_cmd->add_option("file", snc_file, "configuration file")->required()->check(CLI::ExistingFile);
    snc_cmd->add_option("--p", snc_p, "residue characteristic (0 or prime)");

    std::string groth_expr;
    std::vector<std::string> against;
    auto *groth_cmd = app.add_subcommand("groth", "realizations of a Grothendieck ring expression");
    groth_cmd->add_option("expr", groth_expr, "e.g. \"Pn(2) - L^2 + 3*Gm\"")->required();
    groth_cmd->add_option("--against", against, "compare modulo L - 1 with these expressions (default: 0..4)");

    std::string corpus_file;
    unsigned threads = 0;
    auto *corpus_cmd = app.add_subcommand("corpus", "batch analysis, one curve per line");
    corpus_cmd->add_option("file", corpus_file, "<fieldspec>;a1;a2;a3;a4;a6 per line")
        ->required()
        ->check(CLI::ExistingFile);
    corpus_cmd->add_option("--threads", threads, "worker threads (0 = hardware concurrency)");

    int atlas_nu = 3;
    int atlas_nu_star = 2;
    auto *atlas_cmd = app.add_subcommand("atlas", "dump the per-type tables");
    atlas_cmd->add_option("--nu", atlas_nu, "nu for the I_nu entry")->check(CLI::PositiveNumber);
    atlas_cmd->add_option("--nu-star", atlas_nu_star, "nu for the I*_nu entry")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze_cmd) {
            return run_analyze(analyze_opts);
        }
        if (*bc_cmd) {
            return run_basechange(bc_opts, degree);
        }
        if (*torsor_cmd) {
            return run_torsor(jac_file, order);
        }
        if (*snc_cmd) {
            return run_snc(snc_file, snc_p);
        }
        if (*groth_cmd) {
            return run_groth(groth_expr, against);
        }
        if (*corpus_cmd) {
            return run_corpus(corpus_file, threads);
        }
        if (*atlas_cmd) {
            std::cout << format_atlas(representative_types(atlas_nu, atlas_nu_star));
            return exit_ok;
        }
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_error;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_error;
    }
    return exit_ok;
}
