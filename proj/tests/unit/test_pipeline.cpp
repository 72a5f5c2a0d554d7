#include <doctest.h>

#include <fstream>
#include <sstream>

#include <mtrace/pipeline.hpp>

#include "support.hpp"

using namespace testing;

namespace
{

KodairaType T(const char *s)
{
    return KodairaType::parse(s);
}

std::string slurp(const std::string &path)
{
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

ErrorCode code_of(auto &&fn)
{
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("expected an mtrace::Error");
    return ErrorCode::InvalidArgument;
}

} // namespace

TEST_CASE("analyze")
{
    SUBCASE("type II in characteristic 0")
    {
        const auto r = analyze(short_curve("laurent:Q", "0", "t"));
        CHECK(r.type == T("II"));
        CHECK(r.serre_euler == 1);
        CHECK(r.error_term == 0);
        CHECK(r.traces.via_table == 1);
        CHECK(r.traces.via_snc == 1);
        CHECK(r.traces.via_monodromy == 1);
        CHECK(r.trace_formula_holds);
        CHECK(r.three_way_consistent);
    }

    SUBCASE("multiplicative")
    {
        const auto r = analyze(curve("laurent:Q", "1", "0", "0", "0", "t"));
        CHECK(r.type == T("I1"));
        CHECK(r.serre_euler == 0);
        CHECK(r.traces.via_table == 0);
        CHECK(r.traces.via_snc == 0);
        CHECK(r.traces.via_monodromy == 0);
        CHECK(r.trace_formula_holds);
    }

    SUBCASE("wild type II at p = 2")
    {
        // y^2 = x^3 + t is singular in characteristic 2; this is the type II
        // curve y^2 + t y = x^3 + t.
        CHECK(code_of([] { analyze(short_curve("laurent:F2", "0", "t")); }) == ErrorCode::SingularCurve);
        const auto r = analyze(curve("laurent:F2", "0", "0", "t", "0", "t"));
        CHECK(r.type == T("II"));
        CHECK_FALSE(r.tame);
        CHECK(r.error_term == 1);
        CHECK(r.traces.via_table == 2);
        CHECK(r.traces.via_snc == 2);
        CHECK_FALSE(r.trace_formula_holds);
        CHECK(r.three_way_consistent);
    }
}

TEST_CASE("report serialization")
{
    const auto r = analyze(curve("laurent:F3", "0", "0", "0", "t^3", "t^2"));
    const std::string text = format_report(r);
    for (const char *key : {"field: laurent:F3\n", "a4: t^3\n", "type: IV\n", "v_delta_min: 9\n", "n_components: 3\n",
                            "serre_euler: 3\n", "tame: false\n", "error_term: -1\n", "trace_table: 2\n",
                            "trace_snc: 2\n", "trace_monodromy: 3\n", "holds: false\n", "consistent: true\n"}) {
        CHECK(text.find(key) != std::string::npos);
    }
    const auto kv = parse_key_values(text);
    CHECK(kv.at("reduction") == "additive");
    const auto back = parse_report(text);
    CHECK(back.type == r.type);
    CHECK(back.field == r.field);
    CHECK(back.error_term == r.error_term);
    CHECK(back.traces.via_snc == r.traces.via_snc);
    // The saved report is a valid curve record.
    CHECK(WeierstrassModel::parse_record(text) == *r.input);
    CHECK_THROWS_AS(parse_report("type: II\n"), ParseError);
}

TEST_CASE("base change")
{
    const auto w = short_curve("laurent:Q", "0", "t");
    const auto six = base_change_check(w, 6);
    CHECK(six.substituted.type == T("I0"));
    CHECK(six.serre_euler_after == 0);
    CHECK(six.monodromy_trace == 0);
    CHECK(six.ok());

    const auto two = base_change_check(w, 2);
    CHECK(two.substituted.type == T("IV"));
    CHECK(two.serre_euler_after == 3);
    CHECK(two.monodromy_trace == 3);

    const auto one = base_change_check(w, 1);
    CHECK(format_report(one.original) == format_report(one.substituted));
    CHECK(one.agree);

    CHECK(code_of([&] { base_change_check(short_curve("padic:5", "0", "5"), 2); }) == ErrorCode::UnsupportedBackend);
    CHECK(code_of([] { base_change_check(short_curve("laurent:F5", "0", "t"), 5); }) == ErrorCode::NotCoprime);
    CHECK(code_of([] { base_change_check(short_curve("laurent:F5", "0", "t"), 10); }) == ErrorCode::NotCoprime);
    CHECK(code_of([&] { base_change_check(w, 0); }) == ErrorCode::InvalidArgument);

    // Tame at p = 5, d prime to 5.
    const auto f5 = base_change_check(short_curve("laurent:F5", "0", "t"), 3);
    CHECK(f5.substituted.type == T("I0*"));
    CHECK(f5.agree);
    // Wild curves are reported but not required to agree.
    const auto wild = base_change_check(curve("laurent:F2", "0", "0", "t", "0", "t"), 3);
    CHECK_FALSE(wild.original.tame);
    CHECK(wild.ok());
}

TEST_CASE("torsors")
{
    SUBCASE("tame additive Jacobian: the formula fails")
    {
        const auto jac = report_for_type(field("padic:5"), T("I0*"));
        const auto r = torsor_analyze(jac, 2);
        CHECK(r.serre_class == "0");
        CHECK(r.serre_euler == 0);
        CHECK(r.error_term == 4);
        CHECK_FALSE(r.trace_formula_holds);
        CHECK(r.three_way_consistent);
        REQUIRE(r.torsor);
        CHECK(r.torsor->scaled_smooth_chi == 0);
        CHECK(r.torsor->scaled_trace_snc == 0);
        CHECK(r.traces.via_snc == 4);
        CHECK(r.warnings.size() == 1);
    }

    SUBCASE("semistable Jacobians")
    {
        for (int nu = 1; nu <= 6; ++nu) {
            for (long m : {2L, 3L, 5L, 12L}) {
                for (const char *f : {"laurent:Q", "padic:2", "laurent:F3"}) {
                    const auto r = torsor_analyze(report_for_type(field(f), KodairaType::multiplicative(nu)), m);
                    CHECK(r.error_term == 0);
                    CHECK(r.trace_formula_holds);
                    CHECK(r.three_way_consistent);
                    CHECK(r.warnings.empty());
                }
            }
        }
        const auto good = torsor_analyze(report_for_type(field("laurent:Q"), T("I0")), 3);
        CHECK(good.error_term == 0);
        CHECK(good.trace_formula_holds);
        CHECK(good.warnings.empty());
    }

    SUBCASE("wild Jacobian with m a power of p")
    {
        const auto r = torsor_analyze(report_for_type(field("laurent:F2"), T("III")), 4);
        CHECK(r.error_term == 2);
        CHECK(r.warnings.empty());
        CHECK(r.torsor->scaled_trace_snc == r.traces.via_snc);
    }

    SUBCASE("order one is the Jacobian itself")
    {
        const auto jac = analyze(short_curve("laurent:Q", "0", "t"));
        CHECK(format_report(torsor_analyze(jac, 1)) == format_report(jac));
        CHECK(code_of([&] { torsor_analyze(jac, 0); }) == ErrorCode::InvalidArgument);
    }

    SUBCASE("Jacobian read from a report file")
    {
        const auto r = torsor_analyze(parse_report(slurp(data_path("jac_i0star_p5.txt"))), 2);
        CHECK(r.error_term == 4);
        const std::string text = format_report(r);
        CHECK(text.find("torsor_order: 2\n") != std::string::npos);
        CHECK(text.find("holds: false\n") != std::string::npos);
        CHECK(text.find("warning: ") != std::string::npos);
    }
}

TEST_CASE("corpus runs")
{
    SUBCASE("bundled corpus")
    {
        const auto s = corpus_run_file(data_path("curves.txt"));
        CHECK(s.entries.size() == 30);
        CHECK(s.consistency_failures == 0);
        CHECK(s.errors == 0);
        CHECK(s.holds + s.fails == 30);
        const auto &expected = corpus_expectations();
        for (std::size_t i = 0; i < s.entries.size(); ++i) {
            REQUIRE(s.entries[i].report);
            CHECK(s.entries[i].source == expected[i].line);
            CHECK(s.entries[i].report->type.to_string() == expected[i].type);
            if (s.entries[i].report->p == 0) {
                CHECK(s.entries[i].report->trace_formula_holds);
            }
        }
    }

    SUBCASE("thread count does not change the output")
    {
        const std::string text = slurp(data_path("curves.txt"));
        const std::string one = format_corpus(corpus_run(text, 1));
        CHECK(format_corpus(corpus_run(text, 8)) == one);
        CHECK(format_corpus(corpus_run(text, 3)) == one);
    }

    SUBCASE("type table reproduces the error terms")
    {
        const auto s = corpus_run_file(data_path("type_table.txt"));
        REQUIRE(s.entries.size() == 30);
        const auto types = representative_types(3, 1);
        for (std::size_t i = 0; i < 30; ++i) {
            const auto &r = *s.entries[i].report;
            CHECK(r.type == types[i % 10]);
            CHECK(r.error_term == error_term(types[i % 10], r.p));
        }
        CHECK(s.consistency_failures == 0);
    }

    SUBCASE("empty input")
    {
        const auto s = corpus_run("");
        CHECK(s.entries.empty());
        CHECK(s.holds == 0);
        CHECK(format_corpus(s).find("curves: 0\n") != std::string::npos);
        CHECK(corpus_run("# only a comment\n\n").entries.empty());
    }

    SUBCASE("malformed lines carry their line number")
    {
        try {
            corpus_run("laurent:Q;0;0;0;0;t\n\nlaurent:Q;0;0;0;t\n");
            FAIL("expected ParseError");
        } catch (const ParseError &e) {
            CHECK(e.line() == 3);
        }
        try {
            corpus_run("laurent:Q;0;0;0;0;t\npadic:6;0;0;0;0;1\n");
            FAIL("expected ParseError");
        } catch (const ParseError &e) {
            CHECK(e.line() == 2);
        }
        CHECK_THROWS_AS(corpus_run_file(data_path("missing.txt")), Error);
    }

    SUBCASE("failing curves are recorded")
    {
        const auto s = corpus_run("laurent:F2;0;0;0;0;t\nlaurent:Q;0;0;0;0;t\n");
        CHECK(s.errors == 1);
        CHECK(s.entries[0].error.find("SingularCurve") != std::string::npos);
        CHECK(s.entries[1].report);
    }
}
