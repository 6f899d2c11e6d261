#include "support.hpp"

#include <gtest/gtest.h>

using namespace eqhom;

namespace {

json without_timing(json report)
{
    for (auto& c : report["checks"])
        c.erase("millis");
    return report;
}

SweepConfig small_config()
{
    SweepConfig cfg;
    cfg.groups = {"Z2", "Z3"};
    cfg.max_flag_len = 3;
    cfg.max_dimension = 2;
    cfg.max_index = 3;
    cfg.random_cases = 20;
    return cfg;
}

}  // namespace

TEST(SweepConfig, Parse)
{
    SweepConfig cfg = SweepConfig::parse("# bounds\ngroups = Z2, Z2xZ2\nmax_flag_len = 3\nrng_seed = 99 # trailing\n");
    EXPECT_EQ(cfg.groups, (std::vector<std::string>{"Z2", "Z2xZ2"}));
    EXPECT_EQ(cfg.max_flag_len, 3);
    EXPECT_EQ(cfg.rng_seed, 99u);
    EXPECT_EQ(cfg.random_cases, 200);
    EXPECT_THROW(SweepConfig::parse("colour = blue"), ParseError);
    EXPECT_THROW(SweepConfig::parse("max_index = many"), ParseError);
    EXPECT_THROW(SweepConfig::parse("groups = Z2, Q3"), ParseError);
    EXPECT_THROW(SweepConfig::parse("max_index"), ParseError);
    EXPECT_THROW(SweepConfig::parse("max_index = 0"), PreconditionError);
}

TEST(Verify, DefaultConfigPasses)
{
    Report r = run_suite(SweepConfig{});
    EXPECT_TRUE(r.passed()) << report_text(r);
    ASSERT_EQ(r.checks.size(), 6u);
    for (const auto& c : r.checks)
        EXPECT_GT(c.cases, 0u) << c.check;
    EXPECT_TRUE(std::is_sorted(r.checks.begin(), r.checks.end(),
                               [](const auto& a, const auto& b) { return a.check < b.check; }));
}

TEST(Verify, MinimalBoundsPass)
{
    SweepConfig cfg;
    cfg.groups = {"1"};
    cfg.max_flag_len = cfg.max_dimension = cfg.max_index = cfg.random_cases = 1;
    Report r = run_suite(cfg);
    EXPECT_TRUE(r.passed()) << report_text(r);
}

TEST(Verify, DeterministicGivenSeed)
{
    SweepConfig cfg = small_config();
    json a = without_timing(report_json(run_suite(cfg)));
    json b = without_timing(report_json(run_suite(cfg)));
    EXPECT_EQ(a, b);
    cfg.rng_seed = 2;
    EXPECT_TRUE(run_suite(cfg).passed());
}

TEST(Verify, MutationCaughtOnCyclicFourOnly)
{
    SweepConfig cfg = small_config();
    cfg.groups = {"Z2"};
    EXPECT_TRUE(check_coaug_duality<DirectTwist>(cfg).passed);
    cfg.groups = {"Z4"};
    CheckResult bad = check_coaug_duality<DirectTwist>(cfg);
    EXPECT_FALSE(bad.passed);
    ASSERT_TRUE(bad.counterexample);
    const json& ce = *bad.counterexample;
    EXPECT_EQ(ce["argv"][0], "eval");
    // the recorded comparison replays exactly
    AbelianGroup g = AbelianGroup::parse("Z4");
    std::vector<std::string> argv = ce["argv"];
    Flag f = Flag::parse(g, argv[6]);
    Character alpha = g.parse_character(argv[8]);
    Comparison c = compare_coaug_duality<DirectTwist>(f, alpha);
    EXPECT_EQ(c.lhs, ce["lhs"]);
    EXPECT_EQ(c.rhs, ce["rhs"]);
    EXPECT_FALSE(c.equal);
}

TEST(Verify, ReportFormats)
{
    Report r;
    r.checks.push_back({"b_check", true, 3, 0, 1, std::nullopt});
    r.checks.push_back({"a_check", false, 2, 1, 1,
                        json{{"argv", {"eval", "--check", "retract", "--expr", "beta[1]*beta[2]"}},
                             {"lhs", "x"},
                             {"rhs", "y"}}});
    json j = report_json(r);
    EXPECT_EQ(j["status"], "fail");
    EXPECT_EQ(j["checks"][1]["status"], "fail");
    EXPECT_TRUE(j["checks"][1].contains("counterexample"));
    std::string text = report_text(r);
    EXPECT_NE(text.find("rerun: eqhom eval --check retract --expr 'beta[1]*beta[2]'"), std::string::npos);
    EXPECT_NE(text.find("overall: fail"), std::string::npos);
}

// Every comparison the sweeps record can be replayed through `eval` with an
// identical outcome; exercised here on passing cases of each kind.
TEST(Verify, EvalReplaysComparisons)
{
    const std::vector<std::vector<std::string>> cases = {
        {"eval", "--check", "coaug-duality", "--group", "Z4", "--flag", "(0),(1),(2)", "--alpha", "(2)"},
        {"eval", "--check", "pairing", "--group", "Z2", "--flag", "(0),(1)", "--pair", "1,1"},
        {"eval", "--check", "roundtrip", "--group", "Z2", "--flag", "(0),(1)", "--theory", "MU", "--shift", "-2",
         "--expr", "beta[1]*beta[2]/theta[(1)]^2"},
        {"eval", "--check", "roundtrip", "--group", "Z2", "--flag", "(0),(1)", "--theory", "mU", "--shift", "2",
         "--expr", "(beta[0]*beta[1] + e[(1)]*beta[2]^2)/theta[(0)]^2"},
        {"eval", "--check", "retract", "--group", "1", "--flag", "(0),(0),(0)", "--shift", "2", "--expr",
         "beta[1]*beta[3]"},
        {"eval", "--check", "retract-zero", "--group", "1", "--flag", "(0),(0),(0)", "--expr", "beta[1]*beta[3]"},
        {"eval", "--check", "collapse-theta", "--group", "Z3", "--flag", "(0),(1),(2)", "--alpha", "(2)"},
        {"eval", "--check", "collapse-btheta", "--group", "Z3", "--flag", "(0),(1),(2)", "--alpha", "(1)"},
        {"eval", "--check", "collapse-rewrite", "--group", "Z3", "--flag", "(0),(1),(2)", "--expr",
         "beta[2]/theta[(1)]"},
        {"eval", "--check", "collapse-present", "--theory", "mU", "--group", "1", "--truncate", "3"},
        {"eval", "--check", "periodicity", "--group", "Z2", "--flag", "(0),(1)", "--theory", "MUP", "--shift", "-2",
         "--alpha", "(1)", "--expr", "beta[0] + e[(1)]*beta[1]"},
        {"eval", "--check", "injective", "--group", "Z2", "--flag", "(0),(1)", "--alpha", "(0)", "--expr", "0"},
        {"eval", "--check", "degree", "--group", "Z2", "--flag", "(0),(1),(0),(1)", "--expr", "c[3]"},
    };
    for (const auto& argv : cases) {
        auto r = support::run(argv);
        EXPECT_EQ(r.status, 0) << argv[2] << "\n" << r.out << r.err;
        EXPECT_NE(r.out.find("equal: yes"), std::string::npos) << argv[2];
    }
}
