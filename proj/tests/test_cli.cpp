#include "support.hpp"

#include <gtest/gtest.h>

#include <fstream>

using eqhom::json;
using support::run;

TEST(Cli, ThetaTableMatchesGolden)
{
    auto r = run({"theta-table", "--group", "Z2", "--flag", "(0),(1),(0),(1)"});
    ASSERT_EQ(r.status, 0) << r.err;
    std::ifstream in(EQHOM_GOLDEN_DIR "/theta_table_z2.txt");
    std::stringstream golden;
    golden << in.rdbuf();
    EXPECT_EQ(r.out, golden.str());
}

TEST(Cli, Thetas)
{
    auto r = run({"thetas", "--group", "Z4", "--flag", "(0),(1),(2),(3)"});
    ASSERT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("theta[(2)] = beta[0] + e[(2)]*beta[1] + e[(2)]*e[(3)]*beta[2]\n"), std::string::npos);
    EXPECT_EQ(r.out.find("augmentations"), std::string::npos);
    auto one = run({"thetas", "--group", "Z3", "--flag", "(0),(2)", "--alpha", "(2)"});
    EXPECT_EQ(one.status, 0) << one.err;
    EXPECT_EQ(run({"thetas", "--group", "Z3", "--flag", "(0),(2)"}).status, 3);
}

TEST(Cli, PresentTrivialGroup)
{
    auto r = run({"present", "--theory", "mU", "--group", "1", "--truncate", "4"});
    ASSERT_EQ(r.status, 0) << r.err;
    for (int i = 1; i <= 4; ++i)
        EXPECT_NE(r.out.find("c[" + std::to_string(i) + "]  degree " + std::to_string(2 * i) + "  dimension 0"),
                  std::string::npos);
    EXPECT_NE(r.out.find("inverted: none (polynomial ring)"), std::string::npos);
    EXPECT_EQ(r.out.rfind("degree convention: homological\n", 0), 0u);
}

TEST(Cli, RewriteExamples)
{
    auto r = run({"rewrite", "--theory", "MU", "--group", "Z2", "--flag", "(0),(1)", "--expr",
                  "beta[1]*beta[2]/theta[(1)]^2"});
    EXPECT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(r.out, "b[1]*b[2]/btheta[(1)]^2\n");
    auto back = run({"rewrite", "--theory", "MU", "--group", "Z2", "--flag", "(0),(1)", "--expr",
                     "b[1]*b[2]/btheta[(1)]^2"});
    EXPECT_EQ(back.out, "beta[1]*beta[2]/theta[(1)]^2\n");
    auto mu = run({"rewrite", "--theory", "mU", "--group", "Z2", "--flag", "(0),(1)", "--expr",
                   "(beta[0]*beta[1] + e[(1)]*beta[2]^2)/theta[(0)]^2"});
    EXPECT_EQ(mu.out, "c[1] + e[(1)]*c[2]^2\n");
    auto reduce = run({"rewrite", "--theory", "MUP", "--group", "Z2", "--flag", "(0),(1)", "--expr",
                       "(beta[0]^2 + e[(1)]*beta[0]*beta[1])/theta[(1)]"});
    EXPECT_EQ(reduce.out, "beta[0]\n");
}

TEST(Cli, RewriteWithSpecialization)
{
    const std::string path = testing::TempDir() + "eqhom_zero.spec";
    std::ofstream(path) << "e[*] = 0\n";
    auto r = run({"rewrite", "--theory", "MU", "--group", "Z4", "--flag", "(0),(1),(2),(3)", "--expr",
                  "beta[0]*beta[3]/(theta[(1)]*theta[(2)])", "--specialize", path});
    EXPECT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(r.out, "b[3]\n");
    auto table = run({"theta-table", "--group", "Z2", "--flag", "(0),(1)", "--specialize", path});
    EXPECT_NE(table.out.find("theta[(1)] = beta[0]\n"), std::string::npos);
    EXPECT_EQ(run({"rewrite", "--theory", "MUP", "--group", "Z2", "--expr", "beta[1]", "--specialize", path}).status, 3);
}

TEST(Cli, ExitStatuses)
{
    EXPECT_EQ(run({"theta-table", "--group", "Z2x", "--flag", "(0)"}).status, 2);
    auto bad_char = run({"theta-table", "--group", "Z2", "--flag", "(0),(7)"});
    EXPECT_EQ(bad_char.status, 2);
    EXPECT_NE(bad_char.err.find("(7)"), std::string::npos);
    EXPECT_EQ(run({"rewrite", "--theory", "MU", "--group", "Z3", "--flag", "(0),(1)", "--expr", "beta[1]/theta[(2)]"})
                  .status,
              3);
    EXPECT_EQ(run({"rewrite", "--theory", "XX", "--group", "Z3", "--expr", "1"}).status, 2);
    EXPECT_EQ(run({"rewrite", "--theory", "MU", "--group", "Z3", "--expr", "beta[1]"}).status, 3);
    EXPECT_EQ(run({"bogus"}).status, 2);
    EXPECT_EQ(run({}).status, 2);
    EXPECT_EQ(run({"verify", "--config", "/nonexistent/eqhom.conf"}).status, 2);
    EXPECT_EQ(run({"--help"}).status, 0);
    EXPECT_EQ(run({"eval", "--check", "coaug-duality", "--group", "Z4", "--flag", "(0),(1)", "--alpha", "(2)"}).status,
              3);
}

TEST(Cli, JsonOutputsParse)
{
    const std::vector<std::vector<std::string>> cmds = {
        {"theta-table", "--group", "Z2", "--flag", "(0),(1),(0),(1)", "--format", "json"},
        {"thetas", "--group", "Z2xZ2", "--format", "json"},
        {"present", "--theory", "MU", "--group", "Z3", "--format", "json"},
        {"rewrite", "--theory", "MU", "--group", "Z2", "--flag", "(0),(1)", "--expr", "beta[1]*beta[2]/theta[(1)]^2",
         "--format", "json"},
        {"eval", "--check", "pairing", "--group", "Z2", "--flag", "(0),(1)", "--pair", "0,1", "--format", "json"},
    };
    for (const auto& c : cmds) {
        auto r = run(c);
        ASSERT_EQ(r.status, 0) << c[0] << r.err;
        json j = json::parse(r.out);
        EXPECT_FALSE(j.empty());
    }
    json t = json::parse(run(cmds[0]).out);
    EXPECT_EQ(t["coaugmentations"][1]["text"], "beta[0] + e[(1)]*beta[1]");
    json w = json::parse(run(cmds[3]).out);
    EXPECT_EQ(w["output"]["text"], "b[1]*b[2]/btheta[(1)]^2");
}

TEST(Cli, Deterministic)
{
    std::vector<std::string> cmd = {"present", "--theory", "MUP", "--group", "Z2xZ2", "--format", "json"};
    EXPECT_EQ(run(cmd).out, run(cmd).out);
}

TEST(Cli, Manpage)
{
    auto r = run({"manpage"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.rfind(".TH EQHOM 1", 0), 0u);
    EXPECT_NE(r.out.find("btheta"), std::string::npos);
    EXPECT_NE(r.out.find("EXIT STATUS"), std::string::npos);
}
