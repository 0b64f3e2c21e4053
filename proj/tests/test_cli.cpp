#include <gtest/gtest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "mmdim/cli.hpp"
#include "mmdim/fixtures.hpp"
#include "mmdim/io.hpp"

using namespace mmdim;

namespace {

struct Result
{
    int code = 0;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args, const std::string& input = "")
{
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s)
{
    std::size_t n = 0;
    std::istringstream ss(s);
    for (std::string line; std::getline(ss, line);)
        n += !line.empty() && line[0] != '#';
    return n;
}

} // namespace

TEST(Cli, Construct789)
{
    const auto r = run({"construct", "-a", "7", "-b", "8", "-c", "9"});
    EXPECT_EQ(r.code, 0);
    // header line with the parameters plus 12 questions
    EXPECT_EQ(count_lines(r.out), 13u);
    EXPECT_EQ(parse_strategy(r.out).size(), 12u);
}

TEST(Cli, ConstructExplainStillParses)
{
    const auto r = run({"construct", "-a", "5", "-b", "8", "-c", "9", "--explain"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("# case LT_narrow"), std::string::npos);
    const auto v = run({"verify"}, r.out);
    EXPECT_EQ(v.code, 0);
    EXPECT_EQ(v.out, "feasible: 10 questions for (5,8,9)\n");
}

TEST(Cli, DimensionJson466)
{
    const auto r = run({"dimension", "-a", "4", "-b", "6", "-c", "6", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["exact"], 8);
    EXPECT_EQ(j["open"], false);
}

TEST(Cli, DimensionOpenCase)
{
    const auto r = run({"dimension", "-a", "7", "-b", "8", "-c", "8", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["exact"].is_null());
    EXPECT_EQ(j["open"], true);
    EXPECT_EQ(j["lower"]["value"], 10);
    EXPECT_EQ(j["upper"]["value"], 11);
}

TEST(Cli, VerifyProjectedTableReportsWitness)
{
    const auto text = strategy_text(fixture("projection-233").strategy);
    const auto r = run({"verify"}, text);
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "infeasible, witness (1,3,3)/(2,1,2)\n");
}

TEST(Cli, VerifyReadsFile)
{
    const std::string path = testing::TempDir() + "mmdim_fixture_2b.txt";
    {
        std::ofstream f(path);
        f << strategy_text(fixture("projection-233").strategy);
    }
    const auto r = run({"verify", path, "--format", "json"});
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["feasible"], false);
    EXPECT_EQ(j["witness"].size(), 2u);
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run({"construct", "-a", "0", "-b", "2", "-c", "2"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"construct", "-a", "2"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"bogus"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"verify"}, "3 3 3\n1 1\n").code, cli::kExitDataErr);
    EXPECT_EQ(run({"verify", "/nonexistent/strategy.txt"}).code, cli::kExitNoInput);
    const auto budget = run({"search", "-a", "4", "-b", "6", "-c", "6", "--size", "7", "--node-limit", "10"});
    EXPECT_EQ(budget.code, cli::kExitBudget);
}

TEST(Cli, ReorderingNoteGoesToStderr)
{
    const auto r = run({"construct", "-a", "9", "-b", "7", "-c", "8"});
    EXPECT_EQ(r.code, 0);
    EXPECT_FALSE(r.err.empty());
    EXPECT_EQ(parse_strategy(r.out).params(), Params(9, 7, 8));
}

TEST(Cli, SearchFindsMinimum)
{
    const auto r = run({"search", "-a", "3", "-b", "3", "-c", "3", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["size"], 4);
}

TEST(Cli, AugmentAndProject)
{
    const auto table = strategy_text(fixture("projection-333").strategy);
    const auto refused = run({"project", "--peg", "1", "-i", "2", "-j", "3"}, table);
    EXPECT_EQ(refused.code, 1);
    const auto forced = run({"project", "--peg", "1", "-i", "2", "-j", "3", "--force"}, table);
    EXPECT_EQ(forced.code, 0);
    EXPECT_EQ(parse_strategy(forced.out), fixture("projection-233").strategy);

    const auto aug = run({"augment", "--peg", "3"}, table);
    EXPECT_EQ(aug.code, 0);
    const auto s = parse_strategy(aug.out);
    EXPECT_EQ(s.params(), Params(3, 3, 4));
    EXPECT_EQ(s.size(), 5u);
    EXPECT_EQ(s.questions().back(), Question(3, 3, 4));
}

TEST(Cli, AnalyzeJson)
{
    const auto r = run({"analyze", "--format", "json"}, strategy_text(fixture("projection-233").strategy));
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(nlohmann::json::accept(r.out));
}

TEST(Cli, TableMatchesGoldenFile)
{
    std::ifstream f(std::string(MMDIM_TEST_DATA_DIR) + "/table_21.csv");
    std::stringstream golden;
    golden << f.rdbuf();
    const auto r = run({"table", "--max-sum", "21"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, golden.str());
}

TEST(CliProperty, ConstructVerifyJsonPipeline)
{
    for (int a = 1; a <= 9; ++a)
        for (int b = a; b <= 9; ++b)
            for (int c = b; c <= 9; ++c) {
                const auto args = std::vector<std::string>{"construct", "-a", std::to_string(a), "-b",
                                                           std::to_string(b), "-c", std::to_string(c),
                                                           "--format", "json"};
                const auto built = run(args);
                ASSERT_EQ(built.code, 0);
                const auto v = run({"verify", "--format", "json"}, built.out);
                ASSERT_EQ(v.code, 0) << v.err;
                EXPECT_EQ(nlohmann::json::parse(v.out)["feasible"], true) << a << ',' << b << ',' << c;
            }
}
