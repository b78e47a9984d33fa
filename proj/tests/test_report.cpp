#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "k4cube/cli.hpp"
#include "k4cube/report.hpp"

using namespace k4cube;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CliRun {
    int status;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "k4rel");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> lines;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

}  // namespace

TEST(Profile, MatchesGoldenFiles) {
    for (int n = 3; n <= 7; ++n) {
        std::ostringstream os;
        write_profile_csv(os, n);
        const auto golden = slurp(std::filesystem::path(K4CUBE_GOLDEN_DIR) / ("profile_n" + std::to_string(n) + ".csv"));
        ASSERT_FALSE(golden.empty());
        EXPECT_EQ(os.str(), golden) << "n=" << n;
    }
}

TEST(Profile, CliSpotRows) {
    const auto r4 = run({"profile", "--n", "4"});
    ASSERT_EQ(r4.status, 0);
    const auto lines = split_lines(r4.out);
    ASSERT_EQ(lines.size(), 9u);
    EXPECT_EQ(lines[0], "h,ex,xi,lambda");
    EXPECT_EQ(lines[3], "3,6,9,8");
    const auto r6 = split_lines(run({"profile", "--n", "6"}).out);
    EXPECT_EQ(r6[9], "9,34,29,29");
    const auto r7 = split_lines(run({"profile", "--n", "7"}).out);
    EXPECT_EQ(r7[64], "64,448,64,64");
}

TEST(Intervals, Csv) {
    const auto r = run({"intervals", "--n", "7"});
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "t,g_t,lower,upper,value\n0,3,13,16,48\n1,11,21,32,64\n2,43,21,64,64\n");
    EXPECT_EQ(split_lines(run({"intervals", "--n", "6"}).out)[1], "0,2,6,8,24");
}

TEST(Conditional, Csv) {
    EXPECT_EQ(run({"conditional", "--n", "7"}).out,
              "l,value\n2,20\n3,32\n4,48\n5,64\n6,64\ncyclic,18\nlow_l0,8\nlow_l1,14\n");
    EXPECT_EQ(run({"conditional", "--n", "5"}).out, "l,value\n2,12\n3,16\n4,16\ncyclic,12\nlow_l0,6\nlow_l1,10\n");
}

TEST(Cyclic, Cli) { EXPECT_EQ(run({"cyclic", "--n", "5"}).out, "n,cyclic\n5,12\n"); }

TEST(Lambda, CliMatchesProfile) {
    const auto lam = split_lines(run({"lambda", "--n", "6"}).out);
    const auto prof = split_lines(run({"profile", "--n", "6"}).out);
    ASSERT_EQ(lam.size(), prof.size());
    for (std::size_t i = 1; i < lam.size(); ++i) {
        const auto l = lam[i].substr(lam[i].rfind(',') + 1);
        const auto p = prof[i].substr(prof[i].rfind(',') + 1);
        EXPECT_EQ(l, p);
    }
}

TEST(Bitmap, Cli) {
    const auto k4 = run({"bitmap", "--n", "2"});
    EXPECT_EQ(k4.out, "P1\n4 4\n1000\n0100\n0010\n0001\n");
    for (const auto& args : std::vector<std::vector<std::string>>{{"bitmap", "--n", "3"},
                                                                  {"bitmap", "--n", "4", "--kind", "random", "--seed", "9"}}) {
        const auto r = run(args);
        ASSERT_EQ(r.status, 0);
        const auto lines = split_lines(r.out);
        std::size_t white = 0;
        for (std::size_t i = 2; i < lines.size(); ++i) white += static_cast<std::size_t>(std::count(lines[i].begin(), lines[i].end(), '0'));
        const std::size_t n = args[2] == "3" ? 3 : 4;
        EXPECT_EQ(white, (std::size_t{1} << n) * (n + 1));
        for (std::size_t i = 2; i < lines.size(); ++i)
            for (std::size_t j = 0; j < lines[i].size(); ++j) EXPECT_EQ(lines[i][j], lines[j + 2][i - 2]);
    }
    EXPECT_EQ(run({"bitmap", "--n", "3", "--kind", "hypercube"}).status, 0);
    EXPECT_EQ(run({"bitmap", "--n", "3", "--kind", "enhanced", "--k", "1"}).status, 0);
    EXPECT_EQ(run({"bitmap", "--n", "3", "--kind", "enhanced", "--k", "3"}).status, 2);
    EXPECT_EQ(run({"bitmap", "--n", "13"}).status, 2);
}

TEST(Plotdata, NormalizationAndMonotoneLambda) {
    const auto r = run({"plotdata", "--n", "6", "7"});
    ASSERT_EQ(r.status, 0);
    const auto lines = split_lines(r.out);
    ASSERT_GE(lines.size(), 2u + 32u + 64u);
    EXPECT_EQ(lines[0].front(), '#');
    EXPECT_EQ(lines[1], "n\th_norm\txi_norm\tlambda_norm");
    // n = 6: xi_max = 44, last row lambda = 32 / 44.
    EXPECT_EQ(lines[2 + 31], "6\t1\t" + format_ratio(32.0 / 44.0) + "\t" + format_ratio(32.0 / 44.0));
    EXPECT_EQ(lines[2 + 21], "6\t" + format_ratio(22.0 / 32.0) + "\t1\t" + format_ratio(32.0 / 44.0));
    double prev = 0;
    for (std::size_t i = 2 + 32; i < lines.size(); ++i) {
        const auto lam = std::stod(lines[i].substr(lines[i].rfind('\t') + 1));
        EXPECT_GE(lam, prev);
        prev = lam;
    }
    EXPECT_EQ(run({"plotdata", "--n", "6", "25"}).status, 2);
}

TEST(Output, ByteStableAndWritesFile) {
    EXPECT_EQ(run({"plotdata", "--n", "8"}).out, run({"plotdata", "--n", "8"}).out);
    const auto path = std::filesystem::temp_directory_path() / "k4rel_test_profile.csv";
    std::filesystem::remove(path);
    const auto r = run({"profile", "--n", "5", "--out", path.string()});
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(slurp(path), slurp(std::filesystem::path(K4CUBE_GOLDEN_DIR) / "profile_n5.csv"));
    std::filesystem::remove(path);
}

TEST(ExitCodes, UsageErrors) {
    EXPECT_EQ(run({}).status, 2);
    EXPECT_EQ(run({"nosuch"}).status, 2);
    EXPECT_EQ(run({"profile"}).status, 2);
    EXPECT_EQ(run({"profile", "--n", "2"}).status, 2);
    EXPECT_EQ(run({"profile", "--n", "25"}).status, 2);
    EXPECT_EQ(run({"profile", "--n", "abc"}).status, 2);
    EXPECT_EQ(run({"profile", "--n", "4", "5"}).status, 2);
    EXPECT_EQ(run({"verify", "--n", "6"}).status, 2);
    const auto bad = run({"profile", "--n", "4", "--out", "/nonexistent-dir/x.csv"});
    EXPECT_EQ(bad.status, 2);
    EXPECT_FALSE(bad.err.empty());
    EXPECT_EQ(run({"--help"}).status, 0);
}

TEST(Verify, CliPassesAndWritesLines) {
    const auto path = std::filesystem::temp_directory_path() / "k4rel_test_verify.txt";
    const auto r = run({"verify", "--n", "3", "--seeds", "5", "--out", path.string()});
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
    const auto lines = split_lines(slurp(path));
    ASSERT_FALSE(lines.empty());
    EXPECT_EQ(lines[0], "quantity,input,closed,brute,match");
    for (std::size_t i = 1; i < lines.size(); ++i)
        if (lines[i][0] != '#') {
            EXPECT_EQ(lines[i].substr(lines[i].rfind(',') + 1), "true") << lines[i];
        }
    std::filesystem::remove(path);
}

TEST(Verify, BoundedDimensionFive) {
    const auto r = run({"verify", "--n", "5", "--seeds", "1", "--bounded-size", "6"});
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("skipped"), std::string::npos);
}
