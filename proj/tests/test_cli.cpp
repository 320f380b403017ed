#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cupcap/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "cupcap");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cupcap::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

const std::string kSample = CUPCAP_SOURCE_DIR "/data/sample.pairfn";
const std::string kCorpus = CUPCAP_SOURCE_DIR "/data/corpus.txt";

std::string temp_file(const std::string& name, const std::string& text)
{
    auto path = std::filesystem::temp_directory_path() / ("cupcap_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST(Cli, EncodeLeftTable)
{
    auto r = run({"encode", "--pairfn", kSample, "--k", "2", "--l", "2", "--side", "L"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "i\talpha1\talpha2\tbeta1\tbeta2\tL\n"
              "1\t+inf\t+inf\t-inf\t-inf\tββαα\n"
              "2\t2\t+inf\t2\t-inf\tβαβα\n"
              "3\t4\t6\t6\t-inf\tβααβ\n"
              "4\t-9\t+inf\t-2\t-6\tαββα\n"
              "5\t-5\t7\t7\t-1\tαβαβ\n");
}

TEST(Cli, EncodeRightTableFromPoints)
{
    auto pts = temp_file("cup.points", "points v1\n0 0\n1 1\n2 3\n3 6\n");
    auto r = run({"encode", "--points", pts, "--k", "3", "--l", "2", "--side", "R"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("1\t2\t3/2\t1\t1\t+inf\tδγγγδ\n"), std::string::npos) << r.out;
}

TEST(Cli, VerifyInjectivityOnSampleTable)
{
    auto r = run({"verify", "injectivity", "--pairfn", kSample, "--k", "2", "--l", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "PASS neq2 sample\n");
    auto nf = run({"verify", "neq2", "--pairfn", kSample, "--k", "1", "--l", "1"});
    EXPECT_EQ(nf.code, 3);
    EXPECT_EQ(nf.out.rfind("UNKNOWN neq2 sample precondition:NotFree", 0), 0u);
}

TEST(Cli, BoundRatioTable)
{
    auto r = run({"bound", "--ratio-table", "6", "7", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "n,raw,rtotal,ratio_decimal\n6,31,35,0.8857142857\n7,111,126,0.8809523810\n");
    auto b = run({"bound", "--n", "7"});
    EXPECT_NE(b.out.find("assembled_upper 140\n"), std::string::npos);
    EXPECT_EQ(run({"bound", "--n", "5"}).code, 2);
}

TEST(Cli, FreeVerb)
{
    auto pts = temp_file("cup4.points", "points v1\n0 0\n1 1\n2 3\n3 6\n");
    auto r = run({"free", "--points", pts, "--k", "5", "--l", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "free\n");
    auto n = run({"free", "--points", pts, "--k", "4", "--l", "3"});
    EXPECT_EQ(n.code, 1);
    EXPECT_EQ(n.out, "not-free cup 1 2 3 4\n");
}

TEST(Cli, WordsVerb)
{
    auto r = run({"words", "--k", "2", "--l", "2", "--prefix", "b", "--suffix", "aa"});
    EXPECT_EQ(r.out, "ββαα\n");
    auto c = run({"words", "--k", "4", "--l", "3", "--prefix", "β", "--suffix", "αα", "--count"});
    EXPECT_EQ(c.out, "6\n");
    EXPECT_EQ(run({"words", "--k", "2", "--l", "2", "--prefix", "x"}).code, 2);
}

TEST(Cli, ConstructAndConvex)
{
    auto r = run({"construct", "eslower", "--n", "5", "--certificate"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("# largest convex subset 4 < 5: PASS"), std::string::npos);
    auto path = temp_file("eslower5.points", r.out);
    auto c = run({"convex", "--points", path});
    EXPECT_EQ(c.code, 0);
    EXPECT_EQ(c.out.rfind("size 4\n", 0), 0u);
    auto f = run({"construct", "freeset", "--k", "2", "--l", "2"});
    EXPECT_EQ(f.code, 0);
    EXPECT_EQ(cupcap::parse_point_set(f.out).size(), 6u);
    EXPECT_EQ(run({"construct", "eslower", "--n", "9"}).code, 2);
}

TEST(Cli, SearchVerbs)
{
    EXPECT_EQ(run({"search", "esprime", "--k", "3", "--l", "4"}).out, "ES'(3,4) = 3\n");
    EXPECT_EQ(run({"search", "esprime", "--k", "4", "--l", "4"}).code, 3);
    auto c = run({"search", "corpus", "--n", "5", "--m", "6", "--count", "2"});
    EXPECT_EQ(c.code, 0);
    EXPECT_EQ(c.out.rfind("corpus v1\n", 0), 0u);
}

TEST(Cli, SuiteEmptyCorpus)
{
    auto path = temp_file("empty.corpus", "corpus v1\n");
    auto r = run({"verify", "suite", "--corpus", path});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "summary instances=0 PASS=0 FAIL=0 UNKNOWN=0\n");
}

TEST(Cli, SuiteNonFreeInstanceIsPrecondition)
{
    // Thirty points always contain a 5-cup or a 4-cap.
    auto path = temp_file("bad.corpus", "corpus v1\n7 30 5\n");
    auto r = run({"verify", "suite", "--corpus", path, "--checks", "neq2,gv"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.out.find("UNKNOWN neq2 s7-m30-n5 precondition:NotFree"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("summary instances=1 PASS=0 FAIL=0 UNKNOWN=2"), std::string::npos);
}

TEST(Cli, SuitePinnedCorpusAllPass)
{
    auto r = run({"verify", "suite", "--corpus", kCorpus});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("FAIL=0 UNKNOWN=0"), std::string::npos);
    EXPECT_EQ(run({"verify", "suite", "--corpus", kCorpus}).out, r.out);
}

TEST(Cli, SingleClaimOnPoints)
{
    auto pts = temp_file("cup4b.points", "points v1\n0 0\n1 1\n2 3\n3 6\n");
    auto r = run({"verify", "cstrings", "--points", pts, "--n", "5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "PASS cstrings cupcap_test_cup4b\n");
    EXPECT_EQ(run({"verify", "clast", "--points", pts, "--n", "5", "--no-peel"}).code, 0);
    EXPECT_EQ(run({"verify", "bogus", "--points", pts, "--n", "5"}).code, 2);
}

TEST(Cli, BudgetFromEnvironment)
{
    ::setenv("CUPCAP_BUDGET", "abc", 1);
    EXPECT_EQ(run({"verify", "suite", "--corpus", kCorpus, "--checks", "gv"}).code, 2);
    ::setenv("CUPCAP_BUDGET", "0", 1);
    EXPECT_EQ(run({"verify", "suite", "--corpus", kCorpus, "--checks", "gv"}).code, 2);
    // Every mate-set entry of the pinned corpus has exactly one signature, so a budget of one
    // still completes every check.
    ::setenv("CUPCAP_BUDGET", "1", 1);
    auto r = run({"verify", "suite", "--corpus", kCorpus, "--checks", "gv"});
    ::unsetenv("CUPCAP_BUDGET");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, run({"verify", "suite", "--corpus", kCorpus, "--checks", "gv"}).out);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"encode", "--k", "2", "--l", "2"}).code, 2);
    EXPECT_EQ(run({"encode", "--pairfn", "/nonexistent", "--k", "2", "--l", "2"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}
