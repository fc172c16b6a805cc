#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "framecast/io.hpp"

namespace framecast {
namespace {

namespace fs = std::filesystem;
using io::Json;

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args)
{
    const std::string cmd = std::string(FRAMECAST_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() /
               (std::string("framecast_cli_") + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

std::string read_text(const std::string& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

TEST_F(CliTest, SpiralPointsQuarterParameters)
{
    const auto r = run("spiral-points --c 1 --R 0.25 --delta 0.25 --count 3 --out " + path("p.json"));
    ASSERT_EQ(r.code, 0);
    const Json doc = io::read_json(path("p.json"));
    EXPECT_EQ(doc["sample_points"]["points"].size(), 3u);
    for (const auto& g : doc["sample_points"]["gaps"]) EXPECT_LT(g.get<double>(), 0.5);
    EXPECT_TRUE(doc["gap_check"]["pass"].get<bool>());
    EXPECT_TRUE(doc["covering"].contains("rho"));
}

TEST_F(CliTest, SpiralPointsSingleAndInadmissible)
{
    const auto one = run("spiral-points --count 1");
    ASSERT_EQ(one.code, 0);
    const Json doc = Json::parse(one.out);
    EXPECT_LT(doc["sample_points"]["gaps"][0].get<double>(), 0.5);
    EXPECT_EQ(run("spiral-points --c 1 --R 1 --delta 0.25 --count 3").code, 2);
    EXPECT_EQ(run("spiral-points --c 1 --R 0.25 --delta 0.25").code, 2);
    EXPECT_EQ(run("spiral-points --c abc --count 3").code, 2);
}

TEST_F(CliTest, ParsevalOfIdentityIsIdentity)
{
    Frame id{ComplexMatrix::identity(3), {}, {}};
    io::write_frame_file(path("id.json"), id);
    const auto r = run("parseval --in " + path("id.json") + " --out " + path("g.json") + " --emit-transfer " +
                       path("c.csv") + " --report " + path("r.json"));
    ASSERT_EQ(r.code, 0);
    const Frame g = io::read_frame_file(path("g.json")).frame;
    EXPECT_LT((g.vectors - id.vectors).frobenius_norm(), 1e-15);
    const Json rep = io::read_json(path("r.json"));
    EXPECT_EQ(rep["outputs"]["symmetric_distance"]["value"].get<double>(), 0.0);
    EXPECT_TRUE(rep["outputs"]["bound_lower"]["pass"].get<bool>());
    EXPECT_EQ(read_text(path("c.csv")).substr(0, 14), "row,col,re,im\n");
}

TEST_F(CliTest, ParsevalOfSixVectorFrame)
{
    ASSERT_EQ(run("interval-frame --lambdas 10/3,17/4,26/5 --sums 0+1,0+2,1+2 --out " + path("f.json")).code, 0);
    ASSERT_EQ(run("parseval --in " + path("f.json") + " --out " + path("g.json") + " --report " + path("r.json")).code,
              0);
    const Json rep = io::read_json(path("r.json"));
    EXPECT_EQ(rep["outputs"]["size"], 6);
    EXPECT_EQ(rep["outputs"]["span_dim"], 3);
    EXPECT_NEAR(rep["outputs"]["bound_lower"]["value"].get<double>(), 1.0, 1e-9);
    EXPECT_NEAR(rep["outputs"]["bound_upper"]["value"].get<double>(), 1.0, 1e-9);
    EXPECT_EQ(rep["outputs"]["bound_upper"]["tolerance"].get<double>(), 1e-9);
}

TEST_F(CliTest, ParsevalErrorCodes)
{
    std::ofstream(path("bad.json")) << "{not json";
    EXPECT_EQ(run("parseval --in " + path("bad.json") + " --out " + path("g.json")).code, 4);
    EXPECT_EQ(run("parseval --in " + path("missing.json") + " --out " + path("g.json")).code, 4);
    io::write_frame_file(path("line.json"), Frame{ComplexMatrix{{1.0, 0.0}}, {}, {}});
    EXPECT_EQ(run("parseval --require-spanning --in " + path("line.json") + " --out " + path("g.json")).code, 3);
    io::write_frame_file(path("zero.json"), Frame{ComplexMatrix(2, 2), {}, {}});
    EXPECT_EQ(run("parseval --in " + path("zero.json") + " --out " + path("g.json")).code, 3);
}

double summary_error(const std::string& csv)
{
    const auto pos = csv.rfind("relative_l2_error,,,,,");
    return std::stod(csv.substr(pos + 22));
}

TEST_F(CliTest, ReconstructBuiltinSignals)
{
    for (const char* sig : {"fig1", "fig2"}) {
        const auto r = run(std::string("reconstruct --signal ") + sig + " --N 50 --out " + path("r.csv"));
        ASSERT_EQ(r.code, 0);
        const std::string csv = read_text(path("r.csv"));
        EXPECT_EQ(csv.substr(0, csv.find('\n')), "node_index,x,y,re_original,re_reconstructed,abs_error");
        EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2502);
        EXPECT_LE(summary_error(csv), 1e-9) << sig;
    }
    const auto zero = run("reconstruct --signal zero --N 10 --stride 7");
    ASSERT_EQ(zero.code, 0);
    EXPECT_EQ(summary_error(zero.out), 0.0);
    EXPECT_EQ(std::count(zero.out.begin(), zero.out.end(), '\n'), 2 + 15);
}

TEST_F(CliTest, ReconstructDimensionMismatch)
{
    io::write_json(path("s.json"), io::signal_to_json(ComplexVector(7, 1.0)));
    EXPECT_EQ(run("reconstruct --N 10 --signal " + path("s.json")).code, 3);
}

TEST_F(CliTest, ReconstructFromGridFrameFile)
{
    ASSERT_EQ(run("spiral-points --count 3 --out " + path("p.json")).code, 0);
    ASSERT_EQ(run("grid-frame --points " + path("p.json") + " --N 20 --out " + path("f.json")).code, 0);
    const auto r = run("reconstruct --frame " + path("f.json") + " --signal fig2");
    ASSERT_EQ(r.code, 0);
    EXPECT_LE(summary_error(r.out), 1e-9);
    // node coordinates are recovered from the grid metadata
    EXPECT_EQ(r.out.find("\n0,,"), std::string::npos);
}

TEST_F(CliTest, ErrorBound)
{
    const auto r = run("error-bound --k 2 --deriv-l1 1 --A 1 --R 0.5 --N-tilde 99");
    ASSERT_EQ(r.code, 0);
    const Json rep = Json::parse(r.out);
    EXPECT_NEAR(rep["outputs"]["bound"]["value"].get<double>(), 5.06605918211688857e-4, 1e-15);
    const auto eq = run("error-bound --k 2 --deriv-l1 1 --A 1 --R 0.5 --N-tilde 99 --formula eq35");
    ASSERT_EQ(eq.code, 0);
    EXPECT_NEAR(Json::parse(eq.out)["outputs"]["bound"]["value"].get<double>(), 5.06605918211688857e-4, 1e-15);
    EXPECT_EQ(run("error-bound --k 1").code, 2);
    EXPECT_EQ(run("error-bound --formula bogus").code, 2);
}

TEST_F(CliTest, CompareExamplePartitionAndOnb)
{
    ASSERT_EQ(run("interval-frame --lambdas 10/3,17/4,26/5,37/6 --out " + path("f.json")).code, 0);
    const auto r = run("compare --in " + path("f.json") + " --partition \"0,1;2,3\"");
    ASSERT_EQ(r.code, 0);
    const Json rep = Json::parse(r.out);
    EXPECT_FALSE(rep["outputs"]["coincides"].get<bool>());
    EXPECT_GT(rep["outputs"]["deviation"]["value"].get<double>(), 1e-3);

    io::write_frame_file(path("id.json"), Frame{ComplexMatrix::identity(3), {}, {}});
    const auto onb = run("compare --in " + path("id.json") + " --partition \"0;1;2\"");
    ASSERT_EQ(onb.code, 0);
    EXPECT_TRUE(Json::parse(onb.out)["outputs"]["coincides"].get<bool>());
    EXPECT_EQ(run("compare --in " + path("id.json") + " --partition \"0,1\"").code, 2);
    EXPECT_EQ(run("compare --in " + path("id.json") + " --partition \"0,x;1,2\"").code, 2);
}

TEST_F(CliTest, FrameBoundsAndTolerances)
{
    io::write_frame_file(path("id.json"), Frame{ComplexMatrix::identity(2), {}, {}});
    const auto r = run("frame-bounds --in " + path("id.json"));
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(Json::parse(r.out)["outputs"]["upper"]["value"].get<double>(), 1.0);
    const auto tol = run("--tol 1e-6 frame-bounds --in " + path("id.json"));
    EXPECT_DOUBLE_EQ(Json::parse(tol.out)["outputs"]["parseval_gap"]["tolerance"].get<double>(), 1e-5);
    EXPECT_EQ(run("--tol -1 frame-bounds --in " + path("id.json")).code, 4);
}

TEST_F(CliTest, OutputsAreDeterministic)
{
    ASSERT_EQ(run("spiral-points --count 5 --out " + path("a.json")).code, 0);
    ASSERT_EQ(run("spiral-points --count 5 --out " + path("b.json")).code, 0);
    EXPECT_EQ(read_text(path("a.json")), read_text(path("b.json")));
}

} // namespace
} // namespace framecast
