#include <gtest/gtest.h>

#include <cstring>
#include <filesystem>
#include <fstream>

#include "framecast/error.hpp"
#include "framecast/io.hpp"
#include "test_support.hpp"

namespace framecast::io {
namespace {

namespace fs = std::filesystem;

class TempDir {
public:
    TempDir()
    {
        const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        path_ = fs::temp_directory_path() / (std::string("framecast_") + info->name());
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    fs::path operator/(const std::string& name) const { return path_ / name; }

private:
    fs::path path_;
};

void write_text(const fs::path& p, const std::string& text)
{
    std::ofstream(p) << text;
}

ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const FrameError& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no FrameError thrown";
    return ErrorKind::InvalidArgument;
}

TEST(FrameFile, RoundTripIsBitExact)
{
    TempDir dir;
    testing::Generator gen(80);
    Frame f{gen.gaussian_matrix(7, 5), {}, "random"};
    f.vectors(0, 0) = {1e-300, -0.1};
    f.vectors(1, 1) = {1.0 / 3.0, 2.0 / 7.0};
    for (std::size_t i = 0; i < 7; ++i) f.labels.push_back({double(i) / 3.0, -1.5});
    write_frame_file(dir / "f.json", f, Json{{"source", "unit test"}});
    const FrameFile back = read_frame_file(dir / "f.json");
    ASSERT_EQ(back.frame.size(), 7u);
    ASSERT_EQ(back.frame.dim(), 5u);
    EXPECT_EQ(std::memcmp(back.frame.vectors.entries().data(), f.vectors.entries().data(), 35 * sizeof(Complex)), 0);
    EXPECT_EQ(back.frame.labels, f.labels);
    EXPECT_EQ(back.frame.basis_note, "random");
    EXPECT_EQ(back.metadata["source"], "unit test");
}

TEST(FrameFile, RejectsMalformedDocuments)
{
    const Json good = frame_to_json(Frame{ComplexMatrix::identity(2), {}, {}});
    EXPECT_NO_THROW(frame_from_json(good));

    Json bad = good;
    bad["schema_version"] = "framecast.frame/0";
    EXPECT_EQ(kind_of([&] { frame_from_json(bad); }), ErrorKind::ParseError);
    bad = good;
    bad["vectors"][1] = Json::array({Json::array({1.0, 0.0})});
    EXPECT_EQ(kind_of([&] { frame_from_json(bad); }), ErrorKind::ParseError);
    bad = good;
    bad["vectors"][0][0] = "one";
    EXPECT_EQ(kind_of([&] { frame_from_json(bad); }), ErrorKind::ParseError);
    bad = good;
    bad["labels"] = Json::array({Json::array({1.0})});
    EXPECT_EQ(kind_of([&] { frame_from_json(bad); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([&] { frame_from_json(Json::array()); }), ErrorKind::ParseError);
}

TEST(FrameFile, ReadErrorsDistinguishMissingFromInvalid)
{
    TempDir dir;
    EXPECT_EQ(kind_of([&] { read_frame_file(dir / "missing.json"); }), ErrorKind::IoError);
    write_text(dir / "broken.json", "{\"schema_version\": ");
    EXPECT_EQ(kind_of([&] { read_frame_file(dir / "broken.json"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([&] { write_json(dir / "no" / "such" / "dir.json", Json::object()); }), ErrorKind::IoError);
}

TEST(Signal, AcceptsObjectOrBareArray)
{
    const ComplexVector v{{1.0, 2.0}, {-0.5, 0.0}};
    EXPECT_EQ(signal_from_json(signal_to_json(v)), v);
    EXPECT_EQ(signal_from_json(Json::parse("[[1, 2], -0.5]")), v);
    EXPECT_EQ(kind_of([] { signal_from_json(Json::parse("{\"x\": 1}")); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { signal_from_json(Json::parse("[[1, 2, 3]]")); }), ErrorKind::ParseError);
}

TEST(SamplePoints, SingletonSeparationIsNull)
{
    SamplePointSet s;
    s.points = {{0.1, 0.2}};
    s.min_separation = std::numeric_limits<double>::infinity();
    const Json j = sample_points_to_json(s);
    EXPECT_TRUE(j["min_separation"].is_null());
    EXPECT_EQ(j["points"][0][1], 0.2);
}

TEST(MatrixCsv, LongFormat)
{
    TempDir dir;
    write_matrix_csv(dir / "m.csv", ComplexMatrix{{1.0, Complex(0.0, -2.0)}});
    std::ifstream in(dir / "m.csv");
    std::string header, a, b;
    std::getline(in, header);
    std::getline(in, a);
    std::getline(in, b);
    EXPECT_EQ(header, "row,col,re,im");
    EXPECT_EQ(a, "0,0,1.0,0.0");
    EXPECT_EQ(b, "0,1,0.0,-2.0");
}

TEST(Report, CheckedOutputsCarryTolerance)
{
    Report r{"parseval"};
    r.inputs_echo["in"] = "f.json";
    r.add("span_dim", 3);
    r.add_checked("isometry_defect", 1e-15, 1e-10, true);
    const Json j = r.to_json();
    EXPECT_EQ(j["command"], "parseval");
    EXPECT_EQ(j["outputs"]["isometry_defect"]["tolerance"], 1e-10);
    EXPECT_EQ(j["outputs"]["isometry_defect"]["pass"], true);
    EXPECT_EQ(j["tool_version"], tool_version());
}

TEST(Config, PrecedenceDefaultsEnvFileFlag)
{
    TempDir dir;
    const Tolerances defaults = load_tolerances({.env_tol = std::string("")});
    EXPECT_EQ(defaults.svd, Tolerances{}.svd);

    const Tolerances env = load_tolerances({.env_tol = std::string("1e-6")});
    EXPECT_EQ(env.svd, 1e-6);
    EXPECT_EQ(env.rank, Tolerances{}.rank);

    write_text(dir / "cfg.json", R"({"tol": 1e-7, "tolerances": {"polar": 1e-5}})");
    const Tolerances file = load_tolerances({.config_file = dir / "cfg.json", .env_tol = std::string("1e-6")});
    EXPECT_EQ(file.svd, 1e-7);
    EXPECT_EQ(file.polar, 1e-5);

    const Tolerances flag =
        load_tolerances({.config_file = dir / "cfg.json", .tol_flag = 1e-8, .env_tol = std::string("1e-6")});
    EXPECT_EQ(flag.svd, 1e-8);
    EXPECT_EQ(flag.polar, 1e-8);
}

TEST(Config, RejectsBadValues)
{
    TempDir dir;
    EXPECT_EQ(kind_of([] { load_tolerances({.env_tol = std::string("abc")}); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { load_tolerances({.tol_flag = -1.0, .env_tol = std::string("")}); }),
              ErrorKind::ParseError);
    write_text(dir / "cfg.json", R"({"tol": "small"})");
    EXPECT_EQ(kind_of([&] { load_tolerances({.config_file = dir / "cfg.json", .env_tol = std::string("")}); }),
              ErrorKind::ParseError);
}

} // namespace
} // namespace framecast::io
