#pragma once

// JSON and CSV persistence: frame files, sample-point files, reports, and
// the layered tolerance configuration (defaults, FRAMECAST_TOL, config
// file, --tol).

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "framecast/frame.hpp"
#include "framecast/spiral.hpp"
#include "framecast/tolerances.hpp"

namespace framecast::io {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view frame_schema = "framecast.frame/1";

struct FrameFile {
    Frame frame;
    Json metadata = Json::object();
};

/// {schema_version, dim, vectors: [[[re, im], ...], ...], labels, metadata}.
Json frame_to_json(const Frame& frame, const Json& metadata = Json::object());
/// ParseError on a malformed document or unknown schema_version.
FrameFile frame_from_json(const Json& doc);

void write_frame_file(const std::filesystem::path& path, const Frame& frame,
                      const Json& metadata = Json::object());
FrameFile read_frame_file(const std::filesystem::path& path);

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);
Json signal_to_json(std::span<const Complex> values);
ComplexVector signal_from_json(const Json& doc);

Json sample_points_to_json(const SamplePointSet& points);

/// Pretty-printed JSON with a trailing newline. IoError when unwritable.
void write_json(const std::filesystem::path& path, const Json& doc);
Json read_json(const std::filesystem::path& path);

/// Long-format CSV "row,col,re,im".
void write_matrix_csv(const std::filesystem::path& path, const ComplexMatrix& m);

/// {command, inputs_echo, outputs, tool_version}. Outputs that were checked
/// against a tolerance are stored as {value, tolerance, pass}.
struct Report {
    std::string command;
    Json inputs_echo = Json::object();
    Json outputs = Json::object();

    void add(const std::string& key, const Json& value) { outputs[key] = value; }
    void add_checked(const std::string& key, double value, double tolerance, bool pass);
    /// Numeric output with no acceptance check: {value, tolerance: null}.
    void add_value(const std::string& key, double value);
    Json to_json() const;
};

std::string tool_version();

struct ConfigSources {
    std::optional<std::filesystem::path> config_file;
    std::optional<double> tol_flag;
    /// Value of FRAMECAST_TOL; read from the environment when unset.
    std::optional<std::string> env_tol;
};

/// Defaults, then FRAMECAST_TOL, then the config file, then --tol.
/// Config files hold {"tol": x} and/or {"tolerances": {"svd": .., ...}}.
Tolerances load_tolerances(const ConfigSources& sources);

} // namespace framecast::io
