#include <cmath>
#include <fstream>

#include "framecast/error.hpp"
#include "framecast/io.hpp"

namespace framecast::io {

namespace {

[[noreturn]] void parse_error(const std::string& what)
{
    throw FrameError(ErrorKind::ParseError, what);
}

Json finite_or_null(double x)
{
    return std::isfinite(x) ? Json(x) : Json(nullptr);
}

} // namespace

Json complex_to_json(Complex z)
{
    return Json::array({z.real(), z.imag()});
}

Complex complex_from_json(const Json& j)
{
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        parse_error("complex values must be [re, im] pairs");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

Json signal_to_json(std::span<const Complex> values)
{
    Json arr = Json::array();
    for (const auto& z : values) arr.push_back(complex_to_json(z));
    return Json{{"values", arr}};
}

ComplexVector signal_from_json(const Json& doc)
{
    const Json* arr = &doc;
    if (doc.is_object()) {
        if (!doc.contains("values")) parse_error("signal object lacks \"values\"");
        arr = &doc["values"];
    }
    if (!arr->is_array() || arr->empty()) parse_error("signal values must be a nonempty array");
    ComplexVector out;
    out.reserve(arr->size());
    for (const auto& z : *arr) out.push_back(complex_from_json(z));
    return out;
}

Json frame_to_json(const Frame& frame, const Json& metadata)
{
    Json vectors = Json::array();
    for (std::size_t i = 0; i < frame.size(); ++i) {
        Json v = Json::array();
        for (const auto& z : frame[i]) v.push_back(complex_to_json(z));
        vectors.push_back(std::move(v));
    }
    Json doc;
    doc["schema_version"] = frame_schema;
    doc["dim"] = frame.dim();
    doc["vectors"] = std::move(vectors);
    doc["labels"] = frame.labels;
    Json meta = metadata.is_object() ? metadata : Json::object();
    if (!frame.basis_note.empty() && !meta.contains("basis_note")) meta["basis_note"] = frame.basis_note;
    doc["metadata"] = std::move(meta);
    return doc;
}

FrameFile frame_from_json(const Json& doc)
{
    if (!doc.is_object()) parse_error("frame document must be a JSON object");
    if (doc.value("schema_version", std::string{}) != frame_schema) {
        parse_error("unrecognised schema_version; expected " + std::string(frame_schema));
    }
    if (!doc.contains("dim") || !doc["dim"].is_number_unsigned() || doc["dim"].get<std::size_t>() == 0) {
        parse_error("\"dim\" must be a positive integer");
    }
    const std::size_t dim = doc["dim"].get<std::size_t>();
    const Json& vectors = doc.contains("vectors") ? doc["vectors"] : Json();
    if (!vectors.is_array() || vectors.empty()) parse_error("\"vectors\" must be a nonempty array");

    ComplexMatrix m(vectors.size(), dim);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        const Json& v = vectors[i];
        if (!v.is_array() || v.size() != dim) {
            parse_error("vector " + std::to_string(i) + " does not have length " + std::to_string(dim));
        }
        for (std::size_t p = 0; p < dim; ++p) m(i, p) = complex_from_json(v[p]);
    }

    FrameFile out;
    out.frame.vectors = std::move(m);
    if (doc.contains("labels") && !doc["labels"].is_null()) {
        try {
            out.frame.labels = doc["labels"].get<std::vector<std::vector<double>>>();
        } catch (const nlohmann::json::exception&) {
            parse_error("\"labels\" must be a list of number lists");
        }
        if (!out.frame.labels.empty() && out.frame.labels.size() != out.frame.size()) {
            parse_error("label count does not match vector count");
        }
    }
    if (doc.contains("metadata") && doc["metadata"].is_object()) {
        out.metadata = doc["metadata"];
        out.frame.basis_note = out.metadata.value("basis_note", std::string{});
    }
    return out;
}

void write_frame_file(const std::filesystem::path& path, const Frame& frame, const Json& metadata)
{
    write_json(path, frame_to_json(frame, metadata));
}

FrameFile read_frame_file(const std::filesystem::path& path)
{
    return frame_from_json(read_json(path));
}

Json sample_points_to_json(const SamplePointSet& points)
{
    Json pts = Json::array();
    for (const auto& p : points.points) {
        pts.push_back(points.dim == 1 ? Json::array({p[0]}) : Json::array({p[0], p[1]}));
    }
    return Json{{"dim", points.dim},
                {"points", pts},
                {"thetas", points.thetas},
                {"gaps", points.gaps},
                {"min_separation", finite_or_null(points.min_separation)},
                {"margin", points.margin}};
}

void write_json(const std::filesystem::path& path, const Json& doc)
{
    std::ofstream out(path);
    if (!out) throw FrameError(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
    out << doc.dump(2) << '\n';
    if (!out) throw FrameError(ErrorKind::IoError, "write to " + path.string() + " failed");
}

Json read_json(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw FrameError(ErrorKind::IoError, "cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        parse_error(path.string() + ": " + e.what());
    }
}

void write_matrix_csv(const std::filesystem::path& path, const ComplexMatrix& m)
{
    std::ofstream out(path);
    if (!out) throw FrameError(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
    out << "row,col,re,im\n";
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out << i << ',' << j << ',' << Json(m(i, j).real()).dump() << ','
                << Json(m(i, j).imag()).dump() << '\n';
    if (!out) throw FrameError(ErrorKind::IoError, "write to " + path.string() + " failed");
}

} // namespace framecast::io
