#include <cstdlib>
#include <string>

#include "framecast/error.hpp"
#include "framecast/io.hpp"

namespace framecast::io {

namespace {

double parse_positive(const std::string& text, const std::string& source)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || !(v > 0.0)) {
        throw FrameError(ErrorKind::ParseError, source + ": \"" + text + "\" is not a positive number");
    }
    return v;
}

void apply_file(Tolerances& tol, const Json& doc, const std::string& name)
{
    if (!doc.is_object()) throw FrameError(ErrorKind::ParseError, name + ": expected a JSON object");
    auto get = [&](const Json& j, const char* key, double& dst) {
        if (!j.contains(key)) return;
        if (!j[key].is_number() || !(j[key].get<double>() > 0.0)) {
            throw FrameError(ErrorKind::ParseError, name + ": \"" + key + "\" must be a positive number");
        }
        dst = j[key].get<double>();
    };
    if (doc.contains("tol")) {
        double t = 0.0;
        get(doc, "tol", t);
        const double rank = tol.rank;
        tol = Tolerances::uniform(t);
        tol.rank = rank;
    }
    if (doc.contains("tolerances")) {
        const Json& t = doc["tolerances"];
        if (!t.is_object()) throw FrameError(ErrorKind::ParseError, name + ": \"tolerances\" must be an object");
        get(t, "svd", tol.svd);
        get(t, "polar", tol.polar);
        get(t, "gs", tol.gs);
        get(t, "frame", tol.frame);
        get(t, "rank", tol.rank);
    }
}

} // namespace

Tolerances load_tolerances(const ConfigSources& sources)
{
    Tolerances tol;
    std::optional<std::string> env = sources.env_tol;
    if (!env) {
        if (const char* raw = std::getenv("FRAMECAST_TOL"); raw && *raw) env = raw;
    }
    if (env && !env->empty()) {
        const double rank = tol.rank;
        tol = Tolerances::uniform(parse_positive(*env, "FRAMECAST_TOL"));
        tol.rank = rank;
    }
    if (sources.config_file) apply_file(tol, read_json(*sources.config_file), sources.config_file->string());
    if (sources.tol_flag) {
        if (!(*sources.tol_flag > 0.0)) throw FrameError(ErrorKind::ParseError, "--tol must be positive");
        const double rank = tol.rank;
        tol = Tolerances::uniform(*sources.tol_flag);
        tol.rank = rank;
    }
    return tol;
}

} // namespace framecast::io
