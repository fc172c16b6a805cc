#include "framecast/io.hpp"

namespace framecast::io {

std::string tool_version()
{
    return std::string("framecast ") + FRAMECAST_VERSION;
}

void Report::add_checked(const std::string& key, double value, double tolerance, bool pass)
{
    outputs[key] = Json{{"value", value}, {"tolerance", tolerance}, {"pass", pass}};
}

void Report::add_value(const std::string& key, double value)
{
    outputs[key] = Json{{"value", value}, {"tolerance", nullptr}};
}

Json Report::to_json() const
{
    return Json{{"command", command},
                {"inputs_echo", inputs_echo},
                {"outputs", outputs},
                {"tool_version", tool_version()}};
}

} // namespace framecast::io
