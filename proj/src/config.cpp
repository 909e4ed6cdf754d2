#include "modfol/config.hpp"

#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace modfol {

namespace {

using nlohmann::json;

void read_tolerances(const json& j, SuiteTolerances& t)
{
    static const std::pair<const char*, double SuiteTolerances::*> fields[] = {
        {"det", &SuiteTolerances::det},
        {"roundtrip", &SuiteTolerances::roundtrip},
        {"bvalues", &SuiteTolerances::bvalues},
        {"b3_unit", &SuiteTolerances::b3_unit},
        {"connection_rel", &SuiteTolerances::connection_rel},
        {"transport", &SuiteTolerances::transport},
        {"closed_orbit", &SuiteTolerances::closed_orbit},
        {"flow_match", &SuiteTolerances::flow_match},
        {"b2_drift", &SuiteTolerances::b2_drift},
        {"tangency", &SuiteTolerances::tangency},
    };
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const auto& [name, member] : fields) {
            if (key == name) {
                t.*member = value.get<double>();
                known = true;
            }
        }
        if (!known) {
            throw std::invalid_argument("config: unknown tolerance '" + key + "'");
        }
    }
}

} // namespace

std::string to_string(FloatMode m)
{
    return m == FloatMode::Double ? "double" : "high";
}

std::string to_string(OutputFormat f)
{
    switch (f) {
    case OutputFormat::Text:
        return "text";
    case OutputFormat::Json:
        return "json";
    case OutputFormat::Csv:
        return "csv";
    }
    return "text";
}

FloatMode parse_float_mode(const std::string& s)
{
    if (s == "double") {
        return FloatMode::Double;
    }
    if (s == "high") {
        return FloatMode::High;
    }
    throw std::invalid_argument("precision must be 'double' or 'high', got '" + s + "'");
}

OutputFormat parse_output_format(const std::string& s)
{
    if (s == "text") {
        return OutputFormat::Text;
    }
    if (s == "json") {
        return OutputFormat::Json;
    }
    if (s == "csv") {
        return OutputFormat::Csv;
    }
    throw std::invalid_argument("format must be text, json or csv, got '" + s + "'");
}

Config parse_config(const std::string& json_text)
{
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
    if (!j.is_object()) {
        throw std::invalid_argument("config: top level must be an object");
    }
    const int version = j.value("schema_version", kSchemaVersion);
    if (version != kSchemaVersion) {
        throw std::invalid_argument("config: unsupported schema_version " + std::to_string(version));
    }
    Config c;
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "schema_version") {
                continue;
            } else if (key == "order") {
                c.order = value.get<int>();
                if (c.order < 4) {
                    throw std::invalid_argument("config: order must be at least 4");
                }
            } else if (key == "precision") {
                c.precision = parse_float_mode(value.get<std::string>());
            } else if (key == "format") {
                c.format = parse_output_format(value.get<std::string>());
            } else if (key == "seed") {
                c.seed = value.get<std::uint64_t>();
            } else if (key == "tolerances") {
                read_tolerances(value, c.tolerances);
            } else if (key == "flow") {
                c.flow_tol = value.value("tol", c.flow_tol);
                c.flow_discriminant_floor = value.value("discriminant_floor", c.flow_discriminant_floor);
            } else if (key == "transport") {
                c.transport_rtol = value.value("rtol", c.transport_rtol);
            } else {
                throw std::invalid_argument("config: unknown key '" + key + "'");
            }
        }
    } catch (const json::type_error& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
    return c;
}

Config load_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("config: cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

Config resolve_config(const std::optional<std::string>& path)
{
    if (path) {
        return load_config_file(*path);
    }
    if (const char* env = std::getenv(kConfigEnv); env != nullptr && *env != '\0') {
        return load_config_file(env);
    }
    return {};
}

} // namespace modfol
