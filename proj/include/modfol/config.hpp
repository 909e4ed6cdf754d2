#pragma once

#include "modfol/checks.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace modfol {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kConfigEnv = "MODFOL_CONFIG";

enum class FloatMode { Double, High };
enum class OutputFormat { Text, Json, Csv };

struct Config {
    int order = 64;                  // q-expansion length for Hecke and reconstruction
    FloatMode precision = FloatMode::Double;
    OutputFormat format = OutputFormat::Text;
    std::uint64_t seed = 7;
    SuiteTolerances tolerances;
    double flow_tol = 1e-10;
    double flow_discriminant_floor = 1e-8;
    double transport_rtol = 1e-10;
};

/// Parses a JSON config document; absent keys keep their defaults.
/// {"schema_version": 1, "order": 64, "precision": "double"|"high",
///  "format": "text"|"json"|"csv", "seed": 7, "tolerances": {...},
///  "flow": {"tol": 1e-10, "discriminant_floor": 1e-8}, "transport": {"rtol": 1e-10}}
Config parse_config(const std::string& json_text);
Config load_config_file(const std::string& path);
/// `path` if given, else $MODFOL_CONFIG if set, else defaults.
Config resolve_config(const std::optional<std::string>& path);

std::string to_string(FloatMode m);
std::string to_string(OutputFormat f);
FloatMode parse_float_mode(const std::string& s);
OutputFormat parse_output_format(const std::string& s);

} // namespace modfol
