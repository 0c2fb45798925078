#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qslice/jet.hpp"
#include "qslice/quaternion.hpp"

namespace qslice::io {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

/// Shortest round-trip decimal form of a double ("-0" normalized to "0").
std::string format_double(double v);

/// Parse the literal syntax `a+bi+cj+dk`; terms are optional, signs and
/// whitespace are tolerated, e.g. "1-0.5j", "i", "-2k".
Quaternion<double> parse_quaternion(std::string_view text);

/// Serialize with all four components, e.g. "1+2i+0j+0k".
std::string format_quaternion(const Quaternion<double>& q);

struct FunctionFile {
    QJet<double> jet;
    bool real_kind = false;  // file declared kind "rpoly"
};

FunctionFile load_function_file(const std::filesystem::path& path);
FunctionFile parse_function_json(const Json& j);

Json quaternion_to_json(const Quaternion<double>& q);
Json qjet_to_json(const QJet<double>& f);
Json rjet_to_json(const RJet<double>& f);

void save_function_file(const std::filesystem::path& path, const QJet<double>& f);
void save_function_file(const std::filesystem::path& path, const RJet<double>& f);

void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace qslice::io
