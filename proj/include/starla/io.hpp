#pragma once

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace starla {

using Json = nlohmann::json;

inline constexpr int artifact_format_version = 1;

/// Common header embedded in every artifact: format tag, version, and the
/// config hash and seed of the run that produced it.
Json artifact_header(std::string_view kind, const std::string& config_hash, std::uint64_t seed);

/// Throws FormatError on a wrong format tag, VersionError on a version mismatch.
void check_artifact_header(const Json& j, std::string_view kind, const std::filesystem::path& path);

void write_json_file(const std::filesystem::path& path, const Json& j);
Json read_json_file(const std::filesystem::path& path);

void write_text_file(const std::filesystem::path& path, const std::string& text);

} // namespace starla
