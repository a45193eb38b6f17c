#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "wavemask/image2d.hpp"

namespace wavemask {

// Binary PGM (P5, maxval 255) reader; pixels map to [0,1] via v/255.
Image2D load_pgm(const std::filesystem::path& path);

// Writes P5 with values affinely mapped from [min, max] to [0, 255], rounded
// half-to-even. A constant image maps to 128. The mapping is recorded in a
// sidecar JSON at path + ".json".
void store_pgm(const Image2D& img, const std::filesystem::path& path);

using CsvCell = std::variant<std::string, double, std::int64_t>;
using CsvRow = std::vector<CsvCell>;

// Locale-independent shortest-width formatting with 17 significant digits
// (doubles round-trip exactly).
std::string format_double(const double value);

// UTF-8, LF line endings, '.' decimal separator. Every row must match the
// schema width.
void write_csv(const std::vector<CsvRow>& rows, const std::vector<std::string>& schema,
               const std::filesystem::path& path);

// Pretty-printed JSON with insertion-ordered keys (stable across runs).
void write_json(const nlohmann::ordered_json& value, const std::filesystem::path& path);

} // namespace wavemask
