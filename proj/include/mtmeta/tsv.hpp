// Copyright 2026 mtmeta authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MTMETA_TSV_HPP
#define MTMETA_TSV_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace mtmeta {

struct TsvRow {
  std::size_t line_number = 0;  // 1-based, for diagnostics
  std::vector<std::string> fields;
};

// Reads a TSV file. Blank lines and lines starting with '#' are skipped.
// A trailing '\r' per line is tolerated and stripped.
std::vector<TsvRow> read_tsv(const std::filesystem::path& path);

// Reads a text file as one segment per line (trailing newline optional).
std::vector<std::string> read_lines(const std::filesystem::path& path);

void write_file(const std::filesystem::path& path, std::string_view content);

std::string read_file(const std::filesystem::path& path);

// Strict numeric parsing; throws InputError naming `context` on failure.
double parse_double(std::string_view field, std::string_view context);
std::int64_t parse_int(std::string_view field, std::string_view context);
std::uint64_t parse_uint(std::string_view field, std::string_view context);

// Shortest representation that round-trips a double exactly.
std::string format_double(double value);

// FNV-1a over file bytes; manifest content hash.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace mtmeta

#endif  // MTMETA_TSV_HPP
