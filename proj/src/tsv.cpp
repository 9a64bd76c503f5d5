// Copyright 2026 mtmeta authors
// SPDX-License-Identifier: Apache-2.0

#include "mtmeta/tsv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mtmeta/error.hpp"

namespace mtmeta {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw InputError("write failed: " + path.string());
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  const std::string content = read_file(path);
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < content.size()) {
    std::size_t end = content.find('\n', start);
    if (end == std::string::npos) end = content.size();
    std::string line = content.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

std::vector<TsvRow> read_tsv(const std::filesystem::path& path) {
  const std::string content = read_file(path);
  std::vector<TsvRow> rows;
  std::size_t start = 0;
  std::size_t line_no = 0;
  while (start < content.size()) {
    std::size_t end = content.find('\n', start);
    if (end == std::string::npos) end = content.size();
    std::string_view line(content.data() + start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    TsvRow row;
    row.line_number = line_no;
    std::size_t fs = 0;
    while (true) {
      std::size_t fe = line.find('\t', fs);
      if (fe == std::string_view::npos) {
        row.fields.emplace_back(line.substr(fs));
        break;
      }
      row.fields.emplace_back(line.substr(fs, fe - fs));
      fs = fe + 1;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

double parse_double(std::string_view field, std::string_view context) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw InputError("expected a number for " + std::string(context) + ", got '" +
                     std::string(field) + "'");
  }
  return value;
}

std::int64_t parse_int(std::string_view field, std::string_view context) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw InputError("expected an integer for " + std::string(context) + ", got '" +
                     std::string(field) + "'");
  }
  return value;
}

std::uint64_t parse_uint(std::string_view field, std::string_view context) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw InputError("expected a non-negative integer for " + std::string(context) +
                     ", got '" + std::string(field) + "'");
  }
  return value;
}

std::string format_double(double value) {
  for (int precision = 1; precision <= 17; ++precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, value);
    double parsed = 0.0;
    std::from_chars(buf, buf + std::char_traits<char>::length(buf), parsed);
    if (parsed == value) return buf;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace mtmeta
