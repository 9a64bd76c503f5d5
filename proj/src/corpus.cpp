// Copyright 2026 mtmeta authors
// SPDX-License-Identifier: Apache-2.0

#include "mtmeta/corpus.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mtmeta/error.hpp"
#include "mtmeta/tsv.hpp"

namespace mtmeta {

namespace {

bool valid_name(const std::string& name) {
  if (name.empty()) return false;
  for (unsigned char c : name) {
    if (c < 0x20 || c == 0x7F) return false;  // control chars break the TSV formats
  }
  return true;
}

void check_segments(const std::string& what, const std::vector<std::string>& segments) {
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (segments[i].find('\n') != std::string::npos) {
      throw InputError(what + " segment " + std::to_string(i) + " contains a newline");
    }
  }
}

std::string joined_lines(const std::vector<std::string>& segments) {
  std::string out;
  for (const std::string& s : segments) {
    out += s;
    out += '\n';
  }
  return out;
}

}  // namespace

const std::vector<std::string>& Dataset::outputs(const std::string& system) const {
  const auto it = systems.find(system);
  if (it == systems.end()) throw InputError("unknown system: " + system);
  return it->second;
}

std::vector<std::string> Dataset::system_names() const {
  std::vector<std::string> names;
  names.reserve(systems.size());
  for (const auto& [name, _] : systems) names.push_back(name);
  return names;
}

void validate(const Dataset& dataset) {
  if (dataset.segments() == 0) throw InputError("dataset '" + dataset.name + "' is empty");
  if (dataset.references.size() != dataset.segments()) {
    throw InputError("dataset '" + dataset.name + "': references have " +
                     std::to_string(dataset.references.size()) + " segments, sources have " +
                     std::to_string(dataset.segments()));
  }
  check_segments("source", dataset.sources);
  check_segments("reference", dataset.references);
  for (const auto& [name, outputs] : dataset.systems) {
    if (!valid_name(name)) throw InputError("invalid system name: '" + name + "'");
    if (outputs.size() != dataset.segments()) {
      throw InputError("system '" + name + "' has " + std::to_string(outputs.size()) +
                       " segments, expected " + std::to_string(dataset.segments()));
    }
    check_segments("system '" + name + "'", outputs);
  }
}

Dataset load_dataset(const std::filesystem::path& directory) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(directory)) {
    throw InputError("dataset directory not found: " + directory.string());
  }
  const fs::path sources_path = directory / "sources.txt";
  const fs::path references_path = directory / "references.txt";
  const fs::path systems_dir = directory / "systems";
  if (!fs::exists(sources_path)) throw InputError("missing file: " + sources_path.string());
  if (!fs::exists(references_path)) {
    throw InputError("missing file: " + references_path.string());
  }
  if (!fs::is_directory(systems_dir)) {
    throw InputError("missing directory: " + systems_dir.string());
  }

  Dataset dataset;
  dataset.name = directory.filename().string();
  if (dataset.name.empty()) dataset.name = directory.parent_path().filename().string();
  dataset.sources = read_lines(sources_path);
  dataset.references = read_lines(references_path);

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(systems_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (const fs::path& file : files) {
    const std::string name = file.stem().string();
    if (!valid_name(name)) throw InputError("invalid system name: '" + name + "'");
    std::vector<std::string> outputs = read_lines(file);
    if (outputs.size() != dataset.segments()) {
      throw InputError("line-count mismatch for system '" + name + "': " +
                       std::to_string(outputs.size()) + " vs " +
                       std::to_string(dataset.segments()));
    }
    dataset.systems.emplace(name, std::move(outputs));
  }
  validate(dataset);
  return dataset;
}

void save_dataset(const Dataset& dataset, const std::filesystem::path& directory) {
  validate(dataset);
  namespace fs = std::filesystem;
  fs::create_directories(directory / "systems");
  write_file(directory / "sources.txt", joined_lines(dataset.sources));
  write_file(directory / "references.txt", joined_lines(dataset.references));
  for (const auto& [name, outputs] : dataset.systems) {
    write_file(directory / "systems" / (name + ".txt"), joined_lines(outputs));
  }
}

namespace {

const char* kind_name(JudgmentKind kind) {
  return kind == JudgmentKind::kDirectAssessment ? "DA" : "RR";
}

}  // namespace

HumanJudgments load_human_judgments(const std::filesystem::path& path, const Dataset& dataset) {
  const std::vector<TsvRow> rows = read_tsv(path);
  if (rows.empty()) throw InputError("judgments file is empty: " + path.string());

  const TsvRow& header = rows.front();
  if (header.fields.size() != 2 || header.fields[0] != "kind" ||
      (header.fields[1] != "DA" && header.fields[1] != "RR")) {
    throw InputError(path.string() + ":" + std::to_string(header.line_number) +
                     ": expected header 'kind<TAB>DA' or 'kind<TAB>RR'");
  }

  HumanJudgments out;
  const auto context = [&](const TsvRow& row) {
    return path.string() + ":" + std::to_string(row.line_number);
  };

  if (header.fields[1] == "DA") {
    out.kind = JudgmentKind::kDirectAssessment;
    for (std::size_t r = 1; r < rows.size(); ++r) {
      const TsvRow& row = rows[r];
      if (row.fields.size() != 3) {
        throw InputError(context(row) + ": expected system<TAB>segment<TAB>score");
      }
      const std::string& system = row.fields[0];
      if (!dataset.has_system(system)) {
        throw InputError(context(row) + ": unknown system '" + system + "'");
      }
      const std::uint64_t segment = parse_uint(row.fields[1], "segment index");
      if (segment >= dataset.segments()) {
        throw InputError(context(row) + ": segment index " + std::to_string(segment) +
                         " out of range (dataset has " + std::to_string(dataset.segments()) +
                         " segments)");
      }
      const double score = parse_double(row.fields[2], "score");
      auto& vec = out.da_scores[system];
      if (vec.empty()) vec.resize(dataset.segments());
      if (vec[segment].has_value()) {
        throw InputError(context(row) + ": duplicate score for system '" + system +
                         "' segment " + std::to_string(segment));
      }
      vec[segment] = score;
    }
  } else {
    out.kind = JudgmentKind::kRelativeRanking;
    for (std::size_t r = 1; r < rows.size(); ++r) {
      const TsvRow& row = rows[r];
      if (row.fields.size() != 3) {
        throw InputError(context(row) + ": expected segment<TAB>winner<TAB>loser");
      }
      RrPreference pref;
      pref.segment = parse_uint(row.fields[0], "segment index");
      pref.winner = row.fields[1];
      pref.loser = row.fields[2];
      if (pref.segment >= dataset.segments()) {
        throw InputError(context(row) + ": segment index out of range");
      }
      if (pref.winner == pref.loser) {
        throw InputError(context(row) + ": winner equals loser ('" + pref.winner + "')");
      }
      if (!dataset.has_system(pref.winner)) {
        throw InputError(context(row) + ": unknown system '" + pref.winner + "'");
      }
      if (!dataset.has_system(pref.loser)) {
        throw InputError(context(row) + ": unknown system '" + pref.loser + "'");
      }
      out.rr_preferences.push_back(std::move(pref));
    }
  }
  return out;
}

void save_human_judgments(const HumanJudgments& judgments, const std::filesystem::path& path) {
  std::ostringstream out;
  out << "kind\t" << kind_name(judgments.kind) << "\n";
  if (judgments.kind == JudgmentKind::kDirectAssessment) {
    for (const auto& [system, scores] : judgments.da_scores) {
      for (std::size_t i = 0; i < scores.size(); ++i) {
        if (scores[i].has_value()) {
          out << system << '\t' << i << '\t' << format_double(*scores[i]) << "\n";
        }
      }
    }
  } else {
    for (const RrPreference& pref : judgments.rr_preferences) {
      out << pref.segment << '\t' << pref.winner << '\t' << pref.loser << "\n";
    }
  }
  write_file(path, out.str());
}

ExternalScores load_external_scores(const std::filesystem::path& path, const Dataset& dataset) {
  const std::vector<TsvRow> rows = read_tsv(path);
  ExternalScores out;
  out.metric_name = path.stem().string();

  std::size_t first = 0;
  if (!rows.empty() && rows.front().fields.size() == 2 && rows.front().fields[0] == "metric") {
    out.metric_name = rows.front().fields[1];
    first = 1;
  }

  std::map<std::string, std::vector<std::optional<double>>> partial;
  for (std::size_t r = first; r < rows.size(); ++r) {
    const TsvRow& row = rows[r];
    const std::string context = path.string() + ":" + std::to_string(row.line_number);
    if (row.fields.size() != 3) {
      throw InputError(context + ": expected system<TAB>segment<TAB>score");
    }
    const std::string& system = row.fields[0];
    if (!dataset.has_system(system)) {
      throw InputError(context + ": unknown system '" + system + "'");
    }
    const std::uint64_t segment = parse_uint(row.fields[1], "segment index");
    if (segment >= dataset.segments()) {
      throw InputError(context + ": segment index out of range");
    }
    const double score = parse_double(row.fields[2], "score");
    auto& vec = partial[system];
    if (vec.empty()) vec.resize(dataset.segments());
    if (vec[segment].has_value()) {
      throw InputError(context + ": duplicate score for (" + system + ", " +
                       std::to_string(segment) + ")");
    }
    vec[segment] = score;
  }

  for (const auto& [system, _] : dataset.systems) {
    const auto it = partial.find(system);
    for (std::size_t i = 0; i < dataset.segments(); ++i) {
      if (it == partial.end() || !it->second[i].has_value()) {
        throw InputError(path.string() + ": incomplete coverage, first missing (" + system +
                         ", " + std::to_string(i) + ")");
      }
    }
    std::vector<double> vec(dataset.segments());
    for (std::size_t i = 0; i < dataset.segments(); ++i) vec[i] = *it->second[i];
    out.scores.emplace(system, std::move(vec));
  }
  return out;
}

void save_external_scores(const ExternalScores& scores, const std::filesystem::path& path) {
  std::ostringstream out;
  out << "metric\t" << scores.metric_name << "\n";
  for (const auto& [system, vec] : scores.scores) {
    for (std::size_t i = 0; i < vec.size(); ++i) {
      out << system << '\t' << i << '\t' << format_double(vec[i]) << "\n";
    }
  }
  write_file(path, out.str());
}

}  // namespace mtmeta
