// Copyright 2026 mtmeta authors
// SPDX-License-Identifier: Apache-2.0
//
// Canonical data model for one evaluation dataset: source segments, a single
// reference, per-system outputs, human judgments and externally computed
// metric scores. Segment indices are 0-based everywhere.

#ifndef MTMETA_CORPUS_HPP
#define MTMETA_CORPUS_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mtmeta {

struct Dataset {
  std::string name;
  std::vector<std::string> sources;
  std::vector<std::string> references;
  std::map<std::string, std::vector<std::string>> systems;

  std::size_t segments() const { return sources.size(); }
  bool has_system(const std::string& name) const { return systems.count(name) != 0; }
  const std::vector<std::string>& outputs(const std::string& system) const;
  std::vector<std::string> system_names() const;

  bool operator==(const Dataset&) const = default;
};

// Throws InputError if any structural invariant is violated.
void validate(const Dataset& dataset);

enum class JudgmentKind { kDirectAssessment, kRelativeRanking };

struct RrPreference {
  std::size_t segment = 0;
  std::string winner;
  std::string loser;

  bool operator==(const RrPreference&) const = default;
};

struct HumanJudgments {
  JudgmentKind kind = JudgmentKind::kDirectAssessment;
  // DA: per system, one optional score per segment (sparse coverage allowed).
  std::map<std::string, std::vector<std::optional<double>>> da_scores;
  // RR: pairwise preference events.
  std::vector<RrPreference> rr_preferences;

  bool operator==(const HumanJudgments&) const = default;
};

struct ExternalScores {
  std::string metric_name;
  // Complete score vector per system, higher is better.
  std::map<std::string, std::vector<double>> scores;

  bool operator==(const ExternalScores&) const = default;
};

// Loads `sources.txt`, `references.txt` and `systems/<name>.txt` from a
// directory, one UTF-8 segment per line. The dataset name is the directory
// name. Validation failure is total: no partial dataset escapes.
Dataset load_dataset(const std::filesystem::path& directory);

// Writes the same layout back; load(save(d)) == d.
void save_dataset(const Dataset& dataset, const std::filesystem::path& directory);

// TSV with a header line declaring the kind:
//   kind<TAB>DA   then rows  system<TAB>segment<TAB>score
//   kind<TAB>RR   then rows  segment<TAB>winner<TAB>loser
HumanJudgments load_human_judgments(const std::filesystem::path& path, const Dataset& dataset);

void save_human_judgments(const HumanJudgments& judgments, const std::filesystem::path& path);

// TSV rows system<TAB>segment<TAB>score with complete coverage of every
// system in the dataset. The metric name defaults to the file stem; an
// optional `metric<TAB>NAME` header overrides it.
ExternalScores load_external_scores(const std::filesystem::path& path, const Dataset& dataset);

void save_external_scores(const ExternalScores& scores, const std::filesystem::path& path);

}  // namespace mtmeta

#endif  // MTMETA_CORPUS_HPP
