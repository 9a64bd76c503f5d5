// Copyright 2026 mtmeta authors
// SPDX-License-Identifier: Apache-2.0
//
// Native string metrics (BLEU, WER, TER, PER, chrF, chrF+, CharacTER) plus a
// uniform scoring interface. Macro metrics additionally expose per-segment
// additive sufficient statistics so a corpus score over any resampled
// multiset of segments is a sum plus a finalize, which is what keeps the
// bootstrap at O(segments) per iteration.

#ifndef MTMETA_METRICS_HPP
#define MTMETA_METRICS_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mtmeta/corpus.hpp"

namespace mtmeta {

enum class Averaging { kMacro, kMicro };
enum class Polarity { kHigherBetter, kLowerBetter };
enum class MetricSource { kBuiltin, kExternal };

struct MetricDescriptor {
  std::string name;
  Averaging averaging = Averaging::kMicro;
  Polarity polarity = Polarity::kHigherBetter;
  MetricSource source = MetricSource::kBuiltin;

  bool operator==(const MetricDescriptor&) const = default;
};

// Fixed builtin roster: BLEU/WER/TER/PER macro, chrF/chrF+/CharacTER micro.
const std::vector<MetricDescriptor>& builtin_metrics();
const MetricDescriptor* find_builtin(std::string_view name);

// External score files are ingested as micro, higher-better.
MetricDescriptor external_metric(std::string name);

// Lowercases, splits on Unicode whitespace, then peels leading/trailing
// ASCII punctuation of each chunk into standalone tokens.
std::vector<std::string> tokenize(std::string_view text);

// Corpus-level BLEU: geometric mean of modified n-gram precisions times the
// brevity penalty; 0 if any precision is 0 (no smoothing).
double bleu_corpus(std::span<const std::string> hypotheses,
                   std::span<const std::string> references, int max_n = 4);

// Word-level Levenshtein distance / reference length.
double wer(std::span<const std::string> hypothesis, std::span<const std::string> reference);

// Position-independent error rate over token bags.
double per(std::span<const std::string> hypothesis, std::span<const std::string> reference);

// Greedy block shifts (cost 1 each) plus residual Levenshtein, / ref length.
double ter(std::span<const std::string> hypothesis, std::span<const std::string> reference);

// Character n-gram F-score; word_n=1 adds word unigrams (chrF+).
double chrf(std::string_view hypothesis, std::string_view reference, int char_n = 6,
            double beta = 2.0, int word_n = 0);

// CharacTER: word-level greedy shifts, then character-level edit distance,
// normalized by hypothesis character length.
double character_metric(std::string_view hypothesis, std::string_view reference);

// Per-segment additive statistics, row-major.
struct SegmentStats {
  std::size_t width = 0;
  std::vector<double> data;

  std::size_t rows() const { return width == 0 ? 0 : data.size() / width; }
  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(data.data() + i * width, width);
  }
  void append_row(std::span<const double> values) {
    data.insert(data.end(), values.begin(), values.end());
  }

  bool operator==(const SegmentStats&) const = default;
};

// Maps summed statistics (and the number of summed segments) to a score.
using Finalize = std::function<double(std::span<const double>, std::size_t)>;

Finalize finalizer(const MetricDescriptor& metric);

// Builds per-segment stats for one system. Macro metrics get their native
// sufficient statistics; micro metrics get width-1 rows of sentence scores.
SegmentStats segment_stats(const MetricDescriptor& metric, const Dataset& dataset,
                           const std::string& system,
                           const ExternalScores* external = nullptr);

// Sum the given rows and finalize. `indices` may repeat (bootstrap multiset).
double corpus_score_from_stats(const SegmentStats& stats, const Finalize& finalize,
                               std::span<const std::uint32_t> indices);
double corpus_score_from_stats(const SegmentStats& stats, const Finalize& finalize);

// Micro sentence scores, raw metric orientation.
std::vector<double> sentence_scores(const MetricDescriptor& metric, const Dataset& dataset,
                                    const std::string& system,
                                    const ExternalScores* external = nullptr);

struct SystemScore {
  MetricDescriptor metric;
  std::string system;
  double corpus_score = 0.0;
  std::optional<std::vector<double>> sentence_scores;  // micro
  std::optional<SegmentStats> stats;                   // macro sufficient stats
};

SystemScore score_system(const MetricDescriptor& metric, const Dataset& dataset,
                         const std::string& system, const ExternalScores* external = nullptr);

// Positive means `a` is the better translation under this metric.
double oriented_diff(const MetricDescriptor& metric, const SystemScore& a,
                     const SystemScore& b);

}  // namespace mtmeta

#endif  // MTMETA_METRICS_HPP
