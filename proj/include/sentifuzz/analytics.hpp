#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "sentifuzz/fuzzy.hpp"
#include "sentifuzz/scoring.hpp"

namespace sentifuzz {

struct PolarityCounts {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t objective = 0;

    std::size_t total() const { return positive + negative + objective; }
};

struct CorpusReport {
    std::size_t total_posts = 0;
    std::size_t positive_count = 0;
    std::size_t negative_count = 0;
    std::size_t objective_count = 0;
    std::map<SentimentClass, std::size_t> class_histogram;
    double arithmetic_mean = 0.0;
    double weighted_mean = 0.0;
    double positive_percent = 0.0;
    double negative_percent = 0.0;
    std::size_t unmatched_word_count = 0;
    std::vector<std::string> warnings;
};

PolarityCounts count_polarities(const std::vector<ScoredPost>& posts);

// Plain average of total scores, summed in input order. Empty input is a
// domain error.
double arithmetic_mean(const std::vector<ScoredPost>& posts);

// Sum(w*a) / Sum(w) in input order. Empty input or a zero weight sum is a
// domain error.
double weighted_mean(const std::vector<ScoredPost>& posts);

// (positive/total*100, negative/total*100); requires total > 0.
std::pair<double, double> sentiment_percentages(const PolarityCounts& counts);

struct PieSlice {
    SentimentClass label;
    double percent = 0.0;
};

// One slice per non-empty class, in canonical class order; percentages
// sum to 100. Requires a non-empty report.
std::vector<PieSlice> pie_chart_data(const CorpusReport& report);

// Aggregates classified posts into the corpus report. `global_warnings`
// (config/partition warnings) come before per-post warnings, which keep
// input order.
CorpusReport build_report(const std::vector<ScoredPost>& posts,
                          const std::vector<std::string>& global_warnings);

// Report serialization; the schema is documented in the README. Output is
// deterministic for identical inputs.
std::string report_to_json(const CorpusReport& report,
                           const std::vector<ScoredPost>& posts);

// Minimal standalone pie chart: labeled sectors plus a legend.
std::string render_pie_svg(const std::vector<PieSlice>& slices);

// Shortest decimal form that round-trips, always with a decimal point
// ("0.25", "-1.0", "80.0").
std::string format_number(double value);

} // namespace sentifuzz
