#include "sentifuzz/analytics.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace sentifuzz {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string_view slice_color(SentimentClass c) {
    switch (c) {
        case SentimentClass::StrongNegative: return "#7f1d1d";
        case SentimentClass::Negative: return "#dc2626";
        case SentimentClass::WeakNegative: return "#f59e0b";
        case SentimentClass::Objective: return "#9ca3af";
        case SentimentClass::WeakPositive: return "#a3e635";
        case SentimentClass::Positive: return "#22c55e";
        case SentimentClass::StrongPositive: return "#15803d";
    }
    return "#000000";
}

} // namespace

PolarityCounts count_polarities(const std::vector<ScoredPost>& posts) {
    PolarityCounts counts;
    for (const ScoredPost& post : posts) {
        if (post.total_score > 0.0) {
            counts.positive += 1;
        } else if (post.total_score < 0.0) {
            counts.negative += 1;
        } else {
            counts.objective += 1;
        }
    }
    return counts;
}

double arithmetic_mean(const std::vector<ScoredPost>& posts) {
    if (posts.empty()) {
        throw std::domain_error("arithmetic mean of an empty corpus");
    }
    double sum = 0.0;
    for (const ScoredPost& post : posts) {
        sum += post.total_score;
    }
    return sum / static_cast<double>(posts.size());
}

double weighted_mean(const std::vector<ScoredPost>& posts) {
    if (posts.empty()) {
        throw std::domain_error("weighted mean of an empty corpus");
    }
    double weighted_sum = 0.0;
    double weight_sum = 0.0;
    for (const ScoredPost& post : posts) {
        weighted_sum += post.weight * post.total_score;
        weight_sum += post.weight;
    }
    if (weight_sum <= 0.0) {
        throw std::domain_error("weighted mean with zero weight sum");
    }
    return weighted_sum / weight_sum;
}

std::pair<double, double> sentiment_percentages(
    const PolarityCounts& counts) {
    std::size_t total = counts.total();
    if (total == 0) {
        throw std::domain_error("percentages of an empty corpus");
    }
    // count*100/total keeps round percentages exact in binary floating
    // point (800/10 == 80.0 exactly).
    double positive = static_cast<double>(counts.positive) * 100.0 /
                      static_cast<double>(total);
    double negative = static_cast<double>(counts.negative) * 100.0 /
                      static_cast<double>(total);
    return {positive, negative};
}

std::vector<PieSlice> pie_chart_data(const CorpusReport& report) {
    if (report.total_posts == 0) {
        throw std::domain_error("pie chart of an empty corpus");
    }
    std::vector<PieSlice> slices;
    for (SentimentClass c : all_sentiment_classes()) {
        auto it = report.class_histogram.find(c);
        if (it == report.class_histogram.end() || it->second == 0) continue;
        double percent = static_cast<double>(it->second) * 100.0 /
                         static_cast<double>(report.total_posts);
        slices.push_back(PieSlice{c, percent});
    }
    return slices;
}

CorpusReport build_report(const std::vector<ScoredPost>& posts,
                          const std::vector<std::string>& global_warnings) {
    CorpusReport report;
    report.total_posts = posts.size();

    PolarityCounts counts = count_polarities(posts);
    report.positive_count = counts.positive;
    report.negative_count = counts.negative;
    report.objective_count = counts.objective;

    for (SentimentClass c : all_sentiment_classes()) {
        report.class_histogram[c] = 0;
    }
    for (const ScoredPost& post : posts) {
        if (auto c = parse_sentiment_class(post.sentiment_class)) {
            report.class_histogram[*c] += 1;
        }
        report.unmatched_word_count += post.unmatched;
    }

    if (!posts.empty()) {
        report.arithmetic_mean = arithmetic_mean(posts);
        report.weighted_mean = weighted_mean(posts);
        auto [positive, negative] = sentiment_percentages(counts);
        report.positive_percent = positive;
        report.negative_percent = negative;
    }

    report.warnings = global_warnings;
    for (const ScoredPost& post : posts) {
        report.warnings.insert(report.warnings.end(), post.warnings.begin(),
                               post.warnings.end());
    }
    return report;
}

std::string report_to_json(const CorpusReport& report,
                           const std::vector<ScoredPost>& posts) {
    nlohmann::ordered_json histogram;
    for (SentimentClass c : all_sentiment_classes()) {
        auto it = report.class_histogram.find(c);
        histogram[std::string(to_string(c))] =
            it == report.class_histogram.end() ? 0 : it->second;
    }

    nlohmann::ordered_json post_entries = nlohmann::ordered_json::array();
    for (const ScoredPost& post : posts) {
        nlohmann::ordered_json tokens = nlohmann::ordered_json::array();
        for (const TokenScore& score : post.token_scores) {
            tokens.push_back({
                {"surface", score.token.token.surface},
                {"tag", std::string(to_string(score.token.tag))},
                {"pos", score.pos},
                {"neg", score.neg},
                {"net", score.net},
                {"negated", score.negated},
            });
        }
        nlohmann::ordered_json entry = {
            {"id", post.post.id},
            {"author", post.post.author ? nlohmann::ordered_json(*post.post.author)
                                        : nlohmann::ordered_json(nullptr)},
            {"total_score", post.total_score},
            {"class", post.sentiment_class},
            {"weight", post.weight},
            {"unmatched", post.unmatched},
            {"token_scores", std::move(tokens)},
        };
        post_entries.push_back(std::move(entry));
    }

    nlohmann::ordered_json root = {
        {"total_posts", report.total_posts},
        {"positive_count", report.positive_count},
        {"negative_count", report.negative_count},
        {"objective_count", report.objective_count},
        {"class_histogram", std::move(histogram)},
        {"arithmetic_mean", report.arithmetic_mean},
        {"weighted_mean", report.weighted_mean},
        {"positive_percent", report.positive_percent},
        {"negative_percent", report.negative_percent},
        {"unmatched_word_count", report.unmatched_word_count},
        {"warnings", report.warnings},
        {"posts", std::move(post_entries)},
    };
    return root.dump(2) + "\n";
}

std::string format_number(double value) {
    char buffer[64];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    std::string text(buffer, ptr);
    if (text.find('.') == std::string::npos &&
        text.find('e') == std::string::npos &&
        text.find("inf") == std::string::npos &&
        text.find("nan") == std::string::npos) {
        text += ".0";
    }
    return text;
}

std::string render_pie_svg(const std::vector<PieSlice>& slices) {
    constexpr double cx = 150.0;
    constexpr double cy = 150.0;
    constexpr double r = 120.0;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"420\" "
           "height=\"300\" viewBox=\"0 0 420 300\">\n";

    if (slices.size() == 1) {
        svg += "  <circle cx=\"" + format_number(cx) + "\" cy=\"" +
               format_number(cy) + "\" r=\"" + format_number(r) +
               "\" fill=\"" + std::string(slice_color(slices[0].label)) +
               "\"/>\n";
    } else {
        double angle = -0.5 * kPi; // start at 12 o'clock, go clockwise
        for (const PieSlice& slice : slices) {
            double sweep = slice.percent / 100.0 * 2.0 * kPi;
            double x0 = cx + r * std::cos(angle);
            double y0 = cy + r * std::sin(angle);
            double x1 = cx + r * std::cos(angle + sweep);
            double y1 = cy + r * std::sin(angle + sweep);
            int large_arc = sweep > kPi ? 1 : 0;
            svg += "  <path d=\"M " + format_number(cx) + " " +
                   format_number(cy) + " L " + format_number(x0) + " " +
                   format_number(y0) + " A " + format_number(r) + " " +
                   format_number(r) + " 0 " + std::to_string(large_arc) +
                   " 1 " + format_number(x1) + " " + format_number(y1) +
                   " Z\" fill=\"" + std::string(slice_color(slice.label)) +
                   "\"/>\n";
            angle += sweep;
        }
    }

    double legend_y = 40.0;
    for (const PieSlice& slice : slices) {
        svg += "  <rect x=\"290\" y=\"" + format_number(legend_y - 10.0) +
               "\" width=\"12\" height=\"12\" fill=\"" +
               std::string(slice_color(slice.label)) + "\"/>\n";
        svg += "  <text x=\"308\" y=\"" + format_number(legend_y) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" +
               std::string(to_string(slice.label)) + " " +
               format_number(slice.percent) + "%</text>\n";
        legend_y += 20.0;
    }

    svg += "</svg>\n";
    return svg;
}

} // namespace sentifuzz
