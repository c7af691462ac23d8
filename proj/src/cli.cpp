#include "sentifuzz/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "sentifuzz/errors.hpp"

namespace sentifuzz {

namespace {

namespace fs = std::filesystem;

void require_exists(const std::string& path, const char* what) {
    if (!fs::exists(path)) {
        throw std::invalid_argument(std::string(what) + " file not found: " +
                                    path);
    }
}

// The bundled data directory can be replaced wholesale: when
// SENTIFUZZ_DATA_DIR is set and holds the named file, that file wins over
// the compiled-in default.
std::optional<std::string> data_dir_override(const char* filename) {
    const char* dir = std::getenv("SENTIFUZZ_DATA_DIR");
    if (!dir || !*dir) return std::nullopt;
    fs::path candidate = fs::path(dir) / filename;
    if (!fs::exists(candidate)) return std::nullopt;
    return candidate.string();
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream stream(path);
    if (!stream) {
        throw std::runtime_error("cannot open file: " + path);
    }
    return stream;
}

RawPost parse_text_line(const std::string& line, std::size_t line_no) {
    RawPost post;
    post.id = std::to_string(line_no);

    // "@user:text" carries the author; a prefix with whitespace is just
    // message text.
    if (!line.empty() && line.front() == '@') {
        std::size_t colon = line.find(':');
        if (colon != std::string::npos && colon > 1 &&
            line.find_first_of(" \t") > colon) {
            post.author = line.substr(1, colon - 1);
            post.text = line.substr(colon + 1);
            return post;
        }
    }
    post.text = line;
    return post;
}

RawPost parse_jsonl_line(const std::string& line, std::size_t line_no) {
    nlohmann::json value;
    try {
        value = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(line_no, std::string("bad JSON: ") + e.what());
    }
    if (!value.is_object() || !value.contains("text") ||
        !value["text"].is_string()) {
        throw ParseError(line_no, "expected an object with a \"text\" string");
    }

    RawPost post;
    post.text = value["text"].get<std::string>();
    if (value.contains("id")) {
        const auto& id = value["id"];
        post.id = id.is_string() ? id.get<std::string>() : id.dump();
    } else {
        post.id = std::to_string(line_no);
    }
    if (value.contains("author") && value["author"].is_string()) {
        post.author = value["author"].get<std::string>();
    }
    if (value.contains("language") && value["language"].is_string()) {
        post.language = value["language"].get<std::string>();
    }
    return post;
}

Lexicon load_lexicon(const RunConfig& config) {
    switch (config.lexicon_format) {
        case LexiconFormat::Fixture: {
            if (auto path = data_dir_override("fixture_lexicon.tsv")) {
                auto stream = open_or_throw(*path);
                return import_simple(stream, *path);
            }
            return load_fixture_lexicon();
        }
        case LexiconFormat::SentiWordNet: {
            auto stream = open_or_throw(*config.lexicon_path);
            return import_sentiwordnet(stream, *config.lexicon_path);
        }
        case LexiconFormat::Simple: {
            auto stream = open_or_throw(*config.lexicon_path);
            return import_simple(stream, *config.lexicon_path);
        }
    }
    throw std::logic_error("unhandled lexicon format");
}

StopwordSet load_stopword_set(const RunConfig& config) {
    if (config.stopword_path) {
        auto stream = open_or_throw(*config.stopword_path);
        return load_stopwords(stream);
    }
    if (auto path = data_dir_override("stopwords.txt")) {
        auto stream = open_or_throw(*path);
        return load_stopwords(stream);
    }
    return default_stopwords();
}

WeightTable load_weight_table(const RunConfig& config) {
    if (config.weight_path) {
        auto stream = open_or_throw(*config.weight_path);
        return load_weights(stream);
    }
    return WeightTable{};
}

FuzzyPartition load_fuzzy_partition(const RunConfig& config,
                                    std::vector<std::string>& warnings) {
    if (config.partition_path) {
        auto stream = open_or_throw(*config.partition_path);
        return load_partition(stream, warnings);
    }
    if (auto path = data_dir_override("partition.conf")) {
        auto stream = open_or_throw(*path);
        return load_partition(stream, warnings);
    }
    return default_partition();
}

} // namespace

void validate_config(const RunConfig& config) {
    if (config.input_path.empty()) {
        throw std::invalid_argument("no input file given");
    }
    require_exists(config.input_path, "input");

    if (config.lexicon_format == LexiconFormat::Fixture) {
        if (config.lexicon_path) {
            throw std::invalid_argument(
                "--lexicon is not used with the fixture lexicon");
        }
    } else {
        if (!config.lexicon_path) {
            throw std::invalid_argument(
                "--lexicon is required for this lexicon format");
        }
        require_exists(*config.lexicon_path, "lexicon");
    }

    if (config.stopword_path) require_exists(*config.stopword_path, "stopword");
    if (config.weight_path) require_exists(*config.weight_path, "weight");
    if (config.partition_path)
        require_exists(*config.partition_path, "partition");

    bool pretagged_input = config.input_format == InputFormat::Pretagged;
    bool pretagged_tagger = config.tagger == TaggerMode::Pretagged;
    if (pretagged_tagger && !pretagged_input) {
        throw std::invalid_argument(
            "the pretagged tagger requires pretagged input");
    }
    if (pretagged_input && !pretagged_tagger) {
        throw std::invalid_argument(
            "pretagged input requires the pretagged tagger");
    }

    if (config.report_path.empty()) {
        throw std::invalid_argument("no report path given");
    }
}

std::vector<RawPost> ingest_stream(std::istream& stream, InputFormat format) {
    std::vector<RawPost> posts;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;

        switch (format) {
            case InputFormat::Text:
                posts.push_back(parse_text_line(line, line_no));
                break;
            case InputFormat::Jsonl:
                posts.push_back(parse_jsonl_line(line, line_no));
                break;
            case InputFormat::Pretagged: {
                parse_pretagged(line, line_no); // validate early
                RawPost post;
                post.id = std::to_string(line_no);
                post.text = line;
                posts.push_back(std::move(post));
                break;
            }
        }
    }
    return posts;
}

std::vector<RawPost> ingest(const std::string& path, InputFormat format) {
    auto stream = open_or_throw(path);
    return ingest_stream(stream, format);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        validate_config(config);

        std::vector<std::string> global_warnings;
        Lexicon lexicon = load_lexicon(config);
        StopwordSet stopwords = load_stopword_set(config);
        WeightTable weights = load_weight_table(config);
        FuzzyPartition partition =
            load_fuzzy_partition(config, global_warnings);

        std::vector<RawPost> posts = ingest(config.input_path,
                                            config.input_format);
        if (posts.empty()) {
            err << "error: input file contains no posts: "
                << config.input_path << "\n";
            return 1;
        }

        PipelineOptions options;
        options.lexicon = &lexicon;
        options.stopwords = &stopwords;
        options.weights = &weights;
        options.partition = &partition;
        options.tagger = config.input_format == InputFormat::Pretagged
                             ? TaggerMode::Pretagged
                             : TaggerMode::Builtin;
        options.emoticon_mode = config.emoticon_mode;
        options.threads = config.threads;

        std::vector<ScoredPost> scored = run_pipeline(posts, options);

        if (config.drop_objective) {
            std::vector<ScoredPost> kept;
            kept.reserve(scored.size());
            for (ScoredPost& post : scored) {
                if (post.total_score != 0.0) kept.push_back(std::move(post));
            }
            scored = std::move(kept);
            if (scored.empty()) {
                err << "error: no posts left after dropping objective ones\n";
                return 1;
            }
        }

        for (const ScoredPost& post : scored) {
            out << format_number(post.total_score) << " "
                << post.sentiment_class << "\n";
        }

        CorpusReport report = build_report(scored, global_warnings);

        out << "Total no of tweets is: "
            << format_number(static_cast<double>(report.total_posts)) << "\n";
        out << "Total no of positive tweets: "
            << format_number(static_cast<double>(report.positive_count))
            << "\n";
        out << "Total no of negative tweets: "
            << format_number(static_cast<double>(report.negative_count))
            << "\n";
        out << "Arithmetic mean is: " << format_number(report.arithmetic_mean)
            << "\n";
        out << "Sentiment by Percent\n";
        out << "Positive sentiment % is: "
            << format_number(report.positive_percent) << "\n";
        out << "Negative sentiment % is: "
            << format_number(report.negative_percent) << "\n";

        for (const std::string& warning : report.warnings) {
            err << "warning: " << warning << "\n";
        }

        // The pie goes first so a failure there never leaves the run with
        // a written report and a nonzero exit.
        if (config.pie_path) {
            std::ofstream pie_file(*config.pie_path,
                                   std::ios::binary | std::ios::trunc);
            if (!pie_file) {
                err << "error: cannot write pie chart: " << *config.pie_path
                    << "\n";
                return 1;
            }
            pie_file << render_pie_svg(pie_chart_data(report));
        }

        std::ofstream report_file(config.report_path,
                                  std::ios::binary | std::ios::trunc);
        if (!report_file) {
            err << "error: cannot write report: " << config.report_path
                << "\n";
            return 1;
        }
        report_file << report_to_json(report, scored);
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace sentifuzz
