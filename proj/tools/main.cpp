// sentifuzz: score a corpus of micro-blog posts against a polarity
// lexicon and grade each post into fuzzy sentiment classes.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "sentifuzz/cli.hpp"

int main(int argc, char** argv) {
    using namespace sentifuzz;

    CLI::App app{
        "Lexicon-based sentiment analysis for micro-blog posts with fuzzy "
        "grading"};

    RunConfig config;
    std::string lexicon_path;
    std::string stopword_path;
    std::string weight_path;
    std::string partition_path;
    std::string pie_path;
    std::string tagger = "builtin";

    std::map<std::string, LexiconFormat> lexicon_formats{
        {"sentiwordnet", LexiconFormat::SentiWordNet},
        {"simple", LexiconFormat::Simple},
        {"fixture", LexiconFormat::Fixture}};
    std::map<std::string, InputFormat> input_formats{
        {"text", InputFormat::Text},
        {"pretagged", InputFormat::Pretagged},
        {"jsonl", InputFormat::Jsonl}};

    app.add_option("--lexicon", lexicon_path,
                   "Polarity lexicon file (unused with --lexicon-format "
                   "fixture)");
    app.add_option("--lexicon-format", config.lexicon_format,
                   "Lexicon file format")
        ->transform(CLI::CheckedTransformer(lexicon_formats))
        ->default_str("fixture");
    app.add_option("--input", config.input_path, "Corpus file to analyze")
        ->required();
    app.add_option("--input-format", config.input_format,
                   "Corpus file format")
        ->transform(CLI::CheckedTransformer(input_formats))
        ->default_str("text");
    app.add_option("--stopwords", stopword_path,
                   "Stopword list, one word per line (default: built-in)");
    app.add_option("--weights", weight_path,
                   "Term weight file, term<TAB>weight per line");
    app.add_option("--partition", partition_path,
                   "Membership function file (default: built-in)");
    auto* tagger_opt =
        app.add_option("--tagger", tagger,
                       "Tagger mode: builtin or pretagged (implied by "
                       "--input-format pretagged)")
            ->check(CLI::IsMember({"builtin", "pretagged"}));
    app.add_flag("--emoticons", config.emoticon_mode,
                 "Score emoticons before cleaning");
    app.add_flag("--drop-objective", config.drop_objective,
                 "Drop posts scoring exactly 0 before aggregation");
    app.add_option("--report", config.report_path, "Report JSON output path")
        ->required();
    app.add_option("--pie", pie_path, "Pie chart SVG output path");
    app.add_option("--threads", config.threads,
                   "Worker threads for per-post scoring");

    CLI11_PARSE(app, argc, argv);

    if (!lexicon_path.empty()) config.lexicon_path = lexicon_path;
    if (!stopword_path.empty()) config.stopword_path = stopword_path;
    if (!weight_path.empty()) config.weight_path = weight_path;
    if (!partition_path.empty()) config.partition_path = partition_path;
    if (!pie_path.empty()) config.pie_path = pie_path;

    if (tagger_opt->count() > 0) {
        config.tagger = tagger == "pretagged" ? TaggerMode::Pretagged
                                              : TaggerMode::Builtin;
    } else {
        // Follow the input format unless the user pinned the tagger.
        config.tagger = config.input_format == InputFormat::Pretagged
                            ? TaggerMode::Pretagged
                            : TaggerMode::Builtin;
    }

    return run(config, std::cout, std::cerr);
}
