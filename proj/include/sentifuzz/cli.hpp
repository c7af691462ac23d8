#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sentifuzz/pipeline.hpp"

namespace sentifuzz {

enum class LexiconFormat { SentiWordNet, Simple, Fixture };
enum class InputFormat { Text, Pretagged, Jsonl };

// Validated run settings. Pretagged input forces the pretagged tagger
// mode, and every referenced file must exist before the run starts.
struct RunConfig {
    std::optional<std::string> lexicon_path;
    LexiconFormat lexicon_format = LexiconFormat::Fixture;
    std::string input_path;
    InputFormat input_format = InputFormat::Text;
    std::optional<std::string> stopword_path;
    std::optional<std::string> weight_path;
    std::optional<std::string> partition_path;
    TaggerMode tagger = TaggerMode::Builtin;
    bool emoticon_mode = false;
    bool drop_objective = false;
    std::string report_path;
    std::optional<std::string> pie_path;
    unsigned threads = 1;
};

// Throws std::invalid_argument (naming the offending path or flag) when
// the config cannot run.
void validate_config(const RunConfig& config);

// Reads a corpus file. Text: one post per line with an optional
// "@user:" prefix; jsonl: one object with id/author/text per line;
// pretagged: "surface/TAG" lines validated by parse_pretagged. Blank
// lines are skipped and missing ids become 1-based line numbers.
std::vector<RawPost> ingest(const std::string& path, InputFormat format);
std::vector<RawPost> ingest_stream(std::istream& stream, InputFormat format);

// Full run: load resources, ingest, score, grade, aggregate, write the
// report (and the pie SVG when asked), print the run summary. Returns the
// process exit status: 0 only when the report file was written.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace sentifuzz
