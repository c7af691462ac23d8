#pragma once

#include <string>
#include <vector>

#include "sentifuzz/analytics.hpp"
#include "sentifuzz/fuzzy.hpp"
#include "sentifuzz/lexicon.hpp"
#include "sentifuzz/scoring.hpp"
#include "sentifuzz/textproc.hpp"

namespace sentifuzz {

enum class TaggerMode { Builtin, Pretagged };

// Everything one post needs to be scored. All referenced objects are
// immutable during a run, so posts can be processed concurrently.
struct PipelineOptions {
    const Lexicon* lexicon = nullptr;
    const StopwordSet* stopwords = nullptr;
    const WeightTable* weights = nullptr;
    const FuzzyPartition* partition = nullptr;
    TaggerMode tagger = TaggerMode::Builtin;
    bool emoticon_mode = false;
    Translator translator; // identity when empty
    unsigned threads = 1;
};

// Runs the fixed stage order for one post:
//   translate -> (emoticons) -> clean -> tokenize -> tag
//   -> filter opinion words -> negation -> stopwords -> score
// Pretagged mode parses the post text as "surface/TAG" items instead of
// the clean/tokenize/tag front end.
ScoredPost process_post(const RawPost& post, const PipelineOptions& options);

// Scores every post (optionally across threads) and re-collects results
// in input order, so the report is identical regardless of thread count.
std::vector<ScoredPost> run_pipeline(const std::vector<RawPost>& posts,
                                     const PipelineOptions& options);

} // namespace sentifuzz
