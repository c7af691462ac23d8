#include "sentifuzz/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace sentifuzz {

ScoredPost process_post(const RawPost& post, const PipelineOptions& options) {
    if (!options.lexicon || !options.stopwords || !options.weights ||
        !options.partition) {
        throw std::invalid_argument("pipeline options are incomplete");
    }

    std::vector<std::string> warnings;
    std::vector<TaggedToken> tagged;
    std::vector<Token> all_tokens;
    std::vector<EmoticonPolarity> emoticon_hits;

    if (options.tagger == TaggerMode::Pretagged) {
        tagged = parse_pretagged(post.text);
        all_tokens.reserve(tagged.size());
        for (const TaggedToken& t : tagged) all_tokens.push_back(t.token);
    } else {
        RawPost translated = translate_hook(post, options.translator, warnings);
        std::string text = translated.text;
        if (options.emoticon_mode) {
            auto [stripped, hits] = map_emoticons(text);
            text = std::move(stripped);
            emoticon_hits = std::move(hits);
        }
        all_tokens = tokenize(clean(text));
        BaselineTagger tagger(options.lexicon);
        tagged = tagger.tag(all_tokens);
    }

    auto opinion = filter_opinion_words(tagged);
    auto flagged = apply_negation(opinion);

    // Stopword removal runs after negation so the particles are still in
    // place when the rule scans for them.
    std::vector<FlaggedToken> surviving;
    surviving.reserve(flagged.size());
    for (const FlaggedToken& f : flagged) {
        if (options.stopwords->count(f.token.token.normalized) == 0) {
            surviving.push_back(f);
        }
    }

    ScoreResult scored = score_tokens(surviving, *options.lexicon);
    ScoredPost result =
        score_post(post, scored.scores, scored.unmatched, emoticon_hits,
                   all_tokens, *options.weights);
    result.sentiment_class =
        std::string(to_string(classify(result.total_score, *options.partition)));
    result.warnings = std::move(warnings);
    return result;
}

std::vector<ScoredPost> run_pipeline(const std::vector<RawPost>& posts,
                                     const PipelineOptions& options) {
    std::vector<ScoredPost> results(posts.size());
    unsigned threads = options.threads == 0 ? 1 : options.threads;
    if (threads <= 1 || posts.size() <= 1) {
        for (std::size_t i = 0; i < posts.size(); ++i) {
            results[i] = process_post(posts[i], options);
        }
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= posts.size()) return;
            try {
                results[i] = process_post(posts[i], options);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    auto count = static_cast<unsigned>(
        std::min<std::size_t>(threads, posts.size()));
    pool.reserve(count);
    for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();

    if (first_error) std::rethrow_exception(first_error);
    return results;
}

} // namespace sentifuzz
