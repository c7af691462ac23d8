#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sentifuzz/lexicon.hpp"
#include "sentifuzz/textproc.hpp"

namespace sentifuzz {

// Maps a Penn tag onto the lexicon category used for lookup; tags outside
// the four opinion groups map to nothing.
std::optional<PosCategory> tag_to_category(PennTag tag);

struct FlaggedToken {
    TaggedToken token;
    bool negated = false;
};

// Marks adjectives within reach of a negation particle (not, no, never,
// n't). The particle keeps its place and its own lexicon score; the
// nearest following adjective within two positions (original token
// indices) gets its flag toggled, so double negation cancels. Must run
// before stopword removal.
std::vector<FlaggedToken> apply_negation(
    const std::vector<TaggedToken>& tokens);

bool is_negation_particle(const std::string& normalized);

struct TokenScore {
    TaggedToken token;
    double pos = 0.0; // raw lexicon scores
    double neg = 0.0;
    double net = 0.0; // pos - neg, sign-flipped when negated
    bool negated = false;
};

struct ScoreResult {
    std::vector<TokenScore> scores;
    std::size_t unmatched = 0; // opinion words the lexicon did not know
};

ScoreResult score_tokens(const std::vector<FlaggedToken>& tokens,
                         const Lexicon& lexicon);

// Term weights in (0,1]; absent terms weigh 1.0.
class WeightTable {
public:
    void set(std::string term, double weight);
    double get(const std::string& term) const;
    bool empty() const { return weights_.empty(); }

    // Highest weight matched by any of the given tokens, 1.0 when none
    // matches.
    double max_weight(const std::vector<Token>& tokens) const;

private:
    std::unordered_map<std::string, double> weights_;
};

// Lines of "term<TAB>weight", '#' comments. Weights outside (0,1] are a
// parse error.
WeightTable load_weights(std::istream& stream);

struct ScoredPost {
    RawPost post;
    std::vector<TokenScore> token_scores;
    std::vector<EmoticonPolarity> emoticon_hits;
    double total_score = 0.0;
    double weight = 1.0;
    std::string sentiment_class; // filled by the grading stage
    std::size_t unmatched = 0;
    std::vector<std::string> warnings;
};

inline constexpr double kEmoticonMagnitude = 0.5;

// Sums net contributions in token order, then any emoticon contributions,
// and attaches the post weight. `all_tokens` is the pre-filter token list
// (weight terms may be proper nouns that the opinion filter drops).
ScoredPost score_post(RawPost post, const std::vector<TokenScore>& scores,
                      std::size_t unmatched,
                      const std::vector<EmoticonPolarity>& emoticon_hits,
                      const std::vector<Token>& all_tokens,
                      const WeightTable& weights);

} // namespace sentifuzz
