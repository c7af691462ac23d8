#include "sentifuzz/scoring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>

#include "sentifuzz/errors.hpp"

namespace sentifuzz {

std::optional<PosCategory> tag_to_category(PennTag tag) {
    switch (tag) {
        case PennTag::JJ:
        case PennTag::JJR:
        case PennTag::JJS:
            return PosCategory::Adjective;
        case PennTag::RB:
        case PennTag::RBR:
        case PennTag::RBS:
            return PosCategory::Adverb;
        case PennTag::VB:
        case PennTag::VBD:
        case PennTag::VBG:
        case PennTag::VBN:
        case PennTag::VBP:
        case PennTag::VBZ:
            return PosCategory::Verb;
        case PennTag::NN:
        case PennTag::NNS:
            return PosCategory::Noun;
        default:
            return std::nullopt;
    }
}

bool is_negation_particle(const std::string& normalized) {
    return normalized == "not" || normalized == "no" ||
           normalized == "never" || normalized == "n't";
}

std::vector<FlaggedToken> apply_negation(
    const std::vector<TaggedToken>& tokens) {
    std::vector<FlaggedToken> flagged;
    flagged.reserve(tokens.size());
    for (const TaggedToken& token : tokens) {
        flagged.push_back(FlaggedToken{token, false});
    }

    for (std::size_t i = 0; i < flagged.size(); ++i) {
        if (!is_negation_particle(flagged[i].token.token.normalized))
            continue;
        std::size_t origin = flagged[i].token.token.index;
        for (std::size_t j = i + 1; j < flagged.size(); ++j) {
            std::size_t distance = flagged[j].token.token.index - origin;
            if (distance > 2) break;
            if (is_adjective_tag(flagged[j].token.tag)) {
                flagged[j].negated = !flagged[j].negated;
                break; // only the nearest adjective
            }
        }
    }
    return flagged;
}

ScoreResult score_tokens(const std::vector<FlaggedToken>& tokens,
                         const Lexicon& lexicon) {
    ScoreResult result;
    result.scores.reserve(tokens.size());
    for (const FlaggedToken& flagged : tokens) {
        TokenScore score;
        score.token = flagged.token;
        score.negated = flagged.negated;

        auto category = tag_to_category(flagged.token.tag);
        if (category) {
            if (auto entry =
                    lexicon.lookup(flagged.token.token.normalized, *category)) {
                score.pos = entry->pos;
                score.neg = entry->neg;
                double net = entry->pos - entry->neg;
                score.net = flagged.negated ? -net : net;
            } else {
                result.unmatched += 1;
            }
        }
        result.scores.push_back(std::move(score));
    }
    return result;
}

void WeightTable::set(std::string term, double weight) {
    weights_.insert_or_assign(std::move(term), weight);
}

double WeightTable::get(const std::string& term) const {
    auto it = weights_.find(term);
    return it == weights_.end() ? 1.0 : it->second;
}

double WeightTable::max_weight(const std::vector<Token>& tokens) const {
    double best = 0.0;
    bool any = false;
    for (const Token& token : tokens) {
        auto it = weights_.find(token.normalized);
        if (it != weights_.end()) {
            best = std::max(best, it->second);
            any = true;
        }
    }
    return any ? best : 1.0;
}

WeightTable load_weights(std::istream& stream) {
    WeightTable table;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;

        std::size_t tab = line.find('\t');
        if (tab == std::string::npos || tab == 0) {
            throw ParseError(line_no, "expected term<TAB>weight");
        }
        std::string term = line.substr(0, tab);
        std::transform(term.begin(), term.end(), term.begin(),
                       [](unsigned char c) {
                           return static_cast<char>(std::tolower(c));
                       });

        std::string_view value{line.data() + tab + 1, line.size() - tab - 1};
        double weight = 0.0;
        auto [ptr, ec] =
            std::from_chars(value.data(), value.data() + value.size(), weight);
        if (ec != std::errc{} || ptr != value.data() + value.size()) {
            throw ParseError(line_no, "non-numeric weight '" +
                                          std::string(value) + "'");
        }
        if (!(weight > 0.0 && weight <= 1.0)) {
            throw ParseError(line_no, "weight outside (0,1]");
        }
        table.set(std::move(term), weight);
    }
    return table;
}

ScoredPost score_post(RawPost post, const std::vector<TokenScore>& scores,
                      std::size_t unmatched,
                      const std::vector<EmoticonPolarity>& emoticon_hits,
                      const std::vector<Token>& all_tokens,
                      const WeightTable& weights) {
    ScoredPost scored;
    scored.post = std::move(post);
    scored.token_scores = scores;
    scored.emoticon_hits = emoticon_hits;
    scored.unmatched = unmatched;

    double total = 0.0;
    for (const TokenScore& score : scored.token_scores) {
        total += score.net;
    }
    for (EmoticonPolarity polarity : scored.emoticon_hits) {
        switch (polarity) {
            case EmoticonPolarity::Positive: total += kEmoticonMagnitude; break;
            case EmoticonPolarity::Negative: total -= kEmoticonMagnitude; break;
            case EmoticonPolarity::Neutral: break;
        }
    }
    scored.total_score = total;
    scored.weight = weights.max_weight(all_tokens);
    return scored;
}

} // namespace sentifuzz
