#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sentifuzz/penn_tag.hpp"

namespace sentifuzz {

class Lexicon;

// One micro-blog post as ingested, before any processing.
struct RawPost {
    std::string id;
    std::optional<std::string> author;
    std::string text;
    std::optional<std::string> language;
};

struct Token {
    std::string surface;
    std::string normalized; // lowercase(surface)
    std::size_t index = 0;  // ordinal position in the post
};

struct TaggedToken {
    Token token;
    PennTag tag = PennTag::NN;
};

// Injectable translation step. The default is identity; a failing
// translator leaves the post untouched and records a warning.
using Translator = std::function<std::string(const std::string&)>;

RawPost translate_hook(RawPost post, const Translator& translator,
                       std::vector<std::string>& warnings);

// Removes URLs, @-mentions and #hashtags token-wise, strips the
// punctuation class [!@#(){}[]:;,.?'"~*^&%$], collapses whitespace and
// lowercases. Idempotent.
std::string clean(const std::string& text);

// Splits cleaned text on whitespace runs; tokens are lowercased and
// indexed 0..n-1.
std::vector<Token> tokenize(const std::string& text);

// Rule-based fallback tagger. Rules apply in priority order: closed-class
// word table, lexicon category hint (lemma under exactly one category),
// suffix heuristics, numerals, default NN. Total: every token gets a tag.
class BaselineTagger {
public:
    explicit BaselineTagger(const Lexicon* category_hints = nullptr)
        : hints_(category_hints) {}

    std::vector<TaggedToken> tag(const std::vector<Token>& tokens) const;

private:
    const Lexicon* hints_;
};

// Parses one line of "surface/TAG" items as produced by treebank-style
// taggers. An all-colon item ("::", ":::") separates a username prefix
// (discarded) from the body; bracket escapes (-LRB-, -RRB-) are dropped;
// surfaces are lowercased. Throws ParseError for an item without '/' or
// with a tag outside the tagset.
std::vector<TaggedToken> parse_pretagged(const std::string& line,
                                         std::size_t line_no = 0);

// Inverse of parse_pretagged for lists without bracket escapes.
std::string format_pretagged(const std::vector<TaggedToken>& tokens);

// Keeps adjectives, adverbs, verbs and common nouns; drops proper nouns
// and everything else. Order and original indices are preserved (the
// negation rule measures distance in original indices).
std::vector<TaggedToken> filter_opinion_words(
    const std::vector<TaggedToken>& tokens);

using StopwordSet = std::unordered_set<std::string>;

std::vector<TaggedToken> remove_stopwords(
    const std::vector<TaggedToken>& tokens, const StopwordSet& stopwords);

// The bundled default list. Negation particles (not, never, n't, no) are
// deliberately absent so the negation rule can see them.
const StopwordSet& default_stopwords();

// One lowercase word per line, '#' comments.
StopwordSet load_stopwords(std::istream& stream);

enum class EmoticonPolarity { Positive, Negative, Neutral };

// Optional pre-cleaning pass: strips recognized emoticons from the text
// and reports their polarities. Off by default in the pipeline.
std::pair<std::string, std::vector<EmoticonPolarity>> map_emoticons(
    const std::string& text);

} // namespace sentifuzz
