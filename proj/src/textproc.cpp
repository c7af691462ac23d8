#include "sentifuzz/textproc.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <istream>
#include <sstream>
#include <unordered_map>

#include "sentifuzz/errors.hpp"
#include "sentifuzz/lexicon.hpp"

namespace sentifuzz {

namespace {

std::string to_lower_ascii(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    return out;
}

bool is_punctuation_char(char c) {
    static constexpr std::string_view kClass = "!@#(){}[]:;,.?'\"~*^&%$";
    return kClass.find(c) != std::string_view::npos;
}

bool starts_with(std::string_view text, std::string_view prefix) {
    return text.substr(0, prefix.size()) == prefix;
}

std::vector<std::string_view> split_ws(std::string_view text) {
    std::vector<std::string_view> items;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() &&
               std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        std::size_t start = i;
        while (i < text.size() &&
               !std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        if (i > start) items.push_back(text.substr(start, i - start));
    }
    return items;
}

bool is_separator_item(std::string_view item) {
    // "::" or ":::" — the username/body separator (and its stray
    // repetitions inside tagger output).
    return item.size() >= 2 &&
           std::all_of(item.begin(), item.end(),
                       [](char c) { return c == ':'; });
}

bool is_numeral(std::string_view word) {
    std::size_t i = 0;
    if (i < word.size() && (word[i] == '+' || word[i] == '-')) ++i;
    bool digit_seen = false;
    bool sep_ok = false;
    for (; i < word.size(); ++i) {
        char c = word[i];
        if (c >= '0' && c <= '9') {
            digit_seen = true;
            sep_ok = true;
        } else if ((c == '.' || c == ',') && sep_ok) {
            sep_ok = false;
        } else {
            return false;
        }
    }
    return digit_seen && sep_ok;
}

const std::unordered_map<std::string, PennTag>& closed_class_words() {
    static const std::unordered_map<std::string, PennTag> kTable = {
        // determiners
        {"a", PennTag::DT},
        {"an", PennTag::DT},
        {"the", PennTag::DT},
        {"this", PennTag::DT},
        {"that", PennTag::DT},
        {"these", PennTag::DT},
        {"those", PennTag::DT},
        {"every", PennTag::DT},
        {"each", PennTag::DT},
        // pronouns
        {"i", PennTag::PRP},
        {"you", PennTag::PRP},
        {"he", PennTag::PRP},
        {"she", PennTag::PRP},
        {"it", PennTag::PRP},
        {"we", PennTag::PRP},
        {"they", PennTag::PRP},
        {"me", PennTag::PRP},
        {"him", PennTag::PRP},
        {"us", PennTag::PRP},
        {"them", PennTag::PRP},
        {"myself", PennTag::PRP},
        {"yourself", PennTag::PRP},
        {"himself", PennTag::PRP},
        {"herself", PennTag::PRP},
        {"itself", PennTag::PRP},
        {"ourselves", PennTag::PRP},
        {"themselves", PennTag::PRP},
        {"my", PennTag::PRPS},
        {"your", PennTag::PRPS},
        {"his", PennTag::PRPS},
        {"her", PennTag::PRPS},
        {"its", PennTag::PRPS},
        {"our", PennTag::PRPS},
        {"their", PennTag::PRPS},
        // prepositions and subordinators
        {"in", PennTag::IN},
        {"on", PennTag::IN},
        {"at", PennTag::IN},
        {"of", PennTag::IN},
        {"for", PennTag::IN},
        {"with", PennTag::IN},
        {"from", PennTag::IN},
        {"by", PennTag::IN},
        {"about", PennTag::IN},
        {"into", PennTag::IN},
        {"over", PennTag::IN},
        {"under", PennTag::IN},
        {"between", PennTag::IN},
        {"through", PennTag::IN},
        {"during", PennTag::IN},
        {"against", PennTag::IN},
        {"without", PennTag::IN},
        {"within", PennTag::IN},
        {"after", PennTag::IN},
        {"before", PennTag::IN},
        {"above", PennTag::IN},
        {"below", PennTag::IN},
        {"since", PennTag::IN},
        {"until", PennTag::IN},
        {"while", PennTag::IN},
        {"as", PennTag::IN},
        {"if", PennTag::IN},
        {"because", PennTag::IN},
        {"than", PennTag::IN},
        {"to", PennTag::TO},
        // conjunctions
        {"and", PennTag::CC},
        {"or", PennTag::CC},
        {"but", PennTag::CC},
        {"nor", PennTag::CC},
        {"yet", PennTag::CC},
        // modals
        {"can", PennTag::MD},
        {"could", PennTag::MD},
        {"will", PennTag::MD},
        {"would", PennTag::MD},
        {"shall", PennTag::MD},
        {"should", PennTag::MD},
        {"may", PennTag::MD},
        {"might", PennTag::MD},
        {"must", PennTag::MD},
        // be/have/do forms
        {"is", PennTag::VBZ},
        {"are", PennTag::VBP},
        {"am", PennTag::VBP},
        {"was", PennTag::VBD},
        {"were", PennTag::VBD},
        {"be", PennTag::VB},
        {"been", PennTag::VBN},
        {"being", PennTag::VBG},
        {"has", PennTag::VBZ},
        {"have", PennTag::VBP},
        {"had", PennTag::VBD},
        {"do", PennTag::VBP},
        {"does", PennTag::VBZ},
        {"did", PennTag::VBD},
        // adverbial particles the negation rule depends on
        {"not", PennTag::RB},
        {"never", PennTag::RB},
        {"n't", PennTag::RB},
        {"very", PennTag::RB},
        {"just", PennTag::RB},
        // wh-words, existential there, interjections
        {"which", PennTag::WDT},
        {"who", PennTag::WP},
        {"what", PennTag::WP},
        {"whom", PennTag::WP},
        {"whose", PennTag::WPS},
        {"when", PennTag::WRB},
        {"where", PennTag::WRB},
        {"why", PennTag::WRB},
        {"how", PennTag::WRB},
        {"there", PennTag::EX},
        {"oh", PennTag::UH},
        {"hey", PennTag::UH},
        {"wow", PennTag::UH},
    };
    return kTable;
}

PennTag category_tag(PosCategory category) {
    switch (category) {
        case PosCategory::Adjective: return PennTag::JJ;
        case PosCategory::Noun: return PennTag::NN;
        case PosCategory::Verb: return PennTag::VB;
        case PosCategory::Adverb: return PennTag::RB;
    }
    return PennTag::NN;
}

bool ends_with(std::string_view word, std::string_view suffix) {
    return word.size() > suffix.size() + 1 &&
           word.substr(word.size() - suffix.size()) == suffix;
}

// Recognized emoticons and their polarities. The positive/negative/neutral
// groupings follow the usual smiley/frowny reading; magnitudes live in the
// scoring stage.
const std::vector<std::pair<std::string, EmoticonPolarity>>&
emoticon_table() {
    static const std::vector<std::pair<std::string, EmoticonPolarity>>
        kTable = {
            {"\xE2\x98\xBA", EmoticonPolarity::Positive}, // white smiling face
            {":D", EmoticonPolarity::Positive},
            {"C:", EmoticonPolarity::Positive},
            {"\xE2\x98\xB9", EmoticonPolarity::Negative}, // white frowning face
            {"D8", EmoticonPolarity::Negative},
            {"D;", EmoticonPolarity::Negative},
            {":|", EmoticonPolarity::Neutral},
            {": |", EmoticonPolarity::Neutral},
        };
    return kTable;
}

std::string collapse_whitespace(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!out.empty()) pending_space = true;
        } else {
            if (pending_space) out.push_back(' ');
            pending_space = false;
            out.push_back(c);
        }
    }
    return out;
}

} // namespace

RawPost translate_hook(RawPost post, const Translator& translator,
                       std::vector<std::string>& warnings) {
    if (!translator) return post;
    try {
        post.text = translator(post.text);
    } catch (const std::exception& e) {
        warnings.push_back("translation failed for post '" + post.id +
                           "': " + e.what() + "; keeping original text");
    }
    return post;
}

std::string clean(const std::string& text) {
    std::string kept;
    kept.reserve(text.size());
    for (std::string_view item : split_ws(text)) {
        if (starts_with(item, "http://") || starts_with(item, "https://"))
            continue;
        if (!item.empty() && item.front() == '@') continue;
        if (!item.empty() && item.front() == '#') continue;
        if (!kept.empty()) kept.push_back(' ');
        kept.append(item);
    }

    std::string stripped;
    stripped.reserve(kept.size());
    for (char c : kept) {
        if (!is_punctuation_char(c)) stripped.push_back(c);
    }

    return to_lower_ascii(collapse_whitespace(stripped));
}

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> tokens;
    for (std::string_view item : split_ws(text)) {
        Token token;
        token.surface = to_lower_ascii(item);
        token.normalized = token.surface;
        token.index = tokens.size();
        tokens.push_back(std::move(token));
    }
    return tokens;
}

std::vector<TaggedToken> BaselineTagger::tag(
    const std::vector<Token>& tokens) const {
    std::vector<TaggedToken> tagged;
    tagged.reserve(tokens.size());
    for (const Token& token : tokens) {
        const std::string& word = token.normalized;
        PennTag tag = PennTag::NN;

        const auto& closed = closed_class_words();
        if (auto it = closed.find(word); it != closed.end()) {
            tag = it->second;
        } else if (auto category =
                       hints_ ? hints_->sole_category(word) : std::nullopt) {
            tag = category_tag(*category);
        } else if (ends_with(word, "ly")) {
            tag = PennTag::RB;
        } else if (ends_with(word, "ing")) {
            tag = PennTag::VBG;
        } else if (ends_with(word, "ed")) {
            tag = PennTag::VBD;
        } else if (ends_with(word, "est")) {
            tag = PennTag::JJS;
        } else if (ends_with(word, "er")) {
            tag = PennTag::JJR;
        } else if (is_numeral(word)) {
            tag = PennTag::CD;
        }

        tagged.push_back(TaggedToken{token, tag});
    }
    return tagged;
}

std::vector<TaggedToken> parse_pretagged(const std::string& line,
                                         std::size_t line_no) {
    auto items = split_ws(line);

    // Discard everything up to and including the first separator item.
    auto body_begin = items.begin();
    for (auto it = items.begin(); it != items.end(); ++it) {
        if (is_separator_item(*it)) {
            body_begin = it + 1;
            break;
        }
    }

    std::vector<TaggedToken> tokens;
    for (auto it = body_begin; it != items.end(); ++it) {
        std::string_view item = *it;
        if (is_separator_item(item)) continue; // stray tagger artifact

        std::size_t slash = item.rfind('/');
        if (slash == std::string_view::npos || slash == 0 ||
            slash + 1 == item.size()) {
            throw ParseError(line_no, "item '" + std::string(item) +
                                          "' is not surface/TAG");
        }
        std::string_view tag_text = item.substr(slash + 1);
        auto tag = parse_penn_tag(tag_text);
        if (!tag) {
            throw ParseError(line_no, "unknown tag '" +
                                          std::string(tag_text) + "' in '" +
                                          std::string(item) + "'");
        }
        if (*tag == PennTag::Lrb || *tag == PennTag::Rrb) continue;

        TaggedToken tagged;
        tagged.token.surface = to_lower_ascii(item.substr(0, slash));
        tagged.token.normalized = tagged.token.surface;
        tagged.token.index = tokens.size();
        tagged.tag = *tag;
        tokens.push_back(std::move(tagged));
    }
    return tokens;
}

std::string format_pretagged(const std::vector<TaggedToken>& tokens) {
    std::string out;
    for (const TaggedToken& tagged : tokens) {
        if (!out.empty()) out.push_back(' ');
        out.append(tagged.token.surface);
        out.push_back('/');
        out.append(to_string(tagged.tag));
    }
    return out;
}

std::vector<TaggedToken> filter_opinion_words(
    const std::vector<TaggedToken>& tokens) {
    std::vector<TaggedToken> kept;
    kept.reserve(tokens.size());
    for (const TaggedToken& tagged : tokens) {
        if (is_opinion_tag(tagged.tag)) kept.push_back(tagged);
    }
    return kept;
}

std::vector<TaggedToken> remove_stopwords(
    const std::vector<TaggedToken>& tokens, const StopwordSet& stopwords) {
    std::vector<TaggedToken> kept;
    kept.reserve(tokens.size());
    for (const TaggedToken& tagged : tokens) {
        if (stopwords.count(tagged.token.normalized) == 0)
            kept.push_back(tagged);
    }
    return kept;
}

const StopwordSet& default_stopwords() {
    // High-frequency function words, including the full set of 'be'
    // forms. 'no', 'not', 'never' and "n't" are handled by the negation
    // rule and must not appear here; 'nor' stays.
    static const StopwordSet kDefault = {
        "a", "about", "above", "after", "again", "against", "all", "am",
        "an", "and", "any", "are", "aren't", "as", "at", "be", "because",
        "been", "before", "being", "below", "between", "both", "but", "by",
        "can't", "cant", "could", "couldn't", "did", "didn't", "do", "does",
        "doesn't", "doing", "don't", "down", "during", "each", "few", "for",
        "further", "had", "hadn't", "has", "hasn't", "have", "haven't",
        "he", "he'd", "he'll", "he's", "her", "here", "here's", "hers",
        "herself", "him", "himself", "his", "how", "how's", "i", "i'd",
        "i'll", "i'm", "i've", "if", "in", "into", "is", "isn't", "it",
        "it's", "its", "itself", "let's", "me", "more", "most", "mustn't",
        "my", "myself", "nor", "of", "off", "on", "once", "only", "or",
        "other", "ought", "our", "ours", "ourselves", "out", "over", "own",
        "same", "shan't", "she", "she'd", "she'll", "she's", "should",
        "shouldn't", "so", "some", "such", "than", "that", "that's", "the",
        "their", "theirs", "them", "themselves", "then", "there", "there's",
        "these", "they", "they'd", "they'll", "they're", "they've", "this",
        "those", "through", "to", "too", "under", "until", "up", "was",
        "wasn't", "we", "we'd", "we'll", "we're", "we've", "were",
        "weren't", "what", "what's", "when", "when's", "where", "where's",
        "which", "while", "who", "who's", "whom", "why", "why's", "with",
        "won't", "would", "wouldn't", "you", "you'd", "you'll", "you're",
        "you've", "your", "yours", "yourself", "yourselves",
    };
    return kDefault;
}

StopwordSet load_stopwords(std::istream& stream) {
    StopwordSet words;
    std::string line;
    while (std::getline(stream, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t begin = line.find_first_not_of(" \t");
        if (begin == std::string::npos) continue;
        std::size_t end = line.find_last_not_of(" \t");
        std::string word = line.substr(begin, end - begin + 1);
        if (word.empty() || word.front() == '#') continue;
        words.insert(to_lower_ascii(word));
    }
    return words;
}

std::pair<std::string, std::vector<EmoticonPolarity>> map_emoticons(
    const std::string& text) {
    std::vector<EmoticonPolarity> hits;
    std::string remaining;
    remaining.reserve(text.size());

    std::size_t i = 0;
    while (i < text.size()) {
        bool matched = false;
        for (const auto& [pattern, polarity] : emoticon_table()) {
            if (text.compare(i, pattern.size(), pattern) == 0) {
                hits.push_back(polarity);
                i += pattern.size();
                matched = true;
                break;
            }
        }
        if (!matched) {
            remaining.push_back(text[i]);
            ++i;
        }
    }

    return {collapse_whitespace(remaining), std::move(hits)};
}

} // namespace sentifuzz
