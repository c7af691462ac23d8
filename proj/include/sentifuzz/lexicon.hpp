#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace sentifuzz {

// The four parts of speech carried by lexicon entries, with their
// one-letter file codes (a, n, v, r).
enum class PosCategory { Adjective, Noun, Verb, Adverb };

std::optional<PosCategory> parse_pos_category(char code);
char to_code(PosCategory category);
std::string_view to_string(PosCategory category);

// One merged polarity row for a (lemma, category) pair.
// Invariants: pos_score, neg_score in [0,1]; pos_score + neg_score <= 1.
// The objectivity score is derived, never stored.
struct LexiconEntry {
    std::string lemma;
    PosCategory category = PosCategory::Noun;
    double pos_score = 0.0;
    double neg_score = 0.0;

    double obj_score() const { return 1.0 - pos_score - neg_score; }
};

struct ScorePair {
    double pos = 0.0;
    double neg = 0.0;

    bool operator==(const ScorePair&) const = default;
};

// In-memory polarity table keyed by (lemma, category). Immutable once
// imported; safe to share across threads.
class Lexicon {
public:
    using Key = std::pair<std::string, PosCategory>;

    void add_merged(LexiconEntry entry);

    std::optional<ScorePair> lookup(const std::string& lemma,
                                    PosCategory category) const;

    // Number of categories a lemma appears under (0..4). Used by the
    // baseline tagger's category hint.
    std::optional<PosCategory> sole_category(const std::string& lemma) const;

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    const std::map<Key, LexiconEntry>& entries() const { return entries_; }

    const std::string& source_name() const { return source_name_; }
    void set_source_name(std::string name) { source_name_ = std::move(name); }

private:
    std::map<Key, LexiconEntry> entries_;
    std::string source_name_;
};

// Parses the SentiWordNet 3.0 tab-separated layout:
//   POS <TAB> ID <TAB> PosScore <TAB> NegScore <TAB> SynsetTerms <TAB> Gloss
// Each "lemma#sense" term contributes to its (lemma, category); multiple
// senses of the same key are merged by arithmetic mean. Lemmas are
// lowercased, sense suffixes stripped, underscores in multiword lemmas kept.
// Lines starting with '#' are comments. Throws ParseError on malformed
// lines; an empty stream yields an empty lexicon.
Lexicon import_sentiwordnet(std::istream& stream,
                            const std::string& source_name = "");

// Parses the simplified pre-merged layout used for fixtures:
//   lemma <TAB> category-code <TAB> pos <TAB> neg
// One row per (lemma, category); a duplicate key is a parse error.
Lexicon import_simple(std::istream& stream,
                      const std::string& source_name = "");

// Writes a lexicon in the simplified layout, sorted by key.
void write_simple(const Lexicon& lexicon, std::ostream& stream);

// The built-in fixture lexicon used by the bundled demo corpus.
Lexicon load_fixture_lexicon();

} // namespace sentifuzz
