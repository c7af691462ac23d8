#include "sentifuzz/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <vector>

#include "sentifuzz/errors.hpp"

namespace sentifuzz {

namespace {

std::string to_lower_ascii(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    return out;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            fields.push_back(text.substr(start));
            return fields;
        }
        fields.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_score(std::string_view field, std::size_t line_no) {
    double value = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError(line_no,
                         "non-numeric score '" + std::string(field) + "'");
    }
    if (value < 0.0 || value > 1.0) {
        throw ParseError(line_no,
                         "score outside [0,1]: " + std::string(field));
    }
    return value;
}

struct SenseAccumulator {
    double pos_sum = 0.0;
    double neg_sum = 0.0;
    std::size_t count = 0;
};

} // namespace

std::optional<PosCategory> parse_pos_category(char code) {
    switch (code) {
        case 'a': return PosCategory::Adjective;
        case 'n': return PosCategory::Noun;
        case 'v': return PosCategory::Verb;
        case 'r': return PosCategory::Adverb;
        // Satellite adjectives ('s') occur in real SentiWordNet 3.0 files
        // and score like plain adjectives.
        case 's': return PosCategory::Adjective;
        default: return std::nullopt;
    }
}

char to_code(PosCategory category) {
    switch (category) {
        case PosCategory::Adjective: return 'a';
        case PosCategory::Noun: return 'n';
        case PosCategory::Verb: return 'v';
        case PosCategory::Adverb: return 'r';
    }
    return '?';
}

std::string_view to_string(PosCategory category) {
    switch (category) {
        case PosCategory::Adjective: return "adjective";
        case PosCategory::Noun: return "noun";
        case PosCategory::Verb: return "verb";
        case PosCategory::Adverb: return "adverb";
    }
    return "?";
}

void Lexicon::add_merged(LexiconEntry entry) {
    Key key{entry.lemma, entry.category};
    entries_.insert_or_assign(std::move(key), std::move(entry));
}

std::optional<ScorePair> Lexicon::lookup(const std::string& lemma,
                                         PosCategory category) const {
    auto it = entries_.find(Key{lemma, category});
    if (it == entries_.end()) return std::nullopt;
    return ScorePair{it->second.pos_score, it->second.neg_score};
}

std::optional<PosCategory> Lexicon::sole_category(
    const std::string& lemma) const {
    std::optional<PosCategory> found;
    for (PosCategory category : {PosCategory::Adjective, PosCategory::Noun,
                                 PosCategory::Verb, PosCategory::Adverb}) {
        if (entries_.count(Key{lemma, category}) == 0) continue;
        if (found) return std::nullopt; // ambiguous
        found = category;
    }
    return found;
}

Lexicon import_sentiwordnet(std::istream& stream,
                            const std::string& source_name) {
    std::map<Lexicon::Key, SenseAccumulator> senses;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') continue;

        auto fields = split(line, '\t');
        if (fields.size() < 6) {
            throw ParseError(line_no,
                             "expected 6 tab-separated fields, got " +
                                 std::to_string(fields.size()));
        }

        if (fields[0].size() != 1) {
            throw ParseError(line_no,
                             "bad POS code '" + std::string(fields[0]) + "'");
        }
        auto category = parse_pos_category(fields[0][0]);
        if (!category) {
            throw ParseError(line_no,
                             "bad POS code '" + std::string(fields[0]) + "'");
        }

        double pos = parse_score(fields[2], line_no);
        double neg = parse_score(fields[3], line_no);
        if (pos + neg > 1.0) {
            throw ParseError(line_no, "pos + neg exceeds 1");
        }

        for (std::string_view term : split(fields[4], ' ')) {
            if (term.empty()) continue;
            std::string_view lemma_part = term.substr(0, term.find('#'));
            if (lemma_part.empty()) continue;
            std::string lemma = to_lower_ascii(lemma_part);
            auto& acc = senses[Lexicon::Key{std::move(lemma), *category}];
            acc.pos_sum += pos;
            acc.neg_sum += neg;
            acc.count += 1;
        }
    }

    Lexicon lexicon;
    lexicon.set_source_name(source_name);
    for (const auto& [key, acc] : senses) {
        LexiconEntry entry;
        entry.lemma = key.first;
        entry.category = key.second;
        entry.pos_score = acc.pos_sum / static_cast<double>(acc.count);
        entry.neg_score = acc.neg_sum / static_cast<double>(acc.count);
        lexicon.add_merged(std::move(entry));
    }
    return lexicon;
}

Lexicon import_simple(std::istream& stream, const std::string& source_name) {
    Lexicon lexicon;
    lexicon.set_source_name(source_name);

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') continue;

        auto fields = split(line, '\t');
        if (fields.size() != 4) {
            throw ParseError(line_no,
                             "expected 4 tab-separated fields, got " +
                                 std::to_string(fields.size()));
        }
        if (fields[1].size() != 1) {
            throw ParseError(line_no,
                             "bad category code '" + std::string(fields[1]) +
                                 "'");
        }
        auto category = parse_pos_category(fields[1][0]);
        if (!category) {
            throw ParseError(line_no,
                             "bad category code '" + std::string(fields[1]) +
                                 "'");
        }

        LexiconEntry entry;
        entry.lemma = to_lower_ascii(fields[0]);
        entry.category = *category;
        entry.pos_score = parse_score(fields[2], line_no);
        entry.neg_score = parse_score(fields[3], line_no);
        if (entry.pos_score + entry.neg_score > 1.0) {
            throw ParseError(line_no, "pos + neg exceeds 1");
        }

        if (lexicon.lookup(entry.lemma, entry.category)) {
            throw ParseError(line_no,
                             "duplicate entry for '" + entry.lemma + "'");
        }
        lexicon.add_merged(std::move(entry));
    }
    return lexicon;
}

void write_simple(const Lexicon& lexicon, std::ostream& stream) {
    stream.precision(17);
    for (const auto& [key, entry] : lexicon.entries()) {
        stream << entry.lemma << '\t' << to_code(entry.category) << '\t'
               << entry.pos_score << '\t' << entry.neg_score << '\n';
    }
}

Lexicon load_fixture_lexicon() {
    // Opinion words of the bundled demo corpus. All values are exact
    // binary fractions (multiples of 1/16), so comparisons stay exact.
    struct Row {
        const char* lemma;
        PosCategory category;
        double pos;
        double neg;
    };
    static constexpr Row kRows[] = {
        {"amazing", PosCategory::Adjective, 0.6875, 0.0},
        {"attractive", PosCategory::Adjective, 0.125, 0.0},
        {"bad", PosCategory::Adjective, 0.0, 0.75},
        {"catchy", PosCategory::Adjective, 0.25, 0.0},
        {"damn", PosCategory::Adjective, 0.0, 0.75},
        {"good", PosCategory::Adjective, 0.625, 0.0},
        {"lovely", PosCategory::Adjective, 0.25, 0.0},
        {"love", PosCategory::Verb, 0.25, 0.0},
        {"not", PosCategory::Adverb, 0.0, 0.375},
        {"shiny", PosCategory::Adjective, 0.125, 0.0},
        {"sloppy", PosCategory::Adjective, 0.1875, 0.0},
    };

    Lexicon lexicon;
    lexicon.set_source_name("builtin-fixture");
    for (const Row& row : kRows) {
        LexiconEntry entry;
        entry.lemma = row.lemma;
        entry.category = row.category;
        entry.pos_score = row.pos;
        entry.neg_score = row.neg;
        lexicon.add_merged(std::move(entry));
    }
    return lexicon;
}

} // namespace sentifuzz
