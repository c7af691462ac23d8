#include <doctest.h>

#include <random>
#include <sstream>

#include "sentifuzz/errors.hpp"
#include "sentifuzz/lexicon.hpp"
#include "sentifuzz/textproc.hpp"

using namespace sentifuzz;

namespace {

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
    std::vector<std::string> out;
    for (const Token& t : tokens) out.push_back(t.surface);
    return out;
}

std::string random_messy_text(std::mt19937& rng) {
    static const char kAlphabet[] =
        "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789"
        "!@#(){}[]:;,.?'\"~*^&%$-_/ \t  ";
    std::uniform_int_distribution<std::size_t> len(0, 60);
    std::uniform_int_distribution<std::size_t> pick(0, sizeof(kAlphabet) - 2);
    std::string text;
    std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) text.push_back(kAlphabet[pick(rng)]);
    // sprinkle in the raw-tweet constructs
    if (n % 3 == 0) text += " @someone";
    if (n % 4 == 0) text += " #topic";
    if (n % 5 == 0) text += " http://t.co/xyz";
    return text;
}

PennTag random_tag(std::mt19937& rng) {
    static const PennTag kTags[] = {
        PennTag::NN,  PennTag::NNS, PennTag::NNP, PennTag::JJ,  PennTag::JJR,
        PennTag::RB,  PennTag::VB,  PennTag::VBD, PennTag::VBZ, PennTag::DT,
        PennTag::IN,  PennTag::CC,  PennTag::PRP, PennTag::CD,  PennTag::UH,
    };
    std::uniform_int_distribution<std::size_t> pick(
        0, std::size(kTags) - 1);
    return kTags[pick(rng)];
}

std::vector<TaggedToken> random_tagged_tokens(std::mt19937& rng,
                                              std::size_t max_len = 12) {
    static const char* kWords[] = {"iphone", "is",    "lovely", "the",
                                   "battery", "good", "of",     "screen",
                                   "quite",  "fast",  "it",     "works"};
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, std::size(kWords) - 1);
    std::vector<TaggedToken> tokens;
    std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) {
        TaggedToken t;
        t.token.surface = kWords[pick(rng)];
        t.token.normalized = t.token.surface;
        t.token.index = i;
        t.tag = random_tag(rng);
        tokens.push_back(std::move(t));
    }
    return tokens;
}

bool same_tokens(const std::vector<TaggedToken>& a,
                 const std::vector<TaggedToken>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].token.surface != b[i].token.surface) return false;
        if (a[i].token.index != b[i].token.index) return false;
        if (a[i].tag != b[i].tag) return false;
    }
    return true;
}

} // namespace

TEST_SUITE("textproc") {

TEST_CASE("translate hook defaults to identity") {
    std::vector<std::string> warnings;
    RawPost post{"1", std::nullopt, "J'aime mon Iphone4S.", std::nullopt};
    RawPost same = translate_hook(post, {}, warnings);
    CHECK(same.text == post.text);
    CHECK(warnings.empty());
}

TEST_CASE("translate hook applies the injected translator") {
    std::vector<std::string> warnings;
    RawPost post{"1", std::nullopt, "J'aime mon Iphone4S.", std::nullopt};
    Translator to_english = [](const std::string& text) {
        return text == "J'aime mon Iphone4S." ? "I love my Iphone4S."
                                              : text;
    };
    RawPost translated = translate_hook(post, to_english, warnings);
    CHECK(translated.text == "I love my Iphone4S.");
    CHECK(warnings.empty());
}

TEST_CASE("translate hook keeps the post on failure and warns") {
    std::vector<std::string> warnings;
    RawPost post{"42", std::nullopt, "hello", std::nullopt};
    Translator failing = [](const std::string&) -> std::string {
        throw std::runtime_error("service unavailable");
    };
    RawPost unchanged = translate_hook(post, failing, warnings);
    CHECK(unchanged.text == "hello");
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("42") != std::string::npos);
}

TEST_CASE("clean removes mentions") {
    CHECK(clean("iPhone made me friendly @david") ==
          "iphone made me friendly");
}

TEST_CASE("clean removes whole hashtag tokens") {
    CHECK(clean("Results for #electronic-media.") == "results for");
}

TEST_CASE("clean removes urls and punctuation, collapses whitespace") {
    CHECK(clean("") == "");
    CHECK(clean("Touch-screen of iphone@ is lovely http://t.co/HY1zqtzq "
                "and attractive") ==
          "touch-screen of iphone is lovely and attractive");
    CHECK(clean("naked iphone(: is catchy and shiny") ==
          "naked iphone is catchy and shiny");
    CHECK(clean("  a ,  b !! ") == "a b");
}

TEST_CASE("clean is idempotent") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 600; ++i) {
        std::string text = random_messy_text(rng);
        std::string once = clean(text);
        CHECK(clean(once) == once);
    }
}

TEST_CASE("tokenize splits on whitespace and lowercases") {
    auto tokens = tokenize("iphone is lovely");
    CHECK(surfaces(tokens) ==
          std::vector<std::string>{"iphone", "is", "lovely"});

    tokens = tokenize("  a  b ");
    REQUIRE(tokens.size() == 2);
    CHECK(tokens[0].surface == "a");
    CHECK(tokens[1].surface == "b");
    CHECK(tokens[0].index == 0);
    CHECK(tokens[1].index == 1);

    CHECK(surfaces(tokenize("nokia 4 is good")) ==
          std::vector<std::string>{"nokia", "4", "is", "good"});
}

TEST_CASE("tokens of cleaned text never contain forbidden characters") {
    static const std::string kForbidden = "@#!(){}[]:;,.?'\"~*^&%$";
    std::mt19937 rng(555);
    for (int i = 0; i < 600; ++i) {
        for (const Token& token : tokenize(clean(random_messy_text(rng)))) {
            CHECK(token.surface.find_first_of(kForbidden) ==
                  std::string::npos);
            CHECK(token.normalized == token.surface);
        }
    }
}

TEST_CASE("baseline tagger follows the rule priority") {
    Lexicon fixture = load_fixture_lexicon();
    BaselineTagger tagger(&fixture);

    auto tagged = tagger.tag(tokenize("damn iphone"));
    REQUIRE(tagged.size() == 2);
    CHECK(tagged[0].tag == PennTag::JJ); // lexicon hint
    CHECK(tagged[1].tag == PennTag::NN); // default

    tagged = tagger.tag(tokenize("good"));
    REQUIRE(tagged.size() == 1);
    CHECK(tagged[0].tag == PennTag::JJ);

    BaselineTagger bare; // no lexicon at all
    tagged = bare.tag(tokenize("running"));
    REQUIRE(tagged.size() == 1);
    CHECK(tagged[0].tag == PennTag::VBG); // suffix rule

    tagged = bare.tag(tokenize("the 42 slowly hardest smarter"));
    CHECK(tagged[0].tag == PennTag::DT);
    CHECK(tagged[1].tag == PennTag::CD);
    CHECK(tagged[2].tag == PennTag::RB);
    CHECK(tagged[3].tag == PennTag::JJS);
    CHECK(tagged[4].tag == PennTag::JJR);
}

TEST_CASE("closed-class words outrank lexicon hints") {
    // "not" is in the fixture lexicon as an adverb, and also a closed-class
    // word; both give RB, but a determiner in a lexicon must stay DT.
    Lexicon lexicon;
    LexiconEntry entry;
    entry.lemma = "the";
    entry.category = PosCategory::Noun;
    entry.pos_score = 0.5;
    lexicon.add_merged(entry);
    BaselineTagger tagger(&lexicon);
    auto tagged = tagger.tag(tokenize("the"));
    CHECK(tagged[0].tag == PennTag::DT);
}

TEST_CASE("tagging is total") {
    Lexicon fixture = load_fixture_lexicon();
    BaselineTagger tagger(&fixture);
    std::mt19937 rng(31337);
    for (int i = 0; i < 200; ++i) {
        std::string text = clean(random_messy_text(rng));
        auto tokens = tokenize(text);
        CHECK(tagger.tag(tokens).size() == tokens.size());
    }
}

TEST_CASE("parse_pretagged discards the username prefix") {
    auto tokens =
        parse_pretagged("@/IN SabrinaHu5/NNP :: iphone/NN is/VBZ not/RB "
                        "good/JJ");
    REQUIRE(tokens.size() == 4);
    CHECK(tokens[0].token.surface == "iphone");
    CHECK(tokens[0].tag == PennTag::NN);
    CHECK(tokens[2].token.surface == "not");
    CHECK(tokens[2].tag == PennTag::RB);
    CHECK(tokens[3].token.surface == "good");
    CHECK(tokens[3].tag == PennTag::JJ);
}

TEST_CASE("parse_pretagged without separator keeps the whole line") {
    auto tokens = parse_pretagged("Damn/JJ iphone/NN");
    REQUIRE(tokens.size() == 2);
    CHECK(tokens[0].token.surface == "damn");
    CHECK(tokens[0].tag == PennTag::JJ);
    CHECK(tokens[1].token.surface == "iphone");
    CHECK(tokens[1].tag == PennTag::NN);
}

TEST_CASE("parse_pretagged drops brackets and stray separators") {
    auto tokens = parse_pretagged(
        "@/IN JessMarieFrench/NNP :: naked/JJ iphone/NN -LRB-/-LRB- :: "
        "is/VBZ catchy/JJ and/CC shiny/JJ");
    REQUIRE(tokens.size() == 6);
    CHECK(tokens[0].token.surface == "naked");
    CHECK(tokens[2].token.surface == "is");
    CHECK(tokens[5].token.surface == "shiny");

    // slashes inside the surface split at the last one
    tokens = parse_pretagged("http://t.co/HY1zqtzq/JJ");
    REQUIRE(tokens.size() == 1);
    CHECK(tokens[0].token.surface == "http://t.co/hy1zqtzq");
    CHECK(tokens[0].tag == PennTag::JJ);
}

TEST_CASE("parse_pretagged rejects bad items") {
    CHECK_THROWS_AS(parse_pretagged("word"), ParseError);
    CHECK_THROWS_AS(parse_pretagged("good/XYZ"), ParseError);
    try {
        parse_pretagged("iphone/NN oops", 7);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 7);
        CHECK(std::string(e.what()).find("oops") != std::string::npos);
    }
}

TEST_CASE("format and parse round-trip") {
    std::mt19937 rng(808);
    for (int i = 0; i < 300; ++i) {
        auto tokens = random_tagged_tokens(rng);
        if (tokens.empty()) continue;
        auto parsed = parse_pretagged(format_pretagged(tokens));
        CHECK(same_tokens(tokens, parsed));
    }
}

TEST_CASE("opinion filter keeps scored tags and drops the rest") {
    auto tokens = parse_pretagged("iphone/NN is/VBZ not/RB good/JJ");
    CHECK(filter_opinion_words(tokens).size() == 4);

    tokens = parse_pretagged("stalin/NNP lovely/JJ");
    auto kept = filter_opinion_words(tokens);
    REQUIRE(kept.size() == 1);
    CHECK(kept[0].token.surface == "lovely");
    CHECK(kept[0].token.index == 1); // original index preserved

    CHECK(filter_opinion_words({}).empty());
}

TEST_CASE("stopword removal") {
    const StopwordSet& defaults = default_stopwords();
    auto tokens = parse_pretagged("iphone/NN is/VBZ lovely/JJ");
    auto kept = remove_stopwords(tokens, defaults);
    REQUIRE(kept.size() == 2);
    CHECK(kept[0].token.surface == "iphone");
    CHECK(kept[1].token.surface == "lovely");

    tokens = parse_pretagged("about/IN above/IN after/IN");
    CHECK(remove_stopwords(tokens, defaults).empty());

    CHECK(remove_stopwords({}, defaults).empty());
}

TEST_CASE("negation particles are not stopwords") {
    const StopwordSet& defaults = default_stopwords();
    CHECK(defaults.count("not") == 0);
    CHECK(defaults.count("no") == 0);
    CHECK(defaults.count("never") == 0);
    CHECK(defaults.count("n't") == 0);
    CHECK(defaults.count("nor") == 1);
    CHECK(defaults.count("is") == 1);
}

TEST_CASE("filter and stopword removal are idempotent and commute") {
    const StopwordSet& defaults = default_stopwords();
    std::mt19937 rng(606);
    for (int i = 0; i < 600; ++i) {
        auto tokens = random_tagged_tokens(rng);
        auto filtered = filter_opinion_words(tokens);
        CHECK(same_tokens(filter_opinion_words(filtered), filtered));

        auto unstopped = remove_stopwords(tokens, defaults);
        CHECK(same_tokens(remove_stopwords(unstopped, defaults), unstopped));

        auto ab = remove_stopwords(filter_opinion_words(tokens), defaults);
        auto ba = filter_opinion_words(remove_stopwords(tokens, defaults));
        CHECK(same_tokens(ab, ba));
    }
}

TEST_CASE("stopword file loading") {
    std::istringstream stream("# comment\nfoo\n  BAR  \n\nbaz\n");
    StopwordSet words = load_stopwords(stream);
    CHECK(words.size() == 3);
    CHECK(words.count("foo") == 1);
    CHECK(words.count("bar") == 1);
    CHECK(words.count("baz") == 1);
}

TEST_CASE("emoticon mapping") {
    auto [text, hits] = map_emoticons(":D hello");
    CHECK(text == "hello");
    REQUIRE(hits.size() == 1);
    CHECK(hits[0] == EmoticonPolarity::Positive);

    auto [text2, hits2] = map_emoticons("D8 bad");
    CHECK(text2 == "bad");
    REQUIRE(hits2.size() == 1);
    CHECK(hits2[0] == EmoticonPolarity::Negative);

    auto [text3, hits3] = map_emoticons("hello");
    CHECK(text3 == "hello");
    CHECK(hits3.empty());

    auto [text4, hits4] = map_emoticons("fine :| I guess :D");
    CHECK(hits4.size() == 2);
    CHECK(hits4[0] == EmoticonPolarity::Neutral);
    CHECK(hits4[1] == EmoticonPolarity::Positive);
    CHECK(text4 == "fine I guess");
}

} // TEST_SUITE
