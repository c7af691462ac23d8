#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "sentifuzz/errors.hpp"
#include "sentifuzz/lexicon.hpp"

using namespace sentifuzz;

namespace {

Lexicon import_text(const std::string& text) {
    std::istringstream stream(text);
    return import_sentiwordnet(stream);
}

std::string data_file(const char* name) {
    return std::string(SENTIFUZZ_TEST_DATA_DIR) + "/" + name;
}

// Random but valid SentiWordNet lines. Scores are multiples of 1/8 like
// the real distribution, which keeps sense means exact in binary.
std::vector<std::string> random_swn_lines(std::mt19937& rng, int count) {
    static const char* kWords[] = {"alpha", "bravo", "charlie",  "delta",
                                   "echo",  "fox",   "golf",     "hotel",
                                   "india", "julia", "kilo_word", "lima"};
    std::uniform_int_distribution<int> word_pick(0, 11);
    std::uniform_int_distribution<int> pos_pick(0, 3);
    std::uniform_int_distribution<int> eighth(0, 8);
    std::uniform_int_distribution<int> sense_pick(1, 4);

    std::vector<std::string> lines;
    for (int i = 0; i < count; ++i) {
        int pos_eighths = eighth(rng);
        std::uniform_int_distribution<int> neg_dist(0, 8 - pos_eighths);
        double pos = pos_eighths / 8.0;
        double neg = neg_dist(rng) / 8.0;
        char code = "anvr"[pos_pick(rng)];
        std::ostringstream line;
        line << code << "\t" << 10000 + i << "\t" << pos << "\t" << neg
             << "\t" << kWords[word_pick(rng)] << "#" << sense_pick(rng)
             << "\tgloss text";
        lines.push_back(line.str());
    }
    return lines;
}

std::string join_lines(const std::vector<std::string>& lines) {
    std::string text;
    for (const std::string& line : lines) {
        text += line;
        text += '\n';
    }
    return text;
}

} // namespace

TEST_SUITE("lexicon") {

TEST_CASE("imports the classic first row") {
    Lexicon lexicon = import_text(
        "a\t00001740\t0.125\t0\table#1\t(usually followed by `to') having "
        "the necessary means\n");
    auto entry = lexicon.lookup("able", PosCategory::Adjective);
    REQUIRE(entry.has_value());
    CHECK(entry->pos == 0.125);
    CHECK(entry->neg == 0.0);
    CHECK(lexicon.size() == 1);
}

TEST_CASE("skips comments and blank lines") {
    Lexicon lexicon = import_text("# comment\n\n# another\n");
    CHECK(lexicon.empty());
}

TEST_CASE("empty stream gives an empty lexicon") {
    Lexicon lexicon = import_text("");
    CHECK(lexicon.empty());
    CHECK_FALSE(lexicon.lookup("anything", PosCategory::Noun).has_value());
}

TEST_CASE("merges senses by arithmetic mean") {
    Lexicon lexicon = import_text(
        "a\t1\t0.75\t0\tgood#1\tgloss\n"
        "a\t2\t0.5\t0\tgood#2\tgloss\n");
    auto entry = lexicon.lookup("good", PosCategory::Adjective);
    REQUIRE(entry.has_value());
    CHECK(entry->pos == 0.625);
    CHECK(entry->neg == 0.0);
}

TEST_CASE("splits multi-term synsets and keeps underscores") {
    Lexicon lexicon = import_text(
        "v\t1\t0.25\t0.125\ttake_office#1 assume#2\tgloss\n");
    CHECK(lexicon.lookup("take_office", PosCategory::Verb).has_value());
    CHECK(lexicon.lookup("assume", PosCategory::Verb).has_value());
    CHECK(lexicon.size() == 2);
}

TEST_CASE("lowercases lemmas") {
    Lexicon lexicon = import_text("n\t1\t0.5\t0\tParis#1\tgloss\n");
    CHECK(lexicon.lookup("paris", PosCategory::Noun).has_value());
}

TEST_CASE("rejects malformed lines with the line number") {
    auto expect_error_on_line = [](const std::string& text,
                                   std::size_t line) {
        std::istringstream stream(text);
        try {
            import_sentiwordnet(stream);
            FAIL_CHECK("expected ParseError for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
        }
    };

    expect_error_on_line("a\t1\t0.5\tgood#1\tgloss\n", 1); // 5 fields
    expect_error_on_line("a\t1\tabc\t0\tgood#1\tgloss\n", 1);
    expect_error_on_line("a\t1\t1.5\t0\tgood#1\tgloss\n", 1);
    expect_error_on_line("a\t1\t-0.25\t0\tgood#1\tgloss\n", 1);
    expect_error_on_line("a\t1\t0.75\t0.5\tgood#1\tgloss\n", 1); // sum > 1
    expect_error_on_line("x\t1\t0.5\t0\tgood#1\tgloss\n", 1);   // POS code
    expect_error_on_line("# fine\na\t2\t0.5\tbad\tx#1\tg\n", 2);
}

TEST_CASE("satellite adjectives count as adjectives") {
    Lexicon lexicon = import_text("s\t1\t0.375\t0\tutter#1\tgloss\n");
    CHECK(lexicon.lookup("utter", PosCategory::Adjective).has_value());
}

TEST_CASE("fixture lookups") {
    Lexicon fixture = load_fixture_lexicon();

    auto good = fixture.lookup("good", PosCategory::Adjective);
    REQUIRE(good.has_value());
    CHECK(good->pos == 0.625);
    CHECK(good->neg == 0.0);

    CHECK_FALSE(fixture.lookup("nokia", PosCategory::Noun).has_value());
    CHECK_FALSE(fixture.lookup("iphone", PosCategory::Noun).has_value());

    auto damn = fixture.lookup("damn", PosCategory::Adjective);
    REQUIRE(damn.has_value());
    CHECK(damn->pos == 0.0);
    CHECK(damn->neg == 0.75);

    auto amazing = fixture.lookup("amazing", PosCategory::Adjective);
    REQUIRE(amazing.has_value());
    CHECK(amazing->pos == 0.6875);

    auto particle = fixture.lookup("not", PosCategory::Adverb);
    REQUIRE(particle.has_value());
    CHECK(particle->pos == 0.0);
    CHECK(particle->neg == 0.375);
}

TEST_CASE("fixture file matches the built-in table") {
    std::ifstream stream(data_file("fixture_lexicon.tsv"));
    REQUIRE(stream.good());
    Lexicon from_file = import_simple(stream);
    Lexicon builtin = load_fixture_lexicon();
    REQUIRE(from_file.size() == builtin.size());
    for (const auto& [key, entry] : builtin.entries()) {
        auto loaded = from_file.lookup(key.first, key.second);
        REQUIRE(loaded.has_value());
        CHECK(loaded->pos == entry.pos_score);
        CHECK(loaded->neg == entry.neg_score);
    }
}

TEST_CASE("simple format rejects duplicates and bad rows") {
    auto import_simple_text = [](const std::string& text) {
        std::istringstream stream(text);
        return import_simple(stream);
    };
    CHECK_THROWS_AS(import_simple_text("good\ta\t0.5\t0\ngood\ta\t0.25\t0\n"),
                    ParseError);
    CHECK_THROWS_AS(import_simple_text("good\tz\t0.5\t0\n"), ParseError);
    CHECK_THROWS_AS(import_simple_text("good\ta\t0.75\t0.5\n"), ParseError);
    CHECK_THROWS_AS(import_simple_text("good\ta\t0.5\n"), ParseError);
}

TEST_CASE("imported entries always satisfy the score invariants") {
    std::mt19937 rng(12345);
    for (int round = 0; round < 50; ++round) {
        auto lines = random_swn_lines(rng, 40);
        Lexicon lexicon = import_text(join_lines(lines));
        for (const auto& [key, entry] : lexicon.entries()) {
            CHECK(entry.pos_score >= 0.0);
            CHECK(entry.pos_score <= 1.0);
            CHECK(entry.neg_score >= 0.0);
            CHECK(entry.neg_score <= 1.0);
            CHECK(entry.pos_score + entry.neg_score <= 1.0);
            // obj is derived, never stored
            CHECK(entry.obj_score() ==
                  1.0 - entry.pos_score - entry.neg_score);
        }
    }
}

TEST_CASE("every term in the input is reachable after import") {
    std::mt19937 rng(777);
    auto lines = random_swn_lines(rng, 60);
    Lexicon lexicon = import_text(join_lines(lines));
    for (const std::string& line : lines) {
        char code = line[0];
        std::size_t terms_begin = 0, tabs = 0;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '\t' && ++tabs == 4) {
                terms_begin = i + 1;
                break;
            }
        }
        std::size_t terms_end = line.find('\t', terms_begin);
        std::string term =
            line.substr(terms_begin, terms_end - terms_begin);
        std::string lemma = term.substr(0, term.find('#'));
        CHECK(lexicon.lookup(lemma, *parse_pos_category(code)).has_value());
    }
}

TEST_CASE("merge result does not depend on line order") {
    std::mt19937 rng(4242);
    for (int round = 0; round < 20; ++round) {
        auto lines = random_swn_lines(rng, 30);
        Lexicon original = import_text(join_lines(lines));
        std::shuffle(lines.begin(), lines.end(), rng);
        Lexicon shuffled = import_text(join_lines(lines));

        REQUIRE(original.size() == shuffled.size());
        for (const auto& [key, entry] : original.entries()) {
            auto other = shuffled.lookup(key.first, key.second);
            REQUIRE(other.has_value());
            CHECK(other->pos == entry.pos_score); // tolerance 0
            CHECK(other->neg == entry.neg_score);
        }
    }
}

TEST_CASE("re-importing a merged single-sense file is idempotent") {
    std::mt19937 rng(99);
    auto lines = random_swn_lines(rng, 40);
    Lexicon first = import_text(join_lines(lines));

    std::ostringstream merged;
    write_simple(first, merged);
    std::istringstream round_trip(merged.str());
    Lexicon second = import_simple(round_trip);

    REQUIRE(first.size() == second.size());
    for (const auto& [key, entry] : first.entries()) {
        auto other = second.lookup(key.first, key.second);
        REQUIRE(other.has_value());
        CHECK(other->pos == entry.pos_score);
        CHECK(other->neg == entry.neg_score);
    }
}

} // TEST_SUITE
