#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace sentifuzz {

// Penn Treebank tagset, including the punctuation tags emitted by
// treebank-style taggers. The enumeration is closed: strings outside it
// are rejected at parse time.
enum class PennTag {
    CC,
    CD,
    DT,
    EX,
    FW,
    IN,
    JJ,
    JJR,
    JJS,
    LS,
    MD,
    NN,
    NNS,
    NNP,
    NNPS,
    PDT,
    POS,
    PRP,
    PRPS, // PRP$
    RB,
    RBR,
    RBS,
    RP,
    SYM,
    TO,
    UH,
    VB,
    VBD,
    VBG,
    VBN,
    VBP,
    VBZ,
    WDT,
    WP,
    WPS, // WP$
    WRB,
    Hash,       // #
    Dollar,     // $
    Period,     // .
    Comma,      // ,
    Colon,      // :
    Lrb,        // -LRB-
    Rrb,        // -RRB-
    OpenQuote,  // ``
    CloseQuote, // ''
};

std::optional<PennTag> parse_penn_tag(std::string_view text);
std::string_view to_string(PennTag tag);

// Opinion words are the only scored tokens: adjectives, adverbs, verbs
// and common nouns. Proper nouns, function words and punctuation are not.
bool is_opinion_tag(PennTag tag);

bool is_adjective_tag(PennTag tag);

} // namespace sentifuzz
