#include "sentifuzz/penn_tag.hpp"

#include <array>
#include <utility>

namespace sentifuzz {

namespace {

constexpr std::array<std::pair<std::string_view, PennTag>, 45> kTagNames{{
    {"CC", PennTag::CC},
    {"CD", PennTag::CD},
    {"DT", PennTag::DT},
    {"EX", PennTag::EX},
    {"FW", PennTag::FW},
    {"IN", PennTag::IN},
    {"JJ", PennTag::JJ},
    {"JJR", PennTag::JJR},
    {"JJS", PennTag::JJS},
    {"LS", PennTag::LS},
    {"MD", PennTag::MD},
    {"NN", PennTag::NN},
    {"NNS", PennTag::NNS},
    {"NNP", PennTag::NNP},
    {"NNPS", PennTag::NNPS},
    {"PDT", PennTag::PDT},
    {"POS", PennTag::POS},
    {"PRP", PennTag::PRP},
    {"PRP$", PennTag::PRPS},
    {"RB", PennTag::RB},
    {"RBR", PennTag::RBR},
    {"RBS", PennTag::RBS},
    {"RP", PennTag::RP},
    {"SYM", PennTag::SYM},
    {"TO", PennTag::TO},
    {"UH", PennTag::UH},
    {"VB", PennTag::VB},
    {"VBD", PennTag::VBD},
    {"VBG", PennTag::VBG},
    {"VBN", PennTag::VBN},
    {"VBP", PennTag::VBP},
    {"VBZ", PennTag::VBZ},
    {"WDT", PennTag::WDT},
    {"WP", PennTag::WP},
    {"WP$", PennTag::WPS},
    {"WRB", PennTag::WRB},
    {"#", PennTag::Hash},
    {"$", PennTag::Dollar},
    {".", PennTag::Period},
    {",", PennTag::Comma},
    {":", PennTag::Colon},
    {"-LRB-", PennTag::Lrb},
    {"-RRB-", PennTag::Rrb},
    {"``", PennTag::OpenQuote},
    {"''", PennTag::CloseQuote},
}};

} // namespace

std::optional<PennTag> parse_penn_tag(std::string_view text) {
    for (const auto& [name, tag] : kTagNames) {
        if (name == text) return tag;
    }
    return std::nullopt;
}

std::string_view to_string(PennTag tag) {
    for (const auto& [name, value] : kTagNames) {
        if (value == tag) return name;
    }
    return "?";
}

bool is_opinion_tag(PennTag tag) {
    switch (tag) {
        case PennTag::JJ:
        case PennTag::JJR:
        case PennTag::JJS:
        case PennTag::RB:
        case PennTag::RBR:
        case PennTag::RBS:
        case PennTag::VB:
        case PennTag::VBD:
        case PennTag::VBG:
        case PennTag::VBN:
        case PennTag::VBP:
        case PennTag::VBZ:
        case PennTag::NN:
        case PennTag::NNS:
            return true;
        default:
            return false;
    }
}

bool is_adjective_tag(PennTag tag) {
    return tag == PennTag::JJ || tag == PennTag::JJR || tag == PennTag::JJS;
}

} // namespace sentifuzz
