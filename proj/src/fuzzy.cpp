#include "sentifuzz/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "sentifuzz/errors.hpp"

namespace sentifuzz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct ClassName {
    std::string_view name;
    SentimentClass value;
};

constexpr ClassName kClassNames[] = {
    {"strong_negative", SentimentClass::StrongNegative},
    {"negative", SentimentClass::Negative},
    {"weak_negative", SentimentClass::WeakNegative},
    {"objective", SentimentClass::Objective},
    {"weak_positive", SentimentClass::WeakPositive},
    {"positive", SentimentClass::Positive},
    {"strong_positive", SentimentClass::StrongPositive},
};

double parse_breakpoint(const std::string& text, std::size_t line_no) {
    if (text == "inf" || text == "+inf") return kInf;
    if (text == "-inf") return -kInf;
    try {
        std::size_t used = 0;
        double value = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw ParseError(line_no, "bad breakpoint '" + text + "'");
    }
}

bool mirrors(const Trapezoid& pos, const Trapezoid& neg) {
    return pos.a == -neg.d && pos.b == -neg.c && pos.c == -neg.b &&
           pos.d == -neg.a;
}

} // namespace

std::string_view to_string(SentimentClass c) {
    for (const ClassName& entry : kClassNames) {
        if (entry.value == c) return entry.name;
    }
    return "?";
}

std::optional<SentimentClass> parse_sentiment_class(std::string_view text) {
    for (const ClassName& entry : kClassNames) {
        if (entry.name == text) return entry.value;
    }
    return std::nullopt;
}

const std::array<SentimentClass, 7>& all_sentiment_classes() {
    static const std::array<SentimentClass, 7> kAll = {
        SentimentClass::StrongNegative, SentimentClass::Negative,
        SentimentClass::WeakNegative,   SentimentClass::Objective,
        SentimentClass::WeakPositive,   SentimentClass::Positive,
        SentimentClass::StrongPositive,
    };
    return kAll;
}

SoPolarity so_polarity(double score) {
    return score == 0.0 ? SoPolarity::Objective : SoPolarity::Subjective;
}

PnPolarity pn_polarity(double score) {
    if (score == 0.0) {
        throw std::domain_error(
            "pn_polarity is undefined for a zero score");
    }
    return score > 0.0 ? PnPolarity::Positive : PnPolarity::Negative;
}

double Trapezoid::membership(double x) const {
    if (x < a || x > d) return 0.0;
    if (x >= b && x <= c) return 1.0;
    if (x < b) return (x - a) / (b - a);
    return (d - x) / (d - c);
}

const Trapezoid& FuzzyPartition::for_class(SentimentClass c) const {
    switch (c) {
        case SentimentClass::WeakPositive: return weak_positive;
        case SentimentClass::Positive: return positive;
        case SentimentClass::StrongPositive: return strong_positive;
        case SentimentClass::WeakNegative: return weak_negative;
        case SentimentClass::Negative: return negative;
        case SentimentClass::StrongNegative: return strong_negative;
        case SentimentClass::Objective: break;
    }
    throw std::invalid_argument("objective has no membership function");
}

FuzzyPartition default_partition() {
    FuzzyPartition p;
    p.weak_positive = {0.0, 0.0, 0.1875, 0.25};
    p.positive = {0.1875, 0.25, 0.9375, 1.0625};
    p.strong_positive = {0.9375, 1.0625, kInf, kInf};
    p.weak_negative = {-0.25, -0.1875, 0.0, 0.0};
    p.negative = {-1.0625, -0.9375, -0.25, -0.1875};
    p.strong_negative = {-kInf, -kInf, -1.0625, -0.9375};
    return p;
}

FuzzyPartition load_partition(std::istream& stream,
                              std::vector<std::string>& warnings) {
    std::map<SentimentClass, Trapezoid> loaded;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream fields(line);
        std::string name;
        if (!(fields >> name) || name.front() == '#') continue;

        auto c = parse_sentiment_class(name);
        if (!c || *c == SentimentClass::Objective) {
            throw ParseError(line_no, "unknown class '" + name + "'");
        }
        std::string a, b, cc, d;
        if (!(fields >> a >> b >> cc >> d)) {
            throw ParseError(line_no, "expected four breakpoints");
        }
        Trapezoid t{parse_breakpoint(a, line_no), parse_breakpoint(b, line_no),
                    parse_breakpoint(cc, line_no),
                    parse_breakpoint(d, line_no)};
        if (!(t.a <= t.b && t.b <= t.c && t.c <= t.d)) {
            throw ParseError(line_no,
                             "breakpoints must be non-decreasing for '" +
                                 name + "'");
        }
        if (!loaded.emplace(*c, t).second) {
            throw ParseError(line_no, "duplicate class '" + name + "'");
        }
    }

    for (const ClassName& entry : kClassNames) {
        if (entry.value == SentimentClass::Objective) continue;
        if (loaded.count(entry.value) == 0) {
            throw ParseError(0, "partition file is missing class '" +
                                    std::string(entry.name) + "'");
        }
    }

    FuzzyPartition p;
    p.weak_positive = loaded[SentimentClass::WeakPositive];
    p.positive = loaded[SentimentClass::Positive];
    p.strong_positive = loaded[SentimentClass::StrongPositive];
    p.weak_negative = loaded[SentimentClass::WeakNegative];
    p.negative = loaded[SentimentClass::Negative];
    p.strong_negative = loaded[SentimentClass::StrongNegative];

    if (!mirrors(p.weak_positive, p.weak_negative) ||
        !mirrors(p.positive, p.negative) ||
        !mirrors(p.strong_positive, p.strong_negative)) {
        warnings.push_back(
            "partition is asymmetric: positive and negative sides are not "
            "mirror images");
    }
    return p;
}

MembershipVector membership_vector(double score,
                                   const FuzzyPartition& partition) {
    MembershipVector memberships;
    for (SentimentClass c : all_sentiment_classes()) {
        memberships[c] = 0.0;
    }
    if (score == 0.0) {
        memberships[SentimentClass::Objective] = 1.0;
        return memberships;
    }
    for (SentimentClass c : all_sentiment_classes()) {
        if (c == SentimentClass::Objective) continue;
        memberships[c] = partition.for_class(c).membership(score);
    }
    return memberships;
}

SentimentClass pick_class(const MembershipVector& memberships,
                          bool positive_side) {
    // Mildness order; a strictly greater membership is required to move
    // to a stronger class, so ties resolve toward the milder one.
    static const SentimentClass kPositiveOrder[] = {
        SentimentClass::WeakPositive, SentimentClass::Positive,
        SentimentClass::StrongPositive};
    static const SentimentClass kNegativeOrder[] = {
        SentimentClass::WeakNegative, SentimentClass::Negative,
        SentimentClass::StrongNegative};

    const auto& order = positive_side ? kPositiveOrder : kNegativeOrder;
    SentimentClass best = order[0];
    double best_membership = -1.0;
    for (SentimentClass c : order) {
        auto it = memberships.find(c);
        double m = it == memberships.end() ? 0.0 : it->second;
        if (m > best_membership) {
            best = c;
            best_membership = m;
        }
    }
    return best;
}

SentimentClass classify(double score, const FuzzyPartition& partition) {
    if (so_polarity(score) == SoPolarity::Objective) {
        return SentimentClass::Objective;
    }
    return pick_class(membership_vector(score, partition), score > 0.0);
}

} // namespace sentifuzz
