#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sentifuzz {

// Seven grading labels: six graded classes plus objective, which is
// reserved for a total score of exactly 0.
enum class SentimentClass {
    StrongNegative,
    Negative,
    WeakNegative,
    Objective,
    WeakPositive,
    Positive,
    StrongPositive,
};

std::string_view to_string(SentimentClass c);
std::optional<SentimentClass> parse_sentiment_class(std::string_view text);

// All seven classes in canonical display order.
const std::array<SentimentClass, 7>& all_sentiment_classes();

enum class SoPolarity { Subjective, Objective };
enum class PnPolarity { Positive, Negative };

// Objective iff the score is exactly 0.
SoPolarity so_polarity(double score);

// Positive/negative by sign; a zero score is a domain error (route
// through so_polarity first).
PnPolarity pn_polarity(double score);

// Trapezoidal membership function: 0 outside [a,d], 1 on [b,c], linear
// shoulders. b or c may be +/-infinity for open-ended classes.
struct Trapezoid {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;

    double membership(double x) const;
};

// Membership functions for the six graded classes. The default partition
// uses shoulders of half-width 0.0625 around the 0.21875 and 1.0 class
// boundaries, mirrored on the negative side.
struct FuzzyPartition {
    Trapezoid weak_positive;
    Trapezoid positive;
    Trapezoid strong_positive;
    Trapezoid weak_negative;
    Trapezoid negative;
    Trapezoid strong_negative;

    const Trapezoid& for_class(SentimentClass c) const;
};

FuzzyPartition default_partition();

// Partition file: one line per graded class, "name a b c d" with inf/-inf
// allowed. Breakpoints must be monotone; an asymmetric partition only
// draws a warning.
FuzzyPartition load_partition(std::istream& stream,
                              std::vector<std::string>& warnings);

using MembershipVector = std::map<SentimentClass, double>;

// Evaluates every class at the score. Objective has membership 1 iff the
// score is exactly 0, in which case all graded classes read 0.
MembershipVector membership_vector(double score,
                                   const FuzzyPartition& partition);

// Max-membership choice among the three same-sign classes, ties broken
// toward the milder class.
SentimentClass pick_class(const MembershipVector& memberships,
                          bool positive_side);

SentimentClass classify(double score, const FuzzyPartition& partition);

} // namespace sentifuzz
