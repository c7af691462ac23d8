#pragma once

#include <stdexcept>
#include <string>

namespace sentifuzz {

// Error for any line-oriented input (lexicon, corpus, config files).
// Carries the 1-based line number of the offending line; line 0 means
// the location is not line-addressable.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error(line > 0
              ? "line " + std::to_string(line) + ": " + message
              : message),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

} // namespace sentifuzz
