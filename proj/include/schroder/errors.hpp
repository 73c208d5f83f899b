#pragma once

#include <stdexcept>
#include <string>

namespace schroder {

// Error taxonomy. Everything derives from Error so callers can catch broadly;
// the CLI maps the leaf types onto exit codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Domain violations: invalid argument values, rank mismatches, unknown methods.
struct DomainError : Error {
  using Error::Error;
};

// Enumeration or degree request beyond the configured cap.
struct SizeLimitError : Error {
  using Error::Error;
};

// Malformed textual input; position is a 0-based byte offset into the input.
struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

// p is not finer than s where a refinement order relation is required.
struct OrderError : Error {
  using Error::Error;
};

// Filesystem trouble: unreadable or unwritable paths.
struct IoError : Error {
  using Error::Error;
};

// A functional was queried on a word its table does not cover.
struct MissingMomentError : Error {
  std::string word;
  explicit MissingMomentError(const std::string& word_text)
      : Error("missing moment entry for word \"" + word_text + "\""), word(word_text) {}
};

}  // namespace schroder
