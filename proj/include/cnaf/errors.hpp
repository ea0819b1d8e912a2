#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cnaf {

// Syntax error in a formula or framework file. `offset` is a byte offset
// into the parsed text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Raised when an enumeration would exceed the configured atom/argument cap.
class SizeCapError : public std::runtime_error {
public:
    SizeCapError(const std::string& what, std::size_t size, std::size_t cap)
        : std::runtime_error(what + ": size " + std::to_string(size) +
                             " exceeds cap " + std::to_string(cap)),
          size_(size), cap_(cap) {}

    std::size_t size() const { return size_; }
    std::size_t cap() const { return cap_; }

private:
    std::size_t size_;
    std::size_t cap_;
};

// Semantic misuse of the library: unknown atom, non-flat input where a flat
// formula is required, inconsistent theory passed to an operation that
// requires consistency, and the like.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace cnaf
