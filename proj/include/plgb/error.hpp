#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plgb {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. `position` is a byte offset into the parsed string.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A precondition on degrees or homogeneity does not hold.
class DegreeError : public Error {
public:
    using Error::Error;
};

/// A configured degree/term/seed cap was exceeded.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

/// A linear-algebra consistency check failed; always signals a bug.
class RankDefect : public Error {
public:
    using Error::Error;
};

} // namespace plgb
