#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lenum {

// Malformed polynomial text. `pos` is a 0-based offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error(what + " (at column " + std::to_string(pos + 1) + ")"),
          pos_(pos) {}
    std::size_t pos() const { return pos_; }

private:
    std::size_t pos_;
};

// Input rejected by a precondition (bad germ, invalid option, hypothesis gate).
class InvalidInput : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computation could not reach a verdict (stabilization failure, exhausted
// horizon, negative Le number).
class ComputationError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A structural invariant the library maintains was violated. Always a bug.
class InternalError : public std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace lenum
