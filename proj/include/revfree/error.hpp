#pragma once

#include <stdexcept>
#include <string>

namespace revfree {

/// A caller violated an operation's documented precondition.
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input exceeds a fixed capacity guard (permanent side, vertex count, ...).
class capacity_error : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A row of a word matrix does not hold exactly one 1-entry.
class malformed_word_matrix : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A checked mathematical guarantee did not hold. Always a bug.
class invariant_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
    if (!condition) throw precondition_error(message);
}

inline void ensure(bool condition, const std::string& message) {
    if (!condition) throw invariant_violation(message);
}

}  // namespace detail

}  // namespace revfree
