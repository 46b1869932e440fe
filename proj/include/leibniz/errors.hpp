#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace leibniz {

// Malformed input: bad files, dimension mismatches, violated call contracts.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A mathematical precondition was checked and failed (e.g. an invalid
// representation handed to a construction that requires a valid one).
class CheckFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Something that must hold for every valid input did not. Always a bug or a
// counterexample worth reporting.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Refusal to build a cochain space larger than the configured cap.
class ResourceLimitError : public std::runtime_error {
public:
    ResourceLimitError(std::size_t requested, std::size_t cap)
        : std::runtime_error("cochain space of dimension " + std::to_string(requested) +
                             " exceeds the resource cap " + std::to_string(cap)),
          requested_(requested),
          cap_(cap) {}

    std::size_t requested() const noexcept { return requested_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t requested_;
    std::size_t cap_;
};

}  // namespace leibniz
