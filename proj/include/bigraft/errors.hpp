#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bigraft {

// An operation was applied outside its mathematical domain.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configured size bound would be exceeded.
class BoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

void check_bound(std::size_t value, std::size_t bound, const char* what);

}  // namespace bigraft
