#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thetakit {

// Invalid construction parameters; the message names the violated constraint.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Input too large for an exhaustive routine.
class SizeRefusal : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace thetakit
