#pragma once

#include <stdexcept>
#include <string>

namespace homdist {

enum class Err {
    Cycle,           // relation closure violates antisymmetry
    UnknownElement,  // name does not resolve
    Mismatch,        // incompatible domains/codomains or broken map
    NotConnected,    // operation requires a connected space
    DegreeOutOfRange,
    SizeCap,         // product would exceed the configured vertex cap
    Parse,           // malformed input file
};

class Error : public std::runtime_error {
public:
    Error(Err kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    Err kind() const { return kind_; }

private:
    Err kind_;
};

}  // namespace homdist
