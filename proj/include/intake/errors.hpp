#pragma once

#include <stdexcept>
#include <string>

namespace intake {

// Raised for any rejected input: invalid domain values, malformed files,
// violated preconditions. The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace intake
