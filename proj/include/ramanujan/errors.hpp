#pragma once

#include <stdexcept>
#include <string>

namespace ramanujan {

// Thrown when an operation would exceed a configured resource budget
// (memory cap, search ceiling).  CLI maps this to exit status 3.
class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ramanujan
