#pragma once

#include <stdexcept>
#include <string>

namespace deskbert {

// Bad inputs: malformed files, contract violations, impossible requests.
// The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Non-finite losses and other numerical aborts. CLI exit code 3.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace deskbert
