#ifndef EMIS2D_ERRORS_HPP
#define EMIS2D_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace emis {

// Invalid imaging configuration or run configuration (exit code 1 at the CLI).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent input data such as CSV/measurement files (exit code 2).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical breakdown: singular systems, divergence, non-finite losses (exit code 3).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace emis

#endif
