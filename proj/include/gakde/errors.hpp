#ifndef GAKDE_ERRORS_HPP
#define GAKDE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gakde {

// Thrown when the CV criterion has no valid test/train pair (C = 0).
class DegenerateFitnessError : public std::runtime_error {
public:
    explicit DegenerateFitnessError(const std::string& what)
        : std::runtime_error(what) {}
};

// Thrown when a bandwidth reference scale cannot be formed because the
// data has zero spread in every marginal.
class ZeroSpreadError : public std::runtime_error {
public:
    explicit ZeroSpreadError(const std::string& what)
        : std::runtime_error(what) {}
};

class UnsupportedDimensionError : public std::runtime_error {
public:
    explicit UnsupportedDimensionError(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace gakde

#endif
