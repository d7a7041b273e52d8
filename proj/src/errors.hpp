#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace crofton {

// Malformed input files or strings.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Input outside the model's domain (point outside the Klein disk, bad
// Minkowski exponent, duplicate points, disconnected graph, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Configuration has a collinear triple where general position is required.
class NotGeneralPosition : public std::runtime_error {
public:
    NotGeneralPosition(const std::string& what, std::array<int, 3> triple)
        : std::runtime_error(what), triple_(triple) {}
    const std::array<int, 3>& triple() const { return triple_; }

private:
    std::array<int, 3> triple_;
};

// A guaranteed property failed at runtime: sigma below the floor, a
// residual above the hard tolerance, an exhausted perturbation budget.
// Always indicates a bug or a numerically pathological input.
class InvariantError : public std::runtime_error {
public:
    explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace crofton
