#pragma once

#include <stdexcept>
#include <string>

namespace ccat {

/// Violated precondition or invariant on mathematical input.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A dimension, size or search budget is too small to decide the question.
/// Kept distinct from a mathematical negative answer.
class CapError : public std::runtime_error {
public:
    explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed external input (JSON files, CLI arguments).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ccat
