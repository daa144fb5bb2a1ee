// errors.hpp
// Error taxonomy for the toolkit. Input-level problems (arity, shape,
// domain, contract, parse) are distinct from integrity errors (a broken
// internal invariant) and from counterexample-class failures (a proven
// theorem violated on certified input, which means a kernel bug).
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fixlocus {

struct ArityError : std::runtime_error {
    explicit ArityError(const std::string& what) : std::runtime_error(what) {}
};

struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A documented precondition of an operation was violated by the caller.
struct ContractError : std::runtime_error {
    explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed; the kernel itself is suspect.
struct IntegrityError : std::runtime_error {
    explicit IntegrityError(const std::string& what) : std::runtime_error(what) {}
};

// A machine-checked theorem failed on certified input.
struct CounterexampleError : std::runtime_error {
    explicit CounterexampleError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    std::size_t line;
    std::size_t column;
    ParseError(std::size_t line_, std::size_t col_, const std::string& what)
        : std::runtime_error(std::to_string(line_) + ":" + std::to_string(col_) + ": " + what),
          line(line_),
          column(col_) {}
};

}  // namespace fixlocus
