#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vigil {

// All recoverable failures are typed exceptions; the pipeline catches them at
// module boundaries and degrades (skip, Inconclusive, empty result) instead of
// aborting the audit.

class ParseError : public std::runtime_error {
public:
    ParseError(std::string what, std::size_t byte_offset = 0)
        : std::runtime_error(std::move(what)), offset_(byte_offset) {}
    std::size_t byte_offset() const { return offset_; }

private:
    std::size_t offset_;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotFoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SearchUnavailable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ProviderError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidToolCall : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ReplayDivergence : public std::runtime_error {
public:
    ReplayDivergence(std::string what, std::size_t step)
        : std::runtime_error(std::move(what)), step_(step) {}
    std::size_t step() const { return step_; }

private:
    std::size_t step_;
};

class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyDataset : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RefusedOverwrite : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace vigil
