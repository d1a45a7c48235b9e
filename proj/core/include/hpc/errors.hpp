#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace hpc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MalformedVertex : public Error {
public:
    using Error::Error;
};

class ParameterError : public Error {
public:
    using Error::Error;
};

class Unsupported : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

// Raised while interpreting a recipe. path() names the offending node, e.g. "flaass-std/splitI-base".
class RecipeError : public Error {
public:
    RecipeError(std::string path, const std::string& what)
        : Error("recipe-invalid at " + (path.empty() ? std::string("<root>") : path) + ": " + what),
          path_(std::move(path)) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

class NotPerfect : public Error {
public:
    NotPerfect(std::uint64_t rank, const std::string& what) : Error(what), rank_(rank) {}
    std::uint64_t witness_rank() const noexcept { return rank_; }

private:
    std::uint64_t rank_;
};

class NoPartition : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace hpc

namespace hpc {

// Weight-distribution recurrence produced a negative or fractional value.
class Infeasible : public Error {
public:
    using Error::Error;
};

}  // namespace hpc
