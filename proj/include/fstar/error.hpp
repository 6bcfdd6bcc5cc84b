#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fstar {

// Base for every error the library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad argument or flag value. `field()` names the offending input.
class ValidationError : public Error {
public:
    ValidationError(std::string field, const std::string& message)
        : Error(field.empty() ? message : field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// Malformed file content. `line()` is 1-based.
class ParseError : public Error {
public:
    ParseError(std::string path, std::size_t line, const std::string& message)
        : Error(path + ":" + std::to_string(line) + ": " + message),
          path_(std::move(path)), line_(line) {}

    const std::string& path() const noexcept { return path_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::string path_;
    std::size_t line_;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace fstar
