// errors.hpp
#ifndef METRISCOPE_ERRORS_HPP
#define METRISCOPE_ERRORS_HPP

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace metriscope {

/// Base of every error raised by the library. Callers that only want a
/// message can catch this; the CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DuplicateClass : public Error {
public:
    explicit DuplicateClass(std::string name)
        : Error("duplicate class: " + name), name_(std::move(name)) {}
    const std::string &name() const { return name_; }

private:
    std::string name_;
};

class InheritanceCycle : public Error {
public:
    explicit InheritanceCycle(std::vector<std::string> path);
    const std::vector<std::string> &path() const { return path_; }

private:
    std::vector<std::string> path_;
};

class UnknownClass : public Error {
public:
    explicit UnknownClass(const std::string &name) : Error("unknown class: " + name) {}
};

class SyntaxError : public Error {
public:
    SyntaxError(std::string path, int line, std::vector<std::string> expected);
    int line() const { return line_; }
    const std::vector<std::string> &expected() const { return expected_; }

private:
    int line_;
    std::vector<std::string> expected_;
};

class EncodingError : public Error {
public:
    EncodingError(const std::string &path, std::size_t offset)
        : Error(path + ": invalid UTF-8 at byte " + std::to_string(offset)) {}
};

class UnbalancedBlock : public Error {
public:
    explicit UnbalancedBlock(int line)
        : Error("unbalanced block starting at line " + std::to_string(line)), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class MalformedGraph : public Error {
public:
    using Error::Error;
};

class DegenerateSystem : public Error {
public:
    using Error::Error;
};

class EmptyModel : public Error {
public:
    EmptyModel() : Error("model contains no system classes") {}
};

/// A metric whose precondition does not hold (e.g. LCOM-HS on one method).
class Undefined : public Error {
public:
    Undefined(const std::string &metric, const std::string &reason)
        : Error(metric + " undefined: " + reason) {}
};

class MissingProperty : public Error {
public:
    using Error::Error;
};

class UnknownMnemonic : public Error {
public:
    explicit UnknownMnemonic(const std::string &m) : Error("unknown mnemonic: " + m) {}
};

class MissingMetric : public Error {
public:
    explicit MissingMetric(const std::string &m) : Error("missing metric: " + m) {}
};

class DomainError : public Error {
public:
    using Error::Error;
};

class BadRange : public Error {
public:
    BadRange(int j, int k)
        : Error("bad version range [" + std::to_string(j) + ", " + std::to_string(k) + "]") {}
};

class DegenerateBaseline : public Error {
public:
    using Error::Error;
};

class BaselineMismatch : public Error {
public:
    BaselineMismatch() : Error("builds were scored against different baselines") {}
};

class NoInput : public Error {
public:
    explicit NoInput(const std::string &what) : Error("no input: " + what) {}
};

class ConfigError : public Error {
public:
    ConfigError(int line, const std::string &msg)
        : Error("config line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class WrongAxisCount : public Error {
public:
    explicit WrongAxisCount(std::size_t n)
        : Error("kiviat chart needs 13 axes, got " + std::to_string(n)) {}
};

} // namespace metriscope

#endif // METRISCOPE_ERRORS_HPP
