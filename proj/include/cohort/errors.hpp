#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cohort {

// Base class for all domain failures surfaced to users.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text. line is 1-based; 0 means unknown.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// One location examined during a version search.
struct SearchedLocation {
    std::string where;
    std::string versions_seen;  // human readable, may be empty
};

// A package or version could not be located; carries everywhere we looked.
class NotFoundError : public Error {
public:
    explicit NotFoundError(const std::string& msg, std::vector<SearchedLocation> searched = {})
        : Error(compose(msg, searched)), searched_(std::move(searched)) {}

    const std::vector<SearchedLocation>& searched() const noexcept { return searched_; }

private:
    static std::string compose(const std::string& msg, const std::vector<SearchedLocation>& s) {
        if (s.empty()) return msg;
        std::string r = msg + "; searched:";
        for (const auto& loc : s) {
            r += "\n  " + loc.where;
            if (!loc.versions_seen.empty()) r += " (versions seen: " + loc.versions_seen + ")";
        }
        return r;
    }

    std::vector<SearchedLocation> searched_;
};

// The dependency graph contains a cycle.
class CycleError : public Error {
public:
    explicit CycleError(std::vector<std::string> names)
        : Error(compose(names)), names_(std::move(names)) {}

    const std::vector<std::string>& names() const noexcept { return names_; }

private:
    static std::string compose(const std::vector<std::string>& names) {
        std::string r = "dependency cycle involving:";
        for (const auto& n : names) r += " " + n;
        return r;
    }

    std::vector<std::string> names_;
};

class IoError : public Error {
public:
    using Error::Error;
};

// Bad invocation (CLI flags, config); maps to exit code 2.
class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace cohort
