#pragma once

#include <stdexcept>
#include <string>

namespace qti {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class NotAPrimePower : public Error {
public:
    explicit NotAPrimePower(const std::string& msg) : Error(msg) {}
};

class ShapeMismatch : public Error {
public:
    explicit ShapeMismatch(const std::string& msg) : Error(msg) {}
};

class FieldMismatch : public Error {
public:
    explicit FieldMismatch(const std::string& msg) : Error(msg) {}
};

class BadDimension : public Error {
public:
    explicit BadDimension(const std::string& msg) : Error(msg) {}
};

class BadArgs : public Error {
public:
    explicit BadArgs(const std::string& msg) : Error(msg) {}
};

class NotAlternating : public Error {
public:
    explicit NotAlternating(const std::string& msg) : Error(msg) {}
};

class RankDeficient : public Error {
public:
    explicit RankDeficient(const std::string& msg) : Error(msg) {}
};

class InvalidStratum : public Error {
public:
    explicit InvalidStratum(const std::string& msg) : Error(msg) {}
};

/// Thrown when a brute-force enumeration would exceed the feasibility guard.
class TooLarge : public Error {
public:
    TooLarge(const std::string& msg, const std::string& estimated_cost)
        : Error(msg + " (estimated cost " + estimated_cost + ")"),
          estimated_cost_(estimated_cost) {}
    const std::string& estimated_cost() const { return estimated_cost_; }

private:
    std::string estimated_cost_;
};

class LoopEdge : public Error {
public:
    explicit LoopEdge(const std::string& msg) : Error(msg) {}
};

class DuplicateEdge : public Error {
public:
    explicit DuplicateEdge(const std::string& msg) : Error(msg) {}
};

class VertexOutOfRange : public Error {
public:
    explicit VertexOutOfRange(const std::string& msg) : Error(msg) {}
};

/// Input file / JSON errors; carries source name and 1-based line when known.
class ParseError : public Error {
public:
    ParseError(const std::string& source, int line, const std::string& msg)
        : Error(source + ":" + std::to_string(line) + ": " + msg),
          source_(source), line_(line) {}
    ParseError(const std::string& source, const std::string& msg)
        : Error(source + ": " + msg), source_(source), line_(0) {}
    const std::string& source() const { return source_; }
    int line() const { return line_; }

private:
    std::string source_;
    int line_;
};

}  // namespace qti
