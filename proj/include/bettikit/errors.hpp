#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bettikit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyDiagram : public Error {
public:
    EmptyDiagram() : Error("empty Betti diagram") {}
};

class InvalidDiagram : public Error {
public:
    using Error::Error;
};

class NegativeEntry : public Error {
public:
    NegativeEntry(int i, int j)
        : Error("entry (" + std::to_string(i) + "," + std::to_string(j) + ") would become negative"),
          i_(i), j_(j) {}
    int homological() const { return i_; }
    int degree() const { return j_; }

private:
    int i_;
    int j_;
};

class InvalidDegreeSequence : public Error {
public:
    using Error::Error;
};

/// A repeated value makes a Herzog-Kuhl factor divide by zero.
class DegenerateSequence : public Error {
public:
    using Error::Error;
};

class NotApplicable : public Error {
public:
    using Error::Error;
};

/// A Koszul strand exceeded the configured cell budget.
class TooLarge : public Error {
public:
    TooLarge(int i, int j, std::size_t cells, std::size_t budget)
        : Error("strand (" + std::to_string(i) + "," + std::to_string(j) + ") needs " +
                std::to_string(cells) + " matrix cells, budget is " + std::to_string(budget)),
          i_(i), j_(j), cells_(cells) {}
    int homological() const { return i_; }
    int degree() const { return j_; }
    std::size_t cells() const { return cells_; }

private:
    int i_;
    int j_;
    std::size_t cells_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    /// 1-based line number, 0 when not tied to a line.
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace bettikit
