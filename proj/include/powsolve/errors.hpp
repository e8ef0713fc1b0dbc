#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace powsolve {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegreeError : public Error {
public:
    using Error::Error;
};

/// Q(sqrt(a)) and Q(sqrt(b)) values were mixed in one expression.
class FieldMismatch : public Error {
public:
    using Error::Error;
};

/// D1 vanishes and no pre-transform could restore the pivot.
class PivotError : public Error {
public:
    using Error::Error;
};

class CenterRankError : public Error {
public:
    CenterRankError(int rank, const std::string& what) : Error(what), rank_(rank) {}
    int rank() const noexcept { return rank_; }

private:
    int rank_;
};

class RepeatedEigenvalue : public Error {
public:
    using Error::Error;
};

class NotDiagonalizable : public Error {
public:
    using Error::Error;
};

class IrrationalSpectrum : public Error {
public:
    using Error::Error;
};

/// The binary form has a trivial center; completing powers does not apply.
class NoRadicalMethod : public Error {
public:
    using Error::Error;
};

class ResolventFailure : public Error {
public:
    using Error::Error;
};

class NonConvergence : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, int line, int column, std::vector<std::string> expected = {});

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    int line_;
    int column_;
    std::vector<std::string> expected_;
};

}  // namespace powsolve
