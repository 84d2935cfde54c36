#pragma once

#include <stdexcept>
#include <string>

namespace dilute1d {

// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error { public: using Error::Error; };
class InvalidRadius : public Error { public: using Error::Error; };
class InvalidScale : public Error { public: using Error::Error; };
class InvalidTrial : public Error { public: using Error::Error; };
class InternalError : public Error { public: using Error::Error; };
class ConvergenceError : public Error { public: using Error::Error; };
class ResolutionError : public Error { public: using Error::Error; };
class AccuracyError : public Error { public: using Error::Error; };
class OutOfRegime : public Error { public: using Error::Error; };
class IoError : public Error { public: using Error::Error; };

class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace dilute1d
