#pragma once

#include <stdexcept>
#include <string>

namespace lefschetz {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error { public: using Error::Error; };
class CompositionError : public Error { public: using Error::Error; };
class InvarianceError : public Error { public: using Error::Error; };
class NilpotencyError : public Error { public: using Error::Error; };
class ArgumentError : public Error { public: using Error::Error; };
class ModelError : public Error { public: using Error::Error; };
class PairingError : public Error { public: using Error::Error; };
class Sl2VerificationError : public Error { public: using Error::Error; };
class ShapeError : public Error { public: using Error::Error; };

// Raised when a result fails its own post-condition; always a bug.
class InternalConsistencyError : public Error { public: using Error::Error; };

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line = 0, int column = 0)
        : Error(what), line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace lefschetz
