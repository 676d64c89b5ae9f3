#pragma once

#include <stdexcept>
#include <string>

namespace tfseg {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidArgument : public Error { public: using Error::Error; };

/// Input data violates a precondition (non-finite pixels, bad ranges).
class InvalidInput : public Error { public: using Error::Error; };

class UnsupportedBackend : public Error { public: using Error::Error; };

/// Raised when the initial candidate set is empty (nothing to segment).
class NoCandidates : public Error { public: using Error::Error; };

class IterationCapExceeded : public Error { public: using Error::Error; };

class OracleScaleExceeded : public Error { public: using Error::Error; };

class IoError : public Error { public: using Error::Error; };

class TruncatedPayload : public IoError { public: using IoError::IoError; };

/// Malformed file headers and config parse failures.
class FormatError : public IoError { public: using IoError::IoError; };

} // namespace tfseg
