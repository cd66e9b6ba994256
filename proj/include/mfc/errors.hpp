#pragma once
/**
 * @file errors.hpp
 * @brief Exception hierarchy mapped to CLI exit codes.
 */
#include <stdexcept>
#include <string>

namespace mfc {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad user input: malformed JSON, axiom violations, unsupported sizes.
/// CLI exit code 2.
class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what) : Error(what) {}
};

/// The pipeline contradicted itself (e.g. a verified matrix identity has no
/// rational phase). Indicates a bug or numerically hostile input. Exit code 3.
class InternalInconsistency : public Error {
 public:
  explicit InternalInconsistency(const std::string& what) : Error(what) {}
};

}  // namespace mfc
