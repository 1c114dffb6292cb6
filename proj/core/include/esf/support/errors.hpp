#pragma once

#include <stdexcept>
#include <string>

namespace esf {

/// Failure category. Every category maps to a distinct CLI exit code so
/// callers of the tool can script against outcomes.
enum class ErrorKind {
  Io,
  Schema,
  Crypto,
  Auth,
  Routing,
  Precondition,
  Invariant,
  Parse,
  NotFound,
};

/// Exit code contract: 0 success, 2 usage (reserved for the CLI parser),
/// then one code per ErrorKind starting at 10.
int exit_code_for(ErrorKind kind);

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct IoError : Error {
  explicit IoError(std::string m) : Error(ErrorKind::Io, std::move(m)) {}
};
struct SchemaError : Error {
  explicit SchemaError(std::string m) : Error(ErrorKind::Schema, std::move(m)) {}
};
struct CryptoError : Error {
  explicit CryptoError(std::string m) : Error(ErrorKind::Crypto, std::move(m)) {}
};
struct AuthError : Error {
  explicit AuthError(std::string m) : Error(ErrorKind::Auth, std::move(m)) {}
};
struct RoutingError : Error {
  explicit RoutingError(std::string m) : Error(ErrorKind::Routing, std::move(m)) {}
};
struct PreconditionError : Error {
  explicit PreconditionError(std::string m) : Error(ErrorKind::Precondition, std::move(m)) {}
};
struct InvariantError : Error {
  explicit InvariantError(std::string m) : Error(ErrorKind::Invariant, std::move(m)) {}
};
struct ParseError : Error {
  explicit ParseError(std::string m) : Error(ErrorKind::Parse, std::move(m)) {}
};
struct NotFoundError : Error {
  explicit NotFoundError(std::string m) : Error(ErrorKind::NotFound, std::move(m)) {}
};

}  // namespace esf
