#include "esf/support/errors.hpp"

namespace esf {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Io: return 10;
    case ErrorKind::Schema: return 11;
    case ErrorKind::Crypto: return 12;
    case ErrorKind::Auth: return 13;
    case ErrorKind::Routing: return 14;
    case ErrorKind::Precondition: return 15;
    case ErrorKind::Invariant: return 16;
    case ErrorKind::Parse: return 17;
    case ErrorKind::NotFound: return 18;
  }
  return 1;
}

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Io: return "io";
    case ErrorKind::Schema: return "schema";
    case ErrorKind::Crypto: return "crypto";
    case ErrorKind::Auth: return "auth";
    case ErrorKind::Routing: return "routing";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Invariant: return "invariant";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::NotFound: return "not-found";
  }
  return "error";
}

}  // namespace esf
