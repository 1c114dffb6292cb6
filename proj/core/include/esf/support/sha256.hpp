#pragma once

#include <memory>
#include <string>

#include "esf/support/bytes.hpp"

namespace esf {

/// Streaming SHA-256 (libcrypto-backed). Use for extraction receipts and
/// content addressing of downloaded media.
class Sha256 {
 public:
  Sha256();
  ~Sha256();
  Sha256(Sha256&&) noexcept;
  Sha256& operator=(Sha256&&) noexcept;
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;

  void update(ByteView data);
  /// Finalizes and returns the lowercase hex digest. The object must not be
  /// updated afterwards.
  std::string hex_digest();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::string sha256_hex(ByteView data);
std::string sha256_hex(std::string_view data);

}  // namespace esf
