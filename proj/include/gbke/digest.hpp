#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gbke {

using Digest = std::array<std::uint8_t, 32>;

/// Incremental SHA-256 (FIPS 180-4).
class Sha256 {
 public:
  Sha256();
  ~Sha256();
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;

  Sha256& update(std::span<const std::uint8_t> bytes);
  Sha256& update(std::string_view s);
  Digest finish();

 private:
  void* ctx_;
};

Digest sha256(std::span<const std::uint8_t> bytes);
Digest sha256(std::string_view s);

std::string to_hex(std::span<const std::uint8_t> bytes);
/// Throws DomainError on odd length or non-hex characters.
std::vector<std::uint8_t> from_hex(std::string_view hex);

/// Packs a '0'/'1' string MSB-first into bytes, zero-padding the last byte.
std::vector<std::uint8_t> pack_bits(std::string_view bits);

/// eta: SHA-256("GBKE-ETA" || packed eta_raw).
Digest eta_digest(std::string_view eta_raw);
/// tau: SHA-256("GBKE-TAU" || key_bytes).
Digest tau_digest(const Digest& key_bytes);

}  // namespace gbke
