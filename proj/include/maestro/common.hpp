#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace maestro {

// Error taxonomy shared by all modules. Contract violations are programmer
// errors at call sites; validation/data/config errors come from inputs.
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TransportError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TrainingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// FNV-1a 64-bit, used for config hashes and the mock client's response
// derivation. Not cryptographic.
inline std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string to_hex(std::uint64_t value);

}  // namespace maestro
