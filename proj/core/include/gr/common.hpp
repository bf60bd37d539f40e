#pragma once

#include <cstdint>
#include <cstring>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gr {

/// Base class for all workbench errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid configuration (bad field values, missing sections). CLI exit code 2.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

/// Malformed or inconsistent input data (parse failures, dangling ids,
/// missing upstream artifacts). CLI exit code 3.
class DataError : public Error {
 public:
  explicit DataError(const std::string& msg) : Error(msg) {}
};

/// Numerical failure (non-finite loss or gradient, divergence). CLI exit code 4.
class NumericError : public Error {
 public:
  explicit NumericError(const std::string& msg) : Error(msg) {}
};

// ---------------------------------------------------------------------------
// Little-endian binary IO. All on-disk formats are little-endian regardless
// of host order.

void write_u16le(std::ostream& os, std::uint16_t v);
void write_u32le(std::ostream& os, std::uint32_t v);
void write_f32le(std::ostream& os, float v);
void write_bytes(std::ostream& os, const void* data, std::size_t n);

std::uint16_t read_u16le(std::istream& is, const std::string& what);
std::uint32_t read_u32le(std::istream& is, const std::string& what);
float read_f32le(std::istream& is, const std::string& what);
void read_bytes(std::istream& is, void* data, std::size_t n, const std::string& what);

// ---------------------------------------------------------------------------

/// FNV-1a 64-bit. Used wherever a platform-stable string hash is needed
/// (std::hash is not stable across implementations).
constexpr std::uint64_t fnv1a64(std::string_view s,
                                std::uint64_t h = 0xcbf29ce484222325ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

/// Pairwise (cascade) summation in fixed order; deterministic and better
/// conditioned than a running sum.
double pairwise_sum(std::span<const double> xs);

/// Reads a whole file; throws DataError if it cannot be opened.
std::string read_file(const std::string& path);

/// Writes a whole file; throws DataError on failure.
void write_file(const std::string& path, std::string_view contents);

}  // namespace gr
