#include "gr/common.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace gr {

namespace {

template <class T>
T byteswap_if_be(T v) {
  if constexpr (std::endian::native == std::endian::big) {
    auto* p = reinterpret_cast<unsigned char*>(&v);
    for (std::size_t i = 0; i < sizeof(T) / 2; ++i) std::swap(p[i], p[sizeof(T) - 1 - i]);
  }
  return v;
}

}  // namespace

void write_bytes(std::ostream& os, const void* data, std::size_t n) {
  os.write(static_cast<const char*>(data), static_cast<std::streamsize>(n));
}

void write_u16le(std::ostream& os, std::uint16_t v) {
  v = byteswap_if_be(v);
  write_bytes(os, &v, 2);
}

void write_u32le(std::ostream& os, std::uint32_t v) {
  v = byteswap_if_be(v);
  write_bytes(os, &v, 4);
}

void write_f32le(std::ostream& os, float v) {
  std::uint32_t bits;
  std::memcpy(&bits, &v, 4);
  write_u32le(os, bits);
}

void read_bytes(std::istream& is, void* data, std::size_t n, const std::string& what) {
  is.read(static_cast<char*>(data), static_cast<std::streamsize>(n));
  if (static_cast<std::size_t>(is.gcount()) != n) {
    throw DataError("truncated read while parsing " + what);
  }
}

std::uint16_t read_u16le(std::istream& is, const std::string& what) {
  std::uint16_t v;
  read_bytes(is, &v, 2, what);
  return byteswap_if_be(v);
}

std::uint32_t read_u32le(std::istream& is, const std::string& what) {
  std::uint32_t v;
  read_bytes(is, &v, 4, what);
  return byteswap_if_be(v);
}

float read_f32le(std::istream& is, const std::string& what) {
  std::uint32_t bits = read_u32le(is, what);
  float v;
  std::memcpy(&v, &bits, 4);
  return v;
}

double pairwise_sum(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  if (xs.size() <= 8) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
  }
  std::size_t mid = xs.size() / 2;
  return pairwise_sum(xs.subspan(0, mid)) + pairwise_sum(xs.subspan(mid));
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw DataError("cannot open file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw DataError("cannot open file for writing: " + path);
  f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!f) throw DataError("write failed: " + path);
}

}  // namespace gr
