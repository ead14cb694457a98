#pragma once

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ckn {

// Little-endian binary file helpers shared by the model/descriptor/codebook
// containers. Hosts are assumed little-endian (x86/ARM).

inline void io_fail(const std::string& path, const std::string& what) {
  throw std::runtime_error(path + ": " + what);
}

inline std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) io_fail(path, "cannot open for writing");
  return out;
}

inline std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) io_fail(path, "cannot open for reading");
  return in;
}

template <typename T>
void write_pod(std::ostream& out, const T& v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T read_pod(std::istream& in, const std::string& path) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) io_fail(path, "truncated file");
  return v;
}

inline void write_magic(std::ostream& out, const char magic[4]) {
  out.write(magic, 4);
}

inline void expect_magic(std::istream& in, const char magic[4],
                         const std::string& path) {
  char got[4] = {0, 0, 0, 0};
  in.read(got, 4);
  if (!in || std::memcmp(got, magic, 4) != 0)
    io_fail(path, std::string("bad magic, expected ") + std::string(magic, 4));
}

template <typename T>
void write_array(std::ostream& out, const T* data, std::size_t n) {
  out.write(reinterpret_cast<const char*>(data), sizeof(T) * n);
}

template <typename T>
void read_array(std::istream& in, T* data, std::size_t n,
                const std::string& path) {
  in.read(reinterpret_cast<char*>(data), sizeof(T) * n);
  if (!in) io_fail(path, "truncated file");
}

}  // namespace ckn
