#include "msm/snapshot.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace msm {
namespace {

constexpr std::array<char, 4> kMagic = {'M', 'S', 'M', 'F'};

template <typename T>
void put(std::ostream& out, T value) {
  auto bytes = std::bit_cast<std::array<char, sizeof(T)>>(value);
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  out.write(bytes.data(), bytes.size());
}

template <typename T>
T get(std::istream& in) {
  std::array<char, sizeof(T)> bytes{};
  if (!in.read(bytes.data(), bytes.size())) throw std::runtime_error("snapshot truncated");
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  return std::bit_cast<T>(bytes);
}

}  // namespace

void write_snapshot(std::ostream& out, std::span<const ComplexField> fields) {
  if (fields.empty()) throw std::invalid_argument("snapshot needs at least one field");
  const Grid& grid = fields[0].grid();
  out.write(kMagic.data(), kMagic.size());
  put<std::uint32_t>(out, kSnapshotVersion);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(grid.n()));
  put<double>(out, grid.length());
  put<std::uint32_t>(out, static_cast<std::uint32_t>(fields.size()));
  for (const auto& f : fields) {
    require_same_grid(grid, f.grid());
    for (const auto& v : f.samples()) {
      put<double>(out, v.real());
      put<double>(out, v.imag());
    }
  }
  if (!out) throw std::runtime_error("snapshot write failed");
}

void write_snapshot(const std::filesystem::path& path, std::span<const ComplexField> fields) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_snapshot(out, fields);
}

std::vector<ComplexField> read_snapshot(std::istream& in) {
  std::array<char, 4> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) {
    throw std::runtime_error("not a field snapshot (bad magic)");
  }
  const auto version = get<std::uint32_t>(in);
  if (version != kSnapshotVersion) {
    throw std::runtime_error("unsupported snapshot version " + std::to_string(version));
  }
  const auto n = get<std::uint32_t>(in);
  const auto length = get<double>(in);
  const auto count = get<std::uint32_t>(in);
  const Grid grid(n, length);
  std::vector<ComplexField> fields;
  fields.reserve(count);
  for (std::uint32_t c = 0; c < count; ++c) {
    std::vector<Complex> samples(grid.size());
    for (auto& v : samples) {
      const double re = get<double>(in);
      const double im = get<double>(in);
      v = Complex(re, im);
    }
    fields.push_back(ComplexField::from_samples(grid, std::move(samples)));
  }
  return fields;
}

std::vector<ComplexField> read_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_snapshot(in);
}

}  // namespace msm
