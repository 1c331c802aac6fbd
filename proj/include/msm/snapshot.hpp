#pragma once

// Binary field snapshots.
//
// Layout (little-endian): "MSMF", u32 version, u32 n, f64 length, u32 count,
// then count fields of n*n (re, im) f64 pairs in row-major order.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "msm/spectral.hpp"

namespace msm {

inline constexpr std::uint32_t kSnapshotVersion = 1;

void write_snapshot(std::ostream& out, std::span<const ComplexField> fields);
void write_snapshot(const std::filesystem::path& path, std::span<const ComplexField> fields);

/// Throws std::runtime_error on a bad magic, version, or truncated payload.
std::vector<ComplexField> read_snapshot(std::istream& in);
std::vector<ComplexField> read_snapshot(const std::filesystem::path& path);

}  // namespace msm
