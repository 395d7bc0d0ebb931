#pragma once

// Flat prefix cache file:
//
//   offset  size  field
//   0       4     magic "ARSH"
//   4       1     version (1)
//   5       4     order n, little-endian
//   9       8     length, little-endian
//   17      len   one letter per byte, each < n

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>

#include "arshon/word.hpp"

namespace arshon {

inline constexpr char cache_magic[4] = {'A', 'R', 'S', 'H'};
inline constexpr std::uint8_t cache_version = 1;
inline constexpr std::size_t cache_header_size = 17;

void write_prefix_cache(std::ostream& os, const FiniteWord& word);

/// Throws Errc::cache_format on a bad header, truncated payload, trailing
/// bytes or an out-of-range letter.
FiniteWord read_prefix_cache(std::istream& is);

FiniteWord load_prefix_cache(const std::filesystem::path& path);
/// Throws std::runtime_error on I/O failure.
void save_prefix_cache(const std::filesystem::path& path, const FiniteWord& word);

std::filesystem::path cache_file_for(const std::filesystem::path& dir, Alphabet alphabet);

/// First `length` letters of a_n, served from `cache_dir` when it holds a
/// long enough prefix and written back there otherwise. Cache problems are
/// reported on `diag` and never fail the call.
FiniteWord obtain_prefix(Alphabet alphabet, std::size_t length,
                         const std::optional<std::filesystem::path>& cache_dir, std::ostream& diag);

} // namespace arshon
