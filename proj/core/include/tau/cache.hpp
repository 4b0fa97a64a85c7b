#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "tau/series.hpp"

// TAUCACHE text format, version 1:
//
//   TAUCACHE 1
//   <N>
//   1 1
//   2 -24
//   ...
//   <N> <tau(N)>
//
// Lines end in a single '\n'; no trailing blank lines.
namespace tau::cache {

enum class CacheErrorKind { MalformedHeader, VersionMismatch, Truncated, MalformedRecord, Io };

class CacheError : public std::runtime_error {
 public:
  CacheError(CacheErrorKind kind, std::size_t line, const std::string& what);
  CacheErrorKind kind() const noexcept { return kind_; }
  // 1-based line number the problem was detected on (0 when not applicable).
  std::size_t line() const noexcept { return line_; }

 private:
  CacheErrorKind kind_;
  std::size_t line_;
};

inline constexpr int kFormatVersion = 1;

void write_cache(const TauTable& table, std::ostream& out);
TauTable read_cache(std::istream& in);

// Writes to a sibling temporary file and renames it into place.
void write_cache(const TauTable& table, const std::filesystem::path& path);
TauTable read_cache(const std::filesystem::path& path);

// Reads only the header; returns the stored limit.
std::size_t peek_limit(const std::filesystem::path& path);

}  // namespace tau::cache
