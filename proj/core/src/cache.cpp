#include "tau/cache.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <system_error>
#include <unistd.h>

#include "tau/errors.hpp"

namespace tau::cache {

namespace {

constexpr std::string_view kMagic = "TAUCACHE";

std::string describe(CacheErrorKind kind) {
  switch (kind) {
    case CacheErrorKind::MalformedHeader:
      return "malformed header";
    case CacheErrorKind::VersionMismatch:
      return "version mismatch";
    case CacheErrorKind::Truncated:
      return "truncated file";
    case CacheErrorKind::MalformedRecord:
      return "malformed record";
    case CacheErrorKind::Io:
      return "i/o error";
  }
  return "error";
}

bool parse_size(std::string_view text, std::size_t& out) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

std::size_t read_header(std::istream& in, std::size_t& line_no) {
  std::string line;
  line_no = 1;
  if (!std::getline(in, line)) {
    throw CacheError(CacheErrorKind::MalformedHeader, 1, "empty file");
  }
  const std::string_view head(line);
  if (head.substr(0, kMagic.size()) != kMagic || head.size() < kMagic.size() + 2 ||
      head[kMagic.size()] != ' ') {
    throw CacheError(CacheErrorKind::MalformedHeader, 1, "expected 'TAUCACHE 1'");
  }
  std::size_t version = 0;
  if (!parse_size(head.substr(kMagic.size() + 1), version)) {
    throw CacheError(CacheErrorKind::MalformedHeader, 1, "unreadable version");
  }
  if (version != static_cast<std::size_t>(kFormatVersion)) {
    throw CacheError(CacheErrorKind::VersionMismatch, 1,
                     "format version " + std::to_string(version) + ", expected " +
                         std::to_string(kFormatVersion));
  }
  line_no = 2;
  std::size_t limit = 0;
  if (!std::getline(in, line) || !parse_size(line, limit) || limit == 0) {
    throw CacheError(CacheErrorKind::MalformedHeader, 2, "expected a positive limit");
  }
  return limit;
}

}  // namespace

CacheError::CacheError(CacheErrorKind kind, std::size_t line, const std::string& what)
    : std::runtime_error("TAUCACHE " + describe(kind) +
                         (line ? " at line " + std::to_string(line) : std::string()) + ": " + what),
      kind_(kind),
      line_(line) {}

void write_cache(const TauTable& table, std::ostream& out) {
  out << kMagic << ' ' << kFormatVersion << '\n' << table.limit() << '\n';
  for (std::size_t n = 1; n <= table.limit(); ++n) out << n << ' ' << table[n].get_str(10) << '\n';
  if (!out) throw CacheError(CacheErrorKind::Io, 0, "write failed");
}

TauTable read_cache(std::istream& in) {
  std::size_t line_no = 0;
  const std::size_t limit = read_header(in, line_no);
  std::vector<BigInt> coeffs;
  coeffs.reserve(limit);
  std::string line;
  for (std::size_t n = 1; n <= limit; ++n) {
    ++line_no;
    if (!std::getline(in, line)) {
      throw CacheError(CacheErrorKind::Truncated, line_no,
                       "header promises " + std::to_string(limit) + " records, found " +
                           std::to_string(n - 1));
    }
    const auto space = line.find(' ');
    std::size_t index = 0;
    if (space == std::string::npos || !parse_size(std::string_view(line).substr(0, space), index) ||
        index != n) {
      throw CacheError(CacheErrorKind::MalformedRecord, line_no,
                       "expected record for n = " + std::to_string(n));
    }
    try {
      coeffs.push_back(parse_bigint(std::string_view(line).substr(space + 1)));
    } catch (const DomainError&) {
      throw CacheError(CacheErrorKind::MalformedRecord, line_no, "bad coefficient");
    }
  }
  if (std::getline(in, line)) {
    throw CacheError(CacheErrorKind::MalformedRecord, line_no + 1, "data after the last record");
  }
  return TauTable(std::move(coeffs));
}

void write_cache(const TauTable& table, const std::filesystem::path& path) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError(CacheErrorKind::Io, 0, "cannot open " + tmp.string());
    write_cache(table, out);
    out.flush();
    if (!out) throw CacheError(CacheErrorKind::Io, 0, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw CacheError(CacheErrorKind::Io, 0, "cannot rename into " + path.string() + ": " + ec.message());
  }
}

TauTable read_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheError(CacheErrorKind::Io, 0, "cannot open " + path.string());
  return read_cache(in);
}

std::size_t peek_limit(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheError(CacheErrorKind::Io, 0, "cannot open " + path.string());
  std::size_t line_no = 0;
  return read_header(in, line_no);
}

}  // namespace tau::cache
