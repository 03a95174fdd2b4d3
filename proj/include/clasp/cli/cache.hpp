#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "clasp/cassongordon/casson_gordon.hpp"

namespace clasp {

/// Canonical on-disk form of a table: pretty JSON with the key fields
/// (a, signed b, p, library version) and the values as "num/den".
std::string serialize_table(const CgTable& t);
/// Throws Error{ParseError} on malformed input or a version mismatch.
CgTable parse_table(std::string_view text);

/// Directory-backed memo of sigma tables, keyed by (a, b, p, version).
class TableCache {
 public:
  explicit TableCache(std::filesystem::path dir);

  /// $CLASP_CACHE_DIR, else $XDG_CACHE_HOME/clasp, else ~/.cache/clasp,
  /// else ./.clasp-cache.
  static std::filesystem::path default_dir();

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path entry_path(const Summand& s, int p) const;

  /// Reads a valid entry, or computes the table and stores it. Write
  /// failures leave the result unaffected.
  CgTable get(const Summand& s, int p) const;

  struct Integrity {
    std::size_t checked = 0;
    std::vector<std::string> mismatches;
  };
  /// Recomputes every current-version entry and compares bytes.
  Integrity verify() const;

 private:
  std::filesystem::path dir_;
};

}  // namespace clasp
