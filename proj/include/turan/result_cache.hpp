#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "turan/oracle.hpp"

namespace turan {

/// Append-only JSONL store of oracle results, one record per line:
///   {"parts":[2,2,2],"r":3,"k":1,"max_edges":8,"witness":"<graph text>",
///    "nodes":17,"elapsed_ms":0.4}
/// Later records for the same instance shadow earlier ones. Lines that do not
/// parse are skipped and counted.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path path);

  /// Default location: $TURAN_CACHE if set, else ./turan-cache.jsonl.
  static std::filesystem::path default_path();

  [[nodiscard]] std::optional<ExtremalResult> lookup(const Instance& instance) const;
  void store(const ExtremalResult& result);

  [[nodiscard]] const std::filesystem::path& path() const noexcept { return path_; }
  [[nodiscard]] std::size_t skipped_lines() const noexcept { return skipped_; }

  [[nodiscard]] static std::string to_record(const ExtremalResult& result);
  /// Throws ParseError.
  [[nodiscard]] static ExtremalResult from_record(const std::string& line);

 private:
  std::filesystem::path path_;
  std::vector<ExtremalResult> records_;
  std::size_t skipped_ = 0;
  mutable std::mutex mutex_;
};

}  // namespace turan
