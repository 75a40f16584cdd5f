#pragma once

#include <map>
#include <optional>
#include <string>

#include "asdv/numeric.hpp"

namespace asdv {

// Append-only store of fiber point counts keyed by (family_id, q, t).
// The t-encoding is "inf" or the base-field coordinates "a" / "a,b".
// Re-appending an existing record is a no-op; appending a conflicting count
// for an existing key is an integrity error.  Malformed lines in an existing
// file are skipped with a warning, never silently accepted.
class CountCache {
 public:
  explicit CountCache(std::string path);
  ~CountCache();

  CountCache(const CountCache&) = delete;
  CountCache& operator=(const CountCache&) = delete;

  const std::string& path() const { return path_; }
  std::size_t size() const { return entries_.size(); }

  std::optional<i64> lookup(const std::string& family_id, i64 q, const std::string& t_enc) const;
  void append(const std::string& family_id, i64 q, const std::string& t_enc, i64 count);

  // Snapshot of all entries, for auditing.
  struct Entry {
    std::string family_id;
    i64 q;
    std::string t_enc;
    i64 count;
  };
  std::vector<Entry> entries() const;

 private:
  static std::string key(const std::string& family_id, i64 q, const std::string& t_enc);

  std::string path_;
  std::map<std::string, i64> entries_;
};

}  // namespace asdv
