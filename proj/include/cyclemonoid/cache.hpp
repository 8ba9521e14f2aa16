#pragma once

#include <map>
#include <optional>
#include <string>

#include "cyclemonoid/verdict_json.hpp"

namespace cyclemonoid {

// Append-only store of verdict records keyed by canonical form, one JSON
// record per line, each carrying a content checksum. Re-inserting a key is a
// no-op, so replaying a partially written file is safe.
class VerdictCache {
 public:
  VerdictCache() = default;  // in-memory only
  explicit VerdictCache(std::string path);  // loads existing records

  bool contains(const std::string& canonical) const { return records_.count(canonical) > 0; }
  std::optional<Json> get(const std::string& canonical) const;
  void insert(const std::string& canonical, Json record);  // adds checksum, persists

  std::size_t size() const { return records_.size(); }

 private:
  std::string path_;
  std::map<std::string, Json> records_;
};

}  // namespace cyclemonoid
