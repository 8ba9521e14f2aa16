#include "cyclemonoid/cache.hpp"

#include <fstream>

namespace cyclemonoid {

VerdictCache::VerdictCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;  // nothing cached yet
  std::string line;
  long long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    Json rec;
    try {
      rec = Json::parse(line);
    } catch (const Json::parse_error&) {
      throw std::runtime_error("verdict cache " + path_ + " line " + std::to_string(lineno) +
                               ": unparsable record");
    }
    std::string stored = rec.value("checksum", "");
    if (stored.empty() || stored != record_checksum(rec))
      throw std::runtime_error("verdict cache " + path_ + " line " + std::to_string(lineno) +
                               ": checksum mismatch");
    records_[rec.at("canonical").get<std::string>()] = rec;
  }
}

std::optional<Json> VerdictCache::get(const std::string& canonical) const {
  auto it = records_.find(canonical);
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

void VerdictCache::insert(const std::string& canonical, Json record) {
  if (records_.count(canonical)) return;  // idempotent
  record["checksum"] = record_checksum(record);
  records_[canonical] = record;
  if (!path_.empty()) {
    std::ofstream out(path_, std::ios::app);
    if (!out) throw std::runtime_error("verdict cache: cannot append to " + path_);
    out << record.dump() << "\n";
  }
}

}  // namespace cyclemonoid
