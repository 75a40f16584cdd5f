#include "asdv/count_cache.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "asdv/errors.hpp"

namespace asdv {

std::string CountCache::key(const std::string& family_id, i64 q, const std::string& t_enc) {
  return family_id + "|" + std::to_string(q) + "|" + t_enc;
}

CountCache::CountCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;  // fresh cache
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string family, t_enc;
    i64 q = 0, count = 0;
    if (!(ls >> family >> q >> t_enc >> count)) {
      std::cerr << "count cache: skipping malformed line " << lineno << " of " << path_ << "\n";
      continue;
    }
    std::string extra;
    if (ls >> extra) {
      std::cerr << "count cache: skipping malformed line " << lineno << " of " << path_ << "\n";
      continue;
    }
    std::string k = key(family, q, t_enc);
    auto it = entries_.find(k);
    if (it != entries_.end() && it->second != count)
      throw IntegrityError("count cache: conflicting counts for " + k + " in " + path_);
    entries_[k] = count;
  }
}

CountCache::~CountCache() = default;

std::optional<i64> CountCache::lookup(const std::string& family_id, i64 q,
                                      const std::string& t_enc) const {
  auto it = entries_.find(key(family_id, q, t_enc));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void CountCache::append(const std::string& family_id, i64 q, const std::string& t_enc, i64 count) {
  std::string k = key(family_id, q, t_enc);
  auto it = entries_.find(k);
  if (it != entries_.end()) {
    if (it->second != count)
      throw IntegrityError("count cache: conflicting append for " + k);
    return;  // idempotent
  }
  std::ofstream out(path_, std::ios::app);
  if (!out) throw ConfigError("count cache: cannot open " + path_ + " for append");
  out << family_id << " " << q << " " << t_enc << " " << count << "\n";
  if (!out) throw ConfigError("count cache: write to " + path_ + " failed");
  entries_.emplace(std::move(k), count);
}

std::vector<CountCache::Entry> CountCache::entries() const {
  std::vector<Entry> out;
  out.reserve(entries_.size());
  for (const auto& [k, count] : entries_) {
    Entry e;
    auto first = k.find('|');
    auto second = k.find('|', first + 1);
    e.family_id = k.substr(0, first);
    e.q = std::stoll(k.substr(first + 1, second - first - 1));
    e.t_enc = k.substr(second + 1);
    e.count = count;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace asdv
