#pragma once

#include <string>

#include "asdv/numeric.hpp"

namespace asdv {

inline constexpr const char* kToolVersion = "asdv 0.1.0";
inline constexpr const char* kCacheEnvVar = "ASDV_COUNT_CACHE";

// Run parameters shared by every CLI verb.  Values come from (weakest to
// strongest): built-in defaults, a flat key=value config file, command-line
// flags, and the cache-path environment variable.
struct RunConfig {
  i64 trunc = 400;       // series truncation, in units of the form's own grid
  i64 pmax = 31;         // largest prime checked
  i64 nmax = 0;          // 0: derive floor(trunc/p) per prime
  std::string family = "all";  // g1515 | g2 | all (verbs tied to one family use g1515)
  std::string format = "human";  // "human" | "records"
  std::string cache_path;        // empty: no persistent count cache
  bool audit = false;            // recompute a 1% sample of cache hits
  std::string form = "f+";       // series verb: e1 e2 f1 f2 f+ f- h2 t

  // Parses `key = value` lines; '#' starts a comment.  Unknown keys are
  // config errors, as silent typos would change what gets verified.
  void load_file(const std::string& path);
  void apply_env();
  void validate() const;
  // Advisory stderr note when the depth per prime collapses (T >= 2*pmax is
  // the recommended floor).
  void warn_if_shallow(const std::string& verb) const;

  i64 n_max_for(i64 p) const { return nmax > 0 ? nmax : trunc / p; }
  std::string echo() const;
};

}  // namespace asdv
