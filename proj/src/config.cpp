#include "asdv/config.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "asdv/errors.hpp"

namespace asdv {

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

i64 parse_int(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    i64 v = std::stoll(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: bad integer for '" + key + "': " + value);
  }
}

}  // namespace

void RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config: line " + std::to_string(lineno) + " is not key = value");
    std::string key = strip(line.substr(0, eq));
    std::string value = strip(line.substr(eq + 1));
    if (key == "trunc")
      trunc = parse_int(key, value);
    else if (key == "pmax")
      pmax = parse_int(key, value);
    else if (key == "nmax")
      nmax = parse_int(key, value);
    else if (key == "family")
      family = value;
    else if (key == "format")
      format = value;
    else if (key == "cache")
      cache_path = value;
    else if (key == "form")
      form = value;
    else if (key == "audit")
      audit = (value == "1" || value == "true");
    else
      throw ConfigError("config: unknown key '" + key + "' at line " + std::to_string(lineno));
  }
}

void RunConfig::apply_env() {
  if (const char* env = std::getenv(kCacheEnvVar)) cache_path = env;
}

void RunConfig::validate() const {
  if (trunc < 1) throw ConfigError("config: trunc must be >= 1");
  if (pmax < 3) throw ConfigError("config: pmax must be >= 3");
  if (nmax < 0) throw ConfigError("config: nmax must be >= 0");
  if (family != "g1515" && family != "g2" && family != "all")
    throw ConfigError("config: family must be g1515, g2, or all");
  if (format != "human" && format != "records")
    throw ConfigError("config: format must be human or records");
  static const char* kForms[] = {"e1", "e2", "f1", "f2", "f+", "f-", "h2", "t"};
  bool known = false;
  for (const char* f : kForms) known = known || form == f;
  if (!known) throw ConfigError("config: unknown form '" + form + "'");
}

void RunConfig::warn_if_shallow(const std::string& verb) const {
  if ((verb == "asd" || verb == "charpoly") && trunc < 2 * pmax)
    std::cerr << "warning: trunc < 2*pmax leaves at most one n per prime near pmax\n";
}

std::string RunConfig::echo() const {
  std::ostringstream os;
  os << "family=" << family << " trunc=" << trunc << " pmax=" << pmax << " nmax="
     << (nmax > 0 ? std::to_string(nmax) : std::string("auto")) << " format=" << format;
  if (!cache_path.empty()) os << " cache=" << cache_path;
  if (audit) os << " audit=1";
  return os.str();
}

}  // namespace asdv
