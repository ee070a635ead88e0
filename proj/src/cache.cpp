#include "apery/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace apery {

namespace {

constexpr const char* kHeader = "BERNOULLI-CACHE v1";

std::optional<BernoulliTable> try_load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != kHeader) {
    throw std::runtime_error("bad header");
  }
  std::vector<Rational> values;
  std::size_t expected = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::size_t n = 0;
    std::string frac;
    if (!(ls >> n >> frac)) throw std::runtime_error("unparsable line");
    std::string extra;
    if (ls >> extra) throw std::runtime_error("trailing junk");
    if (n != expected) throw std::runtime_error("index gap");
    if (frac.find('/') == std::string::npos) throw std::runtime_error("entry not num/den");
    values.push_back(Rational::parse(frac));
    ++expected;
  }
  return BernoulliTable::from_values(std::move(values));  // validates
}

}  // namespace

void save_cache(const std::string& path, const BernoulliTable& table) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file: " + tmp);
    out << kHeader << '\n';
    for (std::size_t n = 0; n <= table.max_index(); ++n) {
      out << n << ' ' << table.at(n).fraction_str() << '\n';
    }
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot move cache into place: " + path);
  }
}

BernoulliTable load_or_build_cache(const std::string& path, std::size_t needed_max_index) {
  if (path.empty()) return BernoulliTable(needed_max_index);
  std::optional<BernoulliTable> loaded;
  try {
    loaded = try_load(path);
  } catch (const std::exception& e) {
    std::cerr << "warning: Bernoulli cache at " << path << " is invalid (" << e.what()
              << "); rebuilding\n";
    loaded = std::nullopt;
  }
  if (loaded && loaded->max_index() >= needed_max_index) {
    return std::move(*loaded);
  }
  BernoulliTable table = loaded ? std::move(*loaded) : BernoulliTable(needed_max_index);
  table.extend(needed_max_index);
  save_cache(path, table);
  return table;
}

std::string default_cache_path() {
  const char* env = std::getenv("APERY_CACHE");
  return env != nullptr ? std::string(env) : std::string();
}

}  // namespace apery
