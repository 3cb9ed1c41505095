#pragma once

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace u35 {

using Json = nlohmann::json;

std::string fnv64_hex(const std::string& data);

struct CheckResult {
  std::string name;
  bool pass = false;
  Json witness;
};

// One verification run: which checks ran, what they produced, and a hash over
// the stable section (command, config, checks) so reruns on a warm cache can
// be compared byte-for-byte. Timing stays outside the hash.
struct RunManifest {
  std::string command;
  Json config;
  std::vector<CheckResult> checks;
  std::map<std::string, double> timing;
  std::string config_hash;
  std::string manifest_hash;

  CheckResult& add(const std::string& name, bool pass, Json witness = Json::object());
  bool all_pass() const;
  void finalize();  // computes the hashes
  Json to_json() const;
  void write(const std::string& path) const;
};

}  // namespace u35
