#include "u35/report.hpp"

#include <fstream>

#include "u35/errors.hpp"

namespace u35 {

std::string fnv64_hex(const std::string& data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

CheckResult& RunManifest::add(const std::string& name, bool pass, Json witness) {
  checks.push_back({name, pass, std::move(witness)});
  return checks.back();
}

bool RunManifest::all_pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

void RunManifest::finalize() {
  config_hash = fnv64_hex(config.dump());
  Json stable;
  stable["command"] = command;
  stable["config"] = config;
  stable["checks"] = Json::array();
  for (const CheckResult& c : checks)
    stable["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  manifest_hash = fnv64_hex(stable.dump());
}

Json RunManifest::to_json() const {
  Json j;
  j["schema"] = "u35-report/1";
  j["command"] = command;
  j["config"] = config;
  j["config_hash"] = config_hash;
  j["manifest_hash"] = manifest_hash;
  j["checks"] = Json::array();
  for (const CheckResult& c : checks)
    j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  j["pass"] = all_pass();
  j["timing_seconds"] = timing;
  return j;
}

void RunManifest::write(const std::string& path) const {
  std::ofstream f(path, std::ios::trunc);
  if (!f) throw CacheError("cannot open report path: " + path);
  f << to_json().dump(2) << "\n";
  if (!f) throw CacheError("write failure on report path: " + path);
}

}  // namespace u35
